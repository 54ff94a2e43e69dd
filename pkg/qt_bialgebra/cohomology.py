"""
Derivations of the algebra with values in its tensor square.

A derivation is only ever known on a finite window of basis vectors, so it is
carried around as a :class:`DerivationTable`. Basis vectors inside the window
without an assignment map to zero; asking for one outside the window raises
:class:`~qt_bialgebra.errors.OutOfWindow`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import (
    D1,
    D2,
    AlgElement,
    BasisVector,
    Degree,
    Kind,
    ZERO_DEGREE,
    add_index,
    as_element,
    basis_in_window,
    bracket_basis,
    in_window,
)
from .bialgebra import DEFAULT_PROBES
from .errors import OutOfWindow, ZeroDegree
from .laurent import RatFunc
from .tensor import Tensor2Element, act2, is_skew, tensor_degree


@dataclass(frozen=True, eq=False)
class DerivationTable:
    assignments: Mapping[BasisVector, Tensor2Element] = field(default_factory=dict)
    window: int = 0

    def __post_init__(self) -> None:
        clean = {b: t for b, t in self.assignments.items() if not t.is_zero()}
        object.__setattr__(self, "assignments", clean)

    def image(self, b: BasisVector) -> Tensor2Element:
        found = self.assignments.get(b)
        if found is not None:
            return found
        if not in_window(b, self.window):
            raise OutOfWindow(f"{b} lies outside the window of radius {self.window}")
        return Tensor2Element.zero()

    def apply(self, x: AlgElement | BasisVector) -> Tensor2Element:
        acc = Tensor2Element.zero()
        for b, c in as_element(x).items():
            acc = acc + self.image(b).scale(c)
        return acc

    def is_zero(self) -> bool:
        return not self.assignments

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationTable):
            return NotImplemented
        return self.window == other.window and self.assignments == other.assignments

    def __add__(self, other: DerivationTable) -> DerivationTable:
        return sum_tables([self, other])


def sum_tables(tables: Sequence[DerivationTable]) -> DerivationTable:
    """Pointwise sum; the result is known on the smallest of the windows."""
    if not tables:
        raise ValueError("sum_tables needs at least one table")
    window = min(t.window for t in tables)
    acc: dict[BasisVector, Tensor2Element] = {}
    for t in tables:
        for b, image in t.assignments.items():
            if not in_window(b, window):
                continue
            acc[b] = acc[b] + image if b in acc else image
    return DerivationTable(acc, window)


@dataclass(frozen=True)
class Probe:
    """ρ = ρ1·d1 + ρ2·d2."""

    rho1: Fraction
    rho2: Fraction

    def pairing(self, m: Degree) -> Fraction:
        return m[0] * self.rho1 + m[1] * self.rho2

    def as_element(self) -> AlgElement:
        return D1().scale(self.rho1) + D2().scale(self.rho2)


def pick_probe(k: Degree) -> Probe:
    if k == ZERO_DEGREE:
        raise ZeroDegree("no degree derivation separates degree (0,0)")
    if k[0] != 0:
        return Probe(Fraction(1), Fraction(0))
    return Probe(Fraction(0), Fraction(1))


def inner_derivation(v: Tensor2Element, window: int) -> DerivationTable:
    """The table of x ↦ x·v over every basis vector of the window."""
    if v.is_zero():
        return DerivationTable({}, window)
    return DerivationTable({b: act2(b, v) for b in basis_in_window(window)}, window)


def table_degrees(t: DerivationTable) -> set[Degree]:
    """Every m such that some image has a term of degree deg(x) + m."""
    out: set[Degree] = set()
    for b, image in t.assignments.items():
        for key in image.keys():
            deg = tensor_degree(key)
            out.add((deg[0] - b.degree[0], deg[1] - b.degree[1]))
    return out


def homogeneous_component(t: DerivationTable, m: Degree) -> DerivationTable:
    out: dict[BasisVector, Tensor2Element] = {}
    for b, image in t.assignments.items():
        target = add_index(b.degree, m)
        out[b] = Tensor2Element(
            {key: c for key, c in image.items() if tensor_degree(key) == target}
        )
    return DerivationTable(out, t.window)


def leibniz_defect(t: DerivationTable, x: BasisVector, y: BasisVector) -> Tensor2Element:
    """t([x,y]) − x·t(y) + y·t(x)."""
    return t.apply(bracket_basis(x, y)) - act2(x, t.image(y)) + act2(y, t.image(x))


def window_leibniz_defects(
    t: DerivationTable,
    *,
    advance: Callable[[int], None] | None = None,
) -> list[tuple[BasisVector, BasisVector, Tensor2Element]]:
    """Every unordered in-window pair, whose bracket stays in the window, with nonzero defect."""
    vectors = basis_in_window(t.window)
    failures: list[tuple[BasisVector, BasisVector, Tensor2Element]] = []
    for i, x in enumerate(vectors):
        for y in vectors[i + 1 :]:
            if not all(in_window(b, t.window) for b in bracket_basis(x, y).keys()):
                continue
            defect = leibniz_defect(t, x, y)
            if not defect.is_zero():
                failures.append((x, y, defect))
        if advance:
            advance(1)
    return failures


def reduce_to_inner(t: DerivationTable, k: Degree | None = None) -> Tensor2Element:
    """
    For t homogeneous of degree k ≠ (0,0), return v with t = x ↦ x·v, namely
    v = t(ρ)/ρ(k) for the probe ρ chosen by :func:`pick_probe`.

    When ``k`` is omitted it is read off the table; a zero table reduces to 0.
    """
    if k is None:
        found = table_degrees(t)
        if not found:
            return Tensor2Element.zero()
        if len(found) > 1:
            raise ValueError(f"table is not homogeneous: degrees {sorted(found)}")
        k = found.pop()
    rho = pick_probe(k)
    return t.apply(rho.as_element()).scale(RatFunc.scalar(1 / rho.pairing(k)))


def inner_agreement(t: DerivationTable, v: Tensor2Element) -> dict[BasisVector, Tensor2Element]:
    """Basis vectors of the window where t(x) − x·v is nonzero, with that difference."""
    vectors = set(basis_in_window(t.window)) | set(t.assignments)
    out: dict[BasisVector, Tensor2Element] = {}
    for b in sorted(vectors, key=BasisVector.sort_key):
        diff = t.image(b) - act2(b, v)
        if not diff.is_zero():
            out[b] = diff
    return out


def windowed_faithfulness(
    v: Tensor2Element, probes: Iterable[AlgElement] = DEFAULT_PROBES
) -> AlgElement | None:
    """A probe x with x·v ≠ 0, or None (always None for v = 0)."""
    if v.is_zero():
        return None
    for x in probes:
        if not act2(x, v).is_zero():
            return x
    return None


def skew_transfer_witness(
    v: Tensor2Element, probes: Iterable[AlgElement] = DEFAULT_PROBES
) -> AlgElement | None:
    """
    For v outside Im(1 − τ), a probe x whose action x·v is not skew either.

    None for skew v, or when no probe exposes the symmetric part of v.
    """
    if is_skew(v):
        return None
    for x in probes:
        if not is_skew(act2(x, v)):
            return x
    return None


def degree_zero_derivation_check(t: DerivationTable) -> list[tuple[BasisVector, BasisVector]]:
    """
    Pairs (x, d_i) with x·t(d_i) ≠ 0 for the degree-(0,0) part of t.

    Empty for any degree-zero derivation, since applying it to [d_i, x] = m_i x
    gives x·t(d_i) = 0.
    """
    zero_part = homogeneous_component(t, ZERO_DEGREE)
    failures: list[tuple[BasisVector, BasisVector]] = []
    for d in (BasisVector(Kind.D1), BasisVector(Kind.D2)):
        image = zero_part.image(d)
        if image.is_zero():
            continue
        for x in basis_in_window(t.window):
            if not act2(x, image).is_zero():
                failures.append((x, d))
    return failures


from .identities import SUITES, IdentityReport, run_identity_suite  # noqa: E402

__all__ = [
    "DerivationTable",
    "IdentityReport",
    "Probe",
    "SUITES",
    "degree_zero_derivation_check",
    "homogeneous_component",
    "inner_agreement",
    "inner_derivation",
    "leibniz_defect",
    "pick_probe",
    "reduce_to_inner",
    "run_identity_suite",
    "skew_transfer_witness",
    "sum_tables",
    "table_degrees",
    "window_leibniz_defects",
    "windowed_faithfulness",
]
