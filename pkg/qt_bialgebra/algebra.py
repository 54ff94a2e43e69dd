from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable

from .laurent import ONE, RatFunc, Scalar, q_pow
from .linear import Combination


Degree = tuple[int, int]
ZERO_DEGREE: Degree = (0, 0)


class Kind(str, Enum):
    D = "d"
    D1 = "d1"
    D2 = "d2"
    E = "e"
    F = "f"
    G = "g"
    H = "h"

    @property
    def rank(self) -> int:
        return _KIND_RANK[self]

    @property
    def indexed(self) -> bool:
        return self in (Kind.E, Kind.F, Kind.G, Kind.H)


_KIND_RANK = {kind: i for i, kind in enumerate(Kind)}
DERIVATION_KINDS = (Kind.D, Kind.D1, Kind.D2)


@dataclass(frozen=True, order=False)
class BasisVector:
    """
    One of d, d1, d2 or e_m, f_m, g_k, h_k.

    ``index`` is (0, 0) for the three derivation-like vectors. g and h do not
    exist at index (0, 0); use the ``g``/``h`` element constructors, which
    return zero there.
    """

    kind: Kind
    index: Degree = field(default=ZERO_DEGREE)

    def __post_init__(self) -> None:
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if type(self.index) is not tuple:
            object.__setattr__(self, "index", (int(self.index[0]), int(self.index[1])))
        if not self.kind.indexed and self.index != ZERO_DEGREE:
            raise ValueError(f"{self.kind.value} carries no index")
        if self.kind in (Kind.G, Kind.H) and self.index == ZERO_DEGREE:
            raise ValueError(f"{self.kind.value} at index (0,0) is zero, not a basis vector")

    @property
    def degree(self) -> Degree:
        return self.index

    def sort_key(self) -> tuple[int, int, int]:
        return (self.kind.rank, self.index[0], self.index[1])

    def __str__(self) -> str:
        if not self.kind.indexed:
            return self.kind.value
        return f"{self.kind.value}({self.index[0]},{self.index[1]})"


def _basis_sort_key(b: BasisVector) -> tuple[int, int, int]:
    return b.sort_key()


class AlgElement(Combination[BasisVector]):
    """A finite Q(q)-linear combination of basis vectors."""

    __slots__ = ()

    sort_key = staticmethod(_basis_sort_key)

    def __str__(self) -> str:
        return format_combination(self.items(), str)


def format_combination(items: Iterable[tuple[object, RatFunc]], show) -> str:
    parts = []
    for key, c in items:
        if c == ONE:
            parts.append(show(key))
        elif c == -ONE:
            parts.append(f"-{show(key)}")
        else:
            parts.append(f"({c})*{show(key)}")
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def add_index(a: Degree, b: Degree) -> Degree:
    return (a[0] + b[0], a[1] + b[1])


def basis(kind: Kind | str, m1: int = 0, m2: int = 0) -> BasisVector:
    return BasisVector(Kind(kind), (m1, m2))


def element(kind: Kind | str, m1: int = 0, m2: int = 0, coeff: RatFunc | Scalar = 1) -> AlgElement:
    """The element coeff * b; g and h at index (0, 0) give the zero element."""
    kind = Kind(kind)
    if kind in (Kind.G, Kind.H) and (m1, m2) == ZERO_DEGREE:
        return AlgElement.zero()
    return AlgElement.single(BasisVector(kind, (m1, m2)), coeff)


def e(m1: int, m2: int) -> AlgElement:
    return element(Kind.E, m1, m2)


def f(m1: int, m2: int) -> AlgElement:
    return element(Kind.F, m1, m2)


def g(m1: int, m2: int) -> AlgElement:
    return element(Kind.G, m1, m2)


def h(m1: int, m2: int) -> AlgElement:
    return element(Kind.H, m1, m2)


def D() -> AlgElement:
    return element(Kind.D)


def D1() -> AlgElement:
    return element(Kind.D1)


def D2() -> AlgElement:
    return element(Kind.D2)


def as_element(x: AlgElement | BasisVector) -> AlgElement:
    if isinstance(x, BasisVector):
        return AlgElement.single(x)
    return x


def degree_of(b: BasisVector) -> Degree:
    return b.degree


# -- structure constants ----------------------------------------------------


def _term(kind: Kind, index: Degree, coeff: RatFunc) -> dict[BasisVector, RatFunc]:
    if kind in (Kind.G, Kind.H) and index == ZERO_DEGREE:
        return {}
    if coeff.is_zero():
        return {}
    return {BasisVector(kind, index): coeff}


def _handled(x: Kind, y: Kind) -> bool:
    if x in DERIVATION_KINDS:
        return True
    if x in (Kind.G, Kind.H):
        return y in (Kind.E, Kind.F, Kind.G, Kind.H)
    if x is Kind.E:
        return y in (Kind.E, Kind.F)
    return y is Kind.F


def _ordered_bracket(x: BasisVector, y: BasisVector) -> dict[BasisVector, RatFunc]:
    k, m = x.index, y.index
    km = add_index(k, m)
    if x.kind is Kind.D1:
        return {y: RatFunc.scalar(m[0])} if m[0] else {}
    if x.kind is Kind.D2:
        return {y: RatFunc.scalar(m[1])} if m[1] else {}
    if x.kind is Kind.D:
        if y.kind is Kind.E:
            return {y: RatFunc.scalar(2)}
        if y.kind is Kind.F:
            return {y: RatFunc.scalar(-2)}
        return {}

    if x.kind is Kind.G:
        if y.kind is Kind.E:
            return _term(Kind.E, km, q_pow(k[1] * m[0]))
        if y.kind is Kind.F:
            return _term(Kind.F, km, -q_pow(k[0] * m[1]))
        if y.kind is Kind.G:
            return _term(Kind.G, km, q_pow(k[1] * m[0]) - q_pow(m[1] * k[0]))
        return {}
    if x.kind is Kind.H:
        if y.kind is Kind.E:
            return _term(Kind.E, km, -q_pow(k[0] * m[1]))
        if y.kind is Kind.F:
            return _term(Kind.F, km, q_pow(k[1] * m[0]))
        if y.kind is Kind.H:
            return _term(Kind.H, km, q_pow(k[1] * m[0]) - q_pow(m[1] * k[0]))
        return {}

    if x.kind is Kind.E and y.kind is Kind.F:
        left = k[1] * m[0]
        right = m[1] * k[0]
        if km == ZERO_DEGREE:
            assert left == right, "e/f monomials must coincide at opposite degrees"
            return {BasisVector(Kind.D): q_pow(left)}
        out = _term(Kind.G, km, q_pow(left))
        out.update(_term(Kind.H, km, -q_pow(right)))
        return out
    # [e, e] = [f, f] = 0
    return {}


@lru_cache(maxsize=1 << 16)
def bracket_basis(x: BasisVector, y: BasisVector) -> AlgElement:
    """[x, y] for basis vectors, from the defining relations."""
    if x == y:
        return AlgElement.zero()
    if _handled(x.kind, y.kind):
        return AlgElement(_ordered_bracket(x, y))
    return -AlgElement(_ordered_bracket(y, x))


def bracket(x: AlgElement | BasisVector, y: AlgElement | BasisVector) -> AlgElement:
    x, y = as_element(x), as_element(y)
    acc: dict[BasisVector, RatFunc] = {}
    for bx, cx in x._coeffs.items():
        for by, cy in y._coeffs.items():
            part = bracket_basis(bx, by)
            if part.is_zero():
                continue
            c = cx * cy
            for b, v in part._coeffs.items():
                prev = acc.get(b)
                acc[b] = v * c if prev is None else prev + v * c
    return AlgElement(acc)


def jacobi_defect(x: AlgElement, y: AlgElement, z: AlgElement) -> AlgElement:
    return (
        bracket(x, bracket(y, z))
        + bracket(y, bracket(z, x))
        + bracket(z, bracket(x, y))
    )


def homogeneous_components(x: AlgElement) -> dict[Degree, AlgElement]:
    parts: dict[Degree, dict[BasisVector, RatFunc]] = {}
    for b, c in x.items():
        parts.setdefault(b.degree, {})[b] = c
    return {deg: AlgElement(terms) for deg, terms in parts.items()}


def is_homogeneous(x: AlgElement) -> bool:
    return len({b.degree for b in x.keys()}) <= 1


def element_degree(x: AlgElement) -> Degree:
    """Degree of a nonzero homogeneous element."""
    degrees = {b.degree for b in x.keys()}
    if len(degrees) != 1:
        raise ValueError("element is zero or not homogeneous")
    return degrees.pop()


def in_window(b: BasisVector, radius: int) -> bool:
    return abs(b.index[0]) <= radius and abs(b.index[1]) <= radius


def basis_in_window(radius: int) -> list[BasisVector]:
    """Every basis vector with both index entries in [-radius, radius], in canonical order."""
    out = [BasisVector(kind) for kind in DERIVATION_KINDS]
    span = range(-radius, radius + 1)
    for kind in (Kind.E, Kind.F, Kind.G, Kind.H):
        for m1, m2 in product(span, span):
            if kind in (Kind.G, Kind.H) and (m1, m2) == ZERO_DEGREE:
                continue
            out.append(BasisVector(kind, (m1, m2)))
    return out
