"""
Coboundary Lie bialgebra structures Δ_r(x) = x·r and the classical
Yang-Baxter element c(r).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import D, D1, D2, AlgElement, as_element, bracket, bracket_basis, e, f, g, h
from .laurent import RatFunc
from .tensor import Tensor2Element, Tensor3Element, act2, act3, cyclic, is_skew


DEFAULT_PROBES: tuple[AlgElement, ...] = (
    D(),
    D1(),
    D2(),
    e(0, 0),
    f(0, 0),
    g(0, 1),
    h(1, 0),
    g(0, -1),
    h(-1, 0),
)


@dataclass(frozen=True)
class RMatrix:
    """A 2-tensor r used as a coboundary. Skewness is checked lazily."""

    value: Tensor2Element

    @cached_property
    def skew(self) -> bool:
        return is_skew(self.value)


def as_rmatrix(r: RMatrix | Tensor2Element) -> RMatrix:
    return r if isinstance(r, RMatrix) else RMatrix(r)


def delta_r(r: RMatrix | Tensor2Element, x: AlgElement) -> Tensor2Element:
    return act2(x, as_rmatrix(r).value)


def _add(acc: dict, key: tuple, value: RatFunc) -> None:
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


def c_of_r(r: RMatrix | Tensor2Element) -> Tensor3Element:
    """
    [r12, r13] + [r12, r23] + [r13, r23], expanded in the tensor cube as

        Σ [a_i, a_j]⊗b_i⊗b_j + Σ a_i⊗[b_i, a_j]⊗b_j + Σ a_i⊗a_j⊗[b_i, b_j]

    for r = Σ a_i⊗b_i.
    """
    terms = list(as_rmatrix(r).value._coeffs.items())
    acc: dict = {}
    for (ai, bi), ci in terms:
        for (aj, bj), cj in terms:
            c = ci * cj
            for b, v in bracket_basis(ai, aj)._coeffs.items():
                _add(acc, (b, bi, bj), c * v)
            for b, v in bracket_basis(bi, aj)._coeffs.items():
                _add(acc, (ai, b, bj), c * v)
            for b, v in bracket_basis(bi, bj)._coeffs.items():
                _add(acc, (ai, aj, b), c * v)
    return Tensor3Element(acc)


def check_cybe(r: RMatrix | Tensor2Element) -> bool:
    return c_of_r(r).is_zero()


def check_triangular(r: RMatrix | Tensor2Element) -> bool:
    """Skew and a solution of the CYBE, so Δ_r makes the algebra a Lie bialgebra."""
    r = as_rmatrix(r)
    return r.skew and check_cybe(r)


def cojacobi_defect(r: RMatrix | Tensor2Element, x: AlgElement) -> Tensor3Element:
    """(1 + ξ + ξ²)(1⊗Δ_r)Δ_r(x), computed without going through c(r)."""
    r = as_rmatrix(r)
    acc: dict = {}
    for (a, b), c in delta_r(r, x)._coeffs.items():
        for (p, s), v in delta_r(r, as_element(b))._coeffs.items():
            _add(acc, (a, p, s), c * v)
    once = Tensor3Element(acc)
    twice = cyclic(once)
    return once + twice + cyclic(twice)


def cojacobi_mismatch(r: RMatrix | Tensor2Element, x: AlgElement) -> Tensor3Element:
    """cojacobi_defect(r, x) − x·c(r); zero whenever r is skew."""
    return cojacobi_defect(r, x) - act3(x, c_of_r(r))


def compatibility_defect(
    r: RMatrix | Tensor2Element, x: AlgElement, y: AlgElement
) -> Tensor2Element:
    return (
        delta_r(r, bracket(x, y))
        - act2(x, delta_r(r, y))
        + act2(y, delta_r(r, x))
    )


def mybe_witness(
    r: RMatrix | Tensor2Element, probes: Sequence[AlgElement] = DEFAULT_PROBES
) -> AlgElement | None:
    """
    First probe x with x·c(r) ≠ 0, or None.

    A witness disproves the CYBE. None only means no probe detected c(r).
    """
    if not probes:
        raise ValueError("mybe_witness needs at least one probe")
    c = c_of_r(r)
    if c.is_zero():
        return None
    for x in probes:
        if not act3(x, c).is_zero():
            return x
    return None


def coalgebra_image_defects(
    r: RMatrix | Tensor2Element, probes: Iterable[AlgElement]
) -> list[AlgElement]:
    """Probes whose cobracket Δ_r(x) falls outside Im(1 − τ)."""
    return [x for x in probes if not is_skew(delta_r(r, x))]
