from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .algebra import (
    AlgElement,
    BasisVector,
    Degree,
    add_index,
    as_element,
    bracket_basis,
    format_combination,
)
from .laurent import RatFunc
from .linear import Combination


Pair = tuple[BasisVector, BasisVector]
Triple = tuple[BasisVector, BasisVector, BasisVector]


def _pair_key(key: tuple[BasisVector, ...]) -> tuple:
    return tuple(b.sort_key() for b in key)


def _show(key: tuple[BasisVector, ...]) -> str:
    return "⊗".join(str(b) for b in key)


class Tensor2Element(Combination[Pair]):
    __slots__ = ()

    sort_key = staticmethod(_pair_key)

    def __str__(self) -> str:
        return format_combination(self.items(), _show)


class Tensor3Element(Combination[Triple]):
    __slots__ = ()

    sort_key = staticmethod(_pair_key)

    def __str__(self) -> str:
        return format_combination(self.items(), _show)


def _accumulate(acc: dict, key: tuple, value: RatFunc) -> None:
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


def tensor2(x: AlgElement | BasisVector, y: AlgElement | BasisVector) -> Tensor2Element:
    x, y = as_element(x), as_element(y)
    acc: dict[Pair, RatFunc] = {}
    for a, ca in x._coeffs.items():
        for b, cb in y._coeffs.items():
            _accumulate(acc, (a, b), ca * cb)
    return Tensor2Element(acc)


def tensor3(
    x: AlgElement | BasisVector, y: AlgElement | BasisVector, z: AlgElement | BasisVector
) -> Tensor3Element:
    x, y, z = as_element(x), as_element(y), as_element(z)
    acc: dict[Triple, RatFunc] = {}
    for a, ca in x._coeffs.items():
        for b, cb in y._coeffs.items():
            cab = ca * cb
            for c, cc in z._coeffs.items():
                _accumulate(acc, (a, b, c), cab * cc)
    return Tensor3Element(acc)


def wedge(x: AlgElement | BasisVector, y: AlgElement | BasisVector) -> Tensor2Element:
    """x⊗y − y⊗x."""
    return tensor2(x, y) - tensor2(y, x)


def _act(x: AlgElement, t: Combination, slots: Iterable[int]) -> dict:
    acc: dict = {}
    slots = tuple(slots)
    for bx, cx in x._coeffs.items():
        for key, ct in t._coeffs.items():
            c = cx * ct
            for slot in slots:
                image = bracket_basis(bx, key[slot])
                for b, cb in image._coeffs.items():
                    new = key[:slot] + (b,) + key[slot + 1 :]
                    _accumulate(acc, new, c * cb)
    return acc


def act2(x: AlgElement | BasisVector, t: Tensor2Element) -> Tensor2Element:
    """x·(a⊗b) = [x,a]⊗b + a⊗[x,b], extended bilinearly."""
    return Tensor2Element(_act(as_element(x), t, (0, 1)))


def act3(x: AlgElement | BasisVector, t: Tensor3Element) -> Tensor3Element:
    return Tensor3Element(_act(as_element(x), t, (0, 1, 2)))


def act_on_slot(x: AlgElement | BasisVector, t: Tensor3Element, slot: int) -> Tensor3Element:
    if slot not in (0, 1, 2):
        raise ValueError(f"slot must be 0, 1 or 2, got {slot}")
    return Tensor3Element(_act(as_element(x), t, (slot,)))


def twist(t: Tensor2Element) -> Tensor2Element:
    return Tensor2Element._trusted({(b, a): c for (a, b), c in t._coeffs.items()})


def cyclic(t: Tensor3Element) -> Tensor3Element:
    """x1⊗x2⊗x3 ↦ x2⊗x3⊗x1."""
    return Tensor3Element._trusted({(b, c, a): v for (a, b, c), v in t._coeffs.items()})


def is_skew(t: Tensor2Element) -> bool:
    """Membership in Im(1 − τ), i.e. τ(t) = −t."""
    return twist(t) == -t


def skew_part(t: Tensor2Element) -> Tensor2Element:
    return (t - twist(t)).scale(Fraction(1, 2))


def tensor_degree(key: tuple[BasisVector, ...]) -> Degree:
    deg: Degree = (0, 0)
    for b in key:
        deg = add_index(deg, b.degree)
    return deg


def _components(t: Combination) -> dict[Degree, dict]:
    parts: dict[Degree, dict] = {}
    for key, c in t._coeffs.items():
        parts.setdefault(tensor_degree(key), {})[key] = c
    return parts


def homogeneous_components2(t: Tensor2Element) -> dict[Degree, Tensor2Element]:
    return {deg: Tensor2Element(terms) for deg, terms in _components(t).items()}


def homogeneous_components3(t: Tensor3Element) -> dict[Degree, Tensor3Element]:
    return {deg: Tensor3Element(terms) for deg, terms in _components(t).items()}


def degrees(t: Combination) -> set[Degree]:
    return {tensor_degree(key) for key in t.keys()}
