"""
2x2 matrices over the quantum torus, used as an independent check of the
structure constants in :mod:`qt_bialgebra.algebra`.

Monomials are kept in the normal form x^a y^b; moving y^b across x^c costs
q^(bc) because yx = qxy.
"""

from __future__ import annotations

from .algebra import ZERO_DEGREE, AlgElement, BasisVector, Kind, format_combination
from .errors import DegreeDerivationNotRepresentable, NotInImage
from .laurent import RatFunc, q_pow
from .linear import Combination


TorusKey = tuple[int, int, int, int]  # (row, col, a, b) for E_{row,col} x^a y^b


class TorusElement(Combination[TorusKey]):
    __slots__ = ()

    def __str__(self) -> str:
        return format_combination(
            self.items(), lambda k: f"E{k[0]}{k[1]}*x^{k[2]}*y^{k[3]}"
        )


def matrix_unit(i: int, j: int, a: int = 0, b: int = 0, coeff: RatFunc | int = 1) -> TorusElement:
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError(f"matrix unit E{i}{j} out of range")
    return TorusElement.single((i, j, a, b), coeff)


def torus_mul(s: TorusElement, t: TorusElement) -> TorusElement:
    acc: dict[TorusKey, RatFunc] = {}
    for (i, j, a, b), c1 in s._coeffs.items():
        for (k, l, c, d), c2 in t._coeffs.items():
            if j != k:
                continue
            key = (i, l, a + c, b + d)
            v = c1 * c2 * q_pow(b * c)
            prev = acc.get(key)
            acc[key] = v if prev is None else prev + v
    return TorusElement(acc)


def oracle_bracket(s: TorusElement, t: TorusElement) -> TorusElement:
    return torus_mul(s, t) - torus_mul(t, s)


_MATRIX_SLOT = {Kind.E: (1, 2), Kind.F: (2, 1), Kind.G: (1, 1), Kind.H: (2, 2)}


def embed(b: BasisVector | AlgElement) -> TorusElement:
    if isinstance(b, AlgElement):
        acc = TorusElement.zero()
        for basis_vector, c in b.items():
            acc = acc + embed(basis_vector).scale(c)
        return acc
    if b.kind in (Kind.D1, Kind.D2):
        raise DegreeDerivationNotRepresentable(
            f"{b.kind.value} is an outer derivation and has no matrix form"
        )
    if b.kind is Kind.D:
        return matrix_unit(1, 1) - matrix_unit(2, 2)
    i, j = _MATRIX_SLOT[b.kind]
    return matrix_unit(i, j, *b.index)


def project(t: TorusElement) -> AlgElement:
    terms: dict[BasisVector, RatFunc] = {}
    diag_zero: dict[int, RatFunc] = {}
    for (i, j, a, b), c in t.items():
        if i == j and (a, b) == ZERO_DEGREE:
            diag_zero[i] = c
            continue
        kind = {(1, 2): Kind.E, (2, 1): Kind.F, (1, 1): Kind.G, (2, 2): Kind.H}[(i, j)]
        terms[BasisVector(kind, (a, b))] = c
    if diag_zero:
        c11 = diag_zero.get(1, RatFunc.scalar(0))
        c22 = diag_zero.get(2, RatFunc.scalar(0))
        if not (c11 + c22).is_zero():
            raise NotInImage(
                f"diagonal part {c11}*E11 + {c22}*E22 at x^0 y^0 is not a multiple of E11 - E22"
            )
        terms[BasisVector(Kind.D)] = c11
    return AlgElement(terms)
