"""Seeded random values for the randomized verification targets."""

from __future__ import annotations

import random

from .algebra import (
    DERIVATION_KINDS,
    ZERO_DEGREE,
    AlgElement,
    BasisVector,
    Degree,
    Kind,
    in_window,
)
from .laurent import LaurentPoly, RatFunc
from .tensor import Tensor2Element, Tensor3Element, wedge


INDEXED_KINDS = (Kind.E, Kind.F, Kind.G, Kind.H)


def random_laurent(
    rng: random.Random,
    *,
    max_terms: int = 3,
    exponent_range: int = 3,
    coeff_range: int = 4,
    nonzero: bool = False,
) -> RatFunc:
    while True:
        coeffs = {
            rng.randint(-exponent_range, exponent_range): rng.randint(-coeff_range, coeff_range)
            for _ in range(rng.randint(1, max_terms))
        }
        value = RatFunc(LaurentPoly.from_dict(coeffs))
        if not nonzero or not value.is_zero():
            return value


def random_ratfunc(rng: random.Random) -> RatFunc:
    """A Laurent polynomial, or a quotient of two with a nonzero denominator."""
    num = random_laurent(rng)
    if rng.random() < 0.5:
        return num
    return num / random_laurent(rng, max_terms=2, nonzero=True)


def random_basis(rng: random.Random, radius: int, *, derivations: bool = True) -> BasisVector:
    kinds = list(INDEXED_KINDS) + (list(DERIVATION_KINDS) if derivations else [])
    while True:
        kind = rng.choice(kinds)
        if kind in DERIVATION_KINDS:
            return BasisVector(kind)
        index = (rng.randint(-radius, radius), rng.randint(-radius, radius))
        if kind in (Kind.G, Kind.H) and index == ZERO_DEGREE:
            continue
        return BasisVector(kind, index)


def random_element(rng: random.Random, radius: int, terms: int = 3) -> AlgElement:
    return AlgElement.from_terms(
        (random_basis(rng, radius), random_laurent(rng, max_terms=2, nonzero=True))
        for _ in range(rng.randint(1, terms))
    )


def random_tensor2(rng: random.Random, radius: int, terms: int = 3) -> Tensor2Element:
    return Tensor2Element.from_terms(
        ((random_basis(rng, radius), random_basis(rng, radius)), random_laurent(rng, nonzero=True))
        for _ in range(rng.randint(1, terms))
    )


def random_tensor3(rng: random.Random, radius: int, terms: int = 3) -> Tensor3Element:
    """Nonzero; an empty 3-tensor would read back as a 2-tensor."""
    while True:
        t = Tensor3Element.from_terms(
            (
                (random_basis(rng, radius), random_basis(rng, radius), random_basis(rng, radius)),
                random_laurent(rng, nonzero=True),
            )
            for _ in range(rng.randint(1, terms))
        )
        if not t.is_zero():
            return t


def random_skew_r(rng: random.Random, radius: int, terms: int = 2) -> Tensor2Element:
    """A sum of wedges a∧b with random coefficients; skew by construction."""
    acc = Tensor2Element.zero()
    for _ in range(rng.randint(1, terms)):
        a = AlgElement.single(random_basis(rng, radius))
        b = AlgElement.single(random_basis(rng, radius))
        acc = acc + wedge(a, b).scale(random_laurent(rng, max_terms=2, nonzero=True))
    return acc


def random_nonzero_degree(rng: random.Random, radius: int) -> Degree:
    while True:
        k = (rng.randint(-radius, radius), rng.randint(-radius, radius))
        if k != ZERO_DEGREE:
            return k


def random_basis_of_degree(rng: random.Random, degree: Degree) -> BasisVector:
    kinds = list(INDEXED_KINDS)
    if degree == ZERO_DEGREE:
        kinds = [Kind.E, Kind.F, *DERIVATION_KINDS]
    kind = rng.choice(kinds)
    if kind in DERIVATION_KINDS:
        return BasisVector(kind)
    return BasisVector(kind, degree)


def random_homogeneous_tensor2(
    rng: random.Random, radius: int, degree: Degree, terms: int = 3
) -> Tensor2Element:
    """Nonzero tensor of the given total degree with every index inside the window."""
    pairs = []
    while len(pairs) < terms:
        a = random_basis(rng, radius)
        rest = (degree[0] - a.degree[0], degree[1] - a.degree[1])
        b = random_basis_of_degree(rng, rest)
        if not in_window(b, radius):
            continue
        pairs.append(((a, b), random_laurent(rng, max_terms=2, nonzero=True)))
    out = Tensor2Element.from_terms(pairs)
    if out.is_zero():
        return random_homogeneous_tensor2(rng, radius, degree, terms)
    return out


def random_nonzero_tensor2(rng: random.Random, radius: int, terms: int = 3) -> Tensor2Element:
    while True:
        t = random_tensor2(rng, radius, terms)
        if not t.is_zero():
            return t

