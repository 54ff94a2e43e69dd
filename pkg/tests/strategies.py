from __future__ import annotations

from hypothesis import strategies as st

from qt_bialgebra.algebra import AlgElement, BasisVector, Kind
from qt_bialgebra.laurent import LaurentPoly, RatFunc
from qt_bialgebra.tensor import Tensor2Element, Tensor3Element

RADIUS = 2


def laurent_polys(max_terms: int = 3, exponents: int = 4) -> st.SearchStrategy[LaurentPoly]:
    return st.dictionaries(
        st.integers(-exponents, exponents), st.integers(-5, 5), max_size=max_terms
    ).map(LaurentPoly.from_dict)


def laurents(max_terms: int = 3) -> st.SearchStrategy[RatFunc]:
    return laurent_polys(max_terms).map(RatFunc)


def nonzero_laurents(max_terms: int = 2) -> st.SearchStrategy[RatFunc]:
    return laurents(max_terms).filter(lambda c: not c.is_zero())


@st.composite
def ratfuncs(draw) -> RatFunc:
    num = draw(laurents())
    if draw(st.booleans()):
        return num
    return num / draw(nonzero_laurents())


@st.composite
def basis_vectors(draw, radius: int = RADIUS) -> BasisVector:
    kind = draw(st.sampled_from(list(Kind)))
    if not kind.indexed:
        return BasisVector(kind)
    index = (draw(st.integers(-radius, radius)), draw(st.integers(-radius, radius)))
    if kind in (Kind.G, Kind.H) and index == (0, 0):
        index = (1, 0)
    return BasisVector(kind, index)


@st.composite
def elements(draw, radius: int = RADIUS, max_terms: int = 2) -> AlgElement:
    terms = draw(
        st.lists(st.tuples(basis_vectors(radius), nonzero_laurents()), max_size=max_terms)
    )
    return AlgElement.from_terms(terms)


@st.composite
def tensors2(draw, radius: int = RADIUS, max_terms: int = 2) -> Tensor2Element:
    pairs = st.tuples(basis_vectors(radius), basis_vectors(radius))
    terms = draw(st.lists(st.tuples(pairs, nonzero_laurents()), max_size=max_terms))
    return Tensor2Element.from_terms(terms)


@st.composite
def tensors3(draw, radius: int = RADIUS, max_terms: int = 2) -> Tensor3Element:
    triples = st.tuples(basis_vectors(radius), basis_vectors(radius), basis_vectors(radius))
    terms = draw(st.lists(st.tuples(triples, nonzero_laurents()), max_size=max_terms))
    return Tensor3Element.from_terms(terms)
