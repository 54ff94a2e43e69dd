"""
JSON file formats for elements, tensors and derivation tables.

Dumps are compact and list terms in canonical basis order, so
``dump_x(parse_x(text)) == text`` for any text this module produced.
"""

from __future__ import annotations

import json
from typing import Any, Literal, TypeVar

from pydantic import BaseModel, ConfigDict, ValidationError

from .algebra import ZERO_DEGREE, AlgElement, BasisVector, Kind
from .cohomology import DerivationTable
from .errors import ParseError
from .laurent import RatFunc, format_ratfunc, parse_ratfunc
from .tensor import Tensor2Element, Tensor3Element


KindName = Literal["d", "d1", "d2", "e", "f", "g", "h"]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class BasisModel(_Strict):
    kind: KindName
    index: tuple[int, int] | None = None


class ElementTermModel(BasisModel):
    coeff: str


class ElementModel(_Strict):
    terms: list[ElementTermModel]


class TensorTermModel(_Strict):
    left: BasisModel
    mid: BasisModel | None = None
    right: BasisModel
    coeff: str


class TensorModel(_Strict):
    terms: list[TensorTermModel]


class AssignmentModel(_Strict):
    basis: BasisModel
    image: TensorModel


class TableModel(_Strict):
    window: int
    assignments: list[AssignmentModel]


M = TypeVar("M", bound=BaseModel)


# -- parsing -------------------------------------------------------------------


def _format_loc(loc: tuple[Any, ...]) -> str:
    out = ""
    for part in loc:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out.lstrip(".") or "<root>"


def _load(text: str, model: type[M]) -> M:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(first["msg"], path=_format_loc(tuple(first["loc"]))) from exc


def _coeff(text: str, path: str) -> RatFunc:
    try:
        return parse_ratfunc(text)
    except ParseError as exc:
        raise ParseError(exc.message, column=exc.column, path=path) from exc


def _basis(model: BasisModel, path: str) -> BasisVector | None:
    """The basis vector, or None for g/h at index (0, 0), which are zero."""
    kind = Kind(model.kind)
    if not kind.indexed:
        if model.index is not None:
            raise ParseError(f"'{kind.value}' takes no index", path=f"{path}.index")
        return BasisVector(kind)
    if model.index is None:
        raise ParseError(f"'{kind.value}' requires an index", path=path)
    if kind in (Kind.G, Kind.H) and model.index == ZERO_DEGREE:
        return None
    return BasisVector(kind, model.index)


def _element_from(model: ElementModel, path: str = "terms") -> AlgElement:
    terms = []
    for i, term in enumerate(model.terms):
        where = f"{path}[{i}]"
        c = _coeff(term.coeff, f"{where}.coeff")
        b = _basis(term, where)
        if b is not None:
            terms.append((b, c))
    return AlgElement.from_terms(terms)


def _tensor_from(model: TensorModel, path: str = "terms") -> Tensor2Element | Tensor3Element:
    if not model.terms:
        return Tensor2Element.zero()
    triple = model.terms[0].mid is not None
    terms = []
    for i, term in enumerate(model.terms):
        where = f"{path}[{i}]"
        if (term.mid is not None) != triple:
            raise ParseError("mixes pair and triple terms", path=where)
        c = _coeff(term.coeff, f"{where}.coeff")
        parts = [term.left, term.mid, term.right] if triple else [term.left, term.right]
        names = ["left", "mid", "right"] if triple else ["left", "right"]
        key = tuple(_basis(p, f"{where}.{n}") for p, n in zip(parts, names))
        if all(b is not None for b in key):
            terms.append((key, c))
    if triple:
        return Tensor3Element.from_terms(terms)
    return Tensor2Element.from_terms(terms)


def parse_element(text: str) -> AlgElement:
    return _element_from(_load(text, ElementModel))


def parse_tensor(text: str) -> Tensor2Element | Tensor3Element:
    return _tensor_from(_load(text, TensorModel))


def parse_tensor2(text: str) -> Tensor2Element:
    t = parse_tensor(text)
    if not isinstance(t, Tensor2Element):
        raise ParseError("expected a 2-tensor, got triple terms", path="terms")
    return t


def parse_table(text: str) -> DerivationTable:
    model = _load(text, TableModel)
    if model.window < 0:
        raise ParseError("window must be non-negative", path="window")
    assignments: dict[BasisVector, Tensor2Element] = {}
    for i, item in enumerate(model.assignments):
        where = f"assignments[{i}]"
        b = _basis(item.basis, f"{where}.basis")
        if b is None:
            raise ParseError("g/h at index (0,0) is zero and has no image", path=f"{where}.basis")
        image = _tensor_from(item.image, f"{where}.image.terms")
        if not isinstance(image, Tensor2Element):
            raise ParseError("images must be 2-tensors", path=f"{where}.image")
        assignments[b] = assignments[b] + image if b in assignments else image
    return DerivationTable(assignments, model.window)


# -- dumping -------------------------------------------------------------------


def _basis_model(b: BasisVector) -> dict[str, Any]:
    if b.kind.indexed:
        return {"kind": b.kind.value, "index": b.index}
    return {"kind": b.kind.value}


def _element_model(x: AlgElement) -> ElementModel:
    return ElementModel(
        terms=[
            ElementTermModel(**_basis_model(b), coeff=format_ratfunc(c)) for b, c in x.items()
        ]
    )


def _tensor_model(t: Tensor2Element | Tensor3Element) -> TensorModel:
    terms = []
    for key, c in t.items():
        if len(key) == 3:
            left, mid, right = key
            terms.append(
                TensorTermModel(
                    left=BasisModel(**_basis_model(left)),
                    mid=BasisModel(**_basis_model(mid)),
                    right=BasisModel(**_basis_model(right)),
                    coeff=format_ratfunc(c),
                )
            )
        else:
            left, right = key
            terms.append(
                TensorTermModel(
                    left=BasisModel(**_basis_model(left)),
                    right=BasisModel(**_basis_model(right)),
                    coeff=format_ratfunc(c),
                )
            )
    return TensorModel(terms=terms)


def dump_element(x: AlgElement) -> str:
    return _element_model(x).model_dump_json(exclude_none=True)


def dump_tensor(t: Tensor2Element | Tensor3Element) -> str:
    return _tensor_model(t).model_dump_json(exclude_none=True)


def dump_table(t: DerivationTable) -> str:
    model = TableModel(
        window=t.window,
        assignments=[
            AssignmentModel(basis=BasisModel(**_basis_model(b)), image=_tensor_model(image))
            for b, image in sorted(t.assignments.items(), key=lambda kv: kv[0].sort_key())
        ],
    )
    return model.model_dump_json(exclude_none=True)
