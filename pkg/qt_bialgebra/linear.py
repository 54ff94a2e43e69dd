from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

from .laurent import RatFunc, Scalar, as_ratfunc


K = TypeVar("K", bound=Hashable)
C = TypeVar("C", bound="Combination")


class Combination(Generic[K]):
    """
    A finite Q(q)-linear combination of hashable keys.

    Zero coefficients are never stored, so two combinations are equal exactly
    when their coefficient maps are equal. Subclasses provide ``sort_key`` for
    the deterministic iteration order used in rendering and serialization.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[K, RatFunc] | None = None) -> None:
        clean: dict[K, RatFunc] = {}
        if coeffs:
            for key, c in coeffs.items():
                c = as_ratfunc(c)
                if not c.is_zero():
                    clean[key] = c
        self._coeffs = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls: type[C], coeffs: dict[K, RatFunc]) -> C:
        out = cls.__new__(cls)
        out._coeffs = coeffs
        out._hash = None
        return out

    @classmethod
    def zero(cls: type[C]) -> C:
        return cls._trusted({})

    @classmethod
    def single(cls: type[C], key: K, coeff: RatFunc | Scalar = 1) -> C:
        return cls({key: as_ratfunc(coeff)})

    @classmethod
    def from_terms(cls: type[C], terms: Iterable[tuple[K, RatFunc | Scalar]]) -> C:
        acc: dict[K, RatFunc] = {}
        for key, c in terms:
            c = as_ratfunc(c)
            if c.is_zero():
                continue
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
        return cls(acc)

    @staticmethod
    def sort_key(key: Any) -> Any:
        return key

    def coefficient(self, key: K) -> RatFunc:
        return self._coeffs.get(key, as_ratfunc(0))

    def keys(self) -> Iterator[K]:
        return iter(self._coeffs)

    def items(self) -> list[tuple[K, RatFunc]]:
        return sorted(self._coeffs.items(), key=lambda kv: self.sort_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def map_keys(self: C, fn: Callable[[K], K | None]) -> C:
        """Re-key each term; keys mapped to ``None`` are dropped."""
        return type(self).from_terms(
            (new, c) for key, c in self._coeffs.items() if (new := fn(key)) is not None
        )

    def __add__(self: C, other: C) -> C:
        if type(other) is not type(self):
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            prev = out.get(key)
            if prev is None:
                out[key] = c
                continue
            total = prev + c
            if total.is_zero():
                del out[key]
            else:
                out[key] = total
        return type(self)._trusted(out)

    def __neg__(self: C) -> C:
        return type(self)._trusted({k: -c for k, c in self._coeffs.items()})

    def __sub__(self: C, other: C) -> C:
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self: C, factor: RatFunc | Scalar) -> C:
        factor = as_ratfunc(factor)
        if factor.is_zero():
            return type(self).zero()
        return type(self)._trusted({k: c * factor for k, c in self._coeffs.items()})

    def __mul__(self: C, factor: RatFunc | Scalar) -> C:
        if not isinstance(factor, (RatFunc, int, Fraction)):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._coeffs == other._coeffs  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._coeffs.items())))
        return self._hash

    def __getstate__(self) -> dict[K, RatFunc]:
        return self._coeffs

    def __setstate__(self, state: dict[K, RatFunc]) -> None:
        self._coeffs = state
        self._hash = None

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"({c})*{k}" for k, c in self.items())
        return f"{type(self).__name__}({body})"
