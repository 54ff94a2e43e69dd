"""
Runnable identity suites.

Each suite instantiates a block of tensor identities used when reducing
degree-zero derivations to inner ones, over every index of a window. Capital
letters follow the usual shorthand: D, D1, D2, E_k, F_k, G_k, H_k, with
G_0 = H_0 = 0.

Suites:

    a  action of D on the weight-zero 2-tensors
    b  action of E_0 (and F_0) on the same tensors
    c  the four 1/2-combinations solved from suite b
    d  G_{0,1} / H_{1,0} on derivation tensors, and the sl2-invariant w
    e  G_{0,1}·u for the inner element u built from γ^{gh}
    f  H_{1,0}·v, G_{1,0}·v and G_{0,1}·v for the inner element v built from η^{gh}
    g  E_0 on a generic weight-zero tensor, and admissible images of D
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random
from typing import Callable, Iterator, Union

from .algebra import D, D1, D2, AlgElement, Degree, e, f, g, h
from .errors import UnknownSuite
from .laurent import ONE, RatFunc, q_pow
from .sampling import random_laurent
from .tensor import Tensor2Element, act2, tensor2


Value = Union[Tensor2Element, RatFunc, bool]
Instance = tuple[str, Value, Value]


@dataclass(frozen=True)
class IdentityFailure:
    label: str
    expected: str
    actual: str


@dataclass(frozen=True)
class IdentityReport:
    suite: str
    radius: int
    instances_checked: int
    failures: tuple[IdentityFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class Suite:
    title: str
    build: Callable[[int, random.Random], Iterator[Instance]]


# -- shorthand ---------------------------------------------------------------


def E(k: Degree) -> AlgElement:
    return e(*k)


def F(k: Degree) -> AlgElement:
    return f(*k)


def G(k: Degree) -> AlgElement:
    return g(*k)


def H(k: Degree) -> AlgElement:
    return h(*k)


def GH(k: Degree) -> AlgElement:
    return g(*k) + h(*k)


T = tensor2
Z: Degree = (0, 0)


def _neg(k: Degree) -> Degree:
    return (-k[0], -k[1])


def _indices(radius: int) -> Iterator[Degree]:
    for k1 in range(-radius, radius + 1):
        for k2 in range(-radius, radius + 1):
            yield (k1, k2)


def _nonzero_indices(radius: int) -> Iterator[Degree]:
    return (k for k in _indices(radius) if k != Z)


# -- a: D action ---------------------------------------------------------------


def _suite_d_action(radius: int, rng: random.Random) -> Iterator[Instance]:
    d = D()
    for k in _indices(radius):
        nk = _neg(k)
        tag = f"k={k}"
        for left, right, weight, name in (
            (E(k), G(nk), 2, "E_k⊗G_-k"),
            (F(k), G(nk), -2, "F_k⊗G_-k"),
            (G(k), E(nk), 2, "G_k⊗E_-k"),
            (G(k), F(nk), -2, "G_k⊗F_-k"),
            (E(k), H(nk), 2, "E_k⊗H_-k"),
            (F(k), H(nk), -2, "F_k⊗H_-k"),
            (H(k), E(nk), 2, "H_k⊗E_-k"),
            (H(k), F(nk), -2, "H_k⊗F_-k"),
            (E(k), E(nk), 4, "E_m⊗E_-m"),
            (F(k), F(nk), -4, "F_m⊗F_-m"),
            (G(k), G(nk), 0, "G_k⊗G_-k"),
            (G(k), H(nk), 0, "G_k⊗H_-k"),
            (H(k), G(nk), 0, "H_k⊗G_-k"),
            (H(k), H(nk), 0, "H_k⊗H_-k"),
        ):
            t = T(left, right)
            yield f"D·({name}) {tag}", act2(d, t), t.scale(weight)

    e0, f0 = E(Z), F(Z)
    for x, weight in ((e0, 2), (f0, -2)):
        label = "E_0" if weight > 0 else "F_0"
        for other, oname in ((d, "D"), (D1(), "D1"), (D2(), "D2")):
            t = T(x, other)
            yield f"D·({label}⊗{oname})", act2(d, t), t.scale(weight)
            t = T(other, x)
            yield f"D·({oname}⊗{label})", act2(d, t), t.scale(weight)


# -- b: E_0 / F_0 action -----------------------------------------------------------


def _suite_e0_action(radius: int, rng: random.Random) -> Iterator[Instance]:
    e0, f0, d = E(Z), F(Z), D()
    for k in _nonzero_indices(radius):
        nk = _neg(k)
        tag = f"k={k}"
        yield (
            f"E_0·(H_k⊗G_-k) {tag}",
            act2(e0, T(H(k), G(nk))),
            T(E(k), G(nk)) - T(H(k), E(nk)),
        )
        yield (
            f"E_0·(F_k⊗E_-k) {tag}",
            act2(e0, T(F(k), E(nk))),
            T(G(k), E(nk)) - T(H(k), E(nk)),
        )
        yield (
            f"E_0·(G_k⊗G_-k) {tag}",
            act2(e0, T(G(k), G(nk))),
            -T(E(k), G(nk)) - T(G(k), E(nk)),
        )
        yield (
            f"E_0·(H_k⊗H_-k) {tag}",
            act2(e0, T(H(k), H(nk))),
            T(E(k), H(nk)) + T(H(k), E(nk)),
        )

    yield "E_0·(F_0⊗E_0)", act2(e0, T(f0, e0)), T(d, e0)
    yield "E_0·(D⊗D1)", act2(e0, T(d, D1())), T(e0, D1()).scale(-2)
    yield "E_0·(D⊗D2)", act2(e0, T(d, D2())), T(e0, D2()).scale(-2)
    yield "E_0·(E_0⊗F_0)", act2(e0, T(e0, f0)), T(e0, d)
    yield "E_0·(D1⊗D)", act2(e0, T(D1(), d)), T(D1(), e0).scale(-2)
    yield "E_0·(D2⊗D)", act2(e0, T(D2(), d)), T(D2(), e0).scale(-2)

    yield "F_0·(D⊗D1)", act2(f0, T(d, D1())), T(f0, D1()).scale(2)
    yield "F_0·(D1⊗D)", act2(f0, T(D1(), d)), T(D1(), f0).scale(2)
    yield "F_0·(E_0⊗F_0)", act2(f0, T(e0, f0)), -T(d, f0)
    yield "F_0·(F_0⊗E_0)", act2(f0, T(f0, e0)), -T(f0, d)


# -- c: solved combinations ------------------------------------------------------


def _suite_half_combinations(radius: int, rng: random.Random) -> Iterator[Instance]:
    e0 = E(Z)
    half = Fraction(1, 2)
    for k in _nonzero_indices(radius):
        nk = _neg(k)
        tag = f"k={k}"
        gg = T(G(k), G(nk))
        hg = T(H(k), G(nk))
        hh = T(H(k), H(nk))
        fe = T(F(k), E(nk))
        yield (
            f"E_k⊗H_-k {tag}",
            act2(e0, gg + hg + hh.scale(2) + fe).scale(half),
            T(E(k), H(nk)),
        )
        yield f"H_k⊗E_-k {tag}", act2(e0, gg + fe + hg).scale(-half), T(H(k), E(nk))
        yield f"E_k⊗G_-k {tag}", act2(e0, gg + fe - hg).scale(-half), T(E(k), G(nk))
        yield f"G_k⊗E_-k {tag}", act2(e0, gg + hg - fe).scale(-half), T(G(k), E(nk))


# -- d: G_{0,1}, H_{1,0} and the invariant element w -------------------------------------


def _suite_g01_relations(radius: int, rng: random.Random) -> Iterator[Instance]:
    g01, h10 = G((0, 1)), H((1, 0))
    d1, d2 = D1(), D2()
    yield "G_01·(D2⊗D2)", act2(g01, T(d2, d2)), -T(d2, g01) - T(g01, d2)
    yield "G_01·(D1⊗D2)", act2(g01, T(d1, d2)), -T(d1, g01)
    yield "G_01·(D2⊗D1)", act2(g01, T(d2, d1)), -T(g01, d1)
    yield "H_10·(D1⊗D1)", act2(h10, T(d1, d1)), -T(h10, d1) - T(d1, h10)

    e0, f0 = E(Z), F(Z)
    e01, f01, e10, f10 = E((0, 1)), F((0, 1)), E((1, 0)), F((1, 0))
    w = T(e0, f0) + T(f0, e0) + T(D(), D()).scale(Fraction(1, 2))
    yield "G_01·w", act2(g01, w), T(e01, f0) - T(e0, f01) - T(f01, e0) + T(f0, e01)
    yield "H_10·w", act2(h10, w), -T(e10, f0) + T(e0, f10) + T(f10, e0) - T(f0, e10)
    zero = Tensor2Element.zero()
    yield "D·w", act2(D(), w), zero
    yield "E_0·w", act2(e0, w), zero
    yield "F_0·w", act2(f0, w), zero


# -- e: the inner element u --------------------------------------------------------


def _suite_inner_u(radius: int, rng: random.Random) -> Iterator[Instance]:
    g01 = G((0, 1))
    total_u = Tensor2Element.zero()
    total_closed = Tensor2Element.zero()
    for m in range(-radius, radius + 1):
        if m == 0:
            continue
        qm = q_pow(m) - ONE
        q_neg_m = q_pow(-m) - ONE
        for n in range(-radius, radius + 1):
            tag = f"(m,n)=({m},{n})"
            gamma_gh = random_laurent(rng, nonzero=True)
            coeff = gamma_gh / qm
            u = T(GH((m, n)), GH((-m, -n))).scale(coeff)
            lhs = act2(g01, u)

            first = (
                T(G((m, n + 1)), GH((-m, -n))).scale(qm)
                + T(GH((m, n)), G((-m, 1 - n))).scale(q_neg_m)
            ).scale(coeff)
            yield f"G_01·u expanded {tag}", lhs, first

            gamma_hg = q_neg_m / qm * gamma_gh
            yield f"γ^hg relation {tag}", gamma_hg, -q_pow(-m) * gamma_gh

            closed = (
                T(G((m, n + 1)), H((-m, -n))).scale(gamma_gh)
                + T(H((m, n)), G((-m, 1 - n))).scale(gamma_hg)
                + T(G((m, n + 1)), G((-m, -n))).scale(gamma_gh)
                + T(G((m, n)), G((-m, 1 - n))).scale(gamma_hg)
            )
            yield f"G_01·u closed form {tag}", lhs, closed
            total_u = total_u + u
            total_closed = total_closed + closed
    yield "G_01·u summed over window", act2(g01, total_u), total_closed


# -- f: the inner element v --------------------------------------------------------


def _suite_inner_v(radius: int, rng: random.Random) -> Iterator[Instance]:
    g10, h10 = G((1, 0)), H((1, 0))
    g01 = G((0, 1))
    total_v = Tensor2Element.zero()
    total_vhh = Tensor2Element.zero()
    total_h = Tensor2Element.zero()
    total_g = Tensor2Element.zero()
    for n in range(-radius, radius + 1):
        if n == 0:
            continue
        tag = f"n={n}"
        eta = random_laurent(rng, nonzero=True)
        coeff = eta / (ONE - q_pow(n))
        v = T(GH((0, n)), GH((0, -n))).scale(coeff)
        v_hh = T(H((0, n)), H((0, -n))).scale(coeff)

        first = (
            T(H((1, n)), GH((0, -n))).scale(ONE - q_pow(n))
            + T(GH((0, n)), H((1, -n))).scale(ONE - q_pow(-n))
        ).scale(coeff)
        h_closed = T(H((1, n)), GH((0, -n))).scale(eta) - T(GH((0, n)), H((1, -n))).scale(
            q_pow(-n) * eta
        )
        g_closed = T(G((1, n)), GH((0, -n))).scale(eta) - T(GH((0, n)), G((1, -n))).scale(
            q_pow(-n) * eta
        )
        yield f"H_10·v expanded {tag}", act2(h10, v), first
        yield f"H_10·v closed form {tag}", act2(h10, v), h_closed
        yield f"G_10·v closed form {tag}", act2(g10, v), g_closed
        yield f"G_10·(H⊗H part of v) {tag}", act2(g10, v_hh), Tensor2Element.zero()
        yield f"G_01·v {tag}", act2(g01, v), Tensor2Element.zero()
        total_v = total_v + v
        total_vhh = total_vhh + v_hh
        total_h = total_h + h_closed
        total_g = total_g + g_closed
    yield "H_10·v summed over window", act2(h10, total_v), total_h
    yield "G_10·v summed over window", act2(g10, total_v), total_g
    yield "G_10·(H⊗H part of v) summed", act2(g10, total_vhh), Tensor2Element.zero()
    yield "G_01·v summed over window", act2(g01, total_v), Tensor2Element.zero()


# -- g: admissible images of D -------------------------------------------------------


def admissible_d_image(
    radius: int, rng: random.Random
) -> tuple[Tensor2Element, dict[Degree, dict[str, RatFunc]]]:
    """
    A random image of D under a degree-zero derivation that kills E_0.

    Per k ≠ 0 the free data are gg and s = gh = hg; then ef = fe = gg − s and
    hh = gg. At k = 0, ef = fe = 2·dd. The D_i⊗D_j coefficients are free.
    Returns the tensor and the per-degree coefficients it was built from.
    """
    coeffs: dict[Degree, dict[str, RatFunc]] = {}
    image = Tensor2Element.zero()
    for k in _nonzero_indices(radius):
        nk = _neg(k)
        gg = random_laurent(rng)
        s = random_laurent(rng)
        c = {"gg": gg, "gh": s, "hg": s, "ef": gg - s, "fe": gg - s, "hh": gg}
        coeffs[k] = c
        image = (
            image
            + T(G(k), G(nk)).scale(c["gg"])
            + T(G(k), H(nk)).scale(c["gh"])
            + T(H(k), G(nk)).scale(c["hg"])
            + T(H(k), H(nk)).scale(c["hh"])
            + T(E(k), F(nk)).scale(c["ef"])
            + T(F(k), E(nk)).scale(c["fe"])
        )
    dd = random_laurent(rng)
    coeffs[Z] = {"dd": dd, "ef": dd * 2, "fe": dd * 2}
    image = (
        image
        + T(D(), D()).scale(dd)
        + T(E(Z), F(Z)).scale(dd * 2)
        + T(F(Z), E(Z)).scale(dd * 2)
    )
    for x in (D1(), D2()):
        for y in (D1(), D2()):
            image = image + T(x, y).scale(random_laurent(rng))
    return image, coeffs


def _e0_ansatz(k: Degree, c: dict[str, RatFunc]) -> tuple[Tensor2Element, Tensor2Element]:
    """
    A generic degree-(k, −k) tensor and its image under E_0, read off the bracket.

    The four coefficients of the image vanish exactly when ef = gg − gh,
    hg = gh, fe = gg − gh and hh = gg.
    """
    nk = _neg(k)
    ansatz = (
        T(G(k), G(nk)).scale(c["gg"])
        + T(G(k), H(nk)).scale(c["gh"])
        + T(H(k), G(nk)).scale(c["hg"])
        + T(H(k), H(nk)).scale(c["hh"])
        + T(E(k), F(nk)).scale(c["ef"])
        + T(F(k), E(nk)).scale(c["fe"])
    )
    image = (
        T(E(k), G(nk)).scale(c["ef"] - c["gg"] + c["hg"])
        + T(E(k), H(nk)).scale(c["hh"] - c["gh"] - c["ef"])
        + T(G(k), E(nk)).scale(c["fe"] - c["gg"] + c["gh"])
        + T(H(k), E(nk)).scale(c["hh"] - c["hg"] - c["fe"])
    )
    return ansatz, image


def _suite_d_image(radius: int, rng: random.Random, tables: int = 3) -> Iterator[Instance]:
    zero = Tensor2Element.zero()
    e0 = E(Z)
    for k in _nonzero_indices(radius):
        c = {slot: random_laurent(rng) for slot in ("gg", "gh", "hg", "hh", "ef", "fe")}
        ansatz, image = _e0_ansatz(k, c)
        yield f"E_0 on a generic tensor k={k}", act2(e0, ansatz), image
    dd, ef0, fe0 = (random_laurent(rng) for _ in range(3))
    origin = T(D(), D()).scale(dd) + T(e0, F(Z)).scale(ef0) + T(F(Z), e0).scale(fe0)
    yield (
        "E_0 on a generic tensor k=(0, 0)",
        act2(e0, origin),
        T(e0, D()).scale(ef0 - dd * 2) + T(D(), e0).scale(fe0 - dd * 2),
    )

    for i in range(tables):
        image, coeffs = admissible_d_image(radius, rng)
        tag = f"table {i}"
        yield f"E_0·∂(D) {tag}", act2(e0, image), zero
        yield f"F_0·∂(D) {tag}", act2(F(Z), image), zero
        yield f"D·∂(D) {tag}", act2(D(), image), zero

        k = rng.choice(sorted(k for k in coeffs if k != Z))
        nk = _neg(k)
        slots = {
            "ef": T(E(k), F(nk)),
            "fe": T(F(k), E(nk)),
            "hh": T(H(k), H(nk)),
            "hg": T(H(k), G(nk)),
            "ef_0": T(e0, F(Z)),
            "fe_0": T(F(Z), e0),
        }
        for slot, t in slots.items():
            broken = image + t.scale(random_laurent(rng, nonzero=True))
            yield f"E_0·∂(D) with {slot} shifted {tag} k={k}", act2(e0, broken).is_zero(), False


SUITES: dict[str, Suite] = {
    "a": Suite("D action on weight-zero tensors", _suite_d_action),
    "b": Suite("E_0 and F_0 action on weight-zero tensors", _suite_e0_action),
    "c": Suite("solved 1/2-combinations", _suite_half_combinations),
    "d": Suite("G_01 / H_10 relations and the invariant w", _suite_g01_relations),
    "e": Suite("G_01 action on the inner element u", _suite_inner_u),
    "f": Suite("H_10, G_10 and G_01 action on the inner element v", _suite_inner_v),
    "g": Suite("E_0 constraints and admissible images of D", _suite_d_image),
}


def iter_instances(suite_id: str, radius: int, seed: int) -> Iterator[Instance]:
    try:
        suite = SUITES[suite_id]
    except KeyError:
        raise UnknownSuite(f"unknown identity suite '{suite_id}' (known: {', '.join(SUITES)})")
    return suite.build(radius, random.Random(f"{seed}:{suite_id}"))


def run_identity_suite(
    suite_id: str,
    radius: int = 3,
    seed: int = 20120,
    *,
    advance: Callable[[int], None] | None = None,
) -> IdentityReport:
    """Check every instance of one suite; failures keep the rendered expected/actual values."""
    checked = 0
    failures: list[IdentityFailure] = []
    for label, lhs, rhs in iter_instances(suite_id, radius, seed):
        checked += 1
        if lhs != rhs:
            failures.append(IdentityFailure(label, expected=str(rhs), actual=str(lhs)))
        if advance:
            advance(1)
    return IdentityReport(suite_id, radius, checked, tuple(failures))
