"""
Verification targets behind ``qt-bialgebra verify``.

Every target returns a :class:`VerifyReport`. Work is cut into chunks; each
chunk is a picklable ``(target, args)`` pair handled by a module-level worker
so the chunks can be spread over a process pool. Randomized targets seed one
generator per sample, so results do not depend on how the work was split.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from multiprocessing import Pool
import random
import time
from typing import Callable, Iterable, Sequence

from pydantic import BaseModel, Field

from .algebra import (
    D,
    D1,
    D2,
    AlgElement,
    BasisVector,
    Kind,
    as_element,
    basis_in_window,
    bracket,
    bracket_basis,
    e,
    f,
    jacobi_defect,
)
from .bialgebra import (
    DEFAULT_PROBES,
    RMatrix,
    c_of_r,
    check_cybe,
    cojacobi_defect,
    compatibility_defect,
    delta_r,
)
from .cohomology import DerivationTable, inner_derivation, reduce_to_inner, windowed_faithfulness
from .errors import NotInImage
from .formats import (
    dump_element,
    dump_table,
    dump_tensor,
    parse_element,
    parse_table,
    parse_tensor,
)
from .identities import SUITES, run_identity_suite
from .laurent import format_ratfunc, parse_ratfunc
from .sampling import (
    random_basis,
    random_element,
    random_homogeneous_tensor2,
    random_nonzero_degree,
    random_nonzero_tensor2,
    random_ratfunc,
    random_skew_r,
    random_tensor2,
    random_tensor3,
)
from .tensor import (
    Tensor2Element,
    Tensor3Element,
    act2,
    act3,
    is_skew,
    tensor3,
    twist,
    wedge,
)
from .torus_oracle import embed, oracle_bracket, project


class Failure(BaseModel):
    inputs: str
    expected: str
    actual: str


class VerifyReport(BaseModel):
    suite: str
    instances_checked: int = 0
    failures: list[Failure] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


Advance = Callable[[int], None]
Status = Callable[[str], None]
ChunkResult = tuple[int, list[tuple[str, str, str]]]


@dataclass(frozen=True)
class Plan:
    """Chunks of one target plus the number of progress steps they represent."""

    suite: str
    chunks: list[tuple[str, tuple]]

    @property
    def total(self) -> int:
        return len(self.chunks)


def _show(value: object) -> str:
    if isinstance(value, AlgElement):
        return dump_element(value)
    if isinstance(value, BasisVector):
        return dump_element(as_element(value))
    if isinstance(value, (Tensor2Element, Tensor3Element)):
        return dump_tensor(value)
    return str(value)


def _sample_rng(seed: int, target: str, i: int) -> random.Random:
    return random.Random(f"{seed}:{target}:{i}")


def _split(n: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, n)) if n else 1
    step, extra = divmod(n, parts)
    out, start = [], 0
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        out.append((start, end))
        start = end
    return out


# -- workers -------------------------------------------------------------------


def _jacobi_chunk(radius: int, first: int) -> ChunkResult:
    vectors = basis_in_window(radius)
    x = vectors[first]
    checked = 0
    failures = []
    for y in vectors[first + 1 :]:
        checked += 1
        anti = bracket_basis(x, y) + bracket_basis(y, x)
        if not anti.is_zero():
            failures.append((f"antisymmetry {x}, {y}", "0", _show(anti)))
    for y, z in combinations(vectors[first + 1 :], 2):
        checked += 1
        defect = jacobi_defect(as_element(x), as_element(y), as_element(z))
        if not defect.is_zero():
            failures.append((f"jacobi {x}, {y}, {z}", "0", _show(defect)))
    return checked, failures


def _oracle_chunk(radius: int, first: int) -> ChunkResult:
    vectors = [b for b in basis_in_window(radius) if b.kind not in (Kind.D1, Kind.D2)]
    x = vectors[first]
    checked = 0
    failures = []
    for y in vectors:
        checked += 1
        expected = bracket_basis(x, y)
        try:
            actual = project(oracle_bracket(embed(x), embed(y)))
        except NotInImage as exc:
            failures.append((f"oracle [{x}, {y}]", _show(expected), f"not in image: {exc}"))
            continue
        if actual != expected:
            failures.append((f"oracle [{x}, {y}]", _show(expected), _show(actual)))
    return checked, failures


def _module_chunk(radius: int, seed: int, start: int, end: int) -> ChunkResult:
    checked = 0
    failures = []
    for i in range(start, end):
        rng = _sample_rng(seed, "module-axioms", i)
        x = random_element(rng, radius, 2)
        y = random_element(rng, radius, 2)
        t2 = random_tensor2(rng, radius)
        t3 = random_tensor3(rng, radius, 2)
        inputs = f"sample {i}: x={_show(x)} y={_show(y)}"

        lhs2 = act2(bracket(x, y), t2)
        rhs2 = act2(x, act2(y, t2)) - act2(y, act2(x, t2))
        lhs3 = act3(bracket(x, y), t3)
        rhs3 = act3(x, act3(y, t3)) - act3(y, act3(x, t3))
        eq_lhs = twist(act2(x, t2))
        eq_rhs = act2(x, twist(t2))
        checked += 3
        if lhs2 != rhs2:
            failures.append((f"{inputs} t={_show(t2)} (act2)", _show(rhs2), _show(lhs2)))
        if lhs3 != rhs3:
            failures.append((f"{inputs} t={_show(t3)} (act3)", _show(rhs3), _show(lhs3)))
        if eq_lhs != eq_rhs:
            failures.append((f"{inputs} t={_show(t2)} (twist)", _show(eq_rhs), _show(eq_lhs)))
    return checked, failures


def _cojacobi_chunk(radius: int, seed: int, start: int, end: int) -> ChunkResult:
    checked = 0
    failures = []
    for i in range(start, end):
        rng = _sample_rng(seed, "cojacobi", i)
        r = RMatrix(random_skew_r(rng, radius))
        c = c_of_r(r)
        for x in DEFAULT_PROBES:
            checked += 2
            inputs = f"r={_show(r.value)} x={_show(x)}"
            lhs = cojacobi_defect(r, x)
            rhs = act3(x, c)
            if lhs != rhs:
                failures.append((f"co-Jacobi {inputs}", _show(rhs), _show(lhs)))
            image = delta_r(r, x)
            if not is_skew(image):
                failures.append((f"image axiom {inputs}", "skew tensor", _show(image)))
    return checked, failures


def _compat_chunk(radius: int, seed: int, start: int, end: int) -> ChunkResult:
    checked = 0
    failures = []
    for i in range(start, end):
        rng = _sample_rng(seed, "compatibility", i)
        r = random_tensor2(rng, radius, 2)
        x = as_element(random_basis(rng, radius))
        y = as_element(random_basis(rng, radius))
        checked += 1
        defect = compatibility_defect(r, x, y)
        if not defect.is_zero():
            inputs = f"r={_show(r)} x={_show(x)} y={_show(y)}"
            failures.append((f"compatibility {inputs}", "0", _show(defect)))
    return checked, failures


def _roundtrip_chunk(radius: int, seed: int, start: int, end: int) -> ChunkResult:
    checked = 0
    failures = []
    for i in range(start, end):
        rng = _sample_rng(seed, "inner-roundtrip", i)
        k = random_nonzero_degree(rng, radius)
        v = random_homogeneous_tensor2(rng, radius, k)
        checked += 1
        back = reduce_to_inner(inner_derivation(v, radius), k)
        if back != v:
            failures.append((f"degree {k}", _show(v), _show(back)))
    return checked, failures


def _faithfulness_chunk(radius: int, seed: int, start: int, end: int) -> ChunkResult:
    checked = 0
    failures = []
    for i in range(start, end):
        rng = _sample_rng(seed, "faithfulness", i)
        v = random_nonzero_tensor2(rng, radius)
        checked += 1
        if windowed_faithfulness(v, DEFAULT_PROBES) is None:
            failures.append((_show(v), "a probe x with x·v ≠ 0", "every probe annihilates v"))
    return checked, failures


def _serialization_chunk(radius: int, seed: int, start: int, end: int) -> ChunkResult:
    checked = 0
    failures = []
    for i in range(start, end):
        rng = _sample_rng(seed, "serialization", i)
        cases = [
            ("coefficient", random_ratfunc(rng), format_ratfunc, parse_ratfunc),
            ("element", random_element(rng, radius), dump_element, parse_element),
            ("tensor2", random_tensor2(rng, radius), dump_tensor, parse_tensor),
            ("tensor3", random_tensor3(rng, radius), dump_tensor, parse_tensor),
            ("table", random_table(rng, radius), dump_table, parse_table),
        ]
        for name, value, dump, parse in cases:
            checked += 1
            text = dump(value)
            back = parse(text)
            again = dump(back)
            if back != value or again != text:
                failures.append((f"{name} sample {i}", text, again))
    return checked, failures


def random_table(rng: random.Random, radius: int, entries: int = 3) -> DerivationTable:
    assignments: dict[BasisVector, Tensor2Element] = {}
    for _ in range(rng.randint(1, entries)):
        assignments[random_basis(rng, radius)] = random_tensor2(rng, radius)
    return DerivationTable(assignments, radius)


_WORKERS: dict[str, Callable[..., ChunkResult]] = {
    "jacobi": _jacobi_chunk,
    "oracle": _oracle_chunk,
    "module": _module_chunk,
    "cojacobi": _cojacobi_chunk,
    "compat": _compat_chunk,
    "roundtrip": _roundtrip_chunk,
    "faithfulness": _faithfulness_chunk,
    "serialization": _serialization_chunk,
}


def _run_chunk(chunk: tuple[str, tuple]) -> ChunkResult:
    name, args = chunk
    return _WORKERS[name](*args)


def run_plan(plan: Plan, threads: int = 1, *, advance: Advance | None = None) -> VerifyReport:
    started = time.perf_counter()
    report = VerifyReport(suite=plan.suite)

    def collect(results: Iterable[ChunkResult]) -> None:
        for checked, failures in results:
            report.instances_checked += checked
            report.failures.extend(
                Failure(inputs=i, expected=exp, actual=act) for i, exp, act in failures
            )
            if advance:
                advance(1)

    if threads <= 1 or plan.total <= 1:
        collect(map(_run_chunk, plan.chunks))
    else:
        with Pool(processes=min(threads, plan.total)) as pool:
            collect(pool.imap(_run_chunk, plan.chunks))
    report.wall_time = time.perf_counter() - started
    return report


# -- plans ---------------------------------------------------------------------


def _sampled(suite: str, worker: str, radius: int, seed: int, samples: int, threads: int) -> Plan:
    parts = max(1, threads * 4)
    return Plan(
        suite,
        [(worker, (radius, seed, start, end)) for start, end in _split(samples, parts)],
    )


def jacobi_plan(radius: int) -> Plan:
    n = len(basis_in_window(radius))
    return Plan("jacobi", [("jacobi", (radius, i)) for i in range(n)])


def oracle_plan(radius: int) -> Plan:
    n = len([b for b in basis_in_window(radius) if b.kind not in (Kind.D1, Kind.D2)])
    return Plan("oracle", [("oracle", (radius, i)) for i in range(n)])


def module_axioms_plan(radius: int, seed: int, samples: int, threads: int = 1) -> Plan:
    return _sampled("module-axioms", "module", radius, seed, samples, threads)


def bialgebra_axioms_plan(
    radius: int, seed: int, cojacobi_samples: int, compat_samples: int, threads: int = 1
) -> Plan:
    co = _sampled("bialgebra-axioms", "cojacobi", radius, seed, cojacobi_samples, threads)
    comp = _sampled("bialgebra-axioms", "compat", radius, seed, compat_samples, threads)
    return Plan("bialgebra-axioms", co.chunks + comp.chunks)


def inner_roundtrip_plan(radius: int, seed: int, samples: int, threads: int = 1) -> Plan:
    return _sampled("inner-roundtrip", "roundtrip", radius, seed, samples, threads)


def faithfulness_plan(radius: int, seed: int, samples: int, threads: int = 1) -> Plan:
    return _sampled("faithfulness-sweep", "faithfulness", radius, seed, samples, threads)


def serialization_plan(radius: int, seed: int, samples: int, threads: int = 1) -> Plan:
    return _sampled("serialization", "serialization", radius, seed, samples, threads)


# -- fixed instances -------------------------------------------------------------


def cybe_instances() -> list[tuple[str, RMatrix, bool]]:
    """The three reference r-matrices and whether each solves the CYBE."""
    return [
        ("d1∧d2", RMatrix(wedge(D1(), D2())), True),
        ("d∧e(0,0)", RMatrix(wedge(D(), e(0, 0))), True),
        ("e(0,0)∧f(0,0)", RMatrix(wedge(e(0, 0), f(0, 0))), False),
    ]


def expected_c_ef() -> Tensor3Element:
    """c(e0∧f0), the six-term element."""
    d, e0, f0 = D(), e(0, 0), f(0, 0)
    return (
        tensor3(d, e0, f0)
        - tensor3(d, f0, e0)
        - tensor3(e0, d, f0)
        + tensor3(f0, d, e0)
        + tensor3(e0, f0, d)
        - tensor3(f0, e0, d)
    )


def check_cybe_instances(report: VerifyReport) -> None:
    for name, r, solves in cybe_instances():
        report.instances_checked += 1
        if check_cybe(r) != solves:
            report.failures.append(
                Failure(inputs=f"cybe {name}", expected=str(solves), actual=_show(c_of_r(r)))
            )
    report.instances_checked += 1
    c = c_of_r(RMatrix(wedge(e(0, 0), f(0, 0))))
    if c != expected_c_ef():
        report.failures.append(
            Failure(inputs="c(e0∧f0)", expected=_show(expected_c_ef()), actual=_show(c))
        )


# -- entry points ----------------------------------------------------------------


def verify_jacobi(radius: int, threads: int = 1, *, advance: Advance | None = None) -> VerifyReport:
    return run_plan(jacobi_plan(radius), threads, advance=advance)


def verify_oracle(radius: int, threads: int = 1, *, advance: Advance | None = None) -> VerifyReport:
    return run_plan(oracle_plan(radius), threads, advance=advance)


def verify_module_axioms(
    radius: int, seed: int, samples: int, threads: int = 1, *, advance: Advance | None = None
) -> VerifyReport:
    return run_plan(module_axioms_plan(radius, seed, samples, threads), threads, advance=advance)


def verify_bialgebra_axioms(
    radius: int,
    seed: int,
    cojacobi_samples: int,
    compat_samples: int,
    threads: int = 1,
    *,
    advance: Advance | None = None,
    status: Status | None = None,
) -> VerifyReport:
    started = time.perf_counter()
    plan = bialgebra_axioms_plan(radius, seed, cojacobi_samples, compat_samples, threads)
    report = run_plan(plan, threads, advance=advance)
    if status:
        status("Checking the reference r-matrices")
    check_cybe_instances(report)
    report.wall_time = time.perf_counter() - started
    return report


def verify_identities(
    radius: int,
    seed: int,
    suites: Sequence[str] | None = None,
    *,
    advance: Advance | None = None,
    status: Status | None = None,
) -> VerifyReport:
    started = time.perf_counter()
    chosen = list(suites) if suites else list(SUITES)
    name = "identities" if not suites else "identities:" + ",".join(chosen)
    report = VerifyReport(suite=name)
    for suite_id in chosen:
        result = run_identity_suite(suite_id, radius, seed, advance=advance)
        if status:
            status(
                f"suite {suite_id}: {result.instances_checked} instances, "
                f"{len(result.failures)} failures"
            )
        report.instances_checked += result.instances_checked
        report.failures.extend(
            Failure(inputs=f"({suite_id}) {fail.label}", expected=fail.expected, actual=fail.actual)
            for fail in result.failures
        )
    report.wall_time = time.perf_counter() - started
    return report


def verify_inner_roundtrip(
    radius: int, seed: int, samples: int, threads: int = 1, *, advance: Advance | None = None
) -> VerifyReport:
    return run_plan(inner_roundtrip_plan(radius, seed, samples, threads), threads, advance=advance)


def verify_faithfulness(
    radius: int, seed: int, samples: int, threads: int = 1, *, advance: Advance | None = None
) -> VerifyReport:
    return run_plan(faithfulness_plan(radius, seed, samples, threads), threads, advance=advance)


def verify_serialization(
    radius: int, seed: int, samples: int, threads: int = 1, *, advance: Advance | None = None
) -> VerifyReport:
    return run_plan(serialization_plan(radius, seed, samples, threads), threads, advance=advance)
