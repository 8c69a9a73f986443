"""
Verification harness

Exhaustive checks of the parametrization inside bounded boxes. The triple
enumerator is a plain leg loop with an exact square-root test, so it is
independent of the maps it is used to check. Failures are collected into
a VerificationReport and never raised.
"""
import logging
import math
import time
from contextlib import contextmanager
from typing import Iterator, List, Optional, Tuple

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, PreconditionError
from app.models.enums import TripleForm, VerificationMode
from app.models.polynomial import Polynomial
from app.models.triples import PythTriple
from app.schemas.report import Counterexample, VerificationReport
from app.services.arith import exact_sqrt, gcd_all
from app.services.inverse_service import euclid_params, primitive_decompose
from app.services.param_service import (
    PARAM_NAMES,
    PolyTriple,
    build_symbolic_classical,
    build_symbolic_F,
    build_symbolic_positive,
    classical_forms,
    displayed_F,
    displayed_positive,
)
from app.services.polycore import (
    denominator_lcm,
    falling_factorial_identity,
    format_poly,
    integer_valued_witness,
)
from app.tasks.sweep_tasks import (
    image_box_chunk,
    positive_chunk,
    run_chunks,
    split_evenly,
    surjectivity_chunk,
)

logger = logging.getLogger(__name__)

# chunks per worker for list-shaped sweeps
_CHUNKS_PER_JOB = 4


@contextmanager
def _timed(report: VerificationReport) -> Iterator[VerificationReport]:
    started = time.perf_counter()
    logger.info(f"Starting {report.mode.value} {report.parameters}")
    yield report
    report.elapsed_ms = int((time.perf_counter() - started) * 1000)
    logger.info(report.summary_line())
    for failure in report.failures:
        logger.warning(f"{report.mode.value} counterexample: {failure.input} expected {failure.expected} got {failure.got}")


def _resolve(jobs: Optional[int], max_failures: Optional[int]) -> Tuple[int, int]:
    return (
        jobs if jobs is not None else settings.DEFAULT_JOBS,
        max_failures if max_failures is not None else settings.MAX_STORED_FAILURES,
    )


def _time_limit(time_limit: Optional[float]) -> float:
    return time_limit if time_limit is not None else settings.SWEEP_TIME_LIMIT_SECONDS


# ============================================
# Enumeration
# ============================================
def enumerate_triples(bound: int, budget: Optional[int] = None) -> List[PythTriple]:
    """
    All (x, y, z) with max(|x|, |y|, |z|) <= bound and x^2 + y^2 = z^2.

    Order: x ascending, then y ascending, then z ascending (-z before +z);
    z = 0 appears once.
    """
    limit = budget if budget is not None else settings.ENUMERATE_BUDGET
    if bound < 0:
        raise PreconditionError(f"bound must be >= 0, got {bound}", bound="bound")
    if bound > limit:
        raise BudgetExceededError("enumerate", bound, limit)

    triples: List[PythTriple] = []
    span = range(-bound, bound + 1)
    for x in span:
        for y in span:
            z = exact_sqrt(x * x + y * y)
            if z is None or z > bound:
                continue
            if z == 0:
                triples.append(PythTriple(x, y, 0))
            else:
                triples.append(PythTriple(x, y, -z))
                triples.append(PythTriple(x, y, z))

    if len(set(triples)) != len(triples):
        raise PreconditionError(f"enumeration produced duplicates at bound {bound}")
    logger.debug(f"Enumerated {len(triples)} triples at bound {bound}")
    return triples


def _raw(triples: List[PythTriple]) -> List[Tuple[int, int, int]]:
    return [t.as_tuple() for t in triples]


# ============================================
# Sweeps
# ============================================
def check_surjectivity(
    bound: int,
    jobs: Optional[int] = None,
    max_failures: Optional[int] = None,
    time_limit: Optional[float] = None,
    enumerate_budget: Optional[int] = None,
) -> VerificationReport:
    """eval_F(preimage(t)) == t for every enumerated t"""
    jobs, max_failures = _resolve(jobs, max_failures)
    report = VerificationReport(mode=VerificationMode.SURJECTIVITY, parameters={"bound": bound})
    with _timed(report):
        triples = _raw(enumerate_triples(bound, enumerate_budget))
        chunks = split_evenly(triples, jobs * _CHUNKS_PER_JOB)
        arg_sets = [(i, chunk, max_failures) for i, chunk in enumerate(chunks)]
        for result in run_chunks(surjectivity_chunk, arg_sets, jobs, _time_limit(time_limit)):
            report.merge(result, max_failures)
    return report


def check_image_box(
    radius: int,
    jobs: Optional[int] = None,
    stride: Optional[int] = None,
    max_failures: Optional[int] = None,
    budget: Optional[int] = None,
    time_limit: Optional[float] = None,
) -> VerificationReport:
    """
    eval_F is integral and on the cone at every point of [-radius, radius]^4,
    and equals the symbolic triple on every stride-th point.

    The outermost coordinate is split into one chunk per value.
    """
    jobs, max_failures = _resolve(jobs, max_failures)
    limit = budget if budget is not None else settings.IMAGE_RADIUS_BUDGET
    stride = stride if stride is not None else settings.SYMBOLIC_SUBSAMPLE_STRIDE
    if radius < 0:
        raise PreconditionError(f"radius must be >= 0, got {radius}", bound="radius")
    if radius > limit:
        raise BudgetExceededError("image-radius", radius, limit)
    if stride < 1:
        raise PreconditionError(f"stride must be >= 1, got {stride}", bound="stride")

    report = VerificationReport(
        mode=VerificationMode.IMAGE_BOX, parameters={"radius": radius, "stride": stride}
    )
    with _timed(report):
        arg_sets = [
            (i, radius, [x], stride, max_failures)
            for i, x in enumerate(range(-radius, radius + 1))
        ]
        for result in run_chunks(image_box_chunk, arg_sets, jobs, _time_limit(time_limit)):
            report.merge(result, max_failures)
    return report


def positive_triples(zbound: int, enumerate_budget: Optional[int] = None) -> List[PythTriple]:
    """Positive triples with z <= zbound, in enumeration order"""
    if zbound < 0:
        raise PreconditionError(f"zbound must be >= 0, got {zbound}", bound="zbound")
    return [t for t in enumerate_triples(zbound, enumerate_budget) if t.is_positive()]


def check_positive_surjectivity(
    zbound: int,
    jobs: Optional[int] = None,
    max_failures: Optional[int] = None,
    time_limit: Optional[float] = None,
    enumerate_budget: Optional[int] = None,
    four_square_budget: Optional[int] = None,
) -> VerificationReport:
    """
    Round trip of every positive triple with z <= zbound through the
    4-parameter and 16-parameter positive maps.

    details["primitive_unordered"] counts primitive triples with x < y,
    i.e. each primitive triple once regardless of leg order.
    """
    jobs, max_failures = _resolve(jobs, max_failures)
    fs_budget = four_square_budget if four_square_budget is not None else settings.FOUR_SQUARE_BUDGET
    report = VerificationReport(
        mode=VerificationMode.POSITIVE_SURJECTIVITY, parameters={"zbound": zbound}
    )
    with _timed(report):
        triples = positive_triples(zbound, enumerate_budget)
        report.details["primitive_unordered"] = sum(
            1 for t in triples if t.x < t.y and gcd_all(t.as_tuple()) == 1
        )
        chunks = split_evenly(_raw(triples), jobs * _CHUNKS_PER_JOB)
        arg_sets = [(i, chunk, max_failures, fs_budget) for i, chunk in enumerate(chunks)]
        for result in run_chunks(positive_chunk, arg_sets, jobs, _time_limit(time_limit)):
            report.merge(result, max_failures)
    return report


# ============================================
# Symbolic checks
# ============================================
def _names_fmt(p: Polynomial) -> str:
    return format_poly(p, PARAM_NAMES) if p.arity == 4 else format_poly(p)


def _check_triple(
    report: VerificationReport,
    label: str,
    triple: PolyTriple,
    golden: Optional[PolyTriple],
    expected_lcm: Optional[Tuple[int, int, int]],
    residue_budget: Optional[int],
    max_failures: int,
) -> None:
    f, g, h = triple

    report.checked += 1
    identity = f * f + g * g - h * h
    if not identity.is_zero():
        report.record_failure(
            Counterexample(input=f"{label}: f^2 + g^2 - h^2", expected="0", got=_names_fmt(identity)),
            max_failures,
        )

    for name, component in zip("fgh", triple):
        report.checked += 1
        witness = integer_valued_witness(component, residue_budget)
        if witness is not None:
            report.record_failure(
                Counterexample(
                    input=f"{label}: {name} integer-valued",
                    expected="integer at every residue point",
                    got=f"non-integer at {witness}",
                ),
                max_failures,
            )
    report.details[f"{label}_terms"] = len(f) + len(g) + len(h)

    if expected_lcm is not None:
        report.checked += 1
        lcms = tuple(denominator_lcm(p) for p in triple)
        if lcms != expected_lcm:
            report.record_failure(
                Counterexample(input=f"{label}: denominator lcm", expected=str(expected_lcm), got=str(lcms)),
                max_failures,
            )

    if golden is not None:
        for name, built, displayed in zip("fgh", triple, golden):
            report.checked += 1
            if built != displayed:
                report.record_failure(
                    Counterexample(
                        input=f"{label}: {name} matches displayed formula",
                        expected=_names_fmt(displayed),
                        got=_names_fmt(built),
                    ),
                    max_failures,
                )


def check_symbolic(
    residue_budget: Optional[int] = None, max_failures: Optional[int] = None
) -> VerificationReport:
    """
    For the four-variable triple, the positive triple and both classical
    triples: f^2 + g^2 - h^2 == 0, integer-valuedness of each component,
    the expected denominators, and a term-for-term match with the
    transcribed displayed formulas where there is one.
    """
    _, max_failures = _resolve(None, max_failures)
    report = VerificationReport(mode=VerificationMode.SYMBOLIC)
    with _timed(report):
        _check_triple(report, "F", build_symbolic_F(), displayed_F(), (2, 1, 2), residue_budget, max_failures)
        _check_triple(
            report, "positive", build_symbolic_positive(), displayed_positive(), (2, 1, 2), residue_budget, max_failures
        )
        first, second = build_symbolic_classical()
        _check_triple(report, "classical_t1", first, None, (1, 1, 1), residue_budget, max_failures)
        _check_triple(report, "classical_t2", second, None, (1, 1, 1), residue_budget, max_failures)
    return report


def check_falling_factorial(
    kmax: int, budget: Optional[int] = None, max_failures: Optional[int] = None
) -> VerificationReport:
    """x(x-1)...(x-k+1) == k! C(x, k) for k = 1..kmax"""
    _, max_failures = _resolve(None, max_failures)
    limit = budget if budget is not None else settings.FALLING_FACTORIAL_BUDGET
    if kmax < 1:
        raise PreconditionError(f"kmax must be >= 1, got {kmax}", bound="kmax")
    if kmax > limit:
        raise BudgetExceededError("falling-factorial", kmax, limit)
    report = VerificationReport(mode=VerificationMode.FALLING_FACTORIAL, parameters={"kmax": kmax})
    with _timed(report):
        for k in range(1, kmax + 1):
            report.checked += 1
            if not falling_factorial_identity(k, limit):
                report.record_failure(
                    Counterexample(input=f"k={k}", expected="identity holds", got="polynomials differ"),
                    max_failures,
                )
    return report


# ============================================
# Classical two-form cover
# ============================================
def check_classical(
    bound: int,
    max_failures: Optional[int] = None,
    enumerate_budget: Optional[int] = None,
) -> VerificationReport:
    """
    Every triple within the bound is c * t1(a, b) or c * t2(a, b) for
    integers a, b, c, while neither integer-coefficient family alone
    suffices: the first always has an even second coordinate, the second
    an even first coordinate.

    details counts, for the enumerated triples, how many came from each
    family and how many have an odd first / odd second coordinate
    (the triples that only the other family can reach).
    """
    _, max_failures = _resolve(None, max_failures)
    report = VerificationReport(mode=VerificationMode.CLASSICAL, parameters={"bound": bound})
    details = report.details
    for key in ("from_t1", "from_t2", "odd_first", "odd_second"):
        details[key] = 0

    with _timed(report):
        for t in enumerate_triples(bound, enumerate_budget):
            report.checked += 1
            if t.x % 2:
                details["odd_first"] += 1
            if t.y % 2:
                details["odd_second"] += 1
            if t.as_tuple() == (0, 0, 0):
                a, b, c, form = 0, 0, 0, TripleForm.T1
            else:
                decomposition = primitive_decompose(t)
                params = euclid_params(decomposition.primitive)
                a, b, form = params.a, params.b, params.form
                c = decomposition.sign * decomposition.scale
            first, second = classical_forms(a, b, c)
            got = first if form is TripleForm.T1 else second
            details["from_t1" if form is TripleForm.T1 else "from_t2"] += 1
            if got.as_tuple() != t.as_tuple():
                report.record_failure(
                    Counterexample(input=str(t), expected=str(t), got=f"{form.value}({a}, {b}) * {c} = {got}"),
                    max_failures,
                )

        # parity obstruction on the parameter box
        side = math.isqrt(bound) + 1
        span = range(-side, side + 1)
        for a in span:
            for b in span:
                for c in span:
                    report.checked += 1
                    first, second = classical_forms(a, b, c)
                    if first.y % 2 or second.x % 2:
                        report.record_failure(
                            Counterexample(
                                input=f"({a}, {b}, {c})",
                                expected="even 2cab coordinate",
                                got=f"{first} / {second}",
                            ),
                            max_failures,
                        )
    return report
