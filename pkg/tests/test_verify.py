import json

import pytest

from app.core.exceptions import BudgetExceededError, PreconditionError
from app.models.enums import VerificationMode
from app.schemas.report import ChunkResult, Counterexample, VerificationReport
from app.services.verify_service import (
    check_classical,
    check_falling_factorial,
    check_image_box,
    check_positive_surjectivity,
    check_surjectivity,
    check_symbolic,
    enumerate_triples,
)
from app.tasks.sweep_tasks import split_evenly


def _tuples(triples):
    return [t.as_tuple() for t in triples]


# ============================================
# Enumeration
# ============================================
def test_enumerate_bound_0():
    assert _tuples(enumerate_triples(0)) == [(0, 0, 0)]


def test_enumerate_bound_1(golden_dir):
    expected = (golden_dir / "enumerate_1.txt").read_text().splitlines()
    assert [str(t) for t in enumerate_triples(1)] == expected


def test_enumerate_bound_5_count():
    triples = _tuples(enumerate_triples(5))
    assert len(triples) == 57
    # 1 zero triple, 40 on the axes, 16 sign variants of (3, 4, 5) and (4, 3, 5)
    axis = [t for t in triples if t != (0, 0, 0) and 0 in t[:2]]
    assert len(axis) == 40


def test_enumerate_matches_direct_loop():
    bound = 13
    expected = set()
    span = range(-bound, bound + 1)
    for x in span:
        for y in span:
            for z in span:
                if x * x + y * y == z * z:
                    expected.add((x, y, z))
    triples = _tuples(enumerate_triples(bound))
    assert len(triples) == len(set(triples))
    assert set(triples) == expected


@pytest.mark.parametrize("small, large", [(5, 10), (10, 50)])
def test_enumerate_monotone(small, large):
    assert set(_tuples(enumerate_triples(small))) <= set(_tuples(enumerate_triples(large)))


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_triples(11, budget=10)
    with pytest.raises(PreconditionError):
        enumerate_triples(-1)


# ============================================
# Surjectivity and image box
# ============================================
@pytest.mark.parametrize("bound, checked", [(0, 1), (5, 57), (50, len(enumerate_triples(50)))])
def test_check_surjectivity(bound, checked):
    report = check_surjectivity(bound)
    assert report.passed
    assert report.checked == checked
    assert report.mode is VerificationMode.SURJECTIVITY


@pytest.mark.parametrize("radius, points", [(0, 1), (2, 625), (5, 14641)])
def test_check_image_box(radius, points):
    report = check_image_box(radius)
    assert report.passed
    assert report.checked == points


def test_image_box_symbolic_subsample():
    assert check_image_box(2, stride=1).details["symbolic_checked"] == 625
    # global indices 0, 97, ..., 582
    assert check_image_box(2, stride=97).details["symbolic_checked"] == 7


def test_image_box_budget():
    with pytest.raises(BudgetExceededError):
        check_image_box(31)
    with pytest.raises(BudgetExceededError):
        check_image_box(4, budget=3)


def test_sweep_time_limit():
    with pytest.raises(BudgetExceededError) as excinfo:
        check_image_box(3, time_limit=0)
    assert excinfo.value.budget == "sweep-time"


@pytest.mark.parametrize("jobs", [2, 4])
def test_parallel_image_box_matches_serial(jobs):
    serial = check_image_box(4, jobs=1, stride=5)
    parallel = check_image_box(4, jobs=jobs, stride=5)
    assert parallel.fingerprint() == serial.fingerprint()


@pytest.mark.parametrize("jobs", [2, 4])
def test_parallel_surjectivity_matches_serial(jobs):
    assert check_surjectivity(30, jobs=jobs).fingerprint() == check_surjectivity(30, jobs=1).fingerprint()


# ============================================
# Positive surjectivity
# ============================================
@pytest.mark.parametrize("zbound, checked", [(1, 0), (5, 2)])
def test_check_positive_surjectivity_small(zbound, checked):
    report = check_positive_surjectivity(zbound)
    assert report.passed
    assert report.checked == checked


def test_check_positive_surjectivity_primitive_count():
    report = check_positive_surjectivity(100)
    assert report.passed
    assert report.details["primitive_unordered"] == 16


# ============================================
# Symbolic, classical, falling factorial
# ============================================
def test_check_symbolic():
    report = check_symbolic()
    assert report.passed, report.failures
    assert report.mode is VerificationMode.SYMBOLIC
    assert {"F_terms", "positive_terms", "classical_t1_terms", "classical_t2_terms"} <= set(report.details)


def test_check_symbolic_residue_budget():
    with pytest.raises(BudgetExceededError):
        check_symbolic(residue_budget=8)


def test_check_classical():
    report = check_classical(25)
    assert report.passed, report.failures
    assert report.details["from_t1"] > 0
    assert report.details["from_t2"] > 0
    assert report.details["odd_first"] > 0
    assert report.details["odd_second"] > 0


def test_check_falling_factorial():
    report = check_falling_factorial(20)
    assert report.passed
    assert report.checked == 20
    with pytest.raises(BudgetExceededError):
        check_falling_factorial(21)


# ============================================
# Report
# ============================================
def test_failures_are_capped():
    report = VerificationReport(mode=VerificationMode.IMAGE_BOX)
    for i in range(150):
        report.record_failure(Counterexample(input=str(i), expected="a", got="b"), max_stored=100)
    assert report.failure_count == 150
    assert len(report.failures) == 100
    assert report.verdict == "fail"


def test_merge_keeps_chunk_order_and_cap():
    report = VerificationReport(mode=VerificationMode.SURJECTIVITY)
    for index in range(3):
        chunk = ChunkResult(
            index=index,
            checked=10,
            failure_count=2,
            failures=[Counterexample(input=f"{index}-{k}", expected="", got="") for k in range(2)],
            details={"n": 1},
        )
        report.merge(chunk, max_stored=5)
    assert report.checked == 30
    assert report.failure_count == 6
    assert [f.input for f in report.failures] == ["0-0", "0-1", "1-0", "1-1", "2-0"]
    assert report.details == {"n": 3}


def test_record_layout():
    report = check_surjectivity(1)
    record = json.loads(report.to_record(include_timing=False))
    assert list(record) == ["mode", "parameters", "checked", "failure_count", "failures", "details", "verdict"]
    assert record["mode"] == "surjectivity"
    assert record["verdict"] == "pass"
    assert "elapsed_ms" in json.loads(report.to_record())


def test_split_evenly():
    assert split_evenly(list(range(7)), 3) == [[0, 1, 2], [3, 4], [5, 6]]
    assert split_evenly([], 4) == []
    assert split_evenly([1], 4) == [[1]]


# ============================================
# Desk-scale sweeps
# ============================================
@pytest.mark.slow
def test_image_box_radius_20():
    report = check_image_box(20, jobs=4)
    assert report.passed
    assert report.checked == 2_825_761


@pytest.mark.slow
def test_surjectivity_bound_200():
    report = check_surjectivity(200, jobs=4)
    assert report.passed
