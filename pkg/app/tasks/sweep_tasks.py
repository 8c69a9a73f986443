"""
Chunked sweep workers

Every worker is a module-level function of plain arguments so it can run
in a worker process. A sweep is a list of argument tuples; results come
back as ChunkResults and are merged strictly in chunk order, so serial
and parallel runs produce the same report.
"""
import logging
import time
from concurrent.futures import Future, ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

from app.core.exceptions import BudgetExceededError, PythParamError
from app.models.triples import PythTriple
from app.schemas.report import ChunkResult, Counterexample
from app.services.inverse_service import preimage, preimage_positive, preimage_positive_16
from app.services.param_service import (
    build_symbolic_F,
    eval_F,
    eval_F_raw,
    eval_positive,
    eval_positive_16,
)

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _fmt(values: Sequence[object]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


class _ChunkCollector:
    """Per-chunk failure accumulator with a storage cap"""

    def __init__(self, index: int, max_failures: int):
        self.result = ChunkResult(index=index)
        self.max_failures = max_failures

    def fail(self, inp: Sequence[object], expected: str, got: str) -> None:
        self.result.failure_count += 1
        if len(self.result.failures) < self.max_failures:
            self.result.failures.append(
                Counterexample(input=_fmt(inp), expected=expected, got=got)
            )

    def add_detail(self, key: str, amount: int = 1) -> None:
        self.result.details[key] = self.result.details.get(key, 0) + amount


# ============================================
# Workers
# ============================================
def image_box_chunk(
    index: int, radius: int, x_values: Sequence[int], stride: int, max_failures: int
) -> ChunkResult:
    """
    Check eval_F on {x_values} x [-radius, radius]^3: integral output on the
    cone, plus agreement with the symbolic triple at every stride-th point
    of the full box (global row-major index, independent of chunking).
    """
    collector = _ChunkCollector(index, max_failures)
    side = 2 * radius + 1
    span = range(-radius, radius + 1)
    f, g, h = build_symbolic_F()
    checked = 0
    for x in x_values:
        base_x = (x + radius) * side ** 3
        for y in span:
            base_y = base_x + (y + radius) * side * side
            for z in span:
                base_z = base_y + (z + radius) * side
                for w in span:
                    checked += 1
                    try:
                        u, v, t = eval_F_raw(x, y, z, w)
                    except PythParamError as exc:
                        collector.fail((x, y, z, w), "integral triple", str(exc))
                        continue
                    if u * u + v * v != t * t:
                        collector.fail((x, y, z, w), "x^2 + y^2 = z^2", _fmt((u, v, t)))
                        continue
                    if (base_z + w + radius) % stride == 0:
                        collector.add_detail("symbolic_checked")
                        point = (x, y, z, w)
                        symbolic = (f.evaluate(point), g.evaluate(point), h.evaluate(point))
                        if symbolic != (u, v, t):
                            collector.fail(point, _fmt(symbolic), _fmt((u, v, t)))
    collector.result.checked = checked
    return collector.result


def surjectivity_chunk(index: int, triples: Sequence[Triple], max_failures: int) -> ChunkResult:
    """eval_F(preimage(t)) == t for every t"""
    collector = _ChunkCollector(index, max_failures)
    for raw in triples:
        try:
            point = preimage(PythTriple(*raw))
            got = eval_F(point).as_tuple()
        except PythParamError as exc:
            collector.fail(raw, _fmt(raw), f"error: {exc}")
            continue
        if got != tuple(raw):
            collector.fail(raw, _fmt(raw), _fmt(got))
    collector.result.checked = len(triples)
    return collector.result


def positive_chunk(
    index: int, triples: Sequence[Triple], max_failures: int, four_square_budget: int
) -> ChunkResult:
    """Round trips through both the 4-parameter and the 16-parameter positive maps"""
    collector = _ChunkCollector(index, max_failures)
    for raw in triples:
        try:
            params = preimage_positive(PythTriple(*raw))
            got4 = eval_positive(*params.as_tuple()).as_tuple()
            sixteen = preimage_positive_16(PythTriple(*raw), four_square_budget)
            got16 = eval_positive_16(sixteen.ws, sixteen.xs, sixteen.ys, sixteen.zs).as_tuple()
        except PythParamError as exc:
            collector.fail(raw, _fmt(raw), f"error: {exc}")
            continue
        if got4 != tuple(raw):
            collector.fail(raw, _fmt(raw), f"4-parameter {_fmt(got4)}")
        if got16 != tuple(raw):
            collector.fail(raw, _fmt(raw), f"16-parameter {_fmt(got16)}")
    collector.result.checked = len(triples)
    return collector.result


# ============================================
# Execution
# ============================================
def split_evenly(items: Sequence, parts: int) -> List[Sequence]:
    """Contiguous slices, sizes differing by at most one, empty slices dropped"""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    out = []
    start = 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        out.append(items[start:stop])
        start = stop
    return [chunk for chunk in out if len(chunk)]


def run_chunks(
    worker: Callable[..., ChunkResult],
    arg_sets: Sequence[tuple],
    jobs: int = 1,
    time_limit: Optional[float] = None,
) -> List[ChunkResult]:
    """
    Run worker(*args) for every arg set; results are returned in arg-set
    order whatever the completion order. jobs == 1 runs in-process.
    """
    started = time.perf_counter()

    def check_clock() -> None:
        if time_limit is None:
            return
        elapsed = time.perf_counter() - started
        if elapsed > time_limit:
            raise BudgetExceededError("sweep-time", int(elapsed), int(time_limit))

    results: List[ChunkResult] = []
    if jobs <= 1:
        for args in arg_sets:
            results.append(worker(*args))
            logger.debug(f"Chunk {len(results)}/{len(arg_sets)} done")
            check_clock()
        return results

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures: List[Future] = [executor.submit(worker, *args) for args in arg_sets]
        try:
            for i, future in enumerate(futures):
                results.append(future.result())
                logger.debug(f"Chunk {i + 1}/{len(futures)} merged")
                check_clock()
        except BaseException:
            for future in futures:
                future.cancel()
            raise
    return results
