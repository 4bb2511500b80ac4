"""Minimum-L_h search for syndrome formers with girth >= g.

Two modes share SearchSpec / SearchOutcome:

- exhaustive: L_h grows from the closed-form bound; at each width the canonical
  representatives are enumerated (rows of equal weight in non-decreasing
  lexicographic order, every row shifted so its smallest index is < c, largest
  index exactly L_h - 1). The first hit is minimal and the outcome is a proof.
- random (Montecarlo): rows drawn uniformly without replacement, seeded
  per batch, the proposal width shrinking to c * m_h after every hit so that later
  hits have a smaller memory order. Heuristic outcome.

Both modes give the same outcome for any worker count.
"""
from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, IO, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .bounds import BoundQuery, lower_bound_for_search
from .differences import shortest_cycle_supports
from .errors import BudgetExceededError, InvalidParamsError, ScLdpcError
from .girth import DEFAULT_NODE_BUDGET, supports_girth
from .models import SyndromeFormer
from .utils import memory_order, single_row_levels

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "random")

DEFAULT_EXHAUSTIVE_BUDGET = 20_000_000
DEFAULT_MONTECARLO_BUDGET = 100_000
DEFAULT_SEED = 2011
DEFAULT_LH_SEARCH_SPAN = 256
DEFAULT_PROGRESS_EVERY = 10_000
DEFAULT_MAX_REDRAWS = 100
DEFAULT_REPORT_CAP = 12

BATCH_SIZE = 1_000
ROUND_BATCHES = 8

Supports = Tuple[Tuple[int, ...], ...]
ProgressHook = Callable[[Dict], None]


@dataclass(frozen=True)
class SearchSpec:
    a: int
    c: int
    row_weights: Tuple[int, ...]
    g: int
    mode: str = "exhaustive"
    lh_min: Optional[int] = None
    lh_max: Optional[int] = None
    budget: Optional[int] = None
    seed: int = DEFAULT_SEED
    workers: int = 1

    def __post_init__(self):
        # Shares the (a, c, weights, g) checks with the bounds.
        query = BoundQuery(self.a, self.c, self.row_weights, self.g)
        object.__setattr__(self, "row_weights", query.row_weights)
        if self.mode not in MODES:
            raise InvalidParamsError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.budget is None:
            default = DEFAULT_EXHAUSTIVE_BUDGET if self.mode == "exhaustive" else DEFAULT_MONTECARLO_BUDGET
            object.__setattr__(self, "budget", default)
        if self.budget < 1:
            raise InvalidParamsError(f"budget must be >= 1, got {self.budget}")
        if self.workers < 1:
            raise InvalidParamsError(f"workers must be >= 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            raise InvalidParamsError("seed must fit in 64 bits")
        if self.lh_min is not None and self.lh_max is not None and self.lh_min > self.lh_max:
            raise InvalidParamsError(f"empty L_h range [{self.lh_min}, {self.lh_max}]")

    @property
    def bound(self) -> Optional[int]:
        return lower_bound_for_search(self.a, self.c, self.row_weights, self.g)

    def lh_range(self) -> Optional[Tuple[int, int]]:
        """Inclusive L_h range; None when the target girth is infeasible."""
        bound = self.bound
        if bound is None:
            return None
        lo = bound if self.lh_min is None else self.lh_min
        hi = self.lh_max if self.lh_max is not None else lo + DEFAULT_LH_SEARCH_SPAN
        return lo, hi


@dataclass(frozen=True)
class SearchOutcome:
    spec: SearchSpec
    best: Optional[SyndromeFormer]
    girth: Optional[int]
    girth_cap: int
    candidates: int
    complete: bool
    elapsed_s: float = field(default=0.0, compare=False)

    @property
    def found(self) -> bool:
        return self.best is not None

    @property
    def L_h(self) -> Optional[int]:
        return self.best.L_h if self.best else None

    @property
    def m_h(self) -> Optional[int]:
        return self.best.m_h if self.best else None

    @property
    def v_s(self) -> Optional[int]:
        return self.best.params.v_s if self.best else None

    def summary(self) -> Dict:
        girth = None
        if self.best is not None:
            girth = self.girth if self.girth is not None else f">{self.girth_cap}"
        return {
            "mode": self.spec.mode,
            "found": self.found,
            "L_h": self.L_h,
            "m_h": self.m_h,
            "v_s": self.v_s,
            "girth": girth,
            "candidates": self.candidates,
            "proof": "complete" if self.complete else "heuristic",
            "elapsed_s": round(self.elapsed_s, 3),
        }


class JsonLinesProgress:
    """Progress hook writing one JSON object per checkpoint."""

    def __init__(self, stream: IO[str]):
        self.stream = stream

    def __call__(self, record: Dict) -> None:
        self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        self.stream.flush()


def _objective(supports: Supports, c: int) -> Tuple[int, int, Supports]:
    L_h = max(max(r) for r in supports) + 1
    return memory_order(L_h, c), L_h, supports


def _no_short_cycles(supports: Sequence[Sequence[int]], c: int, g: int, node_budget: int) -> bool:
    if g <= 4:
        return True
    return supports_girth(supports, c, g - 2, node_budget=node_budget) is None


def _finalize(
    spec: SearchSpec,
    supports: Optional[Supports],
    order: Sequence[int],
    candidates: int,
    complete: bool,
    started: float,
    report_cap: int,
    node_budget: int,
) -> SearchOutcome:
    """Re-verify the girth of a hit with the graph oracle and check it against the bound."""
    cap = max(spec.g, report_cap)
    if supports is None:
        return SearchOutcome(spec, None, None, cap, candidates, complete, time.perf_counter() - started)

    rows = [None] * len(supports)
    for pos, original in enumerate(order):
        rows[original] = supports[pos]
    best = SyndromeFormer.from_supports(rows, c=spec.c)
    girth = supports_girth(best.supports, best.c, cap, node_budget=node_budget)
    if girth is not None and girth < spec.g:
        raise ScLdpcError(f"search emitted an H_s of girth {girth} < {spec.g}")
    bound = spec.bound
    # The closed forms assume m_h >= 1.
    if bound is not None and best.m_h >= 1 and best.L_h < bound:
        raise ScLdpcError(f"search emitted L_h={best.L_h} below the lower bound {bound}")
    return SearchOutcome(spec, best, girth, cap, candidates, complete, time.perf_counter() - started)


def _sorted_weights(weights: Sequence[int]) -> Tuple[Tuple[int, ...], List[int]]:
    order = sorted(range(len(weights)), key=lambda i: (weights[i], i))
    return tuple(weights[i] for i in order), order


# --- exhaustive -------------------------------------------------------------


def canonical_rows(L: int, w: int, c: int) -> List[Tuple[int, ...]]:
    """Every w-subset of [0, L) whose smallest index is < c, in lexicographic order."""
    return [row for row in combinations(range(L), w) if row[0] < c]


def _row_keys(row: Sequence[int], c: int) -> Optional[List[Tuple[int, int]]]:
    keys = [(j % c, j2 - j) for j, j2 in combinations(row, 2)]
    return keys if len(set(keys)) == len(keys) else None


@dataclass(frozen=True)
class _Chunk:
    first: Tuple[int, ...]
    L: int
    c: int
    g: int
    weights: Tuple[int, ...]
    node_limit: int
    node_budget: int


@dataclass(frozen=True)
class _ChunkResult:
    found: Optional[Supports]
    nodes: int
    candidates: int
    exceeded: bool


class _LimitReached(Exception):
    pass


def _search_chunk(chunk: _Chunk) -> _ChunkResult:
    """Depth-first search of the configurations whose first row is `chunk.first`."""
    c, g, L, weights = chunk.c, chunk.g, chunk.L, chunk.weights
    rows_by_weight = {w: canonical_rows(L, w, c) for w in set(weights)}
    if g > 6:
        # Three ones on one level close a 6-cycle inside the row.
        rows_by_weight = {
            w: [row for row in pool if max(single_row_levels(row, c)) < 3] for w, pool in rows_by_weight.items()
        }
    position = {w: {row: k for k, row in enumerate(pool)} for w, pool in rows_by_weight.items()}
    counters = {"nodes": 1, "candidates": 0}

    # Targets g <= 4 admit every configuration, repeated differences included.
    prune = g > 4
    first_keys = _row_keys(chunk.first, c) if prune else []
    if first_keys is None or chunk.first not in position[weights[0]]:
        return _ChunkResult(None, 1, 0, False)
    if g > 6 and shortest_cycle_supports([chunk.first], c, g - 2, check_window=False, min_length=6) is not None:
        return _ChunkResult(None, 1, 0, False)

    chosen: List[Tuple[int, ...]] = [chunk.first]
    used = set(first_keys)

    def place(pos: int) -> Optional[Supports]:
        if pos == len(weights):
            if max(r[-1] for r in chosen) != L - 1:
                return None
            counters["candidates"] += 1
            if _no_short_cycles(chosen, c, g, chunk.node_budget):
                return tuple(chosen)
            return None
        w = weights[pos]
        pool = rows_by_weight[w]
        start = 0
        if weights[pos - 1] == w:
            start = position[w][chosen[-1]]
        for row in pool[start:]:
            counters["nodes"] += 1
            if counters["nodes"] > chunk.node_limit:
                raise _LimitReached
            keys = _row_keys(row, c) if prune else []
            if keys is None or used.intersection(keys):
                continue
            chosen.append(row)
            if g > 6 and shortest_cycle_supports(chosen, c, g - 2, check_window=False, min_length=6) is not None:
                chosen.pop()
                continue
            used.update(keys)
            hit = place(pos + 1)
            used.difference_update(keys)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    try:
        hit = place(1)
    except _LimitReached:
        return _ChunkResult(None, counters["nodes"], counters["candidates"], True)
    return _ChunkResult(hit, counters["nodes"], counters["candidates"], False)


def _run_chunks(chunks: List[_Chunk], workers: int) -> Iterable[_ChunkResult]:
    if workers <= 1:
        for chunk in chunks:
            yield _search_chunk(chunk)
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(_search_chunk, chunks)


def exhaustive_min_lh(
    spec: SearchSpec,
    progress: Optional[ProgressHook] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    report_cap: int = DEFAULT_REPORT_CAP,
) -> SearchOutcome:
    """Smallest L_h in spec.lh_range() admitting girth >= g, with a completeness proof.

    Raises BudgetExceededError once more than spec.budget search nodes are
    visited; its progress dict holds the widths proven empty so far.
    """
    started = time.perf_counter()
    weights, order = _sorted_weights(spec.row_weights)
    lh = spec.lh_range()
    if lh is None:
        logger.info("girth %d is infeasible for a=%d c=%d weights=%s", spec.g, spec.a, spec.c, spec.row_weights)
        return _finalize(spec, None, order, 0, True, started, report_cap, node_budget)

    lo, hi = lh
    lo = max(lo, max(weights), 1)
    nodes = candidates = 0
    for L in range(lo, hi + 1):
        logger.info("exhaustive search: L_h=%d (a=%d, c=%d, g=%d)", L, spec.a, spec.c, spec.g)
        remaining = spec.budget - nodes
        chunks = [
            _Chunk(first, L, spec.c, spec.g, weights, remaining, node_budget)
            for first in canonical_rows(L, weights[0], spec.c)
        ]
        hit: Optional[Supports] = None
        for result in _run_chunks(chunks, spec.workers):
            nodes += result.nodes
            candidates += result.candidates
            if result.exceeded or nodes > spec.budget:
                raise BudgetExceededError(
                    f"exhaustive search exceeded its budget of {spec.budget} nodes at L_h={L}",
                    {"L_h": L, "proven_empty_below": L, "nodes": nodes, "candidates": candidates},
                )
            if result.found is not None:
                hit = result.found
                break
        if progress is not None:
            progress({
                "mode": "exhaustive",
                "L_h": L,
                "candidates": candidates,
                "best_mh": memory_order(L, spec.c) if hit else None,
                "elapsed_s": round(time.perf_counter() - started, 3),
            })
        if hit is not None:
            logger.info("exhaustive search: hit at L_h=%d after %d candidates", L, candidates)
            return _finalize(spec, hit, order, candidates, True, started, report_cap, node_budget)
    return _finalize(spec, None, order, candidates, True, started, report_cap, node_budget)


def naive_min_lh(
    spec: SearchSpec,
    node_budget: int = DEFAULT_NODE_BUDGET,
    report_cap: int = DEFAULT_REPORT_CAP,
) -> SearchOutcome:
    """Cross-check for exhaustive_min_lh: every H_s of every width, graph oracle only.

    Ignores the closed-form bound (starts at the largest row weight) and all
    symmetry reductions. Only usable for very small parameters.
    """
    started = time.perf_counter()
    weights = spec.row_weights
    order = list(range(spec.a))
    lh = spec.lh_range()
    if spec.lh_max is not None:
        hi = spec.lh_max
    else:
        hi = lh[1] if lh else max(weights) + DEFAULT_LH_SEARCH_SPAN
    candidates = 0
    for L in range(max(weights), hi + 1):
        pools = [list(combinations(range(L), w)) for w in weights]
        for rows in product(*pools):
            if max(r[-1] for r in rows) != L - 1:
                continue
            candidates += 1
            if candidates > spec.budget:
                raise BudgetExceededError(
                    f"naive search exceeded its budget of {spec.budget} candidates at L_h={L}",
                    {"L_h": L, "candidates": candidates},
                )
            if _no_short_cycles(rows, spec.c, spec.g, node_budget):
                return _finalize(spec, tuple(rows), order, candidates, True, started, report_cap, node_budget)
    return _finalize(spec, None, order, candidates, True, started, report_cap, node_budget)


# --- Montecarlo -------------------------------------------------------------


def batch_generator(seed: int, batch: int) -> np.random.Generator:
    """PCG64 stream of one batch; replaying (seed, batch) reproduces it on any platform."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, batch])))


def draw_candidate(
    rng: np.random.Generator,
    width: int,
    weights: Sequence[int],
    c: int,
    max_redraws: int = DEFAULT_MAX_REDRAWS,
) -> Optional[Supports]:
    """One random H_s of the given width: each row drawn without replacement and shifted
    so its smallest index is < c. A draw whose last block is empty is redrawn;
    None after max_redraws failures."""
    floor = c * memory_order(width, c)
    for _ in range(max_redraws + 1):
        rows = []
        for w in weights:
            row = np.sort(rng.choice(width, size=w, replace=False))
            row -= c * (int(row[0]) // c)
            rows.append(tuple(int(j) for j in row))
        if max(r[-1] for r in rows) >= floor:
            return tuple(rows)
    return None


def has_4cycle(supports: Sequence[Sequence[int]], c: int) -> bool:
    """Two equal differences starting from the same level."""
    seen = set()
    for row in supports:
        for j, j2 in combinations(row, 2):
            key = (j % c, j2 - j)
            if key in seen:
                return True
            seen.add(key)
    return False


@dataclass(frozen=True)
class _Batch:
    seed: int
    index: int
    size: int
    width: int
    lh_floor: int
    c: int
    g: int
    weights: Tuple[int, ...]
    max_redraws: int
    node_budget: int


@dataclass(frozen=True)
class _BatchResult:
    best: Optional[Supports]
    candidates: int


def _montecarlo_batch(batch: _Batch) -> _BatchResult:
    rng = batch_generator(batch.seed, batch.index)
    width = batch.width
    best = None
    examined = 0
    while examined < batch.size and width >= batch.lh_floor:
        examined += 1
        cand = draw_candidate(rng, width, batch.weights, batch.c, batch.max_redraws)
        if cand is None or (batch.g > 4 and has_4cycle(cand, batch.c)):
            continue
        if batch.g > 6 and any(max(single_row_levels(row, batch.c)) >= 3 for row in cand):
            continue
        if not _no_short_cycles(cand, batch.c, batch.g, batch.node_budget):
            continue
        key = _objective(cand, batch.c)
        if best is None or key < best:
            best = key
            width = min(width, batch.c * key[0])
    return _BatchResult(best[2] if best else None, examined)


def montecarlo_search(
    spec: SearchSpec,
    progress: Optional[ProgressHook] = None,
    progress_every: int = DEFAULT_PROGRESS_EVERY,
    max_redraws: int = DEFAULT_MAX_REDRAWS,
    node_budget: int = DEFAULT_NODE_BUDGET,
    report_cap: int = DEFAULT_REPORT_CAP,
) -> SearchOutcome:
    """Seeded random search; the best hit by (m_h, L_h, lexicographic H_s).

    The budget is split into batches of BATCH_SIZE candidates with their own
    seeded streams, run ROUND_BATCHES at a time; the proposal width only shrinks
    between rounds, so the outcome does not depend on spec.workers.
    """
    started = time.perf_counter()
    weights, order = _sorted_weights(spec.row_weights)
    lh = spec.lh_range()
    if lh is None:
        return _finalize(spec, None, order, 0, False, started, report_cap, node_budget)
    lh_floor, width = lh
    lh_floor = max(lh_floor, max(weights))
    n_batches = -(-spec.budget // BATCH_SIZE)

    best = None
    candidates = 0
    next_report = progress_every
    executor = ProcessPoolExecutor(max_workers=spec.workers) if spec.workers > 1 else None
    try:
        for round_start in range(0, n_batches, ROUND_BATCHES):
            if width < lh_floor:
                break
            jobs = [
                _Batch(
                    spec.seed, b, min(BATCH_SIZE, spec.budget - b * BATCH_SIZE), width, lh_floor,
                    spec.c, spec.g, weights, max_redraws, node_budget,
                )
                for b in range(round_start, min(round_start + ROUND_BATCHES, n_batches))
            ]
            results = executor.map(_montecarlo_batch, jobs) if executor else map(_montecarlo_batch, jobs)
            for result in results:
                candidates += result.candidates
                if result.best is not None:
                    key = _objective(result.best, spec.c)
                    if best is None or key < best:
                        best = key
            if best is not None:
                width = min(width, spec.c * best[0])
            if progress is not None and candidates >= next_report:
                next_report = (candidates // progress_every + 1) * progress_every
                progress({
                    "mode": "random",
                    "L_h": best[1] if best else None,
                    "candidates": candidates,
                    "best_mh": best[0] if best else None,
                    "elapsed_s": round(time.perf_counter() - started, 3),
                })
            logger.info(
                "montecarlo: %d candidates, best m_h=%s, width=%d",
                candidates, best[0] if best else None, width,
            )
    finally:
        if executor is not None:
            executor.shutdown()

    return _finalize(spec, best[2] if best else None, order, candidates, False, started, report_cap, node_budget)


def run_search(
    spec: SearchSpec,
    progress: Optional[ProgressHook] = None,
    progress_every: int = DEFAULT_PROGRESS_EVERY,
    max_redraws: int = DEFAULT_MAX_REDRAWS,
    node_budget: int = DEFAULT_NODE_BUDGET,
    report_cap: int = DEFAULT_REPORT_CAP,
) -> SearchOutcome:
    if spec.mode == "exhaustive":
        return exhaustive_min_lh(spec, progress=progress, node_budget=node_budget, report_cap=report_cap)
    return montecarlo_search(
        spec,
        progress=progress,
        progress_every=progress_every,
        max_redraws=max_redraws,
        node_budget=node_budget,
        report_cap=report_cap,
    )
