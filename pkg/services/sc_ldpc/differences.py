"""Difference representation of H_s and the level-chained cycle search.

Every pair of ones (j, j + delta) in row i of H_s is a Difference with starting
level j mod c and ending level (j + delta) mod c. A closed walk in the Tanner
graph of H is a signed chain of differences:

- a term is added (+) when its starting level equals the current level and the
  walk then sits on its ending level;
- a term is subtracted (-) when its ending level equals the current level and the
  walk then sits on its starting level;
- the signed sum is zero and the chain ends on the level it started from.

Chains are only candidates. Each one is materialized as an explicit walk
(checks are rows of H, variables are (block, row of H_s) pairs) and kept only if
it uses every edge at most once and lies inside the window
W = (g_max / 2) * m_h + 1. Witnesses equal up to rotation, reversal or
translation by whole blocks are reported once.
"""
from __future__ import annotations

import logging
import re
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .code_model import window_entries
from .errors import CapExceededError, InvalidParamsError, ParseError
from .girth import window_width
from .models import SyndromeFormer

logger = logging.getLogger(__name__)

DEFAULT_MAX_CYCLE_LENGTH = 20

Edge = Tuple[int, int, int]  # (check row r, variable block t, row i of H_s)
Term = Tuple[int, int]  # (record index, sign +1 / -1)


@dataclass(frozen=True, order=True)
class Difference:
    row: int
    start_col: int
    delta: int
    l_s: int
    l_e: int

    @classmethod
    def make(cls, row: int, start_col: int, delta: int, c: int) -> "Difference":
        return cls(row, start_col, delta, start_col % c, (start_col + delta) % c)

    @property
    def end_col(self) -> int:
        return self.start_col + self.delta


@dataclass(frozen=True, eq=False)
class DifferenceTable:
    c: int
    records: Tuple[Difference, ...]
    by_start: Dict[Tuple[int, int], Tuple[int, ...]] = field(init=False, repr=False)
    by_end: Dict[int, Tuple[int, ...]] = field(init=False, repr=False)
    by_levels: Dict[Tuple[int, int, int], Tuple[int, ...]] = field(init=False, repr=False)
    moves_from: Dict[int, Tuple[Term, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        by_start = defaultdict(list)
        by_end = defaultdict(list)
        by_levels = defaultdict(list)
        moves = defaultdict(list)
        for k, d in enumerate(self.records):
            if d.l_s != d.start_col % self.c or d.l_e != d.end_col % self.c:
                raise InvalidParamsError(f"difference {d} has levels inconsistent with c={self.c}")
            by_start[(d.l_s, d.delta)].append(k)
            by_end[d.l_e].append(k)
            by_levels[(d.l_s, d.l_e, d.delta)].append(k)
            moves[d.l_s].append((k, +1))
            moves[d.l_e].append((k, -1))
        object.__setattr__(self, "by_start", {key: tuple(v) for key, v in by_start.items()})
        object.__setattr__(self, "by_end", {key: tuple(v) for key, v in by_end.items()})
        object.__setattr__(self, "by_levels", {key: tuple(v) for key, v in by_levels.items()})
        object.__setattr__(self, "moves_from", {lvl: tuple(sorted(v)) for lvl, v in moves.items()})

    def __len__(self) -> int:
        return len(self.records)

    @property
    def max_delta(self) -> int:
        return max((d.delta for d in self.records), default=0)

    def ending_at(self, level: int) -> Tuple[int, ...]:
        return self.by_end.get(level, ())


@dataclass(frozen=True)
class CycleWitness:
    terms: Tuple[Tuple[Difference, int], ...]
    checks: Tuple[int, ...]
    variables: Tuple[Tuple[int, int], ...]

    @property
    def length(self) -> int:
        return 2 * len(self.terms)

    @property
    def anchor_block(self) -> int:
        return self.variables[0][0]

    def edges(self) -> List[Edge]:
        out = []
        l = len(self.terms)
        for k, (t, i) in enumerate(self.variables):
            out.append((self.checks[k], t, i))
            out.append((self.checks[(k + 1) % l], t, i))
        return out

    def key(self) -> FrozenSet[Edge]:
        return frozenset(self.edges())

    def report_line(self) -> str:
        terms = " ".join(
            f"({d.row},{d.start_col},{'+' if s > 0 else '-'}{d.delta})" for d, s in self.terms
        )
        return f"{self.length}; {terms}; {self.anchor_block}"


def build_differences_supports(supports: Sequence[Sequence[int]], c: int) -> DifferenceTable:
    records = []
    for i, row in enumerate(supports):
        for j, j2 in combinations(row, 2):
            records.append(Difference.make(i, j, j2 - j, c))
    return DifferenceTable(c=c, records=tuple(sorted(records)))


def build_differences(hs: SyndromeFormer) -> DifferenceTable:
    return build_differences_supports(hs.supports, hs.c)


def materialize(table: DifferenceTable, chain: Sequence[Term]) -> Optional[CycleWitness]:
    """Explicit walk of a signed chain, or None if it does not close or reuses an edge.

    The walk is translated so that its leftmost variable lies in block 0.
    """
    c = table.c
    first, sign = chain[0]
    d0 = table.records[first]
    r0 = d0.l_s if sign > 0 else d0.l_e
    r = r0
    checks, variables = [], []
    for k, s in chain:
        d = table.records[k]
        if s > 0:
            if (r - d.start_col) % c:
                return None
            t = (r - d.start_col) // c
            nxt = r + d.delta
        else:
            if (r - d.end_col) % c:
                return None
            t = (r - d.end_col) // c
            nxt = r - d.delta
        checks.append(r)
        variables.append((t, d.row))
        r = nxt
    if r != r0:
        return None

    shift = min(t for t, _ in variables)
    checks = [r - shift * c for r in checks]
    variables = [(t - shift, i) for t, i in variables]
    witness = CycleWitness(
        terms=tuple((table.records[k], s) for k, s in chain),
        checks=tuple(checks),
        variables=tuple(variables),
    )
    if len(set(witness.edges())) != witness.length:
        return None
    return witness


def _chains_from(table: DifferenceTable, n_terms: int, first: int, first_sign: int) -> Iterator[List[Term]]:
    """Signed chains of n_terms records starting with (first, first_sign).

    Later terms use record indices >= first (every closed chain has a rotation
    starting at its smallest record). The last term is looked up, not enumerated.
    """
    records = table.records
    max_delta = table.max_delta
    d0 = records[first]
    start_level = d0.l_s if first_sign > 0 else d0.l_e
    level = d0.l_e if first_sign > 0 else d0.l_s
    chain: List[Term] = [(first, first_sign)]

    def closing(cur_level: int, partial: int) -> List[Term]:
        out = []
        if partial < 0:
            for k in table.by_levels.get((cur_level, start_level, -partial), ()):
                out.append((k, +1))
        elif partial > 0:
            for k in table.by_levels.get((start_level, cur_level, partial), ()):
                out.append((k, -1))
        return sorted(out)

    def extend(cur_level: int, partial: int) -> Iterator[List[Term]]:
        remaining = n_terms - len(chain)
        if abs(partial) > remaining * max_delta:
            return
        prev_k, prev_s = chain[-1]
        if remaining == 1:
            for k, s in closing(cur_level, partial):
                if k < first or (k == prev_k and s == -prev_s) or (k == first and s == -first_sign):
                    continue
                yield chain + [(k, s)]
            return
        for k, s in table.moves_from.get(cur_level, ()):
            if k < first or (k == prev_k and s == -prev_s):
                continue
            d = records[k]
            chain.append((k, s))
            if s > 0:
                yield from extend(d.l_e, partial + d.delta)
            else:
                yield from extend(d.l_s, partial - d.delta)
            chain.pop()

    yield from extend(level, d0.delta * first_sign)


def _witnesses_for_first(table: DifferenceTable, n_terms: int, first: int) -> List[CycleWitness]:
    out = []
    for sign in (+1, -1):
        for chain in _chains_from(table, n_terms, first, sign):
            w = materialize(table, chain)
            if w is not None:
                out.append(w)
    return out


def _window_edge_set(supports: Sequence[Sequence[int]], c: int, W: int) -> Set[Tuple[int, int]]:
    rows, cols = window_entries(supports, c, W)
    return set(zip(rows.tolist(), cols.tolist()))


def _in_window(witness: CycleWitness, a: int, window: Set[Tuple[int, int]]) -> bool:
    return all((r, t * a + i) in window for r, t, i in witness.edges())


def iter_cycles(
    supports: Sequence[Sequence[int]],
    c: int,
    n_terms: int,
    table: Optional[DifferenceTable] = None,
    window: Optional[Set[Tuple[int, int]]] = None,
    workers: int = 1,
) -> Iterator[CycleWitness]:
    """Materialized witnesses of length 2 * n_terms, in deterministic search order (duplicates included)."""
    table = table or build_differences_supports(supports, c)
    a = len(supports)
    firsts = range(len(table))
    if workers > 1 and len(table) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = executor.map(_witnesses_for_first, [table] * len(table), [n_terms] * len(table), firsts)
            for batch in batches:
                for w in batch:
                    if window is None or _in_window(w, a, window):
                        yield w
        return
    for first in firsts:
        for sign in (+1, -1):
            for chain in _chains_from(table, n_terms, first, sign):
                w = materialize(table, chain)
                if w is None:
                    continue
                if window is not None and not _in_window(w, a, window):
                    logger.debug("chain %s does not fit the window, discarded", chain)
                    continue
                yield w


def find_4cycles(table: DifferenceTable) -> List[CycleWitness]:
    """One witness per unordered pair of records with equal delta and equal starting level."""
    out = []
    for (_level, _delta), ks in sorted(table.by_start.items(), key=lambda kv: kv[1]):
        for p, q in combinations(ks, 2):
            w = materialize(table, [(p, +1), (q, -1)])
            if w is not None:
                out.append(w)
    out.sort(key=lambda w: (w.terms[0][0], w.terms[1][0]))
    return out


def _check_length_cap(g_max: int, max_cycle_length: int) -> None:
    if g_max < 4 or g_max % 2:
        raise InvalidParamsError(f"cycle length bound must be an even integer >= 4, got {g_max}")
    if g_max > max_cycle_length:
        raise CapExceededError(f"cycle length bound {g_max} exceeds the configured cap {max_cycle_length}")


def find_cycles(
    hs: SyndromeFormer,
    g_max: int,
    min_length: int = 4,
    max_witnesses: Optional[int] = None,
    max_cycle_length: int = DEFAULT_MAX_CYCLE_LENGTH,
    workers: int = 1,
) -> List[CycleWitness]:
    """All distinct local cycles of length min_length..g_max, by increasing length."""
    _check_length_cap(g_max, max_cycle_length)
    table = build_differences(hs)
    window = _window_edge_set(hs.supports, hs.c, window_width(hs.m_h, g_max))
    seen: Set[FrozenSet[Edge]] = set()
    out: List[CycleWitness] = []
    for n_terms in range(max(2, min_length // 2), g_max // 2 + 1):
        count = 0
        for w in iter_cycles(hs.supports, hs.c, n_terms, table=table, window=window, workers=workers):
            key = w.key()
            if key in seen:
                continue
            seen.add(key)
            out.append(w)
            count += 1
            if max_witnesses is not None and len(out) >= max_witnesses:
                return out
        logger.debug("find_cycles: %d distinct cycles of length %d", count, 2 * n_terms)
    return out


def shortest_cycle_supports(
    supports: Sequence[Sequence[int]],
    c: int,
    g_cap: int,
    check_window: bool = True,
    min_length: int = 4,
) -> Optional[int]:
    """Smallest cycle length in [min_length, g_cap] found by the chain search, None if there is none."""
    table = build_differences_supports(supports, c)
    if not table.records:
        return None
    window = None
    if check_window:
        m_h = max(max(row) for row in supports if row) // c
        window = _window_edge_set(supports, c, window_width(m_h, g_cap))
    for n_terms in range(max(2, min_length // 2), g_cap // 2 + 1):
        for _ in iter_cycles(supports, c, n_terms, table=table, window=window):
            return 2 * n_terms
    return None


def girth_via_differences(hs: SyndromeFormer, g_cap: int) -> Optional[int]:
    """Girth if <= g_cap, None ("exceeds cap") otherwise."""
    if g_cap < 4 or g_cap % 2:
        raise InvalidParamsError(f"girth cap must be an even integer >= 4, got {g_cap}")
    return shortest_cycle_supports(hs.supports, hs.c, g_cap)


_WITNESS_TERM = re.compile(r"\((\d+),(\d+),([+-])(\d+)\)", re.ASCII)


def parse_witness_line(line: str, lineno: Optional[int] = None) -> Tuple[int, List[Tuple[int, int, int, int]]]:
    """'6; (2,3,+2) (3,2,+2) (1,0,-4); 0' -> (6, [(row, j, sign, delta), ...])."""
    parts = [p.strip() for p in line.split(";")]
    if len(parts) != 3 or not (parts[0].isascii() and parts[0].isdigit()):
        raise ParseError("witness line must read `length; (row,j,+delta) ...; anchor`", lineno, 1)
    terms = [(int(r), int(j), 1 if s == "+" else -1, int(d)) for r, j, s, d in _WITNESS_TERM.findall(parts[1])]
    if not terms:
        raise ParseError("witness line has no terms", lineno, line.find(";") + 2)
    return int(parts[0]), terms


def check_witness(hs: SyndromeFormer, line: str, lineno: Optional[int] = None) -> Optional[CycleWitness]:
    """Re-check an external witness line against H_s; None if it is not a local cycle of the code."""
    length, terms = parse_witness_line(line, lineno)
    if length != 2 * len(terms):
        return None
    table = build_differences(hs)
    index = {(d.row, d.start_col, d.delta): k for k, d in enumerate(table.records)}
    chain = []
    for row, j, sign, delta in terms:
        k = index.get((row, j, delta))
        if k is None:
            return None
        chain.append((k, sign))
    witness = materialize(table, chain)
    if witness is None:
        return None
    window = _window_edge_set(hs.supports, hs.c, window_width(hs.m_h, max(4, length)))
    return witness if _in_window(witness, hs.a, window) else None
