"""Girth of the Tanner graph of a (windowed) SC-LDPC code.

conv_girth expands W = (g_cap / 2) * m_h + 1 block columns of the semi-infinite
parity-check matrix and runs a depth-limited breadth-first search. The window is
a submatrix of H, so every cycle it contains is a cycle of the code; by
time-invariance every cycle of length <= g_cap has a translate whose leftmost
variable sits in block 0 and which fits inside the window. The search therefore
only starts from the a variable nodes of block 0.

Girth values are even integers; None means "no cycle of length <= cap".
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

import networkx as nx
import numpy as np
import scipy.sparse as sp

from .code_model import window_entries
from .errors import InvalidParamsError, ResourceLimitError
from .models import SyndromeFormer, WindowMatrix

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True, eq=False)
class TannerGraph:
    """Bipartite graph: nodes [0, n_checks) are checks, [n_checks, n_checks + n_vars) variables."""

    n_checks: int
    n_vars: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @classmethod
    def from_matrix(cls, matrix) -> "TannerGraph":
        H = sp.csr_matrix(matrix, dtype=np.uint8)
        M, N = H.shape
        adjacency = sp.bmat([[None, H], [H.T, None]], format="csr")
        adjacency.sort_indices()
        return cls(n_checks=M, n_vars=N, indptr=adjacency.indptr, indices=adjacency.indices)

    @classmethod
    def from_window(cls, window: WindowMatrix) -> "TannerGraph":
        return cls.from_matrix(window.matrix)

    @property
    def n_nodes(self) -> int:
        return self.n_checks + self.n_vars

    @property
    def n_edges(self) -> int:
        return len(self.indices) // 2

    def variable_node(self, column: int) -> int:
        return self.n_checks + column

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n_nodes))
        for u in range(self.n_checks):
            for k in range(self.indptr[u], self.indptr[u + 1]):
                G.add_edge(u, int(self.indices[k]))
        return G


def _check_cap(cap: int) -> None:
    if cap < 4 or cap % 2:
        raise InvalidParamsError(f"girth cap must be an even integer >= 4, got {cap}")


def _shortest_cycle_from(indptr: List[int], indices: List[int], source: int, limit: int) -> Optional[int]:
    """Length of the shortest cycle through `source` if it is <= limit, else None.

    Level-by-level BFS that ignores the edge back to the parent; a non-tree edge
    between depths d and d' closes a cycle of length <= d + d' + 1.
    """
    dist = {source: 0}
    parent = {source: -1}
    frontier = [source]
    depth = 0
    found = limit + 1
    while frontier and 2 * depth + 2 < found:
        nxt = []
        for u in frontier:
            pu = parent[u]
            for k in range(indptr[u], indptr[u + 1]):
                y = indices[k]
                if y == pu:
                    continue
                dy = dist.get(y)
                if dy is None:
                    dist[y] = depth + 1
                    parent[y] = u
                    nxt.append(y)
                elif depth + dy + 1 < found:
                    found = depth + dy + 1
        frontier = nxt
        depth += 1
    return found if found <= limit else None


def _girth_chunk(indptr: List[int], indices: List[int], sources: Sequence[int], cap: int) -> Optional[int]:
    best: Optional[int] = None
    for s in sources:
        limit = cap if best is None else best - 2
        if limit < 4:
            break
        g = _shortest_cycle_from(indptr, indices, s, limit)
        if g is not None:
            best = g
            if best == 4:
                break
    return best


def tanner_girth(
    graph: TannerGraph,
    cap: int,
    sources: Optional[Iterable[int]] = None,
    workers: int = 1,
) -> Optional[int]:
    """Exact girth if <= cap, None otherwise.

    BFS runs from every node unless `sources` is given; the sources must hit at
    least one shortest cycle for the value to be exact.
    """
    _check_cap(cap)
    nodes = list(range(graph.n_nodes)) if sources is None else list(sources)
    indptr = graph.indptr.tolist()
    indices = graph.indices.tolist()
    if workers <= 1 or len(nodes) < 2 * workers:
        return _girth_chunk(indptr, indices, nodes, cap)

    chunks = [nodes[k::workers] for k in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(_girth_chunk, [indptr] * workers, [indices] * workers, chunks, [cap] * workers))
    values = [g for g in results if g is not None]
    return min(values) if values else None


def window_width(m_h: int, g_cap: int) -> int:
    return (g_cap // 2) * m_h + 1


def supports_girth(
    supports: Sequence[Sequence[int]],
    c: int,
    g_cap: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> Optional[int]:
    """conv_girth on raw row supports (any number of rows, e.g. a partial H_s)."""
    _check_cap(g_cap)
    a = len(supports)
    max_index = max(max(row) for row in supports if row)
    m_h = max_index // c
    W = window_width(m_h, g_cap)
    if (a + c) * W > node_budget:
        raise ResourceLimitError(f"window of {W} blocks needs {(a + c) * W} nodes (budget {node_budget})")
    rows, cols = window_entries(supports, c, W)
    H = sp.csr_matrix((np.ones(len(rows), dtype=np.uint8), (rows, cols)), shape=(c * W, a * W))
    graph = TannerGraph.from_window(WindowMatrix(W=W, c=c, a=a, matrix=H))
    logger.debug("conv_girth: m_h=%d W=%d nodes=%d edges=%d", m_h, W, graph.n_nodes, graph.n_edges)
    sources = [graph.variable_node(i) for i in range(a)]
    return tanner_girth(graph, g_cap, sources=sources, workers=workers)


def conv_girth(
    hs: SyndromeFormer,
    g_cap: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> Optional[int]:
    """Girth of the semi-infinite code restricted to cycles of length <= g_cap (None above)."""
    return supports_girth(hs.supports, hs.c, g_cap, node_budget=node_budget, workers=workers)


def brute_force_girth(matrix, cap: int) -> Optional[int]:
    """Shortest cycle by explicit enumeration of simple cycles up to `cap` edges (small graphs only)."""
    _check_cap(cap)
    G = TannerGraph.from_matrix(matrix).to_networkx()
    best: Optional[int] = None
    for cycle in nx.simple_cycles(G, length_bound=cap):
        if best is None or len(cycle) < best:
            best = len(cycle)
            if best == 4:
                break
    return best
