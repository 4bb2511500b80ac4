"""Bound-vs-search grid: the data behind the L_h-versus-a curves.

One row per (a, c) with a > c. `match` is 'true' / 'false', or the reason the
cell has no search value ('budget', 'infeasible', 'none').
"""
from __future__ import annotations

import logging
from typing import Iterable, Optional

import pandas as pd

from .errors import BudgetExceededError, ResourceLimitError
from .girth import DEFAULT_NODE_BUDGET
from .search import DEFAULT_EXHAUSTIVE_BUDGET, SearchSpec, exhaustive_min_lh

logger = logging.getLogger(__name__)

COLUMNS = ["a", "c", "bound_Lh", "search_Lh", "match"]


def sweep(
    w: int,
    g: int,
    c_values: Iterable[int],
    a_values: Iterable[int],
    budget: int = DEFAULT_EXHAUSTIVE_BUDGET,
    workers: int = 1,
    lh_span: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> pd.DataFrame:
    records = []
    c_values = list(c_values)
    for a in a_values:
        for c in c_values:
            if a <= c:
                continue
            spec = SearchSpec(a=a, c=c, row_weights=(w,), g=g, budget=budget, workers=workers)
            bound = spec.bound
            if bound is None:
                records.append({"a": a, "c": c, "bound_Lh": None, "search_Lh": None, "match": "infeasible"})
                continue
            if lh_span is not None:
                spec = SearchSpec(a=a, c=c, row_weights=(w,), g=g, lh_max=bound + lh_span, budget=budget, workers=workers)
            try:
                outcome = exhaustive_min_lh(spec, node_budget=node_budget)
            except (BudgetExceededError, ResourceLimitError) as e:
                logger.warning("sweep cell a=%d c=%d: %s", a, c, e)
                records.append({"a": a, "c": c, "bound_Lh": bound, "search_Lh": None, "match": "budget"})
                continue
            if outcome.best is None:
                records.append({"a": a, "c": c, "bound_Lh": bound, "search_Lh": None, "match": "none"})
                continue
            match = "true" if outcome.L_h == bound else "false"
            records.append({"a": a, "c": c, "bound_Lh": bound, "search_Lh": outcome.L_h, "match": match})
            logger.info("sweep cell a=%d c=%d: bound=%d search=%d", a, c, bound, outcome.L_h)

    df = pd.DataFrame.from_records(records, columns=COLUMNS)
    return df.astype({"a": "Int64", "c": "Int64", "bound_Lh": "Int64", "search_Lh": "Int64", "match": "string"})


def to_csv(df: pd.DataFrame) -> str:
    """Byte-stable CSV (LF endings, empty cells for missing values)."""
    return df.to_csv(index=False, lineterminator="\n")
