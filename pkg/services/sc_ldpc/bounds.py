"""Closed-form lower bounds on L_h and the explicit girth-8 constructions.

g = 6: no two equal differences may start from the same level. A width-L_h H_s
offers c * L_h - C(c + 1, 2) distinct (level, delta) slots, so the
Σ C(w_i, 2) differences fit only if
    L_h >= max{c + 1, ceil((Σ C(w_i, 2) + C(c + 1, 2)) / c)}.
g = 8, c = 1: L_h >= 2a for w = 2 (tight), infeasible as soon as a row has
three ones (they close a 6-cycle on their own).
g = 8, c > 1: L_h >= max{c + 1, ceil(2 Σ C(w_i, 2) / c)}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence, Tuple, Union

from .errors import InvalidParamsError
from .models import SyndromeFormer
from .utils import ceil_div, pair_count

logger = logging.getLogger(__name__)

Weights = Union[int, Sequence[int]]

NO_CLOSED_FORM = "none"


def _weights(a: int, row_weights: Weights) -> Tuple[int, ...]:
    if isinstance(row_weights, int):
        return (row_weights,) * a
    weights = tuple(int(w) for w in row_weights)
    if len(weights) == 1 and a > 1:
        return weights * a
    return weights


@dataclass(frozen=True)
class BoundQuery:
    a: int
    c: int
    row_weights: Tuple[int, ...]
    g: int

    def __post_init__(self):
        object.__setattr__(self, "row_weights", _weights(self.a, self.row_weights))
        errors = []
        if self.c < 1:
            errors.append(f"c must be >= 1, got {self.c}")
        if self.a <= self.c:
            errors.append(f"a must exceed c (got a={self.a}, c={self.c})")
        if len(self.row_weights) != self.a:
            errors.append(f"expected {self.a} row weights, got {len(self.row_weights)}")
        if any(w < 2 for w in self.row_weights):
            errors.append("row weights must be >= 2")
        if self.g < 4 or self.g % 2:
            errors.append(f"target girth must be an even integer >= 4, got {self.g}")
        if errors:
            raise InvalidParamsError("; ".join(errors))


@dataclass(frozen=True)
class BoundResult:
    lower_bound: Optional[int]
    feasible: bool
    formula: str
    v_s_lower: Optional[int] = None
    detail: Optional[str] = None

    def report_line(self) -> str:
        fmt = lambda v: "none" if v is None else str(v)
        return (
            f"L_h_lower={fmt(self.lower_bound)} v_s_lower={fmt(self.v_s_lower)} "
            f"formula={self.formula} feasible={'true' if self.feasible else 'false'}"
        )


def _result(a: int, c: int, lower: int, formula: str) -> BoundResult:
    return BoundResult(lower_bound=lower, feasible=True, formula=formula, v_s_lower=ceil_div(lower, c) * a)


def bound_g6(a: int, c: int, row_weights: Weights) -> BoundResult:
    query = BoundQuery(a, c, row_weights, 6)
    weights = query.row_weights
    lower = max(c + 1, ceil_div(pair_count(weights) + comb(c + 1, 2), c))
    if all(w == 2 for w in weights):
        tag = "g6-w2"
    elif len(set(weights)) == 1:
        tag = "g6-regular"
    else:
        tag = "g6-irregular"
    return _result(a, c, lower, tag)


def bound_g8(a: int, c: int, row_weights: Weights) -> BoundResult:
    query = BoundQuery(a, c, row_weights, 8)
    weights = query.row_weights
    if c == 1:
        heavy = [i for i, w in enumerate(weights) if w >= 3]
        if heavy:
            i = heavy[0]
            detail = f"row {i} has weight {weights[i]} on a single level: three of its ones close a 6-cycle"
            return BoundResult(lower_bound=None, feasible=False, formula="g8-c1-heavy-row", detail=detail)
        return _result(a, c, 2 * a, "lemma1")
    lower = max(c + 1, ceil_div(2 * pair_count(weights), c))
    if all(w == 2 for w in weights):
        tag = "g8-w2"
    elif len(set(weights)) == 1:
        tag = "g8-regular"
    else:
        tag = "g8-irregular"
    return _result(a, c, lower, tag)


def bound(query: BoundQuery) -> BoundResult:
    """Dispatch on the target girth; targets other than 6 and 8 have no closed form."""
    if query.g == 6:
        return bound_g6(query.a, query.c, query.row_weights)
    if query.g == 8:
        return bound_g8(query.a, query.c, query.row_weights)
    return BoundResult(lower_bound=None, feasible=True, formula=NO_CLOSED_FORM)


def lower_bound_for_search(a: int, c: int, row_weights: Weights, g: int) -> Optional[int]:
    """Tightest closed-form L_h bound valid for girth >= g.

    Codes with girth >= g > 8 are in particular free of 4- and 6-cycles, so both
    closed forms still apply. None means the target is infeasible.
    """
    BoundQuery(a, c, row_weights, g)
    if g <= 4:
        return c + 1
    best = bound_g6(a, c, row_weights).lower_bound
    if g >= 8:
        g8 = bound_g8(a, c, row_weights)
        if not g8.feasible:
            return None
        best = max(best, g8.lower_bound)
    return best


def construct_prop1(a: int) -> SyndromeFormer:
    """c = 1, w = 2, deltas {1, 3, ..., 2a - 1}: all different and odd, L_h = 2a."""
    if a < 1:
        raise InvalidParamsError(f"a must be >= 1, got {a}")
    return SyndromeFormer.from_supports([(0, 2 * i + 1) for i in range(a)], c=1, L_h=2 * a)


def construct_prop2(a: int) -> SyndromeFormer:
    """c = 1, w = 2, deltas {a, ..., 2a - 1}: any two of them sum past the largest, L_h = 2a."""
    if a < 1:
        raise InvalidParamsError(f"a must be >= 1, got {a}")
    return SyndromeFormer.from_supports([(0, a + i) for i in range(a)], c=1, L_h=2 * a)
