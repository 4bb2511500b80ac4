"""Small arithmetic helpers shared by the SC-LDPC modules."""

from math import comb
from typing import Iterable, List, Sequence


def ceil_div(n: int, d: int) -> int:
    return -(-n // d)


def memory_order(L_h: int, c: int) -> int:
    """m_h = ceil(L_h / c) - 1."""
    return ceil_div(L_h, c) - 1


def pair_count(row_weights: Iterable[int]) -> int:
    """Number of differences of an H_s with the given row weights: sum of C(w_i, 2)."""
    return sum(comb(w, 2) for w in row_weights)


def single_row_levels(support: Sequence[int], c: int) -> List[int]:
    """Count how many ones of a row sit on each level (column index mod c).

    A row contributes a length-6 cycle on its own iff some level holds at least 3 ones.
    """
    counts = [0] * c
    for j in support:
        counts[j % c] += 1
    return counts


def parse_int_list(text: str) -> List[int]:
    """Parse '2', '2,3,3' or '2-5' into a list of integers."""
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "-" in chunk[1:]:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out
