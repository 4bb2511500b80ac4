"""Structural operations on time-invariant SC-LDPC codes.

- derive_params(a, c, L_h): (m_h, v_s, R) with R an exact Fraction
- hs_to_poly(H_s): H_s -> H(x) (l_d = l // c goes into entry (l mod c, row))
- poly_to_hs(H(x)): the inverse expansion, exponent e of entry (i, j) -> column e*c + i of row j
- expand_window(H_s, W): leading corner of the semi-infinite parity-check matrix
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
import scipy.sparse as sp

from .errors import EmptyMatrixError, InvalidParamsError
from .models import PolyMatrix, SyndromeFormer, WindowMatrix
from .utils import memory_order
from .validator import validate_params

logger = logging.getLogger(__name__)


def derive_params(a: int, c: int, L_h: int) -> Tuple[int, int, Fraction]:
    report = validate_params(a, c, L_h)
    if not report["is_valid"]:
        raise InvalidParamsError("; ".join(report["errors"]))
    m_h = memory_order(L_h, c)
    return m_h, (m_h + 1) * a, Fraction(a - c, a)


def hs_to_poly(hs: SyndromeFormer) -> PolyMatrix:
    c, a = hs.c, hs.a
    entries: List[List[List[int]]] = [[[] for _ in range(a)] for _ in range(c)]
    for j, row in enumerate(hs.supports):
        for l in row:
            entries[l % c][j].append(l // c)
    return PolyMatrix(c=c, a=a, entries=tuple(tuple(tuple(e) for e in r) for r in entries))


def poly_to_hs(poly: PolyMatrix, L_h: Optional[int] = None) -> SyndromeFormer:
    """Expand H(x) into H_s.

    L_h defaults to c * (1 + max exponent), the width of a full last block. A tighter
    L_h may be given as long as it still covers every one and keeps the last block
    non-empty.

    H(x) does not record L_h, so poly_to_hs(hs_to_poly(hs)) comes back with
    L_h = c * (m_h + 1). When hs.L_h is not a multiple of c the width grows (5 -> 6
    for c = 2) while the ones stay put; pass L_h=hs.L_h to restore it exactly.
    """
    max_exp = poly.max_exponent
    if max_exp is None:
        raise EmptyMatrixError("H(x) has only null entries")
    supports = []
    for j in range(poly.a):
        row = sorted(e * poly.c + i for i in range(poly.c) for e in poly.entries[i][j])
        supports.append(row)
    if L_h is None:
        L_h = poly.c * (max_exp + 1)
    return SyndromeFormer.from_supports(supports, c=poly.c, L_h=L_h)


def window_entries(supports, c: int, W: int) -> Tuple[np.ndarray, np.ndarray]:
    """Row/column coordinates of the ones of the c*W x a*W window, row-major order."""
    a = len(supports)
    rows: List[int] = []
    cols: List[int] = []
    limit = c * W
    for t in range(W):
        base = t * c
        for i, support in enumerate(supports):
            col = t * a + i
            for l in support:
                r = base + l
                if r >= limit:
                    break
                rows.append(r)
                cols.append(col)
    return np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64)


def expand_window(hs: SyndromeFormer, W: int) -> WindowMatrix:
    """Column block t carries H_s^T shifted down by t*c rows; replicas are cut at row c*W."""
    if W < 1:
        raise InvalidParamsError(f"window width must be >= 1, got {W}")
    rows, cols = window_entries(hs.supports, hs.c, W)
    data = np.ones(len(rows), dtype=np.uint8)
    matrix = sp.csr_matrix((data, (rows, cols)), shape=(hs.c * W, hs.a * W))
    logger.debug("window W=%d: %dx%d with %d ones", W, hs.c * W, hs.a * W, matrix.nnz)
    return WindowMatrix(W=W, c=hs.c, a=hs.a, matrix=matrix)
