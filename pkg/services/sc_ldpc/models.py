"""Domain types of a time-invariant SC-LDPC code.

- CodeParams: (a, c, L_h, row weights) with derived m_h, v_s and rate.
- SyndromeFormer: the a x L_h binary matrix H_s, stored as per-row supports.
- PolyMatrix: the c x a matrix H(x), each entry a sorted exponent tuple.
- WindowMatrix: leading c*W x a*W corner of the semi-infinite H (checks x variables).

All types are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from .errors import InvalidParamsError, NonCanonicalError
from .utils import memory_order
from .validator import validate_params, validate_supports


@dataclass(frozen=True)
class CodeParams:
    """Code dimensions. a <= c is accepted here (rate <= 0, e.g. a single-row H_s); derive_params,
    bounds and searches require a > c."""

    a: int
    c: int
    L_h: int
    row_weights: Tuple[int, ...]

    def __post_init__(self):
        report = validate_params(self.a, self.c, self.L_h, require_positive_rate=False)
        if not report["is_valid"]:
            raise InvalidParamsError("; ".join(report["errors"]))
        object.__setattr__(self, "row_weights", tuple(self.row_weights))
        if len(self.row_weights) != self.a:
            raise InvalidParamsError(f"expected {self.a} row weights, got {len(self.row_weights)}")
        if any(w < 1 for w in self.row_weights):
            raise InvalidParamsError("row weights must be positive")
        if self.L_h < max(self.row_weights):
            raise InvalidParamsError(f"L_h={self.L_h} cannot hold a row of weight {max(self.row_weights)}")

    @property
    def m_h(self) -> int:
        return memory_order(self.L_h, self.c)

    @property
    def v_s(self) -> int:
        return (self.m_h + 1) * self.a

    @property
    def rate(self) -> Fraction:
        return Fraction(self.a - self.c, self.a)


@dataclass(frozen=True)
class SyndromeFormer:
    params: CodeParams
    supports: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        supports = tuple(tuple(int(j) for j in row) for row in self.supports)
        object.__setattr__(self, "supports", supports)
        report = validate_supports(
            self.params.a, self.params.c, self.params.L_h, supports, self.params.row_weights
        )
        if not report["is_valid"]:
            if all(e.startswith("non-canonical") for e in report["errors"]):
                raise NonCanonicalError(report["errors"][0])
            raise InvalidParamsError("; ".join(report["errors"]))

    @classmethod
    def from_supports(cls, supports: Sequence[Sequence[int]], c: int, L_h: Optional[int] = None) -> "SyndromeFormer":
        """Build an H_s from its rows; L_h defaults to the tight width (largest index + 1)."""
        rows = tuple(tuple(sorted(int(j) for j in row)) for row in supports)
        if L_h is None:
            L_h = max((max(row) for row in rows if row), default=-1) + 1
        params = CodeParams(a=len(rows), c=c, L_h=L_h, row_weights=tuple(len(r) for r in rows))
        return cls(params=params, supports=rows)

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def c(self) -> int:
        return self.params.c

    @property
    def L_h(self) -> int:
        return self.params.L_h

    @property
    def m_h(self) -> int:
        return self.params.m_h

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.a, self.L_h), dtype=np.uint8)
        for i, row in enumerate(self.supports):
            dense[i, list(row)] = 1
        return dense


def _format_entry(exponents: Tuple[int, ...]) -> str:
    if not exponents:
        return "0"
    terms = []
    for e in exponents:
        terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
    return " + ".join(terms)


@dataclass(frozen=True)
class PolyMatrix:
    c: int
    a: int
    entries: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.c < 1 or self.a < 1:
            raise InvalidParamsError(f"H(x) dimensions must be positive, got {self.c}x{self.a}")
        if len(self.entries) != self.c or any(len(r) != self.a for r in self.entries):
            raise InvalidParamsError(f"H(x) entries do not form a {self.c}x{self.a} grid")
        normalized = []
        for i, row in enumerate(self.entries):
            out_row = []
            for j, entry in enumerate(row):
                exps = tuple(int(e) for e in entry)
                if any(e < 0 for e in exps):
                    raise InvalidParamsError(f"entry ({i},{j}) has a negative exponent")
                if len(set(exps)) != len(exps):
                    raise InvalidParamsError(f"entry ({i},{j}) repeats an exponent (coefficients are binary)")
                out_row.append(tuple(sorted(exps)))
            normalized.append(tuple(out_row))
        object.__setattr__(self, "entries", tuple(normalized))

    @property
    def max_exponent(self) -> Optional[int]:
        exps = [e for row in self.entries for entry in row for e in entry]
        return max(exps) if exps else None

    def formatted(self) -> Tuple[Tuple[str, ...], ...]:
        """Entries as polynomials, e.g. '1 + x^33'; a null term prints as '0'."""
        return tuple(tuple(_format_entry(e) for e in row) for row in self.entries)


@dataclass(frozen=True, eq=False)
class WindowMatrix:
    W: int
    c: int
    a: int
    matrix: sp.csr_matrix = field(repr=False)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)
