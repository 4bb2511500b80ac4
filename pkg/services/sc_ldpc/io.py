"""Text formats for SC-LDPC codes.

Handles: .hs (syndrome former rows), .hx (polynomial matrix H(x)), alist export of a window.

.hs   line 1 `a c L_h`, then a lines of ascending column indices.
.hx   line 1 `c a`, then c lines of a entries; an entry is `0,33` or `-` (null term).
Comments start with '#'; blank lines are ignored.
"""
from __future__ import annotations

import io
import os
import re
from typing import Any, List, Optional, Tuple, Union

import numpy as np

from .errors import DuplicateIndexError, InconsistentDimensionsError, ParseError
from .models import PolyMatrix, SyndromeFormer, WindowMatrix

Code = Union[SyndromeFormer, PolyMatrix]

_TOKEN = re.compile(r"\S+")
_ENTRY = re.compile(r"^\d+(,\d+)*$", re.ASCII)


def _content_lines(text: str) -> List[Tuple[int, List[Tuple[int, str]]]]:
    """(line number, [(column, token), ...]) for every non-blank line, comments stripped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if tokens:
            out.append((lineno, tokens))
    return out


def _to_int(token: str, lineno: int, col: int, what: str) -> int:
    if not (token.isascii() and token.isdigit()):
        raise ParseError(f"expected a non-negative integer {what}, got {token!r}", lineno, col)
    return int(token)


def decode_ascii(data: bytes) -> str:
    """Strict ASCII decoding; a bad byte becomes a ParseError at its line and column."""
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as exc:
        head = data[: exc.start]
        line = head.count(b"\n") + 1
        column = exc.start - (head.rfind(b"\n") + 1) + 1
        raise ParseError(f"non-ASCII byte 0x{data[exc.start]:02x}", line, column) from None


def detect_format(text: str) -> str:
    """'hs' for a 3-field header, 'hx' for a 2-field header."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("input is empty", 1, 1)
    lineno, header = lines[0]
    if len(header) == 3:
        return "hs"
    if len(header) == 2:
        return "hx"
    raise ParseError(
        f"header must be `a c L_h` (.hs) or `c a` (.hx), got {len(header)} fields", lineno, header[0][0]
    )


def parse_hs(text: str) -> SyndromeFormer:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("input is empty", 1, 1)
    lineno, header = lines[0]
    if len(header) != 3:
        raise ParseError(f"header must be `a c L_h`, got {len(header)} fields", lineno, header[0][0])
    a, c, L_h = (_to_int(tok, lineno, col, "in header") for col, tok in header)
    body = lines[1:]
    if len(body) != a:
        where = body[a][0] if len(body) > a else (body[-1][0] if body else lineno)
        raise InconsistentDimensionsError(f"header declares a={a} rows, found {len(body)}", where)

    supports = []
    for lineno, tokens in body:
        row: List[int] = []
        for col, tok in tokens:
            j = _to_int(tok, lineno, col, "column index")
            if j >= L_h:
                raise ParseError(f"column index {j} outside [0, {L_h})", lineno, col)
            if j in row:
                raise DuplicateIndexError(f"column index {j} repeated", lineno, col)
            if row and j < row[-1]:
                raise ParseError(f"column indices must be ascending ({j} after {row[-1]})", lineno, col)
            row.append(j)
        supports.append(row)
    return SyndromeFormer.from_supports(supports, c=c, L_h=L_h)


def parse_hx(text: str) -> PolyMatrix:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("input is empty", 1, 1)
    lineno, header = lines[0]
    if len(header) != 2:
        raise ParseError(f"header must be `c a`, got {len(header)} fields", lineno, header[0][0])
    c, a = (_to_int(tok, lineno, col, "in header") for col, tok in header)
    body = lines[1:]
    if len(body) != c:
        where = body[c][0] if len(body) > c else (body[-1][0] if body else lineno)
        raise InconsistentDimensionsError(f"header declares c={c} rows, found {len(body)}", where)

    entries = []
    for lineno, tokens in body:
        if len(tokens) != a:
            raise InconsistentDimensionsError(f"expected {a} entries, found {len(tokens)}", lineno, tokens[0][0])
        row = []
        for col, tok in tokens:
            if tok == "-":
                row.append(())
                continue
            if not _ENTRY.match(tok):
                raise ParseError(f"malformed entry {tok!r} (use e.g. `0,33` or `-`)", lineno, col)
            exps = [int(e) for e in tok.split(",")]
            if len(set(exps)) != len(exps):
                raise DuplicateIndexError(f"exponent repeated in entry {tok!r}", lineno, col)
            if exps != sorted(exps):
                raise ParseError(f"exponents must be ascending in entry {tok!r}", lineno, col)
            row.append(tuple(exps))
        entries.append(tuple(row))
    return PolyMatrix(c=c, a=a, entries=tuple(entries))


def read_code(source: Any, fmt: Optional[str] = None) -> Code:
    """Read an H_s or H(x) from a path, a file-like object, raw text or bytes, or pass a code through.

    The format is detected from the header shape unless `fmt` ('hs' / 'hx') is given.
    """
    if isinstance(source, (SyndromeFormer, PolyMatrix)):
        return source
    if isinstance(source, (io.StringIO, io.TextIOBase)):
        text = source.read()
    elif isinstance(source, (io.BufferedIOBase, io.RawIOBase)):
        text = decode_ascii(source.read())
    elif isinstance(source, (bytes, bytearray)):
        text = decode_ascii(bytes(source))
    elif isinstance(source, (str, os.PathLike)) and os.path.exists(source):
        with open(source, "rb") as f:
            text = decode_ascii(f.read())
    elif isinstance(source, str):
        text = source
    else:
        raise TypeError(f"Expected path, text, file-like, or code object; got {type(source)}")

    fmt = fmt or detect_format(text)
    if fmt == "hs":
        return parse_hs(text)
    if fmt == "hx":
        return parse_hx(text)
    raise ValueError(f"unknown format {fmt!r} (expected 'hs' or 'hx')")


def serialize_hs(hs: SyndromeFormer, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{hs.a} {hs.c} {hs.L_h}")
    lines.extend(" ".join(str(j) for j in row) for row in hs.supports)
    return "\n".join(lines) + "\n"


def serialize_hx(poly: PolyMatrix, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{poly.c} {poly.a}")
    for row in poly.entries:
        lines.append(" ".join(",".join(str(e) for e in entry) if entry else "-" for entry in row))
    return "\n".join(lines) + "\n"


def serialize_code(code: Code, comment: Optional[str] = None) -> str:
    if isinstance(code, SyndromeFormer):
        return serialize_hs(code, comment)
    return serialize_hx(code, comment)


def write_alist(window: WindowMatrix) -> str:
    """MacKay alist of the window (1-based indices, lists zero-padded to the max degree)."""
    csr = window.matrix.tocsr()
    csc = window.matrix.tocsc()
    M, N = csr.shape
    col_deg = np.diff(csc.indptr)
    row_deg = np.diff(csr.indptr)
    max_col = int(col_deg.max()) if N else 0
    max_row = int(row_deg.max()) if M else 0

    lines = [f"{N} {M}", f"{max_col} {max_row}"]
    lines.append(" ".join(str(int(d)) for d in col_deg))
    lines.append(" ".join(str(int(d)) for d in row_deg))
    for k in range(N):
        idx = sorted(int(r) + 1 for r in csc.indices[csc.indptr[k]:csc.indptr[k + 1]])
        lines.append(" ".join(str(x) for x in idx + [0] * (max_col - len(idx))))
    for k in range(M):
        idx = sorted(int(v) + 1 for v in csr.indices[csr.indptr[k]:csr.indptr[k + 1]])
        lines.append(" ".join(str(x) for x in idx + [0] * (max_row - len(idx))))
    return "\n".join(lines) + "\n"

