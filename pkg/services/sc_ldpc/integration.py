"""Verification pipelines returning report dicts.

verify():  read -> derive parameters -> conv_girth -> shortest-cycle witnesses
compare(): verify two codes and report the constraint-length reduction

Returns consistent output: { success, ..., errors, error_type }. Data problems
are reported, not raised; error_type names the exception class so callers can
map it to an exit status.
"""
from __future__ import annotations

from typing import Any, Dict, Iterable, Optional

from .code_model import derive_params, hs_to_poly, poly_to_hs
from .differences import DEFAULT_MAX_CYCLE_LENGTH, check_witness, find_cycles
from .errors import ScLdpcError
from .girth import DEFAULT_NODE_BUDGET, conv_girth
from .io import read_code
from .models import PolyMatrix, SyndromeFormer

DEFAULT_GIRTH_CAP = 12
DEFAULT_MAX_WITNESSES = 10


def _as_hs(code: Any, fmt: Optional[str] = None) -> SyndromeFormer:
    code = read_code(code, fmt)
    if isinstance(code, PolyMatrix):
        return poly_to_hs(code)
    return code


def verify(
    code: Any,
    g_cap: int = DEFAULT_GIRTH_CAP,
    fmt: Optional[str] = None,
    max_witnesses: Optional[int] = DEFAULT_MAX_WITNESSES,
    witness_lines: Optional[Iterable[str]] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_cycle_length: int = DEFAULT_MAX_CYCLE_LENGTH,
    workers: int = 1,
) -> Dict[str, Any]:
    """Full report for an H_s or H(x) (object, path or text).

    Keys: a, c, L_h, m_h, v_s, R, girth (None = exceeds g_cap), girth_cap,
    h_x (pretty-printed polynomials), witnesses (report lines of the shortest
    cycles), witness_checks (one entry per external witness line).
    """
    result: Dict[str, Any] = {
        "success": False,
        "a": None,
        "c": None,
        "L_h": None,
        "m_h": None,
        "v_s": None,
        "R": None,
        "girth": None,
        "girth_cap": g_cap,
        "h_x": None,
        "witnesses": [],
        "witness_checks": [],
        "errors": [],
        "error_type": None,
    }

    try:
        hs = _as_hs(code, fmt)
        m_h, v_s, rate = derive_params(hs.a, hs.c, hs.L_h)
        result.update(a=hs.a, c=hs.c, L_h=hs.L_h, m_h=m_h, v_s=v_s, R=rate)
        result["h_x"] = [list(row) for row in hs_to_poly(hs).formatted()]

        girth = conv_girth(hs, g_cap, node_budget=node_budget, workers=workers)
        result["girth"] = girth
        if girth is not None:
            witnesses = find_cycles(
                hs,
                girth,
                min_length=girth,
                max_witnesses=max_witnesses,
                max_cycle_length=max(max_cycle_length, girth),
                workers=workers,
            )
            result["witnesses"] = [w.report_line() for w in witnesses]

        for lineno, line in enumerate(witness_lines or (), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            witness = check_witness(hs, line, lineno)
            result["witness_checks"].append({"line": lineno, "witness": line, "valid": witness is not None})

        result["success"] = True

    except ScLdpcError as e:
        result["errors"].append(str(e))
        result["error_type"] = type(e).__name__

    return result


def compare(reference: Any, candidate: Any, g_cap: int = DEFAULT_GIRTH_CAP, **kwargs) -> Dict[str, Any]:
    """Verify both codes; report m_h / L_h / v_s reductions of the candidate over the reference."""
    kwargs.setdefault("max_witnesses", 1)
    ref = verify(reference, g_cap, **kwargs)
    cand = verify(candidate, g_cap, **kwargs)
    result: Dict[str, Any] = {
        "success": False,
        "reference": ref,
        "candidate": cand,
        "delta_m_h": None,
        "delta_L_h": None,
        "delta_v_s": None,
        "v_s_ratio": None,
        "same_girth": None,
        "errors": ref["errors"] + cand["errors"],
        "error_type": ref["error_type"] or cand["error_type"],
    }
    if not (ref["success"] and cand["success"]):
        return result

    result.update(
        delta_m_h=ref["m_h"] - cand["m_h"],
        delta_L_h=ref["L_h"] - cand["L_h"],
        delta_v_s=ref["v_s"] - cand["v_s"],
        v_s_ratio=round(cand["v_s"] / ref["v_s"], 4),
        same_girth=ref["girth"] == cand["girth"],
        success=True,
    )
    return result
