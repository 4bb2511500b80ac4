"""Validate raw syndrome-former data before it becomes a SyndromeFormer.

Checks: parameter ranges, row count, row weights, index range, ordering,
duplicates and the canonical (non-empty last block) condition.
"""

from typing import Dict, Optional, Sequence

from .utils import memory_order


def validate_params(a: int, c: int, L_h: int, require_positive_rate: bool = True) -> Dict:
    """Range checks on (a, c, L_h); a <= c is an error only when a positive rate is required."""
    report = {"is_valid": True, "errors": [], "warnings": []}
    for name, value in (("a", a), ("c", c), ("L_h", L_h)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            report["errors"].append(f"{name} must be a positive integer, got {value!r}")
    if not report["errors"] and a <= c:
        message = f"a must exceed c for a positive rate (a={a}, c={c})"
        report["errors" if require_positive_rate else "warnings"].append(message)
    report["is_valid"] = not report["errors"]
    return report


def validate_supports(
    a: int,
    c: int,
    L_h: int,
    supports: Sequence[Sequence[int]],
    row_weights: Optional[Sequence[int]] = None,
) -> Dict:
    """Validate the per-row support sets of an H_s.

    Returns:
        dict with 'is_valid', 'errors', 'warnings'. A non-canonical H_s is an error
        (it is flagged, never repaired).
    """
    report = validate_params(a, c, L_h, require_positive_rate=False)
    if not report["is_valid"]:
        return report

    if len(supports) != a:
        report["errors"].append(f"expected {a} rows, got {len(supports)}")
    if row_weights is not None and len(row_weights) != len(supports):
        report["errors"].append(f"expected {len(supports)} row weights, got {len(row_weights)}")

    max_index = -1
    for i, row in enumerate(supports):
        if len(row) == 0:
            report["errors"].append(f"row {i} is empty (every variable must be checked)")
            continue
        if any(j < 0 or j >= L_h for j in row):
            report["errors"].append(f"row {i} has indices outside [0, {L_h})")
        if len(set(row)) != len(row):
            report["errors"].append(f"row {i} has duplicate indices")
        elif any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
            report["errors"].append(f"row {i} indices are not strictly increasing")
        if row_weights is not None and i < len(row_weights) and len(row) != row_weights[i]:
            report["errors"].append(f"row {i} has weight {len(row)}, expected {row_weights[i]}")
        max_index = max(max_index, max(row))

    if not report["errors"]:
        m_h = memory_order(L_h, c)
        if max_index < m_h * c:
            report["errors"].append(
                f"non-canonical: last column block [{m_h * c}, {L_h}) is empty "
                f"(largest index {max_index}), m_h={m_h} is overstated"
            )
        if max(len(row) for row in supports) == 1:
            report["warnings"].append("all rows have weight 1: the Tanner graph is a forest")

    report["is_valid"] = not report["errors"]
    return report
