import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction

import numpy as np
import pandas as pd


def serialize_report(report):
    """
    Recursively serialize a report (dict returned by the pipelines, search summary, ...)
    into a JSON-compatible structure.
    Fractions become "p/q" strings, numpy scalars plain numbers, DataFrames split-oriented JSON.
    """
    if isinstance(report, dict):
        # Keys are strings in JSON
        return {str(k): serialize_report(v) for k, v in report.items()}
    elif isinstance(report, (list, tuple)):
        return [serialize_report(v) for v in report]
    elif isinstance(report, Fraction):
        return f"{report.numerator}/{report.denominator}"
    elif isinstance(report, pd.DataFrame):
        return {
            "__type__": "pd.DataFrame",
            "data": report.to_json(orient="split")
        }
    elif isinstance(report, np.integer):
        return int(report)
    elif isinstance(report, np.floating):
        return float(report)
    elif isinstance(report, np.ndarray):
        return report.tolist()
    elif is_dataclass(report) and not isinstance(report, type):
        return serialize_report(asdict(report))
    else:
        try:
            json.dumps(report)
            return report
        except (TypeError, OverflowError):
            return str(report)


def dumps_report(report, indent=2):
    return json.dumps(serialize_report(report), indent=indent, sort_keys=True)
