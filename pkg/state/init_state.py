import os

from services.sc_ldpc.differences import DEFAULT_MAX_CYCLE_LENGTH
from services.sc_ldpc.errors import InvalidParamsError
from services.sc_ldpc.girth import DEFAULT_NODE_BUDGET
from services.sc_ldpc.integration import DEFAULT_GIRTH_CAP, DEFAULT_MAX_WITNESSES
from services.sc_ldpc.search import (
    DEFAULT_EXHAUSTIVE_BUDGET,
    DEFAULT_LH_SEARCH_SPAN,
    DEFAULT_MAX_REDRAWS,
    DEFAULT_MONTECARLO_BUDGET,
    DEFAULT_PROGRESS_EVERY,
    DEFAULT_SEED,
)

DEFAULTS = {
    "girth_cap": DEFAULT_GIRTH_CAP,
    "max_cycle_length": DEFAULT_MAX_CYCLE_LENGTH,
    "node_budget": DEFAULT_NODE_BUDGET,
    "workers": 1,
    # Search
    "exhaustive_budget": DEFAULT_EXHAUSTIVE_BUDGET,
    "montecarlo_budget": DEFAULT_MONTECARLO_BUDGET,
    "seed": DEFAULT_SEED,
    "lh_search_span": DEFAULT_LH_SEARCH_SPAN,
    "max_redraws": DEFAULT_MAX_REDRAWS,
    "progress_every": DEFAULT_PROGRESS_EVERY,
    # Reports
    "max_witnesses": DEFAULT_MAX_WITNESSES,
}

ENV_OVERRIDES = {
    "SCLDPC_WORKERS": "workers",
    "SCLDPC_GIRTH_CAP": "girth_cap",
    "SCLDPC_NODE_BUDGET": "node_budget",
    "SCLDPC_SEED": "seed",
}


def init_settings(environ=None):
    """Resolve settings: DEFAULTS overridden by SCLDPC_* environment variables."""
    environ = os.environ if environ is None else environ
    settings = dict(DEFAULTS)
    for var, key in ENV_OVERRIDES.items():
        raw = environ.get(var)
        if raw is None or raw.strip() == "":
            continue
        try:
            value = int(raw)
        except ValueError:
            raise InvalidParamsError(f"{var} must be an integer, got {raw!r}") from None
        if value < (0 if key == "seed" else 1):
            raise InvalidParamsError(f"{var} out of range: {value}")
        settings[key] = value
    return settings
