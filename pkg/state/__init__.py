"""Runtime settings: DEFAULTS and SCLDPC_* environment overrides."""
