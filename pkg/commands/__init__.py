# CLI subcommands: each module exposes register(subparsers, settings) and run(args, settings) -> exit code
