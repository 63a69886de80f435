"""Module entry point: ``python -m pdbell``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
