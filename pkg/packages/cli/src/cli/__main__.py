"""Entry point for ``python -m cli``."""

from cli.app import run

if __name__ == "__main__":
    run()
