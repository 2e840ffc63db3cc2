"""Build or serve the documentation site."""

import subprocess
import sys
from pathlib import Path

CONFIG = Path(__file__).resolve().parents[2] / "mkdocs.yml"


def main() -> None:
    """Run ``mkdocs build --strict``, or ``mkdocs serve`` when called with ``serve``, on the bundled config."""
    action = "serve" if sys.argv[1:2] == ["serve"] else "build"
    command = ["mkdocs", action, "--config-file", str(CONFIG)]
    if action == "build":
        command.append("--strict")
    sys.exit(subprocess.call(command))  # noqa: S603, S607
