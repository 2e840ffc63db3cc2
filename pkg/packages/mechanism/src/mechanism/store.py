"""Mechanism JSON persistence."""

from __future__ import annotations

import logging
from pathlib import Path

from pydantic import ValidationError

from core.schemas import MechanismDocument
from mechanism.channel import Mechanism

logger = logging.getLogger(__name__)


def save_mechanism(mech: Mechanism, path: Path) -> None:
    """Write ``mech`` as ``{n, epsilon, ids, matrix}`` JSON at full double precision."""
    document = MechanismDocument(n=mech.n, epsilon=mech.epsilon, ids=list(mech.ids), matrix=mech.matrix.tolist())
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(document.model_dump_json(indent=2) + "\n")
    logger.info("Saved mechanism over %d locations to %s", mech.n, path)


def load_mechanism(path: Path) -> Mechanism:
    """Load and re-validate a mechanism written by save_mechanism."""
    if not path.exists():
        raise FileNotFoundError(f"mechanism file not found: {path}")
    try:
        document = MechanismDocument.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise ValueError(f"malformed mechanism file {path}: {e.error_count()} validation errors") from e
    if document.n != len(document.ids):
        raise ValueError(f"mechanism file {path} declares n={document.n} but lists {len(document.ids)} ids")
    try:
        return Mechanism(document.matrix, document.epsilon, document.ids)
    except ValueError as e:
        raise ValueError(f"invalid mechanism in {path}: {e}") from e
