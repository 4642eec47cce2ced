"""Desk-scale size limits.

Limits are plain configuration: defaults below, optionally overridden by a
JSON config file and by the ``BAXTER_LIMIT_N`` environment variable (which
caps every permutation-length style limit at once).
"""

from __future__ import annotations

import dataclasses
import json
import os
from pathlib import Path

from .errors import LimitExceeded

ENV_VAR = "BAXTER_LIMIT_N"


@dataclasses.dataclass
class Limits:
    perm_n: int = 9          # Baxter / twisted Baxter enumeration
    alt_length: int = 12     # alternating Baxter permutations (length 2n)
    fiber_n: int = 8         # congruence fiber closures over S_n
    word_n: int = 8          # Yamanouchi words of length 3n
    tree_n: int = 9          # complete binary trees with 2n+1 nodes


_limits = Limits()


def limits() -> Limits:
    return _limits


def configure(path: str | os.PathLike | None = None, **overrides: int) -> Limits:
    """Reset the active limits from defaults, a JSON file, the environment and keyword overrides."""
    global _limits
    values = dataclasses.asdict(Limits())
    if path is not None:
        data = json.loads(Path(path).read_text())
        unknown = set(data) - set(values)
        if unknown:
            raise ValueError(f"unknown limit keys: {sorted(unknown)}")
        values.update({k: int(v) for k, v in data.items()})
    env = os.environ.get(ENV_VAR)
    if env:
        cap = int(env)
        values["perm_n"] = values["fiber_n"] = values["word_n"] = values["tree_n"] = cap
        values["alt_length"] = 2 * cap
    values.update({k: int(v) for k, v in overrides.items() if v is not None})
    _limits = Limits(**values)
    return _limits


def check(name: str, value: int) -> None:
    cap = getattr(_limits, name)
    if value > cap:
        raise LimitExceeded(f"{name}={value} exceeds the configured limit {cap}")


configure()
