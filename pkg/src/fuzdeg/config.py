from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_MAX_ORDER = 128
DEFAULT_CLASS_CAP = 10**7
DEFAULT_PAIR_CAP = 10**12
DEFAULT_ORACLE_CAP = 2 * 10**6

FORMATS = ("json", "csv", "markdown", "dot")


def default_max_order() -> int:
    """Maximum group order, honouring the FUZDEG_MAX_ORDER environment variable."""
    raw = os.environ.get("FUZDEG_MAX_ORDER")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"FUZDEG_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"FUZDEG_MAX_ORDER must be positive, got {value}")
    return value


@dataclass(frozen=True)
class RunConfig:
    spec: str = ""
    max_order: int = field(default_factory=default_max_order)
    class_cap: int = DEFAULT_CLASS_CAP
    pair_cap: int = DEFAULT_PAIR_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    oracle_depth: int | None = None
    format: str = "json"
    seed: int = 0
    jobs: int = 1
    samples: int = 10_000

    def __post_init__(self) -> None:
        for name in ("max_order", "class_cap", "pair_cap", "oracle_cap", "jobs", "samples"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.oracle_depth is not None and self.oracle_depth < 1:
            raise ValueError("oracle_depth must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {FORMATS}")
