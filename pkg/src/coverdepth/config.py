"""Resource budgets and their environment overrides.

Every enumeration or expansion routine takes an optional ``Budgets``; the
default is built from module defaults overlaid with ``COVERDEPTH_*``
environment variables (e.g. ``COVERDEPTH_BOX_EVALUATIONS=200000000``).
Budgets are hard limits: exceeding one raises ``SizeLimitError`` instead of
silently truncating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

ENV_PREFIX = "COVERDEPTH_"


@dataclass(frozen=True)
class Budgets:
    box_evaluations: int = 100_000_000  # (t+1)^n cap for exponent-box scans
    subset_vertices: int = 22           # max n for the 2^n cycle-subset scan
    face_budget: int = 1 << 20          # total simplicial face cap per complex
    nu_vertices: int = 24               # vertex bound for exact induced matchings
    expand_vars: int = 8                # ambient guard for generator expansion
    expand_power: int = 3               # power guard for generator expansion
    expand_generators: int = 200_000    # intermediate generator-count cap
    hochster_vars: int = 14             # ambient guard for the homology oracle

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"budget {f.name} must be positive")


def budgets_from_env(base: Budgets | None = None) -> Budgets:
    """Overlay COVERDEPTH_* environment variables on ``base`` (or defaults)."""
    base = base or Budgets()
    overrides = {}
    for f in fields(Budgets):
        raw = os.environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            overrides[f.name] = int(raw)
    if not overrides:
        return base
    values = {f.name: getattr(base, f.name) for f in fields(Budgets)}
    values.update(overrides)
    return Budgets(**values)


def current_budgets() -> Budgets:
    return budgets_from_env()
