"""Resource limits, overridable through the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_radius: int = 8
    max_elements: int = 1_000_000
    window: int = 24

    @classmethod
    def from_env(cls) -> Limits:
        return cls(
            max_radius=int(os.environ.get("SHIFTSIM_MAX_RADIUS", cls.max_radius)),
            max_elements=int(os.environ.get("SHIFTSIM_MAX_ELEMENTS", cls.max_elements)),
            window=int(os.environ.get("SHIFTSIM_WINDOW", cls.window)),
        )
