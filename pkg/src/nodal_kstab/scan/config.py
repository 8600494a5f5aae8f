from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.exactnum.rational import IntOrRational, as_rational
from nodal_kstab.exactnum.text import format_number, parse_number

MODES = ("exact", "sample")


@dataclass(frozen=True)
class ScanConfig:
    t_min: Fraction
    t_max: Fraction
    grid_step: Fraction
    mode: str = "exact"
    m: int = 1
    truncation_cap: int = 512
    cache_dir: Optional[str] = None

    def __post_init__(self):
        for name in ("t_min", "t_max", "grid_step"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.mode not in MODES:
            raise InvalidInputError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.t_min <= 0:
            raise InvalidInputError(f"t_min must be positive, got {self.t_min}")
        if self.t_min > self.t_max:
            raise InvalidInputError(f"t_min {self.t_min} exceeds t_max {self.t_max}")
        if self.grid_step <= 0:
            raise InvalidInputError(f"grid step must be positive, got {self.grid_step}")
        if self.m < 1:
            raise InvalidInputError(f"level must be >= 1, got {self.m}")

    @classmethod
    def from_text(cls, t_min: str, t_max: str, step: str, **kwargs) -> "ScanConfig":
        values = []
        for text in (t_min, t_max, step):
            value = parse_number(text)
            if not isinstance(value, Fraction):
                raise InvalidInputError(f"scan bounds must be rational, got {text}")
            values.append(value)
        return cls(*values, **kwargs)

    def grid(self) -> List[Fraction]:
        points = []
        t = self.t_min
        while t <= self.t_max:
            points.append(t)
            t += self.grid_step
        return points

    def to_json(self) -> dict:
        """Canonical form; the cache key is derived from it, so the cache directory is left out."""
        payload = {
            "t_min": format_number(self.t_min),
            "t_max": format_number(self.t_max),
            "grid_step": format_number(self.grid_step),
            "mode": self.mode,
        }
        if self.mode == "sample":
            payload["m"] = self.m
            payload["truncation_cap"] = self.truncation_cap
        return payload
