"""Scan and delta reports and their JSON payloads."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from nodal_kstab.exactnum.text import decimal_string, format_number, parse_number

SCHEMA_VERSION = 1


def _text(value) -> Optional[str]:
    return None if value is None else format_number(value)


def _number(text: Optional[str]):
    return None if text is None else parse_number(text)


@dataclass
class ScanRow:
    t: Fraction
    A: Optional[Fraction] = None
    S: Optional[Fraction] = None
    ratio: Optional[Fraction] = None
    flags: str = ""
    error: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "t": format_number(self.t),
            "A": _text(self.A),
            "S": _text(self.S),
            "ratio": _text(self.ratio),
            "flags": self.flags,
            "S_decimal": None if self.S is None else decimal_string(self.S),
            "error": self.error,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "ScanRow":
        return cls(
            parse_number(payload["t"]),
            _number(payload["A"]),
            _number(payload["S"]),
            _number(payload["ratio"]),
            payload["flags"],
            payload.get("error"),
        )


@dataclass(frozen=True)
class Breakpoint:
    """A kink located exactly at lo == hi, or somewhere within [lo, hi]."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> dict:
        return {"lo": format_number(self.lo), "hi": format_number(self.hi), "exact": self.exact}


@dataclass(frozen=True)
class LinearPiece:
    start: Fraction
    end: Fraction
    slope: Fraction

    def to_json(self) -> dict:
        return {"start": format_number(self.start), "end": format_number(self.end), "slope": format_number(self.slope)}


@dataclass(frozen=True)
class Violation:
    """Consecutive grid triple with a positive second difference."""

    t: Fraction
    second_difference: Fraction

    def to_json(self) -> dict:
        return {"t": format_number(self.t), "second_difference": format_number(self.second_difference)}


@dataclass
class ScanReport:
    config: dict
    rows: List[ScanRow]
    breakpoints: List[Breakpoint] = field(default_factory=list)
    pieces: List[LinearPiece] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)
    verdict_mismatches: List[str] = field(default_factory=list)

    @property
    def failed_rows(self) -> List[ScanRow]:
        return [row for row in self.rows if row.error is not None]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "scan",
            "config": self.config,
            "rows": [row.to_json() for row in self.rows],
            "breakpoints": [b.to_json() for b in self.breakpoints],
            "pieces": [p.to_json() for p in self.pieces],
            "violations": [v.to_json() for v in self.violations],
            "verdict_mismatches": list(self.verdict_mismatches),
            "note": "linear pieces are consistent with linearity at the grid resolution, not a proof",
        }

    @classmethod
    def from_json(cls, payload: dict) -> "ScanReport":
        return cls(
            dict(payload["config"]),
            [ScanRow.from_json(r) for r in payload["rows"]],
            [Breakpoint(parse_number(b["lo"]), parse_number(b["hi"])) for b in payload["breakpoints"]],
            [LinearPiece(parse_number(p["start"]), parse_number(p["end"]), parse_number(p["slope"])) for p in payload["pieces"]],
            [Violation(parse_number(v["t"]), parse_number(v["second_difference"])) for v in payload["violations"]],
            list(payload["verdict_mismatches"]),
        )


@dataclass
class DeltaReport:
    config: dict
    rows: List[ScanRow]
    minimum: Fraction
    argmin: List[Fraction]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "delta",
            "config": self.config,
            "rows": [row.to_json() for row in self.rows],
            "minimum": format_number(self.minimum),
            "minimum_decimal": decimal_string(self.minimum),
            "argmin": [format_number(t) for t in self.argmin],
            "note": "every value A/S is an upper bound for the stability threshold",
        }
