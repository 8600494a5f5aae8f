"""Finite generation and Fano verdicts for the valuations v_t."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.exactnum.quadratic import LOWER_THRESHOLD, UPPER_THRESHOLD, as_quad, simplify
from nodal_kstab.exactnum.text import format_number
from nodal_kstab.nodal_catalog.piecewise import Number, locate_piece
from nodal_kstab.nodal_catalog.sequence import breakpoint, d_sequence


@dataclass(frozen=True)
class DegenerationDescriptor:
    """Either the weighted plane P(weights) or the hypersurface x0x3 = x1^p + x2^q in P(weights)."""

    kind: str
    weights: Tuple[int, ...]
    exponents: Optional[Tuple[int, int]] = None

    @classmethod
    def weighted_plane(cls, n: int) -> "DegenerationDescriptor":
        d = d_sequence(max(n + 1, 2))
        return cls("weighted_plane", (1, d[n] ** 2, d[n + 1] ** 2))

    @classmethod
    def manetti(cls, n: int) -> "DegenerationDescriptor":
        d = d_sequence(max(n + 1, 2))
        return cls("hypersurface", (1, d[n - 1], d[n + 1], d[n] ** 2), (d[n + 1], d[n - 1]))

    def to_text(self) -> str:
        space = "P(" + ",".join(str(w) for w in self.weights) + ")"
        if self.exponents is None:
            return space
        p, q = self.exponents
        x1 = "x1" if p == 1 else f"x1^{p}"
        x2 = "x2" if q == 1 else f"x2^{q}"
        return f"x0x3 = {x1} + {x2} in {space}"

    def to_json(self) -> dict:
        payload = {"kind": self.kind, "weights": list(self.weights), "text": self.to_text()}
        if self.exponents is not None:
            payload["exponents"] = list(self.exponents)
        return payload


@dataclass(frozen=True)
class Verdict:
    t: Number
    fg: bool
    fano: bool
    piece: Optional[int]
    degeneration: Optional[DegenerationDescriptor]
    reason: str
    reflected: bool = False
    provenance: str = "theorem"

    def to_json(self) -> dict:
        return {
            "t": format_number(self.t),
            "fg": self.fg,
            "fano": self.fano,
            "piece": self.piece,
            "degeneration": self.degeneration.to_json() if self.degeneration else None,
            "reason": self.reason,
            "reflected": self.reflected,
            "provenance": self.provenance,
        }


def classify(t: Number) -> Verdict:
    """Verdict for v_t: finitely generated iff t is rational or lies strictly between the thresholds."""
    q = as_quad(t)
    if q.sign() <= 0:
        raise InvalidInputError(f"slope must be positive, got {format_number(simplify(q))}")
    value = simplify(q)
    rational = q.is_rational
    fano = LOWER_THRESHOLD < q < UPPER_THRESHOLD
    reflected = q < 1
    s = 1 / q if reflected else q

    if not fano:
        if rational:
            reason = "rational slope outside the Fano interval: finitely generated, degeneration not Fano"
        else:
            reason = "irrational slope outside the open Fano interval: not finitely generated"
        return Verdict(value, rational, False, None, None, reason, reflected)

    n = locate_piece(s)
    if s == 1:
        descriptor = DegenerationDescriptor("weighted_plane", (1, 1, 1))
        reason = "toric valuation at t = 1"
    elif n >= 1 and s == breakpoint(n):
        descriptor = DegenerationDescriptor.manetti(n)
        reason = f"breakpoint t_{n}: Manetti surface degeneration"
    else:
        descriptor = DegenerationDescriptor.weighted_plane(n)
        reason = f"interior of piece {n}: weighted plane degeneration"
    if reflected:
        reason += " (via t -> 1/t)"
    return Verdict(value, True, True, n, descriptor, reason, reflected)
