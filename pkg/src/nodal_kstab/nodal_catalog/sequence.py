"""The Markov sequence d_n and the breakpoints of the piecewise S-function."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError


def fibonacci(k: int) -> int:
    """F_k for k >= -1 with F_-1 = 1, F_0 = 0, F_1 = 1."""
    if k == -1:
        return 1
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class DSequence:
    values: Tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def identity_failures(self) -> list:
        """Every identity the sequence must satisfy, as failure messages (empty when sound)."""
        d = self.values
        failures = []
        for n in range(len(d)):
            if d[n] % 3 == 0:
                failures.append(f"3 divides d_{n} = {d[n]}")
            if d[n] != fibonacci(2 * n - 1):
                failures.append(f"d_{n} = {d[n]} differs from F_{2 * n - 1}")
            if n + 1 < len(d):
                if 1 + d[n] ** 2 + d[n + 1] ** 2 != 3 * d[n] * d[n + 1]:
                    failures.append(f"(1, d_{n}, d_{n + 1}) is not a Markov triple")
                if n >= 1:
                    if d[n + 1] != 3 * d[n] - d[n - 1]:
                        failures.append(f"recurrence fails at n = {n}")
                    if d[n] ** 2 + 1 != d[n - 1] * d[n + 1]:
                        failures.append(f"d_{n}^2 + 1 != d_{n - 1} d_{n + 1}")
        return failures


@lru_cache(maxsize=32)
def d_sequence(N: int) -> DSequence:
    """d_0, ..., d_N with d_0 = d_1 = 1 and d_(n+1) = 3 d_n - d_(n-1)."""
    if N < 2:
        raise InvalidInputError(f"the sequence needs N >= 2, got {N}")
    values = [1, 1]
    while len(values) <= N:
        values.append(3 * values[-1] - values[-2])
    sequence = DSequence(tuple(values))
    failures = sequence.identity_failures()
    if failures:
        raise LemmaViolationError("; ".join(failures))
    return sequence


@dataclass(frozen=True)
class Breakpoints:
    t: Tuple[Fraction, ...]
    t_prime: Tuple[Fraction, ...]


def breakpoint(n: int) -> Fraction:
    """t_0 = 1 and t_n = d_(n+1) / d_(n-1)."""
    if n < 0:
        raise InvalidInputError(f"breakpoint index must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    d = d_sequence(max(n + 1, 2))
    return Fraction(d[n + 1], d[n - 1])


def breakpoints(N: int) -> Breakpoints:
    """t_0..t_N and t'_0..t'_N with t'_n = d_(n+1)**2 / d_n**2."""
    if N < 1:
        raise InvalidInputError(f"N must be >= 1, got {N}")
    d = d_sequence(max(N + 1, 2))
    t = tuple(breakpoint(n) for n in range(N + 1))
    t_prime = tuple(Fraction(d[n + 1] ** 2, d[n] ** 2) for n in range(N + 1))
    return Breakpoints(t, t_prime)
