"""Named acceptance checks; each collects ``[NODAL xxxx]`` error strings."""
from __future__ import annotations

import random
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

from nodal_kstab.blowup_geom import invariant_record
from nodal_kstab.emitters import dispatch_emit
from nodal_kstab.exactnum import SQRT5, UPPER_THRESHOLD, QuadRational
from nodal_kstab.exceptions import AppException
from nodal_kstab.local_model import (
    MonomialValuation,
    colength,
    monomials_of_degree,
    multiplicity_at_node,
    vweight,
)
from nodal_kstab.local_model.forms import X0, X1, X2, Form
from nodal_kstab.nodal_catalog import (
    S_exact,
    boundary_limit,
    breakpoint,
    classify,
    construct_Dn,
    d_sequence,
    piece_value,
)
from nodal_kstab.scan import ScanCache, ScanConfig, delta_upper_bound, scan
from nodal_kstab.section_ring import (
    DivisorFiltration,
    S_m,
    S_m_from_jumps,
    ValuationFiltration,
    dim_space,
    interpolated_S_m,
    interpolated_valuation,
    joint_compatible_basis,
    normalized_divisor_S_m,
    verify_compatible,
)
from nodal_kstab.utils.logger import get_logger
from nodal_kstab.utils.settings import Settings

logger = get_logger(__name__)

LINE = X1 + X2


@dataclass
class CheckResult:
    name: str
    errors: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "errors": list(self.errors)}


@dataclass
class VerificationReport:
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "verification",
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def random_form(rng: random.Random, degree: int, spread: int = 3) -> Form:
    """A nonzero form with small integer coefficients."""
    while True:
        form = Form.from_dict(degree, {e: rng.randint(-spread, spread) for e in monomials_of_degree(degree)})
        if not form.is_zero:
            return form


def brute_force_colength(a: int, b: int, p: int) -> int:
    return sum(1 for i in range(p + 1) for j in range(p + 1) if a * i + b * j < p)


def check_d_sequence(errors: List[str], settings: Settings):
    for failure in d_sequence(21).identity_failures():
        errors.append(f"[NODAL 0101] {failure}")


def check_colength(errors: List[str], settings: Settings):
    d = d_sequence(6)
    for n in range(1, 6):
        a, b = d[n - 1], d[n + 1]
        expected = (d[n] ** 2 + 3 * d[n]) // 2
        counted = colength(MonomialValuation(a, b), a * b)
        if counted != expected or counted != brute_force_colength(a, b, a * b):
            errors.append(f"[NODAL 0201] colength at n={n} is {counted}, expected {expected}")


def check_toric_S_m(errors: List[str], settings: Settings):
    v = MonomialValuation(1, 1)
    filtration = ValuationFiltration(v, cap=settings.truncation_cap)
    if S_exact(1) != 2:
        errors.append("[NODAL 0301] S_exact(1) != 2")
    for m in range(1, 7):
        n_m = dim_space(m)
        oracle = sum(n_m - lam * (lam + 1) // 2 for lam in range(1, 3 * m + 1))
        if oracle != 2 * m * n_m:
            errors.append(f"[NODAL 0302] flag-sum oracle fails at m={m}")
        value = S_m(filtration, m)
        if value != 2:
            errors.append(f"[NODAL 0303] S_{m}(v_(1,1)) = {value}, expected 2")
        if m <= 3 and S_m_from_jumps(filtration, m) != value:
            errors.append(f"[NODAL 0304] jump integral disagrees with S_{m} at m={m}")


def check_line_S_m(errors: List[str], settings: Settings):
    line = DivisorFiltration(LINE)
    for m in range(1, 7):
        value = S_m(line, m)
        if value != 1:
            errors.append(f"[NODAL 0401] S_{m}(line) = {value}, expected 1")
        if normalized_divisor_S_m(LINE, m) != Fraction(1, 3):
            errors.append(f"[NODAL 0402] normalized line S_{m} differs from 1/3")


def check_curves(errors: List[str], settings: Settings):
    d = d_sequence(5)
    for n in range(1, 4):
        curve = construct_Dn(n, settings.dn_max, settings.irreducibility_max, settings.truncation_cap)
        if curve.kernel_dimension != 1:
            errors.append(f"[NODAL 0501] D_{n} solution space has dimension {curve.kernel_dimension}")
        if curve.order != d[n - 1] * d[n + 1]:
            errors.append(f"[NODAL 0502] D_{n} has ord {curve.order}")
        if curve.polygon.vertices != ((d[n + 1], 0), (0, d[n - 1])):
            errors.append(f"[NODAL 0503] D_{n} Newton polygon {curve.polygon.vertices}")
        if curve.degree != d[n]:
            errors.append(f"[NODAL 0504] D_{n} has degree {curve.degree}")


def check_fujita(errors: List[str], settings: Settings):
    for a, b in [(1, 1), (1, 2), (1, 7), (1, 8), (2, 15)]:
        record = invariant_record(a, b, settings)
        if record.T is None:
            errors.append(f"[NODAL 0601] no T certificate at ({a}, {b})")
            continue
        if record.T * record.epsilon * a * a != 9 * a * b:
            errors.append(f"[NODAL 0602] T * epsilon != 9ab at ({a}, {b})")
        if record.S != S_exact(Fraction(b, a)):
            errors.append(f"[NODAL 0603] S at ({a}, {b}) is {record.S}")
    if invariant_record(1, 7, settings).S != Fraction(127, 24):
        errors.append("[NODAL 0604] S(7) != 127/24")


def check_piecewise(errors: List[str], settings: Settings):
    for n in range(1, 7):
        t = breakpoint(n)
        if piece_value(n - 1, t) != piece_value(n, t):
            errors.append(f"[NODAL 0701] pieces disagree at t_{n} = {t}")
    report = scan(ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 20)))
    found = [(b.lo, b.hi) for b in report.breakpoints]
    if found != [(2, 2), (5, 5)]:
        errors.append(f"[NODAL 0702] breakpoints {found}, expected 2 and 5")
    slopes = [p.slope for p in report.pieces]
    if slopes != [1, Fraction(1, 2), Fraction(2, 5)]:
        errors.append(f"[NODAL 0703] slopes {slopes}")
    limit = boundary_limit()
    if not limit["agree"] or limit["formula_at_threshold"] != 3 + SQRT5:
        errors.append("[NODAL 0704] boundary limit differs from 3+sqrt5")


def check_classifier(errors: List[str], settings: Settings):
    expected = {
        Fraction(1, 2): (True, True, None),
        Fraction(1): (True, True, "P(1,1,1)"),
        Fraction(3): (True, True, "P(1,1,4)"),
        Fraction(5): (True, True, "x0x3 = x1^5 + x2 in P(1,1,5,4)"),
        Fraction(22, 3): (True, False, None),
        Fraction(7): (True, False, None),
        QuadRational(4, 1): (False, True, "P(1,4,25)"),
        QuadRational(7, 1): (False, False, None),
        UPPER_THRESHOLD: (False, False, None),
    }
    for t, (rational_fg, fano, text) in expected.items():
        verdict = classify(t)
        fg = rational_fg or fano
        if verdict.fg != fg or verdict.fano != fano:
            errors.append(f"[NODAL 0801] t={t}: fg={verdict.fg}, fano={verdict.fano}")
        if text is not None and (verdict.degeneration is None or verdict.degeneration.to_text() != text):
            errors.append(f"[NODAL 0802] t={t}: degeneration {verdict.degeneration}")
        if verdict.fano and not verdict.fg:
            errors.append(f"[NODAL 0803] t={t}: fano without fg")


def check_properties(errors: List[str], settings: Settings):
    rng = random.Random(20240601)
    cap = settings.truncation_cap
    for _ in range(100):
        v = MonomialValuation(*rng.choice([(1, 1), (1, 2), (2, 1), (2, 3), (1, 5)]))
        s, s2 = random_form(rng, rng.randint(1, 3)), random_form(rng, rng.randint(1, 3))
        o1, o2 = vweight(v, s, cap).order, vweight(v, s2, cap).order
        if vweight(v, s * s2, cap).order != o1 + o2:
            errors.append(f"[NODAL 0901] multiplicativity fails under {v.weights}")
        if s.degree == s2.degree and not (s + s2).is_zero:
            o = vweight(v, s + s2, cap).order
            if o < min(o1, o2) or (o1 != o2 and o != min(o1, o2)):
                errors.append(f"[NODAL 0902] ultrametric inequality fails under {v.weights}")
        cubic = random_form(rng, 3)
        if vweight(MonomialValuation(1, 1), cubic, cap).order != multiplicity_at_node(cubic):
            errors.append("[NODAL 0903] chart consistency fails on a random cubic")
    for exponent in monomials_of_degree(3):
        monomial = Form.monomial(exponent)
        if vweight(MonomialValuation(1, 1), monomial, cap).order != multiplicity_at_node(monomial):
            errors.append(f"[NODAL 0903] chart consistency fails on the monomial {monomial.to_text()}")

    for a, b in [(1, 2), (2, 3)]:
        for m in (1, 2):
            left = S_m(ValuationFiltration(MonomialValuation(a, b), normalize=False), m)
            right = S_m(ValuationFiltration(MonomialValuation(b, a), normalize=False), m)
            if left != right:
                errors.append(f"[NODAL 0904] swap symmetry fails for ({a}, {b}), m={m}")

    v = MonomialValuation(1, 2)
    filtration = ValuationFiltration(v)
    reference = S_m(filtration, 2)
    for _ in range(5):
        order = list(range(dim_space(2)))
        rng.shuffle(order)
        if S_m(filtration, 2, order) != reference:
            errors.append("[NODAL 0905] S_m depends on the elimination order")
        if not verify_compatible(filtration.compatible_basis(2, order), filtration):
            errors.append("[NODAL 0906] a compatible basis fails its spanning check")

    try:
        joint_compatible_basis(ValuationFiltration(MonomialValuation(1, 1)), DivisorFiltration(LINE), 1)
        joint_compatible_basis(ValuationFiltration(MonomialValuation(1, 2)), ValuationFiltration(MonomialValuation(2, 1)), 1)
    except AppException as exc:
        errors.append(f"[NODAL 0907] joint compatible basis: {exc}")

    for v0, v1 in [(MonomialValuation(1, 1), MonomialValuation(1, 2)), (MonomialValuation(1, 2), MonomialValuation(1, 3))]:
        for m in range(1, 5):
            for u in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
                vs = interpolated_valuation(v0, v1, u)
                bound = interpolated_S_m(v0, v1, u, m)
                combined = (1 - u) * S_m(ValuationFiltration(v0), m) + u * S_m(ValuationFiltration(v1), m)
                if bound != combined or S_m(ValuationFiltration(vs), m) < bound:
                    errors.append(f"[NODAL 0908] concavity fails for {v0.weights}, {v1.weights}, u={u}, m={m}")


def check_delta(errors: List[str], settings: Settings):
    report = delta_upper_bound(ScanConfig(Fraction(1, 2), Fraction(13, 2), Fraction(1, 4)))
    if report.minimum != 1:
        errors.append(f"[NODAL 1001] minimum A/S is {report.minimum}")
    expected = [Fraction(2 + k, 4) for k in range(7)]
    if report.argmin != expected:
        errors.append(f"[NODAL 1002] argmin {report.argmin}")
    if any(row.ratio < 1 for row in report.rows):
        errors.append("[NODAL 1003] a ratio drops below 1")


def check_determinism(errors: List[str], settings: Settings):
    config = ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 4))
    serial = dispatch_emit(scan(config).to_json(), "csv")
    parallel = dispatch_emit(scan(config, jobs=2).to_json(), "csv")
    if serial != parallel:
        errors.append("[NODAL 1101] serial and parallel CSV differ")
    with tempfile.TemporaryDirectory() as tmp:
        cache = ScanCache(tmp)
        first = dispatch_emit(scan(config, cache=cache).to_json(), "csv")
        second = dispatch_emit(scan(config, cache=cache).to_json(), "csv")
    if not (first == second == serial):
        errors.append("[NODAL 1102] cached CSV differs")


CHECKS: List[tuple] = [
    ("d-sequence identities", check_d_sequence),
    ("colength", check_colength),
    ("toric S_m", check_toric_S_m),
    ("line S_m", check_line_S_m),
    ("singular curves", check_curves),
    ("fujita pipeline", check_fujita),
    ("piecewise S and breakpoints", check_piecewise),
    ("classifier", check_classifier),
    ("property suites", check_properties),
    ("delta upper bound", check_delta),
    ("determinism", check_determinism),
]


def verify_all(settings: Optional[Settings] = None, only: Optional[List[str]] = None) -> VerificationReport:
    settings = settings or Settings()
    results = []
    for name, check in CHECKS:
        if only and name not in only:
            continue
        result = CheckResult(name)
        logger.info(f"🔍 Running check: {name}")
        try:
            check(result.errors, settings)
        except AppException as exc:
            result.errors.append(f"[NODAL 9999] {exc}")
        status = "✅" if result.passed else "❌"
        logger.info(f"{status} {name}: {len(result.errors)} errors")
        results.append(result)
    return VerificationReport(results)
