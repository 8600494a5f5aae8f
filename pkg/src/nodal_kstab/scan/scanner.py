"""Grid scans of S(v_t): second differences, breakpoints, pieces and concavity."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from nodal_kstab.exceptions import AppException, InvalidInputError
from nodal_kstab.local_model.valuation import MonomialValuation
from nodal_kstab.nodal_catalog.classify import classify
from nodal_kstab.nodal_catalog.piecewise import A_invariant, S_exact
from nodal_kstab.scan.cache import ScanCache
from nodal_kstab.scan.config import ScanConfig
from nodal_kstab.scan.report import Breakpoint, LinearPiece, ScanReport, ScanRow, Violation
from nodal_kstab.section_ring.filtrations import ValuationFiltration
from nodal_kstab.section_ring.invariants import S_m
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)


def evaluate_row(task: Tuple[Fraction, str, int, int]) -> ScanRow:
    """One grid row; failures are recorded on the row instead of raised."""
    t, mode, m, cap = task
    row = ScanRow(t)
    try:
        row.A = A_invariant(t)
        if mode == "exact":
            row.S = S_exact(t)
        else:
            row.S = S_m(ValuationFiltration(MonomialValuation.from_slope(t), cap=cap), m)
        row.ratio = row.A / row.S
    except AppException as exc:
        row.error = str(exc)
        row.flags = "E"
    return row


def second_differences(values: Sequence[Optional[Fraction]]) -> List[Optional[Fraction]]:
    """values[i] - 2 values[i+1] + values[i+2]; None where a row is missing."""
    out: List[Optional[Fraction]] = []
    for i in range(len(values) - 2):
        triple = values[i : i + 3]
        out.append(None if any(x is None for x in triple) else triple[0] - 2 * triple[1] + triple[2])
    return out


class SegmentScanner:
    def __init__(self, config: ScanConfig, jobs: int = 1, cache: Optional[ScanCache] = None):
        self.config = config
        self.jobs = max(1, jobs)
        self.cache = cache
        if cache is None and config.cache_dir:
            self.cache = ScanCache(config.cache_dir)

    def evaluate(self) -> List[ScanRow]:
        grid = self.config.grid()
        tasks = [(t, self.config.mode, self.config.m, self.config.truncation_cap) for t in grid]
        if self.jobs == 1 or len(tasks) < 2:
            return [evaluate_row(task) for task in tasks]
        logger.info(f"🚀 Evaluating {len(tasks)} rows on {self.jobs} processes")
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(evaluate_row, tasks))

    def run(self) -> ScanReport:
        config_payload = self.config.to_json()
        if self.cache is not None:
            cached = self.cache.get(config_payload)
            if cached is not None:
                logger.info("📄 Scan served from cache")
                return ScanReport.from_json(cached)

        logger.info(
            f"🔧 Starting scan | mode={self.config.mode}, range=[{self.config.t_min}, {self.config.t_max}], "
            f"step={self.config.grid_step}"
        )
        rows = self.evaluate()
        report = analyse(config_payload, rows, self.config.grid_step)
        logger.info(
            f"📊 Scan complete: {len(rows)} rows, {len(report.breakpoints)} breakpoints, "
            f"{len(report.violations)} violations, {len(report.failed_rows)} failed rows"
        )
        for row in report.failed_rows:
            logger.warning(f"⚠️ Row t={row.t} failed: {row.error}")

        if self.cache is not None and not report.failed_rows:
            self.cache.put(config_payload, report.to_json())
        return report


def analyse(config_payload: dict, rows: List[ScanRow], step: Fraction) -> ScanReport:
    values = [row.S for row in rows]
    deltas = second_differences(values)
    report = ScanReport(config_payload, rows)

    flags = [set(row.flags) for row in rows]
    for i, delta in enumerate(deltas):
        if delta is None:
            continue
        if delta > 0:
            report.violations.append(Violation(rows[i + 1].t, delta))
            flags[i + 1].add("V")
        if delta == 0:
            flags[i + 1].add("L")

    # maximal runs of nonzero second differences
    start = 0
    i = 0
    while i < len(deltas):
        if deltas[i] is None or deltas[i] == 0:
            i += 1
            continue
        j = i
        while j + 1 < len(deltas) and deltas[j + 1] is not None and deltas[j + 1] != 0:
            j += 1
        report.breakpoints.append(Breakpoint(rows[i + 1].t, rows[j + 1].t))
        if i == j:
            flags[i + 1].add("B")
        _append_piece(report, rows, start, i + 1, step)
        start = j + 1
        i = j + 1
    _append_piece(report, rows, start, len(rows) - 1, step)

    for row, row_flags in zip(rows, flags):
        row.flags = "".join(f for f in "LBVE" if f in row_flags)

    for row in rows:
        if "L" in row.flags:
            verdict = classify(row.t)
            if not (verdict.fg and verdict.fano):
                report.verdict_mismatches.append(
                    f"t={row.t}: locally linear on the grid but classified fg={verdict.fg}, fano={verdict.fano}"
                )
    return report


def _append_piece(report: ScanReport, rows: List[ScanRow], lo: int, hi: int, step: Fraction):
    if hi <= lo or any(rows[k].S is None for k in (lo, lo + 1)):
        return
    slope = (rows[lo + 1].S - rows[lo].S) / step
    report.pieces.append(LinearPiece(rows[lo].t, rows[hi].t, slope))


def scan(config: ScanConfig, jobs: int = 1, cache: Optional[ScanCache] = None) -> ScanReport:
    if config.t_min == config.t_max:
        raise InvalidInputError("a scan needs t_min < t_max")
    return SegmentScanner(config, jobs, cache).run()
