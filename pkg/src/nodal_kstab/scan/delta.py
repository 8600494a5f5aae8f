from __future__ import annotations

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError
from nodal_kstab.scan.config import ScanConfig
from nodal_kstab.scan.report import DeltaReport
from nodal_kstab.scan.scanner import SegmentScanner
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)


def delta_upper_bound(config: ScanConfig, jobs: int = 1) -> DeltaReport:
    """Minimum of A/S over the grid; each ratio bounds the stability threshold from above."""
    if config.mode != "exact":
        raise InvalidInputError("delta upper bounds are computed in exact mode only")
    rows = SegmentScanner(config, jobs).evaluate()
    failed = [row for row in rows if row.error is not None]
    if failed:
        raise LemmaViolationError(f"exact evaluation failed at t={failed[0].t}: {failed[0].error}")
    minimum = min(row.ratio for row in rows)
    argmin = [row.t for row in rows if row.ratio == minimum]
    logger.info(f"📊 Delta upper bound {minimum} attained at {len(argmin)} grid points")
    return DeltaReport(config.to_json(), rows, minimum, argmin)
