from nodal_kstab.scan.cache import ScanCache, cache_key
from nodal_kstab.scan.config import ScanConfig
from nodal_kstab.scan.delta import delta_upper_bound
from nodal_kstab.scan.export import cache_roundtrip, emit_csv, emit_svg
from nodal_kstab.scan.report import (
    SCHEMA_VERSION,
    Breakpoint,
    DeltaReport,
    LinearPiece,
    ScanReport,
    ScanRow,
    Violation,
)
from nodal_kstab.scan.scanner import SegmentScanner, analyse, evaluate_row, scan, second_differences

__all__ = [
    "Breakpoint",
    "DeltaReport",
    "LinearPiece",
    "SCHEMA_VERSION",
    "ScanCache",
    "ScanConfig",
    "ScanReport",
    "ScanRow",
    "SegmentScanner",
    "Violation",
    "analyse",
    "cache_key",
    "cache_roundtrip",
    "delta_upper_bound",
    "emit_csv",
    "emit_svg",
    "evaluate_row",
    "scan",
    "second_differences",
]
