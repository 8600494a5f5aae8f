"""Writing scan reports: CSV, SVG and a cache round trip."""
from __future__ import annotations

from typing import Optional

from nodal_kstab.emitters import dispatch_emit
from nodal_kstab.emitters.base import PathLike
from nodal_kstab.exceptions import EmitterError
from nodal_kstab.scan.cache import ScanCache
from nodal_kstab.scan.report import ScanReport


def emit_csv(report: ScanReport, path: Optional[PathLike] = None) -> str:
    return dispatch_emit(report.to_json(), "csv", path)


def emit_svg(report: ScanReport, path: Optional[PathLike] = None) -> str:
    return dispatch_emit(report.to_json(), "svg", path)


def cache_roundtrip(report: ScanReport, directory: PathLike) -> ScanReport:
    """Store ``report`` in the cache under ``directory`` and read it back."""
    cache = ScanCache(directory)
    payload = report.to_json()
    path = cache.put(report.config, payload)
    loaded = cache.get(report.config)
    if loaded is None:
        raise EmitterError("Cache entry could not be read back", path=str(path))
    return ScanReport.from_json(loaded)
