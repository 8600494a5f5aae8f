"""On-disk report cache: one JSON file per configuration, keyed by a content hash."""
from __future__ import annotations

import contextlib
import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

from nodal_kstab.exceptions import EmitterError, SchemaValidationError
from nodal_kstab.utils.logger import get_logger
from nodal_kstab.validators.schema_validator import validate_report

logger = get_logger(__name__)


def cache_key(config_payload: dict) -> str:
    canonical = json.dumps(config_payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class ScanCache:
    def __init__(self, directory):
        self.directory = Path(directory)

    def path_for(self, config_payload: dict) -> Path:
        return self.directory / f"{cache_key(config_payload)}.json"

    def get(self, config_payload: dict) -> Optional[dict]:
        path = self.path_for(config_payload)
        if not path.exists():
            return None
        try:
            with path.open("r", encoding="utf-8") as f:
                payload = json.load(f)
            return validate_report(payload)
        except (OSError, ValueError, SchemaValidationError) as exc:
            logger.warning(f"⚠️ Ignoring unreadable cache entry {path}: {exc}")
            return None

    def put(self, config_payload: dict, payload: dict) -> Path:
        validate_report(payload)
        path = self.path_for(config_payload)
        tmp: Optional[str] = None
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(payload, f, sort_keys=True, indent=2)
            os.replace(tmp, path)
        except OSError as exc:
            if tmp is not None:
                with contextlib.suppress(OSError):
                    os.unlink(tmp)
            raise EmitterError(f"Could not write cache entry: {exc}", path=str(path))
        logger.debug(f"✅ Cached scan report | path={path}")
        return path
