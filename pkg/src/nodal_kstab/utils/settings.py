import os
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from nodal_kstab.exceptions import InvalidInputError


@dataclass(frozen=True)
class Settings:
    truncation_cap: int = 512
    dn_max: int = 4
    irreducibility_max: int = 3
    cache_dir: Optional[str] = None
    jobs: int = 1


def _int_setting(config: Mapping[str, Any], key: str, default: int, minimum: int) -> int:
    raw = config.get(key, os.getenv(key, default))
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise InvalidInputError(f"{key} must be an integer, got {raw!r}")
    if value < minimum:
        raise InvalidInputError(f"{key} must be >= {minimum}, got {value}")
    return value


def load_settings(config: Optional[Mapping[str, Any]] = None) -> Settings:
    """Resolve every knob from ``config`` first, then the environment, then the default."""
    if config is None:
        config = {}

    return Settings(
        truncation_cap=_int_setting(config, "NODAL_KSTAB_TRUNCATION_CAP", 512, 1),
        dn_max=_int_setting(config, "NODAL_KSTAB_DN_MAX", 4, 1),
        irreducibility_max=_int_setting(config, "NODAL_KSTAB_IRREDUCIBILITY_MAX", 3, 0),
        cache_dir=config.get("NODAL_KSTAB_CACHE_DIR", os.getenv("NODAL_KSTAB_CACHE_DIR")) or None,
        jobs=_int_setting(config, "NODAL_KSTAB_JOBS", 1, 1),
    )
