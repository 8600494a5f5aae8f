from __future__ import annotations

from importlib import import_module
from importlib.metadata import EntryPoint, entry_points
from typing import Any, Dict, List, Optional

from nodal_kstab.emitters.base import EmitterPlugin, PathLike
from nodal_kstab.exceptions import EmitterError
from nodal_kstab.utils.logger import get_logger
from nodal_kstab.validators.schema_validator import validate_report

logger = get_logger(__name__)

_GROUP = "nodal_kstab.emitters"
_BUILTIN = {
    "csv": "nodal_kstab.emitters.csv_emitter",
    "json": "nodal_kstab.emitters.json_emitter",
    "svg": "nodal_kstab.emitters.svg_emitter",
}
_PLUGIN_CACHE: Optional[List[EmitterPlugin]] = None


def _load_plugins() -> List[EmitterPlugin]:
    """
    Discover & instantiate every emitter registered under the entry point group,
    falling back to the built-in modules when the distribution is not installed.
    Cached for subsequent calls.
    """
    global _PLUGIN_CACHE
    if _PLUGIN_CACHE is not None:
        return _PLUGIN_CACHE

    eps = entry_points()
    selected: List[EntryPoint] = []
    try:
        selected = list(eps.select(group=_GROUP))  # type: ignore[attr-defined]
    except AttributeError:
        selected = list(eps.get(_GROUP, []))  # type: ignore[attr-defined]

    classes = []
    for ep in selected:
        try:
            classes.append(ep.load())
        except Exception as exc:
            logger.warning(f"⚠️ Skipping emitter plugin {ep.name}: {exc}")
    if not classes:
        classes = [import_module(module).Plugin for module in _BUILTIN.values()]

    plugins: List[EmitterPlugin] = []
    for plugin_cls in classes:
        plugin = plugin_cls()
        if isinstance(plugin, EmitterPlugin):
            plugins.append(plugin)

    _PLUGIN_CACHE = plugins
    return plugins


def list_plugins() -> List[str]:
    """Discovered emitter ids (for the CLI)."""
    return [p.plugin_id for p in _load_plugins()]


def dispatch_emit(payload: Dict[str, Any], fmt: str, path: Optional[PathLike] = None) -> str:
    """Validate ``payload``, render it with the emitter ``fmt`` and optionally write it to ``path``."""
    validate_report(payload)
    candidates = [p for p in _load_plugins() if p.plugin_id == fmt]
    if not candidates:
        raise EmitterError(f"No emitter registered for format '{fmt}' (available: {', '.join(list_plugins())})")
    candidates.sort(key=lambda p: p.priority, reverse=True)
    best = candidates[0]
    if not best.supports(payload):
        raise EmitterError(f"Emitter '{fmt}' cannot render a '{payload.get('kind')}' report")
    text = best.emit(payload, path)
    if path is not None:
        logger.info(f"✅ Wrote {fmt} report | path={path}")
    return text
