import json
from typing import Any, Dict

from ..base import EmitterPlugin


class Plugin(EmitterPlugin):
    plugin_id = "json"

    def supports(self, payload: Dict[str, Any]) -> bool:
        return True

    def render(self, payload: Dict[str, Any]) -> str:
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
