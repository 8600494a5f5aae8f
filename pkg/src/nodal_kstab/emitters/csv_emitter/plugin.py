import csv
import io
from typing import Any, Dict, List

from ..base import EmitterPlugin

# kind -> (payload key holding the rows, columns)
TABLES = {
    "scan": ("rows", ["t", "A", "S", "ratio", "flags", "S_decimal"]),
    "delta": ("rows", ["t", "A", "S", "ratio", "flags", "S_decimal"]),
    "sm_table": ("rows", ["a", "b", "t", "m", "N_m", "S_m", "T_m"]),
    "curve": ("coefficients", ["e0", "e1", "e2", "coefficient"]),
}


class Plugin(EmitterPlugin):
    plugin_id = "csv"

    def supports(self, payload: Dict[str, Any]) -> bool:
        return payload.get("kind") in TABLES

    def render(self, payload: Dict[str, Any]) -> str:
        key, columns = TABLES[payload["kind"]]
        rows: List[Dict[str, Any]] = payload[key]
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if row.get(c) is None else row[c] for c in columns])
        return buffer.getvalue()
