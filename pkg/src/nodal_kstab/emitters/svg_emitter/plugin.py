import io
from typing import Any, Dict, List, Tuple

import matplotlib
from matplotlib.figure import Figure

from nodal_kstab.exactnum.text import parse_number
from nodal_kstab.exceptions import EmitterError

from ..base import EmitterPlugin

# 72 points per inch: an 800 x 500 viewBox.
FIGSIZE = (800 / 72, 500 / 72)
SVG_PARAMS = {"svg.hashsalt": "nodal-kstab", "svg.fonttype": "none"}


class Plugin(EmitterPlugin):
    """S(t) as one line, breakpoints as red markers with ids ``breakpoint-<i>``."""

    plugin_id = "svg"

    def supports(self, payload: Dict[str, Any]) -> bool:
        return payload.get("kind") == "scan"

    def render(self, payload: Dict[str, Any]) -> str:
        points: List[Tuple[Any, Any]] = [
            (parse_number(r["t"]), parse_number(r["S"])) for r in payload["rows"] if r["S"] is not None
        ]
        if not points:
            raise EmitterError("No evaluated rows to plot")
        values = dict(points)

        fig = Figure(figsize=FIGSIZE)
        ax = fig.add_subplot()
        ax.plot([float(t) for t, _ in points], [float(s) for _, s in points], color="black", gid="S-curve")
        for i, b in enumerate(payload["breakpoints"]):
            lo, hi = parse_number(b["lo"]), parse_number(b["hi"])
            mid = (lo + hi) / 2
            t = mid if mid in values else lo
            ax.plot([float(t)], [float(values[t])], marker="o", linestyle="none", color="red", gid=f"breakpoint-{i}")
        ax.set_xlabel("t")
        ax.set_ylabel("S(v_t)")
        ax.grid(True, linestyle=":")

        buffer = io.StringIO()
        with matplotlib.rc_context(SVG_PARAMS):
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        return buffer.getvalue()
