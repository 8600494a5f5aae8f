from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, Union

from nodal_kstab.exceptions import EmitterError

PathLike = Union[str, Path]


class EmitterPlugin(ABC):
    plugin_id: str
    priority: int = 0

    @abstractmethod
    def supports(self, payload: Dict[str, Any]) -> bool: ...

    @abstractmethod
    def render(self, payload: Dict[str, Any]) -> str: ...

    def emit(self, payload: Dict[str, Any], path: Optional[PathLike] = None) -> str:
        text = self.render(payload)
        if path is not None:
            try:
                with Path(path).open("w", encoding="utf-8", newline="") as f:
                    f.write(text)
            except OSError as exc:
                raise EmitterError(f"Could not write {self.plugin_id} report: {exc}", path=str(path))
        return text
