from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Report:
    """Command output before rendering.

    data is the JSON document; columns and rows, when present, are the
    table that csv and text renderings print.
    """
    command: str
    data: Dict[str, Any] = field(default_factory=dict)
    columns: Optional[List[str]] = None
    rows: List[List[Any]] = field(default_factory=list)

    @property
    def has_table(self) -> bool:
        return self.columns is not None

    @classmethod
    def error(cls, command: str, payload: dict) -> 'Report':
        return cls(command=command, data=dict(payload))

    def to_dict(self) -> dict:
        return dict(self.data)
