from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Report:
    """Outcome of a verification; ``witness`` locates the first failure."""

    ok: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self):
        return self.ok
