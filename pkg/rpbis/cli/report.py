import json
from dataclasses import asdict, dataclass, field
from typing import Dict, Optional

from rpbis.exceptions import RpbisError

SCHEMA_VERSION = 1

BISIMILAR = "bisimilar"
DISTINGUISHED = "distinguished"


@dataclass(frozen=True)
class Report:
    """
    Result of ``rpbis bisim`` and ``rpbis distinguish``.

    Parameters
    ----------
    verdict : `str`
        ``"bisimilar"`` or ``"distinguished"``.

    formula : `str`, (optional)
        Canonical text of the distinguishing formula; present iff the
        verdict is ``"distinguished"`` and a logic was requested.

    logic : `str`, (optional)
        Name of the logic of `formula`.

    depth : `int`, (optional)
        Modal depth of `formula`, 0 without one.

    minimal_level : `int`, (optional)
        Least pruning level at which the states differ.

    satisfied_by : `int`, (optional)
        0 when the first state satisfies `formula`, 1 for the second.

    timings_ms : `dict`, (optional)
        Wall clock milliseconds per phase.
    """
    verdict: str
    formula: Optional[str] = None
    logic: Optional[str] = None
    depth: int = 0
    minimal_level: Optional[int] = None
    satisfied_by: Optional[int] = None
    timings_ms: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (BISIMILAR, DISTINGUISHED):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.formula is not None and self.verdict != DISTINGUISHED:
            raise ValueError("a bisimilar verdict carries no formula")

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == BISIMILAR else 1

    def to_json(self, indent: int = None) -> str:
        payload = {"schema": SCHEMA_VERSION}
        payload.update(asdict(self))
        return json.dumps(payload, indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        payload = json.loads(text)
        schema = payload.pop("schema", None)
        if schema != SCHEMA_VERSION:
            raise RpbisError(f"unsupported report schema {schema!r}")
        return cls(**payload)
