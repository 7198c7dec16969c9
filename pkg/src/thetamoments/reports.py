"""Report records and deterministic CSV/JSON serialization.

CSV files are byte-identical across runs and worker counts: floats are
formatted with repr (shortest round-trip form), rows are emitted in a fixed
order, and the header comments carry the config snapshot but no timestamp.
JSON output wraps the payload in an envelope (tool version, command line,
config snapshot, timestamp); the payload itself round-trips losslessly since
repr-formatted floats parse back to the same binary value.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Iterable

TOOL_NAME = "thetamoments"
TOOL_VERSION = "0.1.0"

# the documented stable column set for all moment-style reports
MOMENT_COLUMNS = ("q", "k", "parity", "raw", "normalization", "ratio", "eps", "family_size")


@dataclass(frozen=True)
class MomentReport:
    """One moment value with its normalization.

    `family` is the character family summed over: "even" / "odd" for theta
    moments (even-primitive-nontrivial / odd-primitive), "star" /
    "nonquadratic" for L-moments.  `family_size` = 0 is the empty-family flag.
    """

    q: int
    k: int
    family: str
    raw: float
    normalization: float
    ratio: float
    eps: float
    family_size: int

    @property
    def empty_family(self) -> bool:
        return self.family_size == 0

    def row(self) -> tuple:
        return (self.q, self.k, self.family, self.raw, self.normalization,
                self.ratio, self.eps, self.family_size)


def fmt(x) -> str:
    """Deterministic scalar formatting: repr for floats (round-trips exactly)."""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def csv_text(columns: Iterable[str], rows: Iterable[tuple], meta: dict) -> str:
    """Render a CSV with `# key=value` comment headers (sorted), no timestamp."""
    lines = [f"# tool={TOOL_NAME} {TOOL_VERSION}"]
    for key in sorted(meta):
        lines.append(f"# {key}={fmt(meta[key])}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def moment_csv(reports: Iterable[MomentReport], meta: dict) -> str:
    return csv_text(MOMENT_COLUMNS, (r.row() for r in reports), meta)


@dataclass(frozen=True)
class ReportEnvelope:
    """JSON wrapper: tool identity + command + config snapshot + payload."""

    tool: str
    version: str
    command: list[str]
    config: dict
    timestamp: str
    payload: object = field(default=None)

    def to_json(self) -> str:
        def default(o):
            if hasattr(o, "__dataclass_fields__"):
                return asdict(o)
            if hasattr(o, "tolist"):
                return o.tolist()
            if isinstance(o, complex):
                return {"re": o.real, "im": o.imag}
            raise TypeError(f"not JSON-serializable: {type(o)}")

        return json.dumps({
            "tool": self.tool,
            "version": self.version,
            "command": self.command,
            "config": self.config,
            "timestamp": self.timestamp,
            "payload": self.payload,
        }, default=default, indent=2, sort_keys=False) + "\n"


def make_envelope(command: list[str], config: dict, payload) -> ReportEnvelope:
    return ReportEnvelope(
        tool=TOOL_NAME,
        version=TOOL_VERSION,
        command=list(command),
        config=dict(config),
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        payload=payload,
    )
