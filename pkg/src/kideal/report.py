"""Check records and deterministic report rendering."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

PASS = "PASS"
FAIL = "FAIL"
WITNESS = "WITNESS"


@dataclass(frozen=True, order=True)
class CheckRecord:
    check_id: str
    status: str
    payload: str = ""


def emit_report(records: Iterable[CheckRecord], fmt: str = "text") -> str:
    """Records sorted by (check_id, status, payload), then a summary line."""
    recs = sorted(records)
    sep = "\t" if fmt == "tsv" else " "
    lines = []
    for r in recs:
        fields = [r.check_id, r.status] + ([r.payload] if r.payload else [])
        lines.append(sep.join(fields))
    counts = {s: sum(1 for r in recs if r.status == s) for s in (PASS, FAIL, WITNESS)}
    summary = ["TOTAL", str(len(recs)), "PASS", str(counts[PASS]),
               "FAIL", str(counts[FAIL]), "WITNESS", str(counts[WITNESS])]
    lines.append(sep.join(summary))
    return "\n".join(lines) + "\n"


def exit_code(records: Iterable[CheckRecord]) -> int:
    return 1 if any(r.status == FAIL for r in records) else 0
