"""Plain-text / JSON reports with deterministic layout."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact_arith import format_rational

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if value is None:
        return "-"
    return str(value)


@dataclass
class Section:
    title: str
    items: list[tuple[str, Any]] = field(default_factory=list)
    header: tuple[str, ...] = ()
    rows: list[tuple[Any, ...]] = field(default_factory=list)
    status: str | None = None  # "PASS" / "FAIL" / None
    notes: list[str] = field(default_factory=list)
    diffs: list[str] = field(default_factory=list)

    def add(self, key: str, value: Any) -> Section:
        self.items.append((key, value))
        return self

    def check(self, ok: bool, diff: str | None = None) -> bool:
        """Fold one comparison into the section status."""
        if not ok and diff:
            self.diffs.append(diff)
        if not ok:
            self.status = "FAIL"
        elif self.status is None:
            self.status = "PASS"
        return ok

    def render(self) -> list[str]:
        title = f"== {self.title}"
        if self.status:
            title += f" [{self.status}]"
        out = [title]
        if self.header or self.rows:
            table = [tuple(self.header)] if self.header else []
            table += [tuple(cell(v) for v in row) for row in self.rows]
            widths = [max(len(r[i]) for r in table if i < len(r)) for i in range(max(map(len, table)))]
            for r in table:
                out.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(r)).rstrip())
        for key, value in self.items:
            out.append(f"{key}: {cell(value)}")
        out.extend(f"mismatch: {d}" for d in self.diffs)
        out.extend(f"note: {n}" for n in self.notes)
        return out

    def to_json(self) -> dict:
        data: dict[str, Any] = {"title": self.title}
        if self.status:
            data["status"] = self.status
        if self.items:
            data["items"] = {k: cell(v) for k, v in self.items}
        if self.header or self.rows:
            data["header"] = list(self.header)
            data["rows"] = [[cell(v) for v in row] for row in self.rows]
        if self.diffs:
            data["mismatches"] = list(self.diffs)
        if self.notes:
            data["notes"] = list(self.notes)
        return data


@dataclass
class Report:
    sections: list[Section] = field(default_factory=list)
    exit_status: int = EXIT_OK

    def section(self, title: str) -> Section:
        s = Section(title)
        self.sections.append(s)
        return s

    @property
    def failed(self) -> bool:
        return any(s.status == "FAIL" for s in self.sections)

    def finalize(self) -> Report:
        if self.failed and self.exit_status == EXIT_OK:
            self.exit_status = EXIT_CHECK_FAILED
        return self

    def render_text(self) -> str:
        blocks = ["\n".join(s.render()) for s in self.sections]
        return "\n\n".join(blocks) + "\n"

    def render_json(self) -> str:
        payload = {"exit_status": self.exit_status, "sections": [s.to_json() for s in self.sections]}
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
