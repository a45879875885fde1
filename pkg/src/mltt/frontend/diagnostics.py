from __future__ import annotations

import json
from dataclasses import dataclass

EXIT_CODES = {"type": 1, "parse": 2, "fuel": 3, "internal": 4}


@dataclass(frozen=True)
class Span:
    start: int
    end: int

    def __add__(self, other: Span) -> Span:
        return Span(min(self.start, other.start), max(self.end, other.end))

    def shift(self, offset: int) -> Span:
        return Span(self.start + offset, self.end + offset)


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # parse | type | fuel | internal
    message: str
    span: Span
    severity: str = "error"

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.kind]

    def to_json(self) -> str:
        return json.dumps({
            "kind": self.kind,
            "message": self.message,
            "span": {"start": self.span.start, "end": self.span.end},
            "exit": self.exit_code,
        })

    def render(self, source: str = "", origin: str = "<input>") -> str:
        line = source.count("\n", 0, self.span.start) + 1
        line_start = source.rfind("\n", 0, self.span.start) + 1
        col = self.span.start - line_start + 1
        out = f"{origin}:{line}:{col}: {self.severity}[{self.kind}]: {self.message}"
        if source:
            line_end = source.find("\n", line_start)
            text = source[line_start:] if line_end < 0 else source[line_start:line_end]
            width = max(1, min(self.span.end, line_start + len(text)) - self.span.start)
            out += f"\n  {text}\n  {' ' * (col - 1)}{'^' * width}"
        return out


class FrontendError(Exception):
    def __init__(self, diagnostic: Diagnostic):
        super().__init__(diagnostic.message)
        self.diagnostic = diagnostic
