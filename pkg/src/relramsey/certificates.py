"""Certificates: replayable verdicts serialized as sorted JSON text."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
FAILS = "fails"
EXHAUSTED = "exhausted-bound"
VERDICTS = (HOLDS, FAILS, EXHAUSTED)


@dataclass(frozen=True)
class Coloring:
    """A colouring of an ordered domain of copies (point sets) or embeddings (maps)."""

    domain_kind: str
    domain: tuple[tuple[int, ...], ...]
    k: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != len(self.domain):
            raise ValueError("assignment must be total on the domain")
        if any(not (0 <= c < self.k) for c in self.assignment):
            raise ValueError("colour out of range")

    def color_of(self, obj) -> int:
        return self.assignment[self.domain.index(tuple(obj))]

    def as_dict(self) -> dict:
        return {
            "type": "BadColoring",
            "domain_kind": self.domain_kind,
            "k": self.k,
            "coloring": [[list(o), c] for o, c in zip(self.domain, self.assignment)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Coloring":
        pairs = d["coloring"]
        return cls(
            d["domain_kind"],
            tuple(tuple(o) for o, _ in pairs),
            int(d["k"]),
            tuple(int(c) for _, c in pairs),
        )


@dataclass
class Certificate:
    check: str
    property: str
    verdict: str
    instance: dict
    detail: dict
    replay: dict = field(default_factory=dict)
    report: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == FAILS

    @property
    def exhausted(self) -> bool:
        return self.verdict == EXHAUSTED

    @property
    def coloring(self) -> Coloring | None:
        if self.detail.get("type") == "BadColoring":
            return Coloring.from_dict(self.detail)
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "property": self.property,
            "verdict": self.verdict,
            "instance": self.instance,
            "detail": self.detail,
            "replay": self.replay,
            "report": self.report,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            d["check"], d.get("property", ""), d["verdict"], d["instance"], d["detail"],
            d.get("replay", {}), d.get("report", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path) -> "Certificate":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())
