"""Verdict records shared by the verification suites and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .superalg import Element, to_text

VERDICTS = ("pass", "fail", "unknown")


@dataclass
class Report:
    claim_id: str
    anchor: str
    indices: Any = None
    verdict: str = "pass"
    witness: tuple | None = None
    note: str = ""
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        d = {"claim_id": self.claim_id, "anchor": self.anchor,
             "indices": _plain(self.indices), "verdict": self.verdict}
        if self.witness is not None:
            d["witness"] = [_plain(x) for x in self.witness]
        if self.note:
            d["note"] = self.note
        if self.data:
            d["data"] = _plain(self.data)
        return d


def _plain(x):
    if isinstance(x, Element):
        return to_text(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def check(claim_id, anchor, indices, lhs: Element, rhs: Element, system, note="") -> Report:
    """Report comparing two elements by normal form in ``system``."""
    verdict = system.decide_equal(lhs, rhs)
    if verdict == "equal":
        return Report(claim_id, anchor, indices, "pass", note=note)
    if verdict == "distinct":
        return Report(claim_id, anchor, indices, "fail",
                      (system.normal_form(lhs), system.normal_form(rhs)), note=note)
    return Report(claim_id, anchor, indices, "unknown",
                  (system.normal_form(lhs), system.normal_form(rhs)), note=note or verdict)


def all_pass(reports) -> bool:
    return all(r.verdict == "pass" for r in reports)


def summary(reports) -> dict:
    out = {v: 0 for v in VERDICTS}
    for r in reports:
        out[r.verdict] += 1
    return out


def dumps(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True)
