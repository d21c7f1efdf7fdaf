"""Verification records and their text / JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

STATUSES = ("pass", "fail", "inconclusive")


@dataclass
class Certificate:
    claim: str
    params: Dict[str, Any]
    status: str
    witness: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> Dict[str, Any]:
        return {"claim": self.claim, "params": self.params,
                "status": self.status, "witness": self.witness}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        return cls(data["claim"], data["params"], data["status"], data.get("witness", {}))


def _fmt_params(params: Dict[str, Any]) -> str:
    return " ".join(f"{k}={params[k]}" for k in params if not isinstance(params[k], (list, dict)))


def emit_text(certs: Iterable[Certificate]) -> str:
    lines = []
    for c in certs:
        tag = {"pass": "OK  ", "fail": "FAIL", "inconclusive": "INC "}[c.status]
        line = f"{tag} {c.claim}"
        params = _fmt_params(c.params)
        if params:
            line += f"  [{params}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def emit_json(certs: Iterable[Certificate]) -> str:
    doc = {"certificates": [c.to_dict() for c in certs]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def emit(certs: Iterable[Certificate], fmt: str = "text") -> str:
    certs = list(certs)
    if fmt == "text":
        return emit_text(certs)
    if fmt in ("json", "json-like", "structured"):
        return emit_json(certs)
    raise ValueError(f"unknown output format {fmt!r}")


def load_json(text: str) -> List[Certificate]:
    return [Certificate.from_dict(d) for d in json.loads(text)["certificates"]]
