"""Result records emitted by the CLI: one JSON object per line, or CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .codes import CodeSpec, ContainmentEvidence, min_lee_distance, span_basis, is_dual_containing
from .quantum import css_params

CSV_FIELDS = [
    "n",
    "g1",
    "a1",
    "g2",
    "code_size_log2",
    "lee_distance",
    "lee_exact",
    "dual_containing",
    "methods_agree",
    "quantum_length",
    "quantum_dimension",
    "quantum_distance",
]


@dataclass(frozen=True)
class ResultLine:
    n: int
    g1: str
    a1: str
    g2: str
    code_size_log2: int
    lee_distance: int | None
    lee_exact: bool
    dual_containing: bool
    methods_agree: bool
    methods: tuple[tuple[str, bool], ...] = ()
    quantum: tuple[int, int, int] | None = None

    def __post_init__(self):
        if (self.quantum is not None) != self.dual_containing:
            raise ValueError("quantum parameters must be present exactly when the code is dual-containing")

    @classmethod
    def build(cls, s: CodeSpec, budget: int, evidence: ContainmentEvidence | None = None) -> ResultLine:
        code = span_basis(s)
        if evidence is None:
            evidence = is_dual_containing(s, code)
        if len(code):
            dist = min_lee_distance(code, budget)
            value, exact = dist.value, dist.exact
        else:
            value, exact = None, True
        quantum = None
        if evidence.verdict:
            quantum = css_params(s, budget, code=code, evidence=evidence).as_tuple()
        return cls(
            n=s.n,
            g1=str(s.g1),
            a1=str(s.a1),
            g2=str(s.g2),
            code_size_log2=len(code),
            lee_distance=value,
            lee_exact=exact,
            dual_containing=evidence.verdict,
            methods_agree=evidence.methods_agree,
            methods=tuple(evidence.as_dict().items()),
            quantum=quantum,
        )

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "g1": self.g1,
            "a1": self.a1,
            "g2": self.g2,
            "code_size_log2": self.code_size_log2,
            "lee_distance": {"value": self.lee_distance, "exact": self.lee_exact},
            "dual_containing": {
                "verdict": self.dual_containing,
                "methods_agree": self.methods_agree,
                "methods": dict(self.methods),
            },
        }
        if self.quantum is not None:
            length, dim, dist = self.quantum
            out["quantum"] = {"length": length, "dimension": dim, "distance": dist}
        return out

    @classmethod
    def from_dict(cls, d: dict) -> ResultLine:
        q = d.get("quantum")
        dc = d["dual_containing"]
        return cls(
            n=int(d["n"]),
            g1=d["g1"],
            a1=d["a1"],
            g2=d["g2"],
            code_size_log2=int(d["code_size_log2"]),
            lee_distance=d["lee_distance"]["value"],
            lee_exact=bool(d["lee_distance"]["exact"]),
            dual_containing=bool(dc["verdict"]),
            methods_agree=bool(dc["methods_agree"]),
            methods=tuple((k, bool(v)) for k, v in dc.get("methods", {}).items()),
            quantum=None if q is None else (q["length"], q["dimension"], q["distance"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> ResultLine:
        return cls.from_dict(json.loads(line))

    def csv_row(self) -> list:
        q = self.quantum or ("", "", "")
        return [
            self.n,
            self.g1,
            self.a1,
            self.g2,
            self.code_size_log2,
            "" if self.lee_distance is None else self.lee_distance,
            self.lee_exact,
            self.dual_containing,
            self.methods_agree,
            *q,
        ]


def to_csv(lines) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for line in lines:
        w.writerow(line.csv_row())
    return buf.getvalue()


def to_jsonl(lines) -> str:
    return "".join(line.to_json() + "\n" for line in lines)
