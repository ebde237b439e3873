"""Structured verification reports.

Every check produces a CheckRecord.  Failures are data: a failing record
carries the first counterexample found in lexicographic enumeration order.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Sequence

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

# Full enumeration is used while the quantifier space stays below this size.
EXHAUSTIVE_LIMIT = 200_000


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    status: str
    witness: dict | None = None
    detail: str = ""
    checked: int = 0
    mode: str = "exhaustive"
    seed: int | None = None
    elapsed: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("elapsed")
        return d


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)
    seed: int | None = None
    meta: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def all_passed(self) -> bool:
        """True when nothing failed and nothing was skipped."""
        return all(r.status == PASS for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def get(self, check_id: str) -> CheckRecord:
        for r in self.records:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)

    def ids(self) -> list[str]:
        return [r.check_id for r in self.records]

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for r in other.records:
            if prefix:
                r = CheckRecord(**{**asdict(r), "check_id": prefix + r.check_id})
            self.records.append(r)
        return self

    def passed(self, check_id: str) -> bool:
        return self.get(check_id).status == PASS

    def to_dict(self, timing: bool = False) -> dict:
        counts = {s: sum(r.status == s for r in self.records) for s in (PASS, FAIL, SKIP)}
        return {
            "seed": self.seed,
            "meta": self.meta,
            "summary": {"ok": self.ok, "total": len(self.records), **counts},
            "records": [r.to_dict(timing) for r in self.records],
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        recs = [CheckRecord(**r) for r in d.get("records", [])]
        return cls(records=recs, seed=d.get("seed"), meta=d.get("meta", {}))

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            line = f"[{r.status.upper():4}] {r.check_id}  ({r.anchor})"
            if r.checked:
                line += f"  {r.checked} {r.mode}"
            if r.elapsed is not None:
                line += f"  {r.elapsed:.3f}s"
            lines.append(line)
            if r.detail:
                lines.append(f"       {r.detail}")
            if r.witness is not None and r.status == FAIL:
                lines.append(f"       witness: {json.dumps(r.witness, sort_keys=True)}")
        s = self.to_dict()["summary"]
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skip']} skipped")
        return "\n".join(lines) + "\n"


def quantifier(
    sizes: Sequence[int], seed: int = 0, limit: int = EXHAUSTIVE_LIMIT, min_samples: int = 0
) -> tuple[list[tuple[int, ...]], str]:
    """Index tuples for a quantified statement over ranges of the given sizes.

    Below ``limit`` the whole product is enumerated.  Above it a seeded sample
    of ``max(min_samples, limit // 10)`` tuples is drawn and sorted so that the
    reported witness is still the lexicographically first failure.
    """
    total = 1
    for s in sizes:
        total *= s
    if total <= limit:
        return list(itertools.product(*[range(s) for s in sizes])), "exhaustive"
    rng = random.Random(seed)
    n = max(min_samples, limit // 10)
    picks = {tuple(rng.randrange(s) for s in sizes) for _ in range(n)}
    return sorted(picks), "sampled"


def run_check(
    report: Report,
    check_id: str,
    anchor: str,
    cases: Iterable[Any],
    predicate: Callable[[Any], dict | None],
    mode: str = "exhaustive",
    seed: int | None = None,
) -> CheckRecord:
    """Evaluate ``predicate`` on every case; a returned dict is a counterexample."""
    start = time.perf_counter()
    n = 0
    bad = 0
    witness = None
    for case in cases:
        n += 1
        w = predicate(case)
        if w is not None:
            bad += 1
            if witness is None:
                witness = w
    rec = CheckRecord(
        check_id=check_id,
        anchor=anchor,
        status=FAIL if bad else PASS,
        witness=witness,
        detail=f"{bad} of {n} cases failed" if bad else "",
        checked=n,
        mode=mode,
        seed=seed if mode == "sampled" else None,
        elapsed=time.perf_counter() - start,
    )
    return report.add(rec)


def skip(report: Report, check_id: str, anchor: str, reason: str) -> CheckRecord:
    return report.add(CheckRecord(check_id, anchor, SKIP, detail=reason))
