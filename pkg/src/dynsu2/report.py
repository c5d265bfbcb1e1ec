"""Verification records and suite reports."""

from __future__ import annotations

import json
import time

from .scalars import Sampler, SamplingExhausted, PoleAtPoint, Scalar

SCHEMA = 1


def differences(lhs, rhs):
    """Scalars whose simultaneous vanishing means lhs == rhs."""
    if isinstance(lhs, (int, Scalar)) or type(lhs).__name__ in ("Fraction", "mpq"):
        if hasattr(rhs, "difference"):
            return rhs.difference(lhs)
        return [lhs - rhs]
    return lhs.difference(rhs)


class Checker:
    """Collects pass/fail records for one suite run."""

    def __init__(self, suite, seed=0, points=20):
        self.suite = suite
        self.seed = seed
        self.points = points
        self.sampler = Sampler(seed, points)
        self.records = []
        self.started = time.perf_counter()

    def _record(self, ident, anchor, indices, status, failure=None, npoints=None):
        rec = {
            "id": ident,
            "anchor": anchor,
            "indices": list(indices),
            "points": self.points if npoints is None else npoints,
            "status": status,
        }
        if failure is not None:
            rec["failure"] = failure
        self.records.append(rec)
        return status == "pass"

    def zero(self, ident, anchor, indices, exprs):
        """Record whether every Scalar in exprs vanishes identically."""
        if isinstance(exprs, Scalar):
            exprs = [exprs]
        exprs = list(exprs)
        key = f"{ident}|{indices}"
        try:
            bad = self.sampler.check_zero(exprs, key)
        except SamplingExhausted:
            return self._record(ident, anchor, indices, "fail",
                                {"error": "SamplingExhausted", "seed": self.seed})
        if bad is None:
            return self._record(ident, anchor, indices, "pass")
        pt, i = bad
        names = sorted(exprs[i].free)
        try:
            desc = pt.base.describe(names) if hasattr(pt, "base") else {}
        except PoleAtPoint:
            desc = {}
        return self._record(ident, anchor, indices, "fail",
                            {"seed": self.seed, "point": desc, "component": i})

    def equal(self, ident, anchor, indices, lhs, rhs):
        return self.zero(ident, anchor, indices, differences(lhs, rhs))

    def truth(self, ident, anchor, indices, ok, detail=None):
        failure = None if ok else {"seed": self.seed, "detail": detail}
        return self._record(ident, anchor, indices, "pass" if ok else "fail", failure, 1)

    def skip(self, ident, anchor, indices, reason):
        return self._record(ident, anchor, indices, "skipped", {"reason": reason}, 0)

    @property
    def ok(self):
        return all(r["status"] != "fail" for r in self.records)

    def failures(self):
        return [r for r in self.records if r["status"] == "fail"]

    def report(self, config=None):
        records = sorted(self.records, key=lambda r: (r["id"], json.dumps(r["indices"])))
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "seed": self.seed,
            "points": self.points,
            "config": config or {},
            "status": "pass" if self.ok else "fail",
            "counts": {
                "pass": sum(r["status"] == "pass" for r in records),
                "fail": sum(r["status"] == "fail" for r in records),
                "skipped": sum(r["status"] == "skipped" for r in records),
            },
            "records": records,
        }

    def elapsed(self):
        return time.perf_counter() - self.started

    def summary(self):
        f = self.failures()
        head = f"{self.suite}: {len(self.records) - len(f)}/{len(self.records)} pass"
        if f:
            head += f"; first failure {f[0]['id']} {f[0]['indices']}"
        return head
