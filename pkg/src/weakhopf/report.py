"""Verification reports: one verdict per identity, with a concrete witness
for every failure."""

from __future__ import annotations

import json


PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


class Item:
    def __init__(self, ident, statement, verdict, witness=None):
        self.id = ident
        self.statement = statement
        self.verdict = verdict
        self.witness = witness  # (row label, col label, lhs scalar, rhs scalar)

    def to_json(self):
        out = {"id": self.id, "statement": self.statement, "verdict": self.verdict}
        if self.witness is not None:
            row, col, lhs, rhs = self.witness
            out["witness"] = {"row": row, "col": col, "lhs": lhs, "rhs": rhs}
        return out


class Report:
    """A named suite of verdicts.  `elapsed_ms` is shown in the human
    summary only; the JSON serialization is deterministic byte-for-byte,
    so volatile timing is excluded from it."""

    def __init__(self, suite):
        self.suite = suite
        self.items = []
        self.elapsed_ms = 0.0

    def add(self, ident, statement, verdict, witness=None):
        self.items.append(Item(ident, statement, verdict, witness))

    def record(self, ident, statement, lhs_map, rhs_map):
        "Compare two maps and record pass/fail with a first-difference witness."
        diff = lhs_map.first_difference(rhs_map)
        if diff is None:
            self.add(ident, statement, PASS)
            return True
        self.add(ident, statement, FAIL, witness=diff)
        return False

    def ok(self):
        return all(item.verdict != FAIL for item in self.items)

    def failures(self):
        return [item for item in self.items if item.verdict == FAIL]

    def to_json(self):
        return {
            "schema_version": 1,
            "suite": self.suite,
            "items": [item.to_json() for item in sorted(self.items, key=lambda i: i.id)],
        }

    def to_json_str(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @staticmethod
    def from_json(data):
        rep = Report(data["suite"])
        for item in data["items"]:
            wit = item.get("witness")
            witness = (wit["row"], wit["col"], wit["lhs"], wit["rhs"]) if wit else None
            rep.add(item["id"], item["statement"], item["verdict"], witness)
        return rep

    def summary_lines(self):
        lines = ["suite %s: %s (%d items, %.1f ms)"
                 % (self.suite, "PASS" if self.ok() else "FAIL",
                    len(self.items), self.elapsed_ms)]
        for item in sorted(self.items, key=lambda i: i.id):
            mark = {"pass": "ok  ", "fail": "FAIL", "skipped": "skip"}[item.verdict]
            line = "  [%s] %-14s %s" % (mark, item.id, item.statement)
            if item.witness:
                row, col, lhs, rhs = item.witness
                line += "   at (%s, %s): %s != %s" % (row, col, lhs, rhs)
            lines.append(line)
        return lines
