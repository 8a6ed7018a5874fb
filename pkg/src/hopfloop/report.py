"""Per-law verification reports with concrete basis-index witnesses.

Checkers never short-circuit: every law is evaluated and recorded so that
reports for two structures can be diffed law by law.  A failing entry always
carries a witness (the basis indices plus both evaluated sides) that
reproduces the discrepancy when re-evaluated.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional


@dataclass(frozen=True)
class Witness:
    indices: tuple
    lhs: tuple  # sorted ((index tuple), scalar string) pairs
    rhs: tuple

    def to_dict(self):
        return {
            "indices": list(self.indices),
            "lhs": [[list(k), s] for k, s in self.lhs],
            "rhs": [[list(k), s] for k, s in self.rhs],
        }


@dataclass(frozen=True)
class LawResult:
    law_id: str
    passed: bool
    witness: Optional[Witness] = None
    informational: bool = False

    def to_dict(self):
        d = {"law": self.law_id, "pass": self.passed}
        if self.informational:
            d["informational"] = True
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


@dataclass
class VerificationReport:
    entries: list = dc_field(default_factory=list)

    def add(self, law_id, passed, witness=None, informational=False):
        self.entries.append(LawResult(law_id, passed, witness, informational))

    def extend(self, other):
        self.entries.extend(other.entries)

    @property
    def ok(self):
        """True when every non-informational law passed."""
        return all(e.passed for e in self.entries if not e.informational)

    def law(self, law_id):
        for e in self.entries:
            if e.law_id == law_id:
                return e
        raise KeyError(law_id)

    def failing(self):
        return [e for e in self.entries if not e.passed and not e.informational]

    def to_dict(self):
        return {
            "verdict": "pass" if self.ok else "fail",
            "laws": [e.to_dict() for e in self.entries],
        }

    def __repr__(self):
        bad = [e.law_id for e in self.entries if not e.passed]
        state = "ok" if self.ok else f"FAIL {bad}"
        return f"VerificationReport({len(self.entries)} laws, {state})"


def witness_side(field, sparse):
    """Freeze a sparse element into a canonical witness side."""
    return tuple(sorted(
        (tuple(k), field.format(c)) for k, c in sparse.items()))


class LawAccumulator:
    """Collects instance results for one law id and emits a single entry."""

    def __init__(self, report, field, law_id, informational=False):
        self.report = report
        self.field = field
        self.law_id = law_id
        self.informational = informational
        self.failed = False
        self.witness = None

    def check(self, indices, lhs, rhs):
        if lhs != rhs:
            if not self.failed:
                self.witness = Witness(
                    indices,
                    witness_side(self.field, lhs),
                    witness_side(self.field, rhs))
            self.failed = True

    def finish(self):
        self.report.add(self.law_id, not self.failed, self.witness,
                        self.informational)
        return not self.failed
