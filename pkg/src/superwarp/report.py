"""Deterministic, line-oriented verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    args: str
    residual: str
    passed: bool


@dataclass
class VerificationReport:
    title: str
    version: str = ""
    spec_id: str = ""
    seed: int = 0
    records: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, check_id, anchor, args, residual_obj=None, passed=None,
            residual_str=None):
        """Record one check.  When a residual object is given, pass iff it is
        exactly zero and the residual string is its canonical form."""
        if residual_obj is not None:
            canon = residual_obj.canonical()
            if passed is None:
                passed = canon.is_zero()
            residual_str = "0" if passed else repr(canon)
        self.records.append(CheckRecord(check_id, anchor, str(args),
                                        residual_str or "0", bool(passed)))

    def note(self, text):
        self.notes.append(text)

    def merge(self, other):
        self.records.extend(other.records)
        for n in other.notes:
            if n not in self.notes:
                self.notes.append(n)

    @property
    def n_pass(self):
        return sum(1 for r in self.records if r.passed)

    @property
    def n_fail(self):
        return len(self.records) - self.n_pass

    @property
    def all_passed(self):
        return self.n_fail == 0

    def render(self):
        lines = [f"# report: {self.title}"]
        if self.version:
            lines.append(f"# version: {self.version}")
        if self.spec_id:
            lines.append(f"# spec: {self.spec_id}")
        lines.append(f"# seed: {self.seed}")
        for r in self.records:
            lines.append("CHECK\t{}\t{}\t{}\t{}\t{}".format(
                r.check_id, r.anchor, r.args,
                "pass" if r.passed else "FAIL", r.residual))
        lines.append(f"SUMMARY\ttotal={len(self.records)}"
                     f"\tpass={self.n_pass}\tfail={self.n_fail}")
        for n in self.notes:
            lines.append(f"NOTE\t{n}")
        return "\n".join(lines) + "\n"
