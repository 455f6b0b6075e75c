"""Per-profile verification: series agreement plus exhaustive bijection round trips."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .bijection import phi, psi
from .diagram import iter_alcds
from .partitions import Profile, cpp_weight, iter_cpps, partitions_up_to
from .serialize import alcd_to_json, cpp_to_json
from .series import TruncatedSeries, borodin_rhs_series, enumerate_cpp_series, enumerate_pairs_series


@dataclass
class Report:
    profile: Profile
    order: int
    bound: int
    lhs: TruncatedSeries
    pairs: TruncatedSeries
    rhs: TruncatedSeries
    cpp_counts: Counter = field(default_factory=Counter)
    pair_counts: Counter = field(default_factory=Counter)
    mismatch: int | None = None
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None and self.counterexample is None

    def as_json(self) -> dict:
        return {
            "profile": self.profile.bits,
            "N": self.order,
            "roundtrip_bound": self.bound,
            "status": "PASS" if self.passed else "FAIL",
            "lhs": list(self.lhs),
            "pairs": list(self.pairs),
            "rhs": list(self.rhs),
            "first_mismatch": self.mismatch,
            "cpps_checked": [self.cpp_counts[w] for w in range(self.bound + 1)],
            "pairs_checked": [self.pair_counts[w] for w in range(self.bound + 1)],
            "counterexample": self.counterexample,
        }

    def as_text(self) -> str:
        lines = [f"profile {self.profile}  N={self.order}  round-trip bound={self.bound}",
                 f"{'w':>3} {'CPPs':>10} {'pairs':>10} {'product':>10} {'bij-cpp':>8} {'bij-pair':>8}"]
        for w in range(self.order + 1):
            extra = (f" {self.cpp_counts[w]:>8} {self.pair_counts[w]:>8}" if w <= self.bound else "")
            lines.append(f"{w:>3} {self.lhs[w]:>10} {self.pairs[w]:>10} {self.rhs[w]:>10}{extra}")
        if self.mismatch is not None:
            lines.append(f"FAIL: series differ first at z^{self.mismatch}")
        if self.counterexample is not None:
            lines.append(f"FAIL: counterexample {self.counterexample}")
        if self.passed:
            lines.append("PASS")
        return "\n".join(lines)


def _roundtrip_cpps(pi: Profile, bound: int, report: Report) -> None:
    for c in iter_cpps(pi, bound):
        w = cpp_weight(c)
        try:
            gamma, d = phi(c)
            ok = psi(gamma, d) == c
            problem = None if ok else "psi(phi(c)) != c"
        except (ArithmeticError, AssertionError, RuntimeError, ValueError) as exc:
            problem = f"{type(exc).__name__}: {exc}"
        if problem:
            report.counterexample = {"kind": "cpp", "weight": w, "object": cpp_to_json(c), "problem": problem}
            return
        report.cpp_counts[w] += 1


def _roundtrip_pairs(pi: Profile, bound: int, report: Report) -> None:
    T = pi.T
    for gamma in partitions_up_to(bound // T):
        base = T * sum(gamma)
        for d in iter_alcds(pi, bound - base):
            try:
                c = psi(gamma, d)
                w = cpp_weight(c)
                problem = None if phi(c) == (gamma, d) else "phi(psi(gamma, d)) != (gamma, d)"
            except (ArithmeticError, AssertionError, RuntimeError, ValueError) as exc:
                w = None
                problem = f"{type(exc).__name__}: {exc}"
            if problem:
                report.counterexample = {"kind": "pair", "weight": w, "gamma": list(gamma),
                                         "object": alcd_to_json(d), "problem": problem}
                return
            report.pair_counts[w] += 1


def verify_profile(pi: Profile, N: int = 10, bound: int | None = None) -> Report:
    pi.require_cylindric()
    bound = min(N, 8) if bound is None else min(bound, N)
    lhs = enumerate_cpp_series(pi, N)
    pairs = enumerate_pairs_series(pi, N)
    rhs = borodin_rhs_series(pi, N)
    report = Report(pi, N, bound, lhs, pairs, rhs)
    report.mismatch = lhs.first_mismatch(pairs)
    if report.mismatch is None:
        report.mismatch = lhs.first_mismatch(rhs)
    _roundtrip_cpps(pi, bound, report)
    if report.counterexample is None:
        _roundtrip_pairs(pi, bound, report)
    if report.counterexample is None:
        for w in range(bound + 1):
            if not (report.cpp_counts[w] == report.pair_counts[w] == lhs[w]):
                report.counterexample = {"kind": "count", "weight": w,
                                         "object": {"cpps": report.cpp_counts[w], "pairs": report.pair_counts[w],
                                                    "series": lhs[w]},
                                         "problem": "enumerated instance counts disagree with the series"}
                break
    return report
