from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction
from itertools import combinations
from math import prod

from src import config
from src.algebra.coinv import (
    coinvariant_algebra,
    hiller_criterion,
    invariant_quotient_series,
    poincare_report,
    representation_check,
)
from src.algebra.divdiff import composition_check, leibniz_check, nilpotence_check, well_defined
from src.algebra.polyring import Polynomial
from src.cli.enums import CheckStatus
from src.lie.rootsys import RootSystem, check_invariants
from src.lie.weyl import coxeter_relations, inversion_set, longest_element, parabolic_subgroup, weyl_group
from src.models import CheckModel, LawReport, VerificationReport
from src.topology.morse import verify_theorem2
from src.utils import format_word

logger = logging.getLogger(__name__)

_EXHAUSTIVE_PAIR_LIMIT = 64


def _status(passed: bool) -> CheckStatus:  # noqa: FBT001
    return CheckStatus.PASS if passed else CheckStatus.FAIL


def _wall_patterns(rank: int) -> list[tuple[int, ...]]:
    return [subset for size in range(rank + 1) for subset in combinations(range(rank), size)]


def _failures(reports: list[LawReport]) -> str:
    failed = [f"{r.law}: {'; '.join(r.failures)}" for r in reports if not r.passed]
    cases = sum(r.cases for r in reports)

    return "; ".join(failed) if failed else f"{cases} cases hold"


class VerificationSuite:
    def __init__(self, rs: RootSystem, seed: int | None = None, cap: int | None = None):
        self.rs = rs
        self.seed = seed if seed is not None else config.DEFAULT_SEED
        self.top = rs.n_reflections
        self.law_cap = min(cap, self.top) if cap is not None else self.top
        self.group = weyl_group(rs)

    @property
    def checks(self) -> list[Callable[[], CheckModel]]:
        return [
            self.root_system_invariants,
            self.weyl_relations,
            self.longest_element,
            self.reduced_word_independence,
            self.composition_rule,
            self.leibniz_and_ideal_stability,
            self.poincare_agreement,
            self.harmonic_complement,
            self.hiller_criterion,
            self.invariant_dimension,
            self.morse_coinvariant_agreement,
            self.representation_pairing,
        ]

    def run(self) -> VerificationReport:
        report = VerificationReport(system=self.rs.label)
        for check in self.checks:
            result = check()
            logger.info("%s on %s: %s", result.name, self.rs.label, result.status)
            report.checks.append(result)

        return report

    def root_system_invariants(self) -> CheckModel:
        problems = check_invariants(self.rs)
        return CheckModel(
            name="root_system_invariants",
            status=_status(not problems),
            expected=f"sum of degrees = N + l = {self.top + self.rs.rank}",
            computed="; ".join(f"{f}: {r}" for f, r in problems) or f"sum of degrees = {sum(self.rs.degrees)}",
            anchor="d_1 + ... + d_l = N + l",
        )

    def weyl_relations(self) -> CheckModel:
        problems = coxeter_relations(self.rs)
        expected_order = prod(self.rs.degrees)
        return CheckModel(
            name="weyl_relations",
            status=_status(not problems and self.group.order == expected_order),
            expected=f"|W| = {expected_order}, s_i^2 = e, braid relations",
            computed="; ".join(problems) or f"|W| = {self.group.order}",
            anchor="W generated by the reflections in ker alpha",
        )

    def longest_element(self) -> CheckModel:
        w0 = longest_element(self.rs)
        inversions = len(inversion_set(self.rs, w0))
        return CheckModel(
            name="longest_element",
            status=_status(w0.length == self.top and inversions == self.top),
            expected=f"l(w0) = {self.top}, w0 negates every positive root",
            computed=f"w0 = {format_word(w0.word)}, l(w0) = {w0.length}, inversions = {inversions}",
            anchor="w0 the longest element",
        )

    def reduced_word_independence(self) -> CheckModel:
        reports = [well_defined(self.rs, w, self.law_cap) for w in self.group]
        return CheckModel(
            name="reduced_word_independence",
            status=_status(all(r.passed for r in reports)),
            expected=f"one operator per element on S^<={self.law_cap}",
            computed=_failures(reports),
            anchor="Delta_w does not depend on the reduced expression",
        )

    def composition_rule(self) -> CheckModel:
        if self.group.order <= _EXHAUSTIVE_PAIR_LIMIT:
            pairs = [(w, v) for w in self.group for v in self.group]
        else:
            simple = [self.group.simple(i) for i in range(self.rs.rank)]
            pairs = [(s, w) for s in simple for w in self.group] + [(w, s) for s in simple for w in self.group]

        reports = [composition_check(self.rs, w, v, self.law_cap) for w, v in pairs]
        return CheckModel(
            name="composition_rule",
            status=_status(all(r.passed for r in reports)),
            expected=f"Delta_w Delta_w' = Delta_ww' or 0 on {len(pairs)} pairs",
            computed=_failures(reports),
            anchor="Delta_w Delta_w' = Delta_ww' if l(ww') = l(w) + l(w'), 0 otherwise",
        )

    def leibniz_and_ideal_stability(self) -> CheckModel:
        reports = [
            leibniz_check(self.rs, self.seed),
            nilpotence_check(self.rs, self.law_cap),
            coinvariant_algebra(self.rs).ideal_stability(self.top + 1),
        ]
        return CheckModel(
            name="leibniz_and_ideal_stability",
            status=_status(all(r.passed for r in reports)),
            expected="Leibniz rule, Delta_alpha^2 = 0, Delta_alpha(I_W) in I_W",
            computed=_failures(reports),
            anchor="Delta_alpha(fg) = Delta_alpha(f) g + s_alpha(f) Delta_alpha(g)",
        )

    def poincare_agreement(self) -> CheckModel:
        report = poincare_report(self.rs)
        return CheckModel(
            name="poincare_agreement",
            status=_status(report.passed),
            expected=f"{report.product_formula}, I_W^k = S^k from k = {self.top + 1}",
            computed=f"census {report.census}, lengths {report.length_census}, full from {report.full_from_degree}",
            anchor="P(S/I_W) = sum_w t^l(w) = prod_j (1 + ... + t^(d_j - 1))",
        )

    def harmonic_complement(self) -> CheckModel:
        algebra = coinvariant_algebra(self.rs)
        failures = []
        for k in range(self.top + 1):
            for w, h in zip(
                (v for v, _ in algebra.harmonic_elements(k)), algebra.harmonic_basis(k), strict=True
            ):
                coordinates = algebra.harmonic_coordinates(h)
                if any(value != (1 if v == w else 0) for v, value in coordinates):
                    failures.append(f"lambda extraction fails for Delta_{format_word(w.word)}(d)")

        return CheckModel(
            name="harmonic_complement",
            status=_status(not failures),
            expected="Delta_w(d), l(w) = N - k, complement I_W^k for every k",
            computed="; ".join(failures[:5]) or f"c = Delta_w0(d) = {algebra.top_constant}",
            anchor="Delta_w(d) span a direct complement of I_W^k",
        )

    def hiller_criterion(self) -> CheckModel:
        plain = hiller_criterion(self.rs, [])
        extended = hiller_criterion(self.rs, [Polynomial.variable(self.rs.rank, 0)])
        return CheckModel(
            name="hiller_criterion",
            status=_status(not plain.d_in_ideal and extended.d_in_ideal),
            expected="d not in I_W; d in I_W + <g1>",
            computed=f"d in I_W: {plain.d_in_ideal}; d in I_W + <g1>: {extended.d_in_ideal}",
            anchor="I = I_W iff prod alpha not in I",
        )

    def invariant_dimension(self) -> CheckModel:
        failures = []
        for pattern in _wall_patterns(self.rs.rank):
            subgroup = parabolic_subgroup(self.rs, pattern)
            series = invariant_quotient_series(self.rs, subgroup)
            if sum(series) * subgroup.order != self.group.order:
                failures.append(f"W_J for J = {[i + 1 for i in pattern]}: total {sum(series)}")
            if len(pattern) == self.rs.rank and series != [1] + [0] * self.top:
                failures.append(f"W-invariants {series}")

        return CheckModel(
            name="invariant_dimension",
            status=_status(not failures),
            expected="dim (S/I_W)^W_J = |W|/|W_J|; W-invariants only in degree 0",
            computed="; ".join(failures) or f"{2**self.rs.rank} parabolic subgroups",
            anchor="dim H*(X)^W_x = |W|/|W_x|",
        )

    def morse_coinvariant_agreement(self) -> CheckModel:
        name = "morse_coinvariant_agreement"
        anchor = "sum_p t^d(p) = Q(t^m), chi = |W|/|W_x0|"
        table = self.rs.multiplicities
        if table is None or not table.theorem2_regime:
            allowed = ",".join(str(m) for m in config.THEOREM2_MULTIPLICITIES)
            if table is None:
                reason = "no multiplicities given"
            elif table.uniform_m is None:
                reason = "multiplicities are not uniform"
            else:
                reason = f"uniform m = {table.uniform_m} outside {{{allowed}}}"
            return CheckModel(name=name, status=CheckStatus.SKIP, anchor=anchor, reason=reason)

        failures = []
        for pattern in _wall_patterns(self.rs.rank):
            x0 = tuple(Fraction(0) if i in pattern else Fraction(1) for i in range(self.rs.rank))
            report = verify_theorem2(self.rs, x0)
            if not report.passed:
                failures.append(f"x0 = {[str(x) for x in x0]}: {report.betti} vs {report.coinvariant_series}")

        return CheckModel(
            name=name,
            status=_status(not failures),
            expected=f"agreement at t^{table.uniform_m} for all {2**self.rs.rank} wall patterns",
            computed="; ".join(failures) or "all patterns agree",
            anchor=anchor,
        )

    def representation_pairing(self) -> CheckModel:
        report = representation_check(self.rs)
        return CheckModel(
            name="representation_pairing",
            status=_status(report.passed),
            expected="s_j^*(tau_i) = tau_i - d_ji tau_j and s_i*[S_j] = [S_j] - d_ji [S_i] preserve P",
            computed="; ".join(report.failures) or "relations and pairing hold",
            anchor="P_ij = d_ji",
        )
