from __future__ import annotations

from typing import TYPE_CHECKING

from src.cli.enums import CheckStatus
from src.utils import format_rational, format_word

if TYPE_CHECKING:
    from collections.abc import Sequence
    from fractions import Fraction

    from src.algebra.polyring import Polynomial
    from src.lie.rootsys import RootSystem
    from src.lie.weyl import WeylGroup
    from src.models import HillerReport, LawReport, MorseReport, PerfectnessReport, PoincareReport, VerificationReport
    from src.topology.morse import MorseProfile


def _csv(values: list[int] | tuple[int, ...]) -> str:
    return ",".join(str(v) for v in values)


def _matrix(rows: Sequence[Sequence[int | Fraction]]) -> str:
    return "\n".join("  " + " ".join(f"{format_rational(x):>4}" for x in row) for row in rows)


class Messages:
    @staticmethod
    def roots(rs: RootSystem) -> str:
        lines = [
            f"{rs.label}: rank {rs.rank}, N = {rs.n}, degrees {_csv(rs.degrees)}",
            "cartan:",
            _matrix(rs.cartan),
            "gram:",
            _matrix(rs.gram),
            "positive roots:",
            *(f"  {_csv(root)}" for root in rs.positive_roots),
        ]
        if not rs.reduced:
            lines.append(f"reflections: {rs.n_reflections} (non-reduced)")
        if rs.multiplicities is not None:
            lines.append("multiplicities:")
            lines.extend(f"  {_csv(root)}: {m}" for root, m in rs.multiplicities.values)

        return "\n".join(lines)

    @staticmethod
    def weyl(group: WeylGroup, longest_words: int, census: list[int], problems: list[str]) -> str:
        w0 = group.longest()
        return "\n".join([
            f"|W| = {group.order}",
            f"w0 = {format_word(w0.word)}, l(w0) = {w0.length}, {longest_words} reduced words",
            f"length census: {_csv(census)}",
            "relations: " + ("; ".join(problems) if problems else "ok"),
        ])

    @staticmethod
    def polynomial(result: Polynomial) -> str:
        return str(result)

    @staticmethod
    def laws(reports: list[LawReport]) -> str:
        lines = []
        for report in reports:
            lines.append(f"{report.law}: {'ok' if report.passed else 'FAILED'} ({report.cases} cases)")
            lines.extend(f"  {failure}" for failure in report.failures)

        return "\n".join(lines)

    @staticmethod
    def series(report: PoincareReport) -> str:
        return _csv(report.census)

    @staticmethod
    def basis(k: int, ideal_dimension: int, total: int, polys: list[Polynomial]) -> str:
        return "\n".join([
            f"dim S^{k} = {total}, dim I_W^{k} = {ideal_dimension}",
            *(str(f) for f in polys),
        ])

    @staticmethod
    def invariants(generators: tuple[int, ...], order: int, series: list[int]) -> str:
        named = ",".join(f"s{i + 1}" for i in generators) or "e"
        return f"H = <{named}>, |H| = {order}\n{_csv(series)}"

    @staticmethod
    def hiller(report: HillerReport) -> str:
        lines = [f"k {k}: dim I^k = {ours}, dim I_W^k = {weyl}" for k, (ours, weyl) in enumerate(report.dimensions)]
        verdict = "I = I_W" if report.equals_weyl_ideal else "I != I_W"
        lines.append(f"d in I: {report.d_in_ideal} -> {verdict}")

        return "\n".join(lines)

    @staticmethod
    def betti(profile: MorseProfile) -> str:
        lines = [
            f"orbit size {profile.orbit_size}, |W_x0| = {profile.stabilizer_order}",
            f"betti: {_csv(profile.betti)}",
        ]
        lines.extend(
            f"  {format_word(p.representative.word)}: d = {d}"
            for p, d in zip(profile.points, profile.indices, strict=True)
        )

        return "\n".join(lines)

    @staticmethod
    def morse(report: MorseReport) -> str:
        return "\n".join([
            f"orbit size {report.orbit_size}, |W_x0| = {report.stabilizer_order}, chi = {report.euler_characteristic}",
            f"morse:       {_csv(report.betti)}",
            f"coinvariant: {_csv(report.coinvariant_series)}",
            "pass" if report.passed else "FAIL",
        ])

    @staticmethod
    def perfectness(report: PerfectnessReport) -> str:
        lines = [f"{report.pairs_checked} reflection pairs, hypothesis m >= 2: {report.hypothesis_holds}"]
        lines.extend(f"  adjacent indices: {v}" for v in report.violations)

        return "\n".join(lines)

    @staticmethod
    def verification(report: VerificationReport) -> str:
        lines = [f"verify all: {report.system}"]
        for check in report.checks:
            detail = check.reason if check.status == CheckStatus.SKIP else check.computed
            lines.append(f"[{check.status}] {check.name}: {detail}")
        lines.append("PASS" if report.passed else "FAIL")

        return "\n".join(lines)
