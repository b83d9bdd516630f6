from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, TextIO

from src.algebra.coinv import (
    coinvariant_algebra,
    hiller_criterion,
    ideal_slice,
    invariant_quotient_series,
    poincare_report,
)
from src.algebra.divdiff import delta_word, leibniz_check, nilpotence_check
from src.algebra.polyring import graded_dimension, parse_polynomial
from src.cli.enums import CheckStatus, Command, ExitCode, OutputFormat
from src.cli.messages import Messages
from src.cli.parser import build_parser, run_config
from src.cli.verification import VerificationSuite
from src.exceptions import ConsistencyError, CustomSystemError, RootSystemError, UsageError
from src.lie.presets import SPACE_PRESETS, space_system
from src.lie.rootsys import RootSystem, attach_multiplicities, build_root_system, from_positive_roots
from src.lie.weyl import (
    count_reduced_words,
    coxeter_relations,
    longest_element,
    parabolic_subgroup,
    reduced_words,
    weyl_group,
)
from src.models import CustomRootSystemModel, MultiplicityFileModel, RunConfig
from src.topology.morse import betti_numbers, perfectness_witness, verify_theorem2
from src.utils import format_word, parse_word, stringify_numbers

if TYPE_CHECKING:
    import argparse
    from collections.abc import Sequence
    from pathlib import Path

logger = logging.getLogger(__name__)

_LISTED_WORDS = 64


@dataclass
class Outcome:
    payload: dict[str, object]
    text: str
    passed: bool = True


def load_custom_system(path: Path) -> RootSystem:
    model = CustomRootSystemModel.model_validate_json(path.read_text(encoding="utf-8"))
    try:
        rs = from_positive_roots(model.rank, model.gram_matrix, model.positive_roots)
        if model.multiplicity_table is not None:
            rs = attach_multiplicities(rs, model.multiplicity_table)
    except RootSystemError as e:
        raise CustomSystemError(e.field, str(e).removeprefix(f"{e.field}: ")) from e

    logger.info("Loaded custom root system %s (%s) from %s", model.name or "unnamed", rs.label, path)

    return rs


def load_system(run: RunConfig) -> RootSystem:
    if run.space is not None:
        rs = space_system(run.space, run.cartan_type, run.rank)
    elif run.custom is not None:
        rs = load_custom_system(run.custom)
    else:
        rs = build_root_system(str(run.cartan_type), int(run.rank or 0))

    if run.m is not None:
        rs = attach_multiplicities(rs, run.m)
    elif run.mult_table is not None:
        table = MultiplicityFileModel.model_validate_json(run.mult_table.read_text(encoding="utf-8")).table
        rs = attach_multiplicities(rs, table)

    if run.x0 is not None and len(run.x0) != rs.rank:
        msg = f"--x0 needs {rs.rank} values, got {len(run.x0)}"
        raise UsageError(msg)

    return rs


def _x0(run: RunConfig, rs: RootSystem) -> tuple[Fraction, ...]:
    return run.x0 if run.x0 is not None else (Fraction(1),) * rs.rank


def _require_multiplicities(rs: RootSystem) -> None:
    if rs.multiplicities is None:
        msg = "this command needs --m or --mult-table"
        raise UsageError(msg)


class Commands:
    @classmethod
    def roots(cls, rs: RootSystem, run: RunConfig, args: argparse.Namespace) -> Outcome:  # noqa: ARG003
        payload: dict[str, object] = {
            "system": rs.label,
            "rank": rs.rank,
            "N": rs.n,
            "reflections": rs.n_reflections,
            "reduced": rs.reduced,
            "degrees": list(rs.degrees),
            "cartan": rs.cartan,
            "gram": rs.gram,
            "positive_roots": rs.positive_roots,
        }
        if rs.multiplicities is not None:
            payload["multiplicities"] = [{"root": root, "m": m} for root, m in rs.multiplicities.values]
            payload["uniform_m"] = rs.multiplicities.uniform_m
            payload["theorem2_regime"] = rs.multiplicities.theorem2_regime
        if run.space is not None:
            payload["space"] = SPACE_PRESETS[run.space].name

        return Outcome(payload=payload, text=Messages.roots(rs))

    @classmethod
    def weyl(cls, rs: RootSystem, run: RunConfig, args: argparse.Namespace) -> Outcome:  # noqa: ARG003
        group = weyl_group(rs)
        w0 = longest_element(rs)
        count = count_reduced_words(rs, w0)
        census = coinvariant_algebra(rs).length_census()
        problems = coxeter_relations(rs)

        payload: dict[str, object] = {
            "system": rs.label,
            "order": group.order,
            "longest_element": format_word(w0.word),
            "longest_length": w0.length,
            "longest_reduced_word_count": count,
            "length_census": census,
            "relation_violations": problems,
        }
        if count <= _LISTED_WORDS:
            payload["longest_reduced_words"] = [format_word(word) for word in reduced_words(rs, w0)]

        return Outcome(payload=payload, text=Messages.weyl(group, count, census, problems), passed=not problems)

    @classmethod
    def divdiff(cls, rs: RootSystem, run: RunConfig, args: argparse.Namespace) -> Outcome:
        if run.action == "apply":
            word = parse_word(args.word)
            if any(i >= rs.rank for i in word):
                msg = f"--word uses a generator beyond s{rs.rank}"
                raise UsageError(msg)
            f = parse_polynomial(args.poly, rs.rank)
            result = delta_word(rs, word, f)
            payload: dict[str, object] = {"word": format_word(word), "input": str(f), "result": str(result)}
            return Outcome(payload=payload, text=Messages.polynomial(result))

        suite = VerificationSuite(rs, seed=run.seed, cap=run.cap)
        checks = [suite.reduced_word_independence(), suite.composition_rule()]
        reports = [leibniz_check(rs, run.seed), nilpotence_check(rs, suite.law_cap)]
        passed = all(c.status == CheckStatus.PASS for c in checks) and all(r.passed for r in reports)
        payload = {
            "checks": [c.model_dump() for c in checks],
            "laws": [r.model_dump() for r in reports],
            "pass": passed,
        }
        text = "\n".join([*(f"{c.name}: {c.status} ({c.computed})" for c in checks), Messages.laws(reports)])

        return Outcome(payload=payload, text=text, passed=passed)

    @classmethod
    def coinv(cls, rs: RootSystem, run: RunConfig, args: argparse.Namespace) -> Outcome:
        algebra = coinvariant_algebra(rs)

        match run.action:
            case "series":
                report = poincare_report(rs, run.cap)
                return Outcome(payload=report.model_dump(), text=Messages.series(report), passed=report.passed)

            case "basis":
                k = args.degree
                if not 0 <= k <= rs.n_reflections:
                    msg = f"--degree must lie in 0..{rs.n_reflections}"
                    raise UsageError(msg)
                dimension = ideal_slice(rs, k, run.cap).dimension
                polys = algebra.harmonic_basis(k)
                total = graded_dimension(rs.rank, k)
                payload: dict[str, object] = {
                    "degree": k,
                    "dim_S": total,
                    "dim_I": dimension,
                    "basis": [
                        {"element": format_word(w.word), "polynomial": str(f)}
                        for (w, _), f in zip(algebra.harmonic_elements(k), polys, strict=True)
                    ],
                }
                return Outcome(payload=payload, text=Messages.basis(k, dimension, total, polys))

            case "invariants":
                indices = parse_word(args.stabilizer)
                if any(i >= rs.rank for i in indices):
                    msg = f"--stabilizer uses an index beyond {rs.rank}"
                    raise UsageError(msg)
                subgroup = parabolic_subgroup(rs, indices)
                series = invariant_quotient_series(rs, subgroup)
                passed = sum(series) * subgroup.order == weyl_group(rs).order
                payload = {
                    "generators": [f"s{i + 1}" for i in subgroup.generators],
                    "order": subgroup.order,
                    "series": series,
                    "pass": passed,
                }
                text = Messages.invariants(subgroup.generators, subgroup.order, series)
                return Outcome(payload=payload, text=text, passed=passed)

            case _:
                gens = [parse_polynomial(text, rs.rank) for text in args.gens.split(";") if text.strip()]
                report = hiller_criterion(rs, gens)
                return Outcome(payload=report.model_dump(), text=Messages.hiller(report))

    @classmethod
    def morse(cls, rs: RootSystem, run: RunConfig, args: argparse.Namespace) -> Outcome:  # noqa: ARG003
        _require_multiplicities(rs)
        x0 = _x0(run, rs)

        match run.action:
            case "betti":
                profile = betti_numbers(rs, x0, repeat_cosets=run.repeat_cosets)
                payload: dict[str, object] = {
                    "x0": profile.x0,
                    "orbit_size": profile.orbit_size,
                    "stabilizer_order": profile.stabilizer_order,
                    "points": [
                        {"element": format_word(p.representative.word), "values": p.values, "index": d}
                        for p, d in zip(profile.points, profile.indices, strict=True)
                    ],
                    "betti": profile.betti,
                    "euler_characteristic": profile.euler_characteristic,
                }
                return Outcome(payload=payload, text=Messages.betti(profile))

            case "verify":
                report = verify_theorem2(rs, x0, repeat_cosets=run.repeat_cosets)
                return Outcome(
                    payload=report.model_dump(by_alias=True), text=Messages.morse(report), passed=report.passed
                )

            case _:
                perfect = perfectness_witness(rs, run.x0)
                return Outcome(payload=perfect.model_dump(), text=Messages.perfectness(perfect), passed=perfect.passed)

    @classmethod
    def verify(cls, rs: RootSystem, run: RunConfig, args: argparse.Namespace) -> Outcome:  # noqa: ARG003
        report = VerificationSuite(rs, seed=run.seed, cap=run.cap).run()
        return Outcome(payload=report.model_dump(), text=Messages.verification(report), passed=report.passed)


_HANDLERS = {
    Command.ROOTS: Commands.roots,
    Command.WEYL: Commands.weyl,
    Command.DIVDIFF: Commands.divdiff,
    Command.COINV: Commands.coinv,
    Command.MORSE: Commands.morse,
    Command.VERIFY: Commands.verify,
}


def render(outcome: Outcome, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON:
        return json.dumps(stringify_numbers(outcome.payload), indent=2)

    return outcome.text


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.USAGE

    try:
        run_cfg = run_config(args)
        rs = load_system(run_cfg)
        outcome = _HANDLERS[Command(run_cfg.command)](rs, run_cfg, args)
    except ConsistencyError as e:
        logger.exception("Internal consistency failure")
        print(f"internal error: {e}", file=sys.stderr)  # noqa: T201
        return ExitCode.INCONSISTENT
    except (ValueError, OSError) as e:
        logger.info("Rejected input: %s", e)
        print(f"error: {e}", file=sys.stderr)  # noqa: T201
        return ExitCode.USAGE

    print(render(outcome, run_cfg.output_format), file=out)  # noqa: T201

    return ExitCode.OK if outcome.passed else ExitCode.FAILED
