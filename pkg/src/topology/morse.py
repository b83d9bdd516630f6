"""Morse indices of height functions on s-orbits, counted as weighted wall crossings.

The height direction is interior to the positive chamber, so a root alpha is
crossed on the way from x0 to p exactly when alpha(p) < 0.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.algebra.coinv import invariant_quotient_series
from src.exceptions import MultiplicityError, RegimeError
from src.lie.rootsys import Root, RootSystem, reflection_matrix
from src.lie.weyl import WeylElement, act_on_point, check_chamber_point, root_value, stabilizer, weyl_group
from src.models import MorseReport, PerfectnessReport
from src.utils import format_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitPoint:
    """A point w.x0, stored by its simple-root values, with a shortest coset representative."""

    values: tuple[Fraction, ...]
    representative: WeylElement

    def root_values(self, roots: Sequence[Root]) -> tuple[Fraction, ...]:
        return tuple(root_value(root, self.values) for root in roots)


@dataclass(frozen=True)
class MorseProfile:
    x0: tuple[Fraction, ...]
    points: tuple[OrbitPoint, ...]
    indices: tuple[int, ...]
    betti: tuple[int, ...]
    stabilizer_order: int

    @property
    def orbit_size(self) -> int:
        return len(self.points)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    @property
    def poincare_t(self) -> dict[int, int]:
        return {k: b for k, b in enumerate(self.betti) if b}


def orbit_points(rs: RootSystem, x0: Sequence[Fraction], *, repeat_cosets: bool = False) -> list[OrbitPoint]:
    """Distinct points of W.x0 in group order; ``repeat_cosets`` keeps one point per w instead."""
    point = check_chamber_point(rs, x0)
    group = weyl_group(rs)

    seen: set[tuple[Fraction, ...]] = set()
    points = []
    for w in group:
        values = act_on_point(group, w, point)
        if not repeat_cosets:
            if values in seen:
                continue
            seen.add(values)
        points.append(OrbitPoint(values=values, representative=w))

    return points


def crossed_roots(rs: RootSystem, p: OrbitPoint) -> list[Root]:
    return [root for root in rs.reduced_positive_roots if root_value(root, p.values) < 0]


def morse_index(rs: RootSystem, p: OrbitPoint) -> int:
    if rs.multiplicities is None:
        msg = "no multiplicities attached"
        raise MultiplicityError(msg)

    return sum(rs.multiplicities.of(root) for root in crossed_roots(rs, p))


def betti_numbers(rs: RootSystem, x0: Sequence[Fraction], *, repeat_cosets: bool = False) -> MorseProfile:
    scored = sorted(
        ((morse_index(rs, p), p) for p in orbit_points(rs, x0, repeat_cosets=repeat_cosets)),
        key=lambda pair: (pair[0], pair[1].values),
    )
    points = [p for _, p in scored]
    indices = tuple(d for d, _ in scored)

    betti = [0] * (max(indices) + 1)
    for d in indices:
        betti[d] += 1

    profile = MorseProfile(
        x0=tuple(Fraction(x) for x in x0),
        points=tuple(points),
        indices=indices,
        betti=tuple(betti),
        stabilizer_order=stabilizer(rs, x0).order,
    )
    logger.info("Betti numbers of %s at x0 = %s: %s", rs.label, [str(x) for x in profile.x0], profile.betti)

    return profile


def stretch(series: Sequence[int], m: int) -> list[int]:
    """Coefficients of Q(t^m) from those of Q(t)."""
    stretched = [0] * (m * (len(series) - 1) + 1)
    for k, c in enumerate(series):
        stretched[m * k] = c

    return stretched


def _trim(series: Sequence[int]) -> list[int]:
    trimmed = list(series)
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()

    return trimmed


def verify_theorem2(rs: RootSystem, x0: Sequence[Fraction], *, repeat_cosets: bool = False) -> MorseReport:
    table = rs.multiplicities
    if table is None:
        msg = "no multiplicities attached"
        raise RegimeError(msg)
    if table.uniform_m is None:
        msg = "simple root multiplicities are not all equal"
        raise RegimeError(msg)
    if not table.theorem2_regime:
        msg = f"m = {table.uniform_m}"
        raise RegimeError(msg)

    m = table.uniform_m
    profile = betti_numbers(rs, x0, repeat_cosets=repeat_cosets)
    subgroup = stabilizer(rs, x0)
    series = stretch(invariant_quotient_series(rs, subgroup), m)

    expected_size = weyl_group(rs).order // subgroup.order
    if repeat_cosets:
        # every point is counted once per stabilizer element
        series = [b * subgroup.order for b in series]
        expected_size *= subgroup.order
    passed = (
        _trim(profile.betti) == _trim(series)
        and profile.orbit_size == expected_size
        and profile.euler_characteristic == expected_size
    )
    logger.info("Morse/coinvariant comparison for %s, m = %s: %s", rs.label, m, "pass" if passed else "FAIL")

    return MorseReport(
        x0=list(profile.x0),
        orbit_size=profile.orbit_size,
        stabilizer_order=subgroup.order,
        indices=list(profile.indices),
        betti=list(profile.betti),
        coinvariant_series=_trim(series),
        euler_characteristic=profile.euler_characteristic,
        passed=passed,
    )


def perfectness_witness(rs: RootSystem, x0: Sequence[Fraction] | None = None) -> PerfectnessReport:
    if rs.multiplicities is None:
        msg = "no multiplicities attached"
        raise MultiplicityError(msg)

    x0 = x0 if x0 is not None else (Fraction(1),) * rs.rank
    points = orbit_points(rs, x0)
    position = {p.values: k for k, p in enumerate(points)}
    indices = [morse_index(rs, p) for p in points]

    reflections = [reflection_matrix(rs, root) for root in rs.reduced_positive_roots]
    pairs = set()
    for k, p in enumerate(points):
        for matrix in reflections:
            image = tuple(
                sum((matrix[j][i] * p.values[j] for j in range(rs.rank)), Fraction(0)) for i in range(rs.rank)
            )
            other = position[image]
            if other != k:
                pairs.add((min(k, other), max(k, other)))

    violations = [
        f"{format_word(points[a].representative.word)} (d = {indices[a]}) and "
        f"{format_word(points[b].representative.word)} (d = {indices[b]})"
        for a, b in sorted(pairs)
        if abs(indices[a] - indices[b]) == 1
    ]
    hypothesis = all(value >= 2 for _, value in rs.multiplicities.values)  # noqa: PLR2004

    return PerfectnessReport(pairs_checked=len(pairs), violations=violations, hypothesis_holds=hypothesis)
