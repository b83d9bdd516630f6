"""The coinvariant algebra S/I_W, degree by degree.

I_W is graded, so membership and dimensions reduce to exact linear algebra on
each graded piece S^k: I^k = S^1 * I^{k-1} + (W-invariants of degree k).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property

from src import config
from src.algebra.divdiff import calculus
from src.algebra.linalg import RowSpace, mat_mul, transpose
from src.algebra.polyring import (
    Exponent,
    Polynomial,
    average,
    check_degree,
    coordinates,
    from_coordinates,
    monomial_basis,
    weyl_vector_product,
)
from src.exceptions import ConsistencyError, NotHomogeneousError, RankDefectError
from src.lie.rootsys import Matrix, RootSystem
from src.lie.weyl import Subgroup, WeylElement, coxeter_violations, simple_reflection_matrix, weyl_group
from src.models import HillerReport, LawReport, PoincareReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedSlice:
    """A subspace of S^k; each row of ``space`` is a coordinate vector in ``basis``."""

    degree: int
    basis: tuple[Exponent, ...]
    space: RowSpace

    @property
    def dimension(self) -> int:
        return self.space.dimension

    @property
    def full(self) -> bool:
        return self.space.dimension == len(self.basis)

    def polynomials(self) -> list[Polynomial]:
        nvars = len(self.basis[0]) if self.basis else 0
        return [from_coordinates(row, self.basis, nvars) for row in self.space.rows]

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        return self.space.contains(coordinates(f, self.basis))


def product_formula(degrees: Sequence[int]) -> list[int]:
    """Coefficients of prod_j (1 + t + ... + t^(d_j - 1))."""
    series = [1]
    for d in degrees:
        grown = [0] * (len(series) + d - 1)
        for k, c in enumerate(series):
            for j in range(d):
                grown[k + j] += c
        series = grown

    return series


class CoinvariantAlgebra:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.group = weyl_group(rs)
        self.ops = calculus(rs)
        self.top = rs.n_reflections
        self._bases: dict[int, tuple[Exponent, ...]] = {}
        self._invariants: dict[int, GradedSlice] = {}
        self._ideal: dict[int, GradedSlice] = {}

    def basis(self, k: int) -> tuple[Exponent, ...]:
        if k not in self._bases:
            self._bases[k] = tuple(monomial_basis(self.rs.rank, k))
        return self._bases[k]

    def coordinates(self, f: Polynomial, k: int) -> list[Fraction]:
        return coordinates(f, self.basis(k))

    def _slice(self, k: int, vectors: Sequence[Sequence[Fraction]]) -> GradedSlice:
        return GradedSlice(degree=k, basis=self.basis(k), space=RowSpace.span(len(self.basis(k)), vectors))

    def _raise_degree(self, lower: GradedSlice) -> list[list[Fraction]]:
        k = lower.degree + 1
        index = {e: n for n, e in enumerate(self.basis(k))}
        rows = []
        for row in lower.space.rows:
            for i in range(self.rs.rank):
                vector = [Fraction(0)] * len(index)
                for exponent, c in zip(lower.basis, row, strict=True):
                    if c:
                        vector[index[tuple(e + (j == i) for j, e in enumerate(exponent))]] = c
                rows.append(vector)

        return rows

    def invariant_slice(self, k: int) -> GradedSlice:
        if k not in self._invariants:
            images = [self.coordinates(average(self.group.elements, Polynomial.monomial(e)), k) for e in self.basis(k)]
            self._invariants[k] = self._slice(k, images)
            logger.debug("dim S^%s^W = %s for %s", k, self._invariants[k].dimension, self.rs.label)

        return self._invariants[k]

    def ideal_slice(self, k: int) -> GradedSlice:
        if k not in self._ideal:
            if k == 0:
                self._ideal[k] = self._slice(0, [])
            else:
                rows = self._raise_degree(self.ideal_slice(k - 1))
                rows.extend(self.invariant_slice(k).space.rows)
                self._ideal[k] = self._slice(k, rows)
            logger.debug("dim I_W^%s = %s for %s", k, self._ideal[k].dimension, self.rs.label)

        return self._ideal[k]

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        if not f.is_homogeneous():
            raise NotHomogeneousError(str(f))

        return self.ideal_slice(f.degree).contains(f)

    @cached_property
    def d(self) -> Polynomial:
        return weyl_vector_product(self.rs)

    @cached_property
    def harmonic(self) -> dict[Matrix, Polynomial]:
        """Delta_w(d) for every w, via Delta_w(d) = Delta_i1(Delta_{s_i1 w}(d))."""
        values: dict[Matrix, Polynomial] = {}
        for w in self.group:
            if w.length == 0:
                values[w.matrix] = self.d
                continue
            head = w.word[0]
            rest = self.group.multiply(self.group.simple(head), w)
            values[w.matrix] = self.ops.simple(head, values[rest.matrix])

        return values

    @cached_property
    def top_constant(self) -> Fraction:
        value = self.harmonic[self.group.longest().matrix]
        if value.degree != 0:
            msg = f"Delta_w0(d) = {value} is not a nonzero constant"
            raise ConsistencyError(msg)

        return value.constant_term()

    def harmonic_elements(self, k: int) -> list[tuple[WeylElement, Polynomial]]:
        return [(w, self.harmonic[w.matrix]) for w in self.group if w.length == self.top - k]

    def harmonic_basis(self, k: int) -> list[Polynomial]:
        """Delta_w(d), l(w) = N - k; checked to be independent and complementary to I_W^k."""
        polys = [f for _, f in self.harmonic_elements(k)]
        vectors = [self.coordinates(f, k) for f in polys]

        own = RowSpace.span(len(self.basis(k)), vectors).dimension
        if own != len(polys):
            raise RankDefectError(f"harmonic elements of degree {k}", len(polys), own)

        combined = self.ideal_slice(k).space.extend(vectors).dimension
        if combined != len(self.basis(k)):
            raise RankDefectError(f"I_W^{k} + harmonic elements", len(self.basis(k)), combined)

        return polys

    def harmonic_coordinates(self, f: Polynomial) -> list[tuple[WeylElement, Fraction]]:
        """lambda_v with f = sum lambda_v Delta_v(d) mod I_W, from Delta_{w0 v^-1}(f) = lambda_v c."""
        if not f.is_homogeneous():
            raise NotHomogeneousError(str(f))

        k = max(f.degree, 0)
        if k > self.top:
            return []

        w0 = self.group.longest()
        result = []
        for v, _ in self.harmonic_elements(k):
            u = self.group.multiply(w0, self.group.inverse(v))
            value = self.ops.element(u, f)
            result.append((v, value.constant_term() / self.top_constant))

        return result

    def census(self) -> list[int]:
        return [len(self.basis(k)) - self.ideal_slice(k).dimension for k in range(self.top + 1)]

    def length_census(self) -> list[int]:
        counts = [0] * (self.top + 1)
        for w in self.group:
            counts[w.length] += 1

        return counts

    def first_full_degree(self, cap: int) -> int | None:
        return next((k for k in range(cap + 1) if self.ideal_slice(k).full), None)

    def invariant_quotient_series(self, subgroup: Subgroup) -> list[int]:
        """dim (S^k / I_W^k)^H for k = 0..N."""
        series = []
        for k in range(self.top + 1):
            ideal = self.ideal_slice(k)
            averaged = [self.coordinates(average(subgroup.elements, f), k) for _, f in self.harmonic_elements(k)]
            series.append(ideal.space.extend(averaged).dimension - ideal.dimension)

        return series

    def extended_ideal(self, extra: Sequence[Polynomial], k_max: int) -> list[GradedSlice]:
        for g in extra:
            if not g.is_homogeneous():
                raise NotHomogeneousError(str(g))

        slices: list[GradedSlice] = []
        for k in range(k_max + 1):
            rows = self._raise_degree(slices[-1]) if slices else []
            if k > 0:
                rows.extend(self.invariant_slice(k).space.rows)
            rows.extend(self.coordinates(g, k) for g in extra if g and g.degree == k)
            slices.append(self._slice(k, rows))

        return slices

    def ideal_stability(self, k_max: int) -> LawReport:
        failures: list[str] = []
        cases = 0
        for k in range(1, k_max + 1):
            lower = self.ideal_slice(k - 1)
            for f in self.ideal_slice(k).polynomials():
                for i in range(self.rs.rank):
                    cases += 1
                    if not lower.contains(self.ops.simple(i, f)):
                        failures.append(f"Delta_{i + 1}({f}) not in I_W^{k - 1}")

        return LawReport(law="ideal_stability", passed=not failures, cases=cases, failures=failures[:5])


@cache
def coinvariant_algebra(rs: RootSystem) -> CoinvariantAlgebra:
    return CoinvariantAlgebra(rs)


def default_cap(rs: RootSystem) -> int:
    return rs.n_reflections + config.DEGREE_CAP_MARGIN


def invariant_slice(rs: RootSystem, k: int, cap: int | None = None) -> GradedSlice:
    check_degree(k, cap if cap is not None else default_cap(rs))
    return coinvariant_algebra(rs).invariant_slice(k)


def ideal_slice(rs: RootSystem, k: int, cap: int | None = None) -> GradedSlice:
    check_degree(k, cap if cap is not None else default_cap(rs))
    return coinvariant_algebra(rs).ideal_slice(k)


def contains(rs: RootSystem, f: Polynomial, cap: int | None = None) -> bool:
    check_degree(f.degree, cap if cap is not None else default_cap(rs))
    return coinvariant_algebra(rs).contains(f)


def poincare_series(rs: RootSystem) -> list[int]:
    return coinvariant_algebra(rs).census()


def poincare_report(rs: RootSystem, cap: int | None = None) -> PoincareReport:
    algebra = coinvariant_algebra(rs)
    cap = cap if cap is not None else default_cap(rs)
    report = PoincareReport(
        census=algebra.census(),
        product_formula=product_formula(rs.degrees),
        length_census=algebra.length_census(),
        full_from_degree=algebra.first_full_degree(max(cap, rs.n_reflections + 1)),
    )
    logger.info("Poincare series of %s: %s (agreement: %s)", rs.label, report.census, report.passed)

    return report


def harmonic_basis(rs: RootSystem, k: int) -> list[Polynomial]:
    check_degree(k, rs.n_reflections)
    return coinvariant_algebra(rs).harmonic_basis(k)


def harmonic_coordinates(rs: RootSystem, f: Polynomial) -> list[tuple[WeylElement, Fraction]]:
    return coinvariant_algebra(rs).harmonic_coordinates(f)


def invariant_quotient_series(rs: RootSystem, subgroup: Subgroup) -> list[int]:
    return coinvariant_algebra(rs).invariant_quotient_series(subgroup)


def hiller_criterion(rs: RootSystem, extra_gens: Sequence[Polynomial]) -> HillerReport:
    """I = I_W + <extra_gens> equals I_W exactly when d is not in I."""
    algebra = coinvariant_algebra(rs)
    top = rs.n_reflections
    slices = algebra.extended_ideal(extra_gens, top)

    dimensions = [(s.dimension, algebra.ideal_slice(k).dimension) for k, s in enumerate(slices)]
    d_in_ideal = slices[top].contains(algebra.d)
    logger.info("Hiller criterion on %s with %s extra generators: d in I = %s", rs.label, len(extra_gens), d_in_ideal)

    return HillerReport(extra_generators=[str(g) for g in extra_gens], dimensions=dimensions, d_in_ideal=d_in_ideal)


def pairing_matrix(rs: RootSystem) -> Matrix:
    return transpose(rs.cartan)


def euler_rep(rs: RootSystem, j: int) -> Matrix:
    """Matrix of s_j on the Euler classes: tau_i -> tau_i - d_ji tau_j (0-based j)."""
    return simple_reflection_matrix(rs.cartan, j)


def sphere_rep(rs: RootSystem, i: int) -> Matrix:
    """Matrix of s_i on the sphere classes: [S_j] -> [S_j] - d_ji [S_i] (0-based i)."""
    rank = rs.rank
    return tuple(
        tuple(int(r == j) - (rs.cartan[j][i] if r == i else 0) for j in range(rank)) for r in range(rank)
    )


def representation_check(rs: RootSystem) -> LawReport:
    euler = [euler_rep(rs, k) for k in range(rs.rank)]
    sphere = [sphere_rep(rs, k) for k in range(rs.rank)]
    failures = [f"euler: {p}" for p in coxeter_violations(euler, rs.cartan)]
    failures += [f"sphere: {p}" for p in coxeter_violations(sphere, rs.cartan)]

    pairing = pairing_matrix(rs)
    for k in range(rs.rank):
        if mat_mul(mat_mul(transpose(euler[k]), pairing), sphere[k]) != pairing:
            failures.append(f"s{k + 1} does not preserve the pairing")

    return LawReport(law="representation_pairing", passed=not failures, cases=3 * rs.rank, failures=failures)
