from fractions import Fraction
from itertools import combinations

import pytest

from src.algebra.coinv import (
    coinvariant_algebra,
    contains,
    euler_rep,
    harmonic_basis,
    harmonic_coordinates,
    hiller_criterion,
    ideal_slice,
    invariant_quotient_series,
    invariant_slice,
    pairing_matrix,
    poincare_report,
    poincare_series,
    product_formula,
    representation_check,
    sphere_rep,
)
from src.algebra.polyring import Polynomial, parse_polynomial, reynolds, weyl_vector_product
from src.exceptions import DegreeCapExceededError, NotHomogeneousError
from src.lie.rootsys import RootSystem, build_root_system
from src.lie.weyl import parabolic_subgroup, weyl_group


def test_product_formula() -> None:
    assert product_formula([2, 3]) == [1, 2, 2, 1]
    assert product_formula([2, 3, 4]) == [1, 3, 5, 6, 5, 3, 1]
    assert product_formula([]) == [1]


class TestPoincareSeries:
    @classmethod
    def test_rank_two(cls, a2: RootSystem, b2: RootSystem, g2: RootSystem) -> None:
        assert poincare_series(a2) == [1, 2, 2, 1]
        assert poincare_series(b2) == [1, 2, 2, 2, 1]
        assert poincare_series(g2) == [1, 2, 2, 2, 2, 2, 1]

    @classmethod
    def test_a1(cls, a1: RootSystem) -> None:
        assert poincare_series(a1) == [1, 1]

    @classmethod
    def test_report(cls, a3: RootSystem, b2: RootSystem) -> None:
        report = poincare_report(b2)
        assert report.passed
        assert report.full_from_degree == 5
        assert report.length_census == [1, 2, 2, 2, 1]

        assert poincare_report(a3).census == [1, 3, 5, 6, 5, 3, 1]


class TestIdeal:
    @classmethod
    def test_slices(cls, a2: RootSystem) -> None:
        assert invariant_slice(a2, 1).dimension == 0
        assert invariant_slice(a2, 2).dimension == 1
        assert invariant_slice(a2, 3).dimension == 1
        assert ideal_slice(a2, 1).dimension == 0
        assert ideal_slice(a2, 2).dimension == 1
        assert ideal_slice(a2, 3).dimension == 3
        assert ideal_slice(a2, 4).full

    @classmethod
    def test_membership(cls, a2: RootSystem) -> None:
        g1_squared = parse_polynomial("g1^2", 2)
        assert contains(a2, reynolds(a2, g1_squared))
        assert not contains(a2, g1_squared)
        assert not contains(a2, weyl_vector_product(a2))
        assert contains(a2, parse_polynomial("g1^4", 2))
        assert contains(a2, Polynomial.zero(2))

    @classmethod
    def test_membership_errors(cls, a2: RootSystem) -> None:
        with pytest.raises(NotHomogeneousError):
            contains(a2, parse_polynomial("g1^2 + g2", 2))
        with pytest.raises(DegreeCapExceededError):
            contains(a2, parse_polynomial("g1^6", 2), cap=5)

    @classmethod
    def test_stability(cls, b2: RootSystem) -> None:
        assert coinvariant_algebra(b2).ideal_stability(5).passed


class TestHarmonicBasis:
    @classmethod
    def test_a2(cls, a2: RootSystem) -> None:
        assert harmonic_basis(a2, 0) == [Polynomial.constant(2, 6)]
        assert harmonic_basis(a2, 1) == [parse_polynomial("2*g1 + 4*g2", 2), parse_polynomial("4*g1 + 2*g2", 2)]
        assert harmonic_basis(a2, 3) == [weyl_vector_product(a2)]
        assert coinvariant_algebra(a2).top_constant == 6

    @classmethod
    def test_top_constant_is_group_order(cls, b2: RootSystem, g2: RootSystem) -> None:
        assert coinvariant_algebra(b2).top_constant == 8
        assert coinvariant_algebra(g2).top_constant == 12

    @classmethod
    def test_coordinates(cls, a2: RootSystem) -> None:
        values = harmonic_coordinates(a2, parse_polynomial("2*g1 + 4*g2", 2))
        assert [w.word for w, _ in values] == [(0, 1), (1, 0)]
        assert [value for _, value in values] == [1, 0]

        # 6 g1 = 2 Delta_s2s1(d) - Delta_s1s2(d)
        values = harmonic_coordinates(a2, parse_polynomial("g1", 2))
        assert [value for _, value in values] == [Fraction(-1, 6), Fraction(1, 3)]

    @classmethod
    def test_coordinates_modulo_ideal(cls, a2: RootSystem) -> None:
        invariant = reynolds(a2, parse_polynomial("g1^2", 2))
        assert all(value == 0 for _, value in harmonic_coordinates(a2, invariant))


class TestInvariantQuotient:
    @classmethod
    def test_parabolic(cls, b2: RootSystem) -> None:
        assert invariant_quotient_series(b2, parabolic_subgroup(b2, [0])) == [1, 1, 1, 1, 0]
        assert invariant_quotient_series(b2, parabolic_subgroup(b2, [])) == [1, 2, 2, 2, 1]
        assert invariant_quotient_series(b2, parabolic_subgroup(b2, [0, 1])) == [1, 0, 0, 0, 0]

    @classmethod
    def test_a3(cls, a3: RootSystem) -> None:
        series = invariant_quotient_series(a3, parabolic_subgroup(a3, [1]))
        assert series == [1, 2, 3, 3, 2, 1, 0]


class TestHiller:
    @classmethod
    def test_weyl_ideal(cls, a2: RootSystem) -> None:
        report = hiller_criterion(a2, [])
        assert not report.d_in_ideal
        assert report.equals_weyl_ideal
        assert report.dimensions == [(0, 0), (0, 0), (1, 1), (3, 3)]

    @classmethod
    def test_larger_ideal(cls, b2: RootSystem) -> None:
        report = hiller_criterion(b2, [parse_polynomial("g1", 2)])
        assert report.d_in_ideal
        assert not report.equals_weyl_ideal
        assert report.dimensions[1] == (1, 0)

    @classmethod
    def test_rejects_inhomogeneous(cls, a2: RootSystem) -> None:
        with pytest.raises(NotHomogeneousError):
            hiller_criterion(a2, [parse_polynomial("g1 + 1", 2)])


class TestRepresentations:
    @classmethod
    def test_b2_matrices(cls, b2: RootSystem) -> None:
        assert pairing_matrix(b2) == ((2, -2), (-1, 2))
        assert euler_rep(b2, 0) == ((-1, 1), (0, 1))
        assert sphere_rep(b2, 0) == ((-1, 2), (0, 1))

    @classmethod
    def test_pairing_preserved(cls, b3: RootSystem, c3: RootSystem, g2: RootSystem) -> None:
        for rs in (b3, c3, g2):
            report = representation_check(rs)
            assert report.passed, report.failures


SEVEN_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)]


@pytest.mark.parametrize(("letter", "rank"), SEVEN_TYPES)
def test_poincare_agreement(letter: str, rank: int) -> None:
    rs = build_root_system(letter, rank)
    report = poincare_report(rs)
    assert report.passed
    assert report.full_from_degree == rs.n_reflections + 1
    assert sum(report.census) == weyl_group(rs).order


@pytest.mark.parametrize(("letter", "rank"), SEVEN_TYPES)
def test_d_is_not_in_the_weyl_ideal(letter: str, rank: int) -> None:
    rs = build_root_system(letter, rank)
    assert not contains(rs, weyl_vector_product(rs))


@pytest.mark.parametrize(("letter", "rank"), [("A", 2), ("B", 2)])
def test_hiller_detects_a_larger_ideal(letter: str, rank: int) -> None:
    rs = build_root_system(letter, rank)
    assert not hiller_criterion(rs, [parse_polynomial("g1", rank)]).equals_weyl_ideal


@pytest.mark.parametrize(("letter", "rank"), [("A", 2), ("B", 2), ("G", 2)])
def test_harmonic_complement_in_every_degree(letter: str, rank: int) -> None:
    rs = build_root_system(letter, rank)
    census = poincare_series(rs)
    for k in range(rs.n_reflections + 1):
        assert len(harmonic_basis(rs, k)) == census[k]


@pytest.mark.parametrize(("letter", "rank"), [("A", 2), ("B", 2), ("A", 3)])
def test_invariant_dimension_of_every_parabolic(letter: str, rank: int) -> None:
    rs = build_root_system(letter, rank)
    order = weyl_group(rs).order
    for size in range(rank + 1):
        for indices in combinations(range(rank), size):
            subgroup = parabolic_subgroup(rs, indices)
            series = invariant_quotient_series(rs, subgroup)
            assert sum(series) * subgroup.order == order
            assert series[0] == 1

    full = invariant_quotient_series(rs, parabolic_subgroup(rs, range(rank)))
    assert full == [1] + [0] * rs.n_reflections
