from fractions import Fraction

import pytest

from src.exceptions import DimensionMismatchError, NotInClosedChamberError, WeylGroupTooLargeError
from src.lie.rootsys import RootSystem, build_root_system
from src.lie.weyl import (
    act_on_point,
    count_reduced_words,
    coxeter_exponent,
    coxeter_relations,
    enumerate_elements,
    inversion_set,
    longest_element,
    matrix_order,
    parabolic_subgroup,
    reduced_words,
    simple_reflection_matrix,
    stabilizer,
    weyl_group,
)


class TestWeylGroup:
    @classmethod
    def test_orders(cls, a2: RootSystem, b3: RootSystem, g2: RootSystem) -> None:
        assert weyl_group(a2).order == 6
        assert weyl_group(g2).order == 12
        assert weyl_group(b3).order == 48

    @classmethod
    def test_enumeration_order(cls, a2: RootSystem) -> None:
        words = [w.word for w in weyl_group(a2)]
        assert words == [(), (0,), (1,), (0, 1), (1, 0), (0, 1, 0)]

    @classmethod
    def test_group_operations(cls, a2: RootSystem) -> None:
        group = weyl_group(a2)
        assert group.from_word((0, 1, 0)) == group.from_word((1, 0, 1))
        assert group.multiply(group.simple(0), group.simple(0)) == group.identity

        w = group.from_word((0, 1))
        assert group.multiply(w, group.inverse(w)) == group.identity
        assert group.right_descents(group.longest()) == [0, 1]

    @classmethod
    def test_too_large(cls, a3: RootSystem) -> None:
        with pytest.raises(WeylGroupTooLargeError, match="24"):
            weyl_group(a3, bound=10)


class TestLongestElement:
    @classmethod
    def test_a2(cls, a2: RootSystem) -> None:
        w0 = longest_element(a2)
        assert w0.word == (0, 1, 0)
        assert w0.matrix == ((0, -1), (-1, 0))
        assert reduced_words(a2, w0) == [(0, 1, 0), (1, 0, 1)]
        assert len(inversion_set(a2, w0)) == 3

    @classmethod
    def test_b2_is_central(cls, b2: RootSystem) -> None:
        w0 = longest_element(b2)
        assert w0.length == 4
        assert w0.matrix == ((-1, 0), (0, -1))
        assert len(reduced_words(b2, w0)) == 2

    @classmethod
    def test_length_census(cls, g2: RootSystem) -> None:
        levels = weyl_group(g2).by_length()
        assert [len(levels[k]) for k in sorted(levels)] == [1, 2, 2, 2, 2, 2, 1]


class TestCoxeterData:
    @classmethod
    def test_simple_reflection(cls, a2: RootSystem) -> None:
        assert simple_reflection_matrix(a2.cartan, 0) == ((-1, 1), (0, 1))
        assert matrix_order(simple_reflection_matrix(a2.cartan, 0)) == 2
        assert matrix_order(((1, 0), (0, 1))) == 1

    @classmethod
    def test_relations(cls, a3: RootSystem, b2: RootSystem, c3: RootSystem, g2: RootSystem) -> None:
        assert coxeter_exponent(g2.cartan, 0, 1) == 6
        assert coxeter_exponent(b2.cartan, 0, 1) == 4
        assert coxeter_exponent(a3.cartan, 0, 2) == 2
        for rs in (a3, b2, c3, g2):
            assert coxeter_relations(rs) == []


class TestPointAction:
    @classmethod
    def test_act_on_point(cls, a2: RootSystem) -> None:
        group = weyl_group(a2)
        x0 = (Fraction(1), Fraction(1))
        assert act_on_point(group, group.simple(0), x0) == (Fraction(-1), Fraction(2))
        assert act_on_point(group, group.longest(), x0) == (Fraction(-1), Fraction(-1))

    @classmethod
    def test_stabilizer(cls, b2: RootSystem) -> None:
        h = stabilizer(b2, (Fraction(0), Fraction(1)))
        assert h.generators == (0,)
        assert h.order == 2
        assert stabilizer(b2, (Fraction(0), Fraction(0))).order == 8
        assert parabolic_subgroup(b2, []).order == 1

    @classmethod
    def test_rejects_bad_points(cls, b2: RootSystem) -> None:
        with pytest.raises(DimensionMismatchError):
            stabilizer(b2, (Fraction(1),))
        with pytest.raises(NotInClosedChamberError):
            stabilizer(b2, (Fraction(-1), Fraction(1)))


class TestEnumeration:
    @classmethod
    def test_a1(cls, a1: RootSystem) -> None:
        assert [w.word for w in enumerate_elements(a1)] == [(), (0,)]

    @classmethod
    def test_a2(cls, a2: RootSystem) -> None:
        elements = enumerate_elements(a2)
        assert sorted(w.length for w in elements) == [0, 1, 1, 2, 2, 3]
        assert len({w.matrix for w in elements}) == 6

    @classmethod
    def test_b2(cls, b2: RootSystem) -> None:
        elements = enumerate_elements(b2)
        assert len(elements) == 8
        assert max(w.length for w in elements) == 4
        assert elements == list(weyl_group(b2))


class TestReducedWordCounts:
    @classmethod
    def test_longest_elements(cls, a2: RootSystem, a3: RootSystem, b2: RootSystem, g2: RootSystem) -> None:
        assert count_reduced_words(a2, longest_element(a2)) == 2
        assert count_reduced_words(b2, longest_element(b2)) == 2
        assert count_reduced_words(g2, longest_element(g2)) == 2
        assert count_reduced_words(a3, longest_element(a3)) == 16

        a4 = build_root_system("A", 4)
        assert count_reduced_words(a4, longest_element(a4)) == 768

    @classmethod
    def test_matches_listing(cls, a3: RootSystem, b3: RootSystem) -> None:
        for rs in (a3, b3):
            for w in weyl_group(rs):
                assert count_reduced_words(rs, w) == len(reduced_words(rs, w))
