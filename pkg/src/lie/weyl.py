from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property

from src import config
from src.algebra.linalg import identity, mat_mul
from src.exceptions import (
    ConsistencyError,
    DimensionMismatchError,
    NotInClosedChamberError,
    WeylGroupTooLargeError,
)
from src.lie.rootsys import Matrix, Root, RootSystem

logger = logging.getLogger(__name__)

_COXETER_EXPONENTS = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class WeylElement:
    """Group element identified by its integer action matrix on a*.

    Column j of ``matrix`` holds the simple-root coordinates of w(gamma_j). The
    word is the lexicographically smallest reduced word and only certifies the matrix.
    """

    matrix: Matrix
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class Subgroup:
    generators: tuple[int, ...]
    elements: tuple[WeylElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def simple_reflection_matrix(cartan: Matrix, i: int) -> Matrix:
    """s_i(gamma_c) = gamma_c - a_ic gamma_i."""
    rank = len(cartan)

    return tuple(
        tuple(int(r == c) - (cartan[i][c] if r == i else 0) for c in range(rank)) for r in range(rank)
    )


def coxeter_exponent(cartan: Matrix, i: int, j: int) -> int:
    return _COXETER_EXPONENTS[cartan[i][j] * cartan[j][i]]


def matrix_order(matrix: Matrix, limit: int = 12) -> int | None:
    one = identity(len(matrix))
    power = matrix
    for k in range(1, limit + 1):
        if power == one:
            return k
        power = mat_mul(power, matrix)

    return None


def coxeter_violations(generators: Sequence[Matrix], cartan: Matrix) -> list[str]:
    problems = []
    for i, s in enumerate(generators):
        if matrix_order(s) != 2:  # noqa: PLR2004
            problems.append(f"s{i + 1} is not an involution")

    for i in range(len(generators)):
        for j in range(i + 1, len(generators)):
            expected = coxeter_exponent(cartan, i, j)
            found = matrix_order(mat_mul(generators[i], generators[j]))
            if found != expected:
                problems.append(f"(s{i + 1}s{j + 1}) has order {found}, expected {expected}")

    return problems


class WeylGroup:
    def __init__(self, cartan: Matrix, elements: Sequence[WeylElement]):
        self.cartan = cartan
        self.rank = len(cartan)
        self.elements = tuple(elements)
        self.generators = tuple(simple_reflection_matrix(cartan, i) for i in range(self.rank))
        self._by_matrix = {w.matrix: w for w in self.elements}
        self._position = {w.matrix: k for k, w in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def position(self, w: WeylElement) -> int:
        return self._position[w.matrix]

    def lookup(self, matrix: Matrix) -> WeylElement:
        try:
            return self._by_matrix[matrix]
        except KeyError as e:
            msg = f"matrix {matrix} is not an element of this Weyl group"
            raise ConsistencyError(msg) from e

    def multiply(self, w: WeylElement, v: WeylElement) -> WeylElement:
        return self.lookup(mat_mul(w.matrix, v.matrix))

    def from_word(self, word: Sequence[int]) -> WeylElement:
        matrix = identity(self.rank)
        for i in word:
            matrix = mat_mul(matrix, self.generators[i])

        return self.lookup(matrix)

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(tuple(reversed(w.word)))

    def simple(self, i: int) -> WeylElement:
        return self.lookup(self.generators[i])

    def right_descents(self, w: WeylElement) -> list[int]:
        return [i for i in range(self.rank) if self.multiply(w, self.simple(i)).length < w.length]

    def by_length(self) -> dict[int, list[WeylElement]]:
        levels: dict[int, list[WeylElement]] = {}
        for w in self.elements:
            levels.setdefault(w.length, []).append(w)

        return levels

    def longest(self) -> WeylElement:
        return self.elements[-1]

    @cached_property
    def reduced_word_counts(self) -> dict[Matrix, int]:
        # a reduced word of v ending in s_i is a reduced word of v s_i followed by i
        counts = {self.identity.matrix: 1}
        for v in self.elements[1:]:
            total = 0
            for s in self.generators:
                u = self.lookup(mat_mul(v.matrix, s))
                if u.length < v.length:
                    total += counts[u.matrix]
            counts[v.matrix] = total

        return counts


@cache
def _enumerate(cartan: Matrix, bound: int) -> WeylGroup:
    rank = len(cartan)
    generators = [simple_reflection_matrix(cartan, i) for i in range(rank)]

    start = WeylElement(matrix=identity(rank), word=())
    seen = {start.matrix}
    elements = [start]
    frontier = [start]

    while frontier:
        level = []
        for w in sorted(frontier, key=lambda e: e.word):
            for i, s in enumerate(generators):
                matrix = mat_mul(w.matrix, s)
                if matrix in seen:
                    continue
                seen.add(matrix)
                level.append(WeylElement(matrix=matrix, word=(*w.word, i)))
                if len(seen) > bound:
                    raise WeylGroupTooLargeError(bound)
        elements.extend(level)
        frontier = level

    return WeylGroup(cartan, elements)


def weyl_group(rs: RootSystem, bound: int | None = None) -> WeylGroup:
    bound = bound if bound is not None else config.WEYL_ORDER_BOUND
    if rs.weyl_order > bound:
        raise WeylGroupTooLargeError(bound, rs.weyl_order)

    group = _enumerate(rs.cartan, bound)
    if group.order != rs.weyl_order:
        msg = f"enumerated {group.order} elements for {rs.label}, expected {rs.weyl_order}"
        raise ConsistencyError(msg)

    logger.debug("Weyl group of %s has %s elements", rs.label, group.order)

    return group


def enumerate_elements(rs: RootSystem) -> list[WeylElement]:
    return list(weyl_group(rs).elements)


def longest_element(rs: RootSystem) -> WeylElement:
    group = weyl_group(rs)
    w0 = group.longest()
    if w0.length != rs.n_reflections or sum(1 for w in group if w.length == w0.length) != 1:
        msg = f"longest element of {rs.label} has length {w0.length}, expected a unique one of length {rs.n_reflections}"
        raise ConsistencyError(msg)

    return w0


def reduced_words(rs: RootSystem, w: WeylElement) -> list[tuple[int, ...]]:
    """All reduced words of w, sorted lexicographically."""
    group = weyl_group(rs)
    memo: dict[Matrix, list[tuple[int, ...]]] = {group.identity.matrix: [()]}

    def words(v: WeylElement) -> list[tuple[int, ...]]:
        if v.matrix not in memo:
            memo[v.matrix] = [
                (*prefix, i)
                for i in group.right_descents(v)
                for prefix in words(group.multiply(v, group.simple(i)))
            ]
        return memo[v.matrix]

    return sorted(words(group.lookup(w.matrix)))


def count_reduced_words(rs: RootSystem, w: WeylElement) -> int:
    return weyl_group(rs).reduced_word_counts[w.matrix]


def is_positive(root: Sequence[int]) -> bool:
    return all(c >= 0 for c in root)


def apply(w: WeylElement, vector: Sequence[int]) -> Root:
    return tuple(sum(row[j] * vector[j] for j in range(len(vector))) for row in w.matrix)


def inversion_set(rs: RootSystem, w: WeylElement) -> list[Root]:
    return [root for root in rs.reduced_positive_roots if not is_positive(apply(w, root))]


def act_on_point(group: WeylGroup, w: WeylElement, x0: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Simple-root values of w.x0 given those of x0: gamma_i(w.x0) = (w^-1 gamma_i)(x0)."""
    inverse = group.inverse(w).matrix

    return tuple(
        sum((inverse[j][i] * Fraction(x0[j]) for j in range(group.rank)), Fraction(0)) for i in range(group.rank)
    )


def root_value(root: Sequence[int], point: Sequence[Fraction]) -> Fraction:
    return sum((c * x for c, x in zip(root, point, strict=True)), Fraction(0))


def parabolic_subgroup(rs: RootSystem, indices: Sequence[int]) -> Subgroup:
    """Subgroup generated by the simple reflections s_i, i in ``indices`` (0-based)."""
    group = weyl_group(rs)
    generators = tuple(sorted(set(indices)))

    seen = {group.identity.matrix: group.identity}
    frontier = [group.identity]
    while frontier:
        upper = []
        for w in frontier:
            for i in generators:
                v = group.multiply(w, group.simple(i))
                if v.matrix not in seen:
                    seen[v.matrix] = v
                    upper.append(v)
        frontier = upper

    elements = tuple(sorted(seen.values(), key=group.position))

    return Subgroup(generators=generators, elements=elements)


def check_chamber_point(rs: RootSystem, x0: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if len(x0) != rs.rank:
        raise DimensionMismatchError(rs.rank, len(x0))

    point = tuple(Fraction(x) for x in x0)
    if any(x < 0 for x in point):
        raise NotInClosedChamberError(point)

    return point


def stabilizer(rs: RootSystem, x0: Sequence[Fraction]) -> Subgroup:
    point = check_chamber_point(rs, x0)

    return parabolic_subgroup(rs, [i for i, x in enumerate(point) if x == 0])


def coxeter_relations(rs: RootSystem) -> list[str]:
    return coxeter_violations(weyl_group(rs).generators, rs.cartan)
