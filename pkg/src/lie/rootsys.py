"""Root systems with exact geometry, expressed in the simple-root basis of a*.

Every vector of a* is a coordinate tuple with respect to the simple roots
gamma_1..gamma_l; roots therefore have integer coordinates of one sign, and the
Weyl group acts by integer matrices. Long roots have squared length 2.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import prod

from src import config
from src.algebra.linalg import determinant
from src.exceptions import ConsistencyError, MultiplicityError, NotARootError, RootSystemError
from src.lie.enums import CartanType

logger = logging.getLogger(__name__)

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]

_MINIMAL_RANK = {CartanType.A: 1, CartanType.B: 2, CartanType.C: 2, CartanType.D: 3}
_FIXED_RANKS = {CartanType.E: (6, 7, 8), CartanType.F: (4,), CartanType.G: (2,)}
_E_ROOT_COUNTS = {6: 36, 7: 63, 8: 120}
_E_DEGREES = {
    6: (2, 5, 6, 8, 9, 12),
    7: (2, 6, 8, 10, 12, 14, 18),
    8: (2, 8, 12, 14, 18, 20, 24, 30),
}


@dataclass(frozen=True)
class MultiplicityTable:
    """Root multiplicities, one value per positive root, constant on W-orbits.

    Values follow the combined convention: the multiplicity of an indivisible root
    already counts the contribution of its double.
    """

    values: tuple[tuple[Root, int], ...]
    orbits: tuple[tuple[Root, ...], ...]
    uniform_m: int | None

    @cached_property
    def _lookup(self) -> dict[Root, int]:
        return dict(self.values)

    def of(self, root: Root) -> int:
        return self._lookup[root]

    @property
    def theorem2_regime(self) -> bool:
        return self.uniform_m is not None and self.uniform_m in config.THEOREM2_MULTIPLICITIES


@dataclass(frozen=True)
class RootSystem:
    rank: int
    gram: RationalMatrix
    cartan: Matrix
    positive_roots: tuple[Root, ...]
    degrees: tuple[int, ...]
    components: tuple[tuple[CartanType, int], ...]
    cartan_type: CartanType | None = None
    multiplicities: MultiplicityTable | None = None

    @property
    def label(self) -> str:
        if self.cartan_type is not None:
            return f"{self.cartan_type}{self.rank}"

        return "x".join(f"{t}{r}" for t, r in self.components)

    @property
    def n(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {root: k for k, root in enumerate(self.positive_roots)}

    @cached_property
    def reduced_positive_roots(self) -> tuple[Root, ...]:
        index = self.root_index

        def halved(root: Root) -> Root | None:
            if any(c % 2 for c in root):
                return None
            return tuple(c // 2 for c in root)

        return tuple(root for root in self.positive_roots if halved(root) not in index)

    @property
    def reduced(self) -> bool:
        return len(self.reduced_positive_roots) == self.n

    @property
    def n_reflections(self) -> int:
        return len(self.reduced_positive_roots)

    @property
    def weyl_order(self) -> int:
        return prod(self.degrees)

    def is_root(self, vector: Sequence[int]) -> bool:
        vector = tuple(vector)
        return vector in self.root_index or tuple(-c for c in vector) in self.root_index

    def inner(self, x: Sequence[Fraction | int], y: Sequence[Fraction | int]) -> Fraction:
        return sum(
            (Fraction(x[i]) * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def coroot_pairing(self, x: Sequence[int], i: int) -> int:
        """<x, gamma_i^vee> for an integral x."""
        return sum(x[j] * self.cartan[i][j] for j in range(self.rank))


def _dynkin_data(cartan_type: CartanType, rank: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    chain = [(i, i + 1) for i in range(rank - 1)]

    match cartan_type:
        case CartanType.A:
            return [Fraction(2)] * rank, chain
        case CartanType.B:
            return [Fraction(2)] * (rank - 1) + [Fraction(1)], chain
        case CartanType.C:
            return [Fraction(1)] * (rank - 1) + [Fraction(2)], chain
        case CartanType.D:
            return [Fraction(2)] * rank, [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
        case CartanType.E:
            return [Fraction(2)] * rank, [(0, 2), *[(i, i + 1) for i in range(2, rank - 1)], (1, 3)]
        case CartanType.F:
            return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)], chain
        case CartanType.G:
            return [Fraction(2, 3), Fraction(2)], chain


def expected_root_count(cartan_type: CartanType, rank: int) -> int:
    match cartan_type:
        case CartanType.A:
            return rank * (rank + 1) // 2
        case CartanType.B | CartanType.C:
            return rank * rank
        case CartanType.D:
            return rank * (rank - 1)
        case CartanType.E:
            return _E_ROOT_COUNTS[rank]
        case CartanType.F:
            return 24
        case CartanType.G:
            return 6


def fundamental_degrees(cartan_type: CartanType, rank: int) -> tuple[int, ...]:
    match cartan_type:
        case CartanType.A:
            degrees: tuple[int, ...] = tuple(range(2, rank + 2))
        case CartanType.B | CartanType.C:
            degrees = tuple(range(2, 2 * rank + 1, 2))
        case CartanType.D:
            degrees = (*range(2, 2 * rank - 1, 2), rank)
        case CartanType.E:
            degrees = _E_DEGREES[rank]
        case CartanType.F:
            degrees = (2, 6, 8, 12)
        case CartanType.G:
            degrees = (2, 6)

    return tuple(sorted(degrees))


def _check_type_rank(cartan_type: CartanType, rank: int) -> None:
    if cartan_type in _FIXED_RANKS:
        if rank not in _FIXED_RANKS[cartan_type]:
            allowed = ", ".join(str(r) for r in _FIXED_RANKS[cartan_type])
            raise RootSystemError("rank", f"type {cartan_type} exists only in rank {allowed}, got {rank}")
    elif rank < _MINIMAL_RANK[cartan_type]:
        raise RootSystemError("rank", f"type {cartan_type} needs rank >= {_MINIMAL_RANK[cartan_type]}, got {rank}")


def _cartan_from_gram(gram: RationalMatrix) -> Matrix:
    rows = []
    for i, row in enumerate(gram):
        entries = []
        for j in range(len(gram)):
            value = 2 * row[j] / gram[i][i]
            if value.denominator != 1:
                raise RootSystemError("gram", f"2<g{j + 1},g{i + 1}>/<g{i + 1},g{i + 1}> = {value} is not an integer")
            entries.append(int(value))
        rows.append(tuple(entries))

    return tuple(rows)


def _reflect_root(cartan: Matrix, root: Root, i: int) -> Root:
    pairing = sum(root[j] * cartan[i][j] for j in range(len(root)))

    return tuple(c - pairing if j == i else c for j, c in enumerate(root))


def _root_sort_key(root: Root) -> tuple[int, tuple[int, ...]]:
    return sum(root), tuple(-c for c in root)


def _positive_root_closure(cartan: Matrix) -> tuple[Root, ...]:
    rank = len(cartan)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)

    while frontier:
        upper = []
        for root in frontier:
            for i in range(rank):
                image = _reflect_root(cartan, root, i)
                if all(c >= 0 for c in image) and image not in seen:
                    seen.add(image)
                    upper.append(image)
        frontier = upper

    return tuple(sorted(seen, key=_root_sort_key))


def build_root_system(cartan_type: CartanType | str, rank: int) -> RootSystem:
    try:
        cartan_type = CartanType(str(cartan_type).upper())
    except ValueError as e:
        raise RootSystemError("cartan_type", f"unknown type {cartan_type!r}") from e

    _check_type_rank(cartan_type, rank)

    lengths, edges = _dynkin_data(cartan_type, rank)
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    for i, length in enumerate(lengths):
        gram[i][i] = length
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2

    frozen_gram = tuple(tuple(row) for row in gram)
    cartan = _cartan_from_gram(frozen_gram)

    rs = RootSystem(
        rank=rank,
        gram=frozen_gram,
        cartan=cartan,
        positive_roots=_positive_root_closure(cartan),
        degrees=fundamental_degrees(cartan_type, rank),
        components=((cartan_type, rank),),
        cartan_type=cartan_type,
    )
    validate(rs)
    logger.debug("Built %s with %s positive roots", rs.label, rs.n)

    return rs


def _connected_components(cartan: Matrix) -> list[list[int]]:
    rank = len(cartan)
    unvisited = set(range(rank))
    components = []
    while unvisited:
        stack = [min(unvisited)]
        component = set()
        while stack:
            node = stack.pop()
            if node in component:
                continue
            component.add(node)
            stack.extend(j for j in range(rank) if j != node and cartan[node][j] and j not in component)
        unvisited -= component
        components.append(sorted(component))

    return sorted(components)


def _component_type(cartan: Matrix, lengths: Sequence[Fraction], n_roots: int) -> tuple[CartanType, int] | None:
    rank = len(cartan)
    if rank == 1:
        return (CartanType.A, 1) if n_roots == 1 else None

    bond = max(cartan[i][j] * cartan[j][i] for i, j in combinations(range(rank), 2))
    if bond == 3:  # noqa: PLR2004
        return (CartanType.G, 2) if rank == 2 and n_roots == 6 else None  # noqa: PLR2004

    if bond <= 1:
        candidates = [CartanType.A, CartanType.D, CartanType.E]
    elif rank == 4 and n_roots == 24:  # noqa: PLR2004
        return CartanType.F, 4
    else:
        short = sum(1 for length in lengths if length < max(lengths))
        candidates = [CartanType.B if short == 1 else CartanType.C]

    for candidate in candidates:
        if candidate in _FIXED_RANKS and rank not in _FIXED_RANKS[candidate]:
            continue
        if rank >= _MINIMAL_RANK.get(candidate, 0) and expected_root_count(candidate, rank) == n_roots:
            return candidate, rank

    return None


def classify(rs: RootSystem) -> tuple[tuple[CartanType, int], ...]:
    return _classify(rs.cartan, rs.gram, rs.reduced_positive_roots)


def _classify(cartan: Matrix, gram: RationalMatrix, reduced_roots: Sequence[Root]) -> tuple[tuple[CartanType, int], ...]:
    found = []
    for component in _connected_components(cartan):
        members = set(component)
        sub = tuple(tuple(cartan[i][j] for j in component) for i in component)
        lengths = [gram[i][i] for i in component]
        n_roots = sum(1 for root in reduced_roots if all(c == 0 or j in members for j, c in enumerate(root)))

        kind = _component_type(sub, lengths, n_roots)
        if kind is None:
            nodes = ",".join(str(i + 1) for i in component)
            raise RootSystemError("positive_roots", f"component on simple roots {nodes} is not a finite root system")
        found.append(kind)

    return tuple(found)


def from_positive_roots(
    rank: int,
    gram: Sequence[Sequence[Fraction]],
    positive_roots: Sequence[Sequence[int]],
) -> RootSystem:
    """Build a root system from explicit data (non-reduced input allowed)."""
    if rank < 1:
        raise RootSystemError("rank", f"must be positive, got {rank}")
    if len(gram) != rank or any(len(row) != rank for row in gram):
        raise RootSystemError("gram", f"must be a {rank}x{rank} matrix")
    if any(len(root) != rank for root in positive_roots):
        raise RootSystemError("positive_roots", f"every root needs {rank} coordinates")
    if any(gram[i][i] <= 0 for i in range(rank)):
        raise RootSystemError("gram", "diagonal entries must be positive")

    frozen_gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
    roots = tuple(sorted({tuple(int(c) for c in root) for root in positive_roots}, key=_root_sort_key))
    if len(roots) != len(positive_roots):
        raise RootSystemError("positive_roots", "contains duplicates")

    cartan = _cartan_from_gram(frozen_gram)
    candidate = RootSystem(
        rank=rank, gram=frozen_gram, cartan=cartan, positive_roots=roots, degrees=(), components=()
    )
    problems = check_invariants(candidate, check_degrees=False)
    if problems:
        raise RootSystemError(*problems[0])

    components = classify(candidate)
    degrees = tuple(sorted(d for t, r in components for d in fundamental_degrees(t, r)))
    rs = replace(candidate, components=components, degrees=degrees)
    validate(rs)

    return rs


def check_invariants(rs: RootSystem, *, check_degrees: bool = True) -> list[tuple[str, str]]:
    problems: list[tuple[str, str]] = []
    rank = rs.rank

    if any(rs.gram[i][j] != rs.gram[j][i] for i in range(rank) for j in range(rank)):
        problems.append(("gram", "not symmetric"))
    for k in range(1, rank + 1):
        minor = determinant([row[:k] for row in rs.gram[:k]])
        if minor <= 0:
            problems.append(("gram", f"not positive definite (leading minor {k} is {minor})"))
            break

    for i in range(rank):
        if rs.cartan[i][i] != 2:  # noqa: PLR2004
            problems.append(("cartan", f"diagonal entry {i + 1} is {rs.cartan[i][i]}"))
        for j in range(rank):
            if i != j and rs.cartan[i][j] > 0:
                problems.append(("cartan", f"entry ({i + 1},{j + 1}) is positive"))

    index = rs.root_index
    for root in rs.positive_roots:
        if any(c < 0 for c in root) or not any(root):
            problems.append(("positive_roots", f"{root} is not a nonzero nonnegative vector"))
    for simple in rs.simple_roots:
        if simple not in index:
            problems.append(("positive_roots", f"simple root {simple} is missing"))

    if not problems:
        for root in rs.positive_roots:
            for i in range(rank):
                image = _reflect_root(rs.cartan, root, i)
                if image not in index and tuple(-c for c in image) not in index:
                    problems.append(("positive_roots", f"s{i + 1}{root} = {image} is not a root"))

    if check_degrees and not problems:
        if len(rs.degrees) != rank:
            problems.append(("degrees", f"expected {rank} degrees, got {len(rs.degrees)}"))
        if sum(rs.degrees) != rs.n_reflections + rank:
            problems.append(("degrees", f"sum {sum(rs.degrees)} differs from N + l = {rs.n_reflections + rank}"))
        expected = sum(expected_root_count(t, r) for t, r in rs.components)
        if expected != rs.n_reflections:
            problems.append(("positive_roots", f"expected {expected} reflections, found {rs.n_reflections}"))

    return problems


def validate(rs: RootSystem) -> None:
    problems = check_invariants(rs)
    if problems:
        raise RootSystemError(*problems[0])


def cartan_matrix(rs: RootSystem) -> Matrix:
    """d_ij = 2<gamma_j, gamma_i>/<gamma_i, gamma_i>."""
    return rs.cartan


def reflect(rs: RootSystem, alpha: Sequence[int], x: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """s_alpha(x) = x - 2 <x, alpha>/<alpha, alpha> alpha."""
    if not rs.is_root(alpha):
        raise NotARootError(alpha)

    factor = 2 * rs.inner(x, alpha) / rs.inner(alpha, alpha)

    return tuple(Fraction(xi) - factor * ai for xi, ai in zip(x, alpha, strict=True))


def reflection_matrix(rs: RootSystem, alpha: Sequence[int]) -> Matrix:
    """Integer matrix of s_alpha; column j holds the coordinates of s_alpha(gamma_j)."""
    if not rs.is_root(alpha):
        raise NotARootError(alpha)

    columns = [reflect(rs, alpha, simple) for simple in rs.simple_roots]
    if any(c.denominator != 1 for column in columns for c in column):
        msg = f"reflection in {tuple(alpha)} is not integral"
        raise ConsistencyError(msg)

    return tuple(tuple(int(columns[j][i]) for j in range(rs.rank)) for i in range(rs.rank))


def root_orbits(rs: RootSystem) -> tuple[tuple[Root, ...], ...]:
    index = rs.root_index
    parent = list(range(rs.n))

    def find(k: int) -> int:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for k, root in enumerate(rs.positive_roots):
        for i in range(rs.rank):
            image = _reflect_root(rs.cartan, root, i)
            if any(c < 0 for c in image):
                image = tuple(-c for c in image)
            a, b = find(k), find(index[image])
            if a != b:
                parent[max(a, b)] = min(a, b)

    orbits: dict[int, list[Root]] = {}
    for k, root in enumerate(rs.positive_roots):
        orbits.setdefault(find(k), []).append(root)

    return tuple(tuple(orbits[key]) for key in sorted(orbits))


def attach_multiplicities(rs: RootSystem, table_or_uniform: int | Mapping[Root, int]) -> RootSystem:
    orbits = root_orbits(rs)

    if isinstance(table_or_uniform, int):
        if table_or_uniform < 1:
            msg = f"m must be at least 1, got {table_or_uniform}"
            raise MultiplicityError(msg)
        per_orbit = [table_or_uniform] * len(orbits)
    else:
        table = {tuple(root): value for root, value in table_or_uniform.items()}
        for root, value in table.items():
            if root not in rs.root_index:
                msg = f"{root} is not a positive root"
                raise MultiplicityError(msg)
            if value < 1:
                msg = f"m{root} must be at least 1, got {value}"
                raise MultiplicityError(msg)

        per_orbit = []
        for orbit in orbits:
            given = {table[root] for root in orbit if root in table}
            if not given:
                msg = f"orbit of {orbit[0]} is not covered"
                raise MultiplicityError(msg)
            if len(given) > 1:
                msg = f"values {sorted(given)} are not constant on the orbit of {orbit[0]}"
                raise MultiplicityError(msg)
            per_orbit.append(given.pop())

    orbit_of = {root: k for k, orbit in enumerate(orbits) for root in orbit}
    values = tuple((root, per_orbit[orbit_of[root]]) for root in rs.positive_roots)
    simple_values = {per_orbit[orbit_of[simple]] for simple in rs.simple_roots}
    uniform = simple_values.pop() if len(simple_values) == 1 else None

    table_model = MultiplicityTable(values=values, orbits=orbits, uniform_m=uniform)
    logger.debug("Attached multiplicities to %s (uniform m = %s)", rs.label, uniform)

    return replace(rs, multiplicities=table_model)
