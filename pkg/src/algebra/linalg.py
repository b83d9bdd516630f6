"""Exact linear algebra over the rationals.

Elimination runs fraction-free (Bareiss) on integer rows obtained by clearing
denominators row by row; only the final reduced row echelon form is expressed in
rationals.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

Number = int | Fraction


def clear_denominators(row: Sequence[Number]) -> tuple[list[int], int]:
    scale = lcm(*(Fraction(x).denominator for x in row))

    return [int(Fraction(x) * scale) for x in row], scale


def echelon_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Fraction-free row echelon form; returns only the nonzero rows.

    After the k-th pivot every entry below it is a (k+1)-minor of the input,
    so the division by the previous pivot is exact.
    """
    if not rows:
        return []

    matrix = [list(row) for row in rows]
    ncols = len(matrix[0])
    rank = 0
    previous = 1

    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue

        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank]
        p = head[col]
        for r in range(rank + 1, len(matrix)):
            a = matrix[r][col]
            matrix[r] = [(p * x - a * y) // previous for x, y in zip(matrix[r], head, strict=True)]

        previous = p
        rank += 1
        if rank == len(matrix):
            break

    return matrix[:rank]


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(echelon_form([clear_denominators(row)[0] for row in rows]))


def determinant(rows: Sequence[Sequence[Number]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)

    cleared = [clear_denominators(row) for row in rows]
    matrix = [row for row, _ in cleared]
    scale = prod(s for _, s in cleared)

    sign = 1
    previous = 1
    for k in range(n - 1):
        if not matrix[k][k]:
            swap = next((i for i in range(k + 1, n) if matrix[i][k]), None)
            if swap is None:
                return Fraction(0)
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign

        for i in range(k + 1, n):
            for j in range(k + 1, n):
                matrix[i][j] = (matrix[k][k] * matrix[i][j] - matrix[i][k] * matrix[k][j]) // previous

        previous = matrix[k][k]

    return Fraction(sign * matrix[n - 1][n - 1], scale)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    columns = list(zip(*b, strict=True))

    return tuple(tuple(sum(x * y for x, y in zip(row, col, strict=True)) for col in columns) for row in a)


def transpose(a: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*a, strict=True))


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RowSpace:
    """A subspace of Q^ncols stored in reduced row echelon form."""

    ncols: int
    rows: tuple[tuple[Fraction, ...], ...] = ()
    pivots: tuple[int, ...] = ()

    @classmethod
    def span(cls, ncols: int, vectors: Sequence[Sequence[Number]]) -> RowSpace:
        nonzero = [clear_denominators(v)[0] for v in vectors if any(v)]
        echelon = echelon_form(nonzero)

        pivots = [next(c for c, x in enumerate(row) if x) for row in echelon]
        reduced = [[Fraction(x, row[p]) for x in row] for row, p in zip(echelon, pivots, strict=True)]

        for i in reversed(range(len(reduced))):
            p = pivots[i]
            for j in range(i):
                factor = reduced[j][p]
                if factor:
                    reduced[j] = [a - factor * b for a, b in zip(reduced[j], reduced[i], strict=True)]

        return cls(ncols=ncols, rows=tuple(tuple(row) for row in reduced), pivots=tuple(pivots))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def residue(self, vector: Sequence[Number]) -> list[Fraction]:
        residue = [Fraction(x) for x in vector]
        for row, p in zip(self.rows, self.pivots, strict=True):
            factor = residue[p]
            if factor:
                residue = [a - factor * b for a, b in zip(residue, row, strict=True)]

        return residue

    def contains(self, vector: Sequence[Number]) -> bool:
        return not any(self.residue(vector))

    def extend(self, vectors: Sequence[Sequence[Number]]) -> RowSpace:
        return RowSpace.span(self.ncols, [*self.rows, *vectors])
