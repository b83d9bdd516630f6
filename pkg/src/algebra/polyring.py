"""Sparse polynomials over Q in the simple roots gamma_1..gamma_l, with the W-action.

Text form: ``c*g1^a*g2^b + ...`` printed in graded-lex descending order, with
rational coefficients written as ``p/q``.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterator, Mapping, Sequence
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import TYPE_CHECKING

from src.exceptions import (
    DegreeCapExceededError,
    DimensionMismatchError,
    DivisionRemainderError,
    PolynomialParseError,
)
from src.lie.weyl import weyl_group
from src.utils import format_rational, parse_rational

if TYPE_CHECKING:
    from src.lie.rootsys import RootSystem
    from src.lie.weyl import WeylElement

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]
Scalar = int | Fraction

_TERM = re.compile(r"([+-]?)([^+-]+)")
_VARIABLE = re.compile(r"^g(\d+)(?:\^(\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


class Polynomial:
    __slots__ = ("_terms", "nvars")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            if len(exponent) != nvars:
                raise DimensionMismatchError(nvars, len(exponent))
            if coefficient:
                clean[exponent] = Fraction(coefficient)
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> Polynomial:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: Scalar = 1) -> Polynomial:
        return cls(len(exponent), {exponent: coefficient})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        return cls.monomial(tuple(int(i == j) for j in range(nvars)))

    @classmethod
    def linear_form(cls, coordinates: Sequence[Scalar]) -> Polynomial:
        nvars = len(coordinates)
        return cls(nvars, {tuple(int(i == j) for j in range(nvars)): c for i, c in enumerate(coordinates)})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict[Exponent, Fraction]] = {}
        for exponent, coefficient in self._terms.items():
            parts.setdefault(sum(exponent), {})[exponent] = coefficient

        return {k: Polynomial(self.nvars, parts[k]) for k in sorted(parts)}

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def _check(self, other: Polynomial) -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatchError(self.nvars, other.nvars)

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coefficient

        return Polynomial(self.nvars, terms)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, factor: Scalar) -> Polynomial:
        return Polynomial(self.nvars, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)

        self._check(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2, strict=True))
                terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2

        return Polynomial(self.nvars, terms)

    def __rmul__(self, other: Scalar) -> Polynomial:
        return self.scale(other)

    def __pow__(self, power: int) -> Polynomial:
        if power < 0:
            msg = f"negative exponent {power}"
            raise ValueError(msg)

        result = Polynomial.constant(self.nvars, 1)
        for _ in range(power):
            result *= self

        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented

        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True))

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_polynomial(self)


def _grlex_key(exponent: Exponent) -> tuple[int, Exponent]:
    return sum(exponent), exponent


def _format_monomial(exponent: Exponent) -> str:
    return "*".join(f"g{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exponent) if e)


def format_polynomial(f: Polynomial) -> str:
    if not f:
        return "0"

    parts = []
    for k, (exponent, coefficient) in enumerate(f):
        factors = _format_monomial(exponent)
        magnitude = abs(coefficient)
        if not factors:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = factors
        else:
            body = f"{format_rational(magnitude)}*{factors}"

        if k == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f" - {body}" if coefficient < 0 else f" + {body}")

    return "".join(parts)


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise PolynomialParseError(text, "empty input")

    terms = list(_TERM.finditer(compact))
    if "".join(m.group(0) for m in terms) != compact:
        raise PolynomialParseError(text, "dangling sign")

    result = Polynomial.zero(nvars)
    for match in terms:
        coefficient = Fraction(-1 if match.group(1) == "-" else 1)
        exponent = [0] * nvars
        for factor in match.group(2).split("*"):
            if _NUMBER.match(factor):
                try:
                    coefficient *= parse_rational(factor)
                except ValueError as e:
                    raise PolynomialParseError(text, str(e)) from e
                continue

            variable = _VARIABLE.match(factor)
            if not variable:
                raise PolynomialParseError(text, f"unexpected factor {factor!r}")

            index = int(variable.group(1)) - 1
            if not 0 <= index < nvars:
                raise PolynomialParseError(text, f"variable {factor!r} outside g1..g{nvars}")
            exponent[index] += int(variable.group(2) or 1)

        result += Polynomial.monomial(tuple(exponent), coefficient)

    return result


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    if len(images) != f.nvars:
        raise DimensionMismatchError(f.nvars, len(images))

    nvars = images[0].nvars if images else 0
    powers: list[list[Polynomial]] = [[Polynomial.constant(nvars, 1)] for _ in images]
    result = Polynomial.zero(nvars)

    for exponent, coefficient in f.terms.items():
        term = Polynomial.constant(nvars, coefficient)
        for i, e in enumerate(exponent):
            while len(powers[i]) <= e:
                powers[i].append(powers[i][-1] * images[i])
            if e:
                term *= powers[i][e]
        result += term

    return result


def transform(matrix: Sequence[Sequence[int]], f: Polynomial) -> Polynomial:
    """Apply the linear map whose column i holds the image of gamma_i."""
    rank = len(matrix)
    if f.nvars != rank:
        raise DimensionMismatchError(rank, f.nvars)

    images = [Polynomial.linear_form([matrix[r][i] for r in range(rank)]) for i in range(rank)]

    return substitute(f, images)


def act(w: WeylElement, f: Polynomial) -> Polynomial:
    """(w.f) = f(w.gamma_1, ..., w.gamma_l)."""
    return transform(w.matrix, f)


def evaluate(f: Polynomial, x: Sequence[Scalar]) -> Fraction:
    if len(x) != f.nvars:
        raise DimensionMismatchError(f.nvars, len(x))

    total = Fraction(0)
    for exponent, coefficient in f.terms.items():
        value = coefficient
        for xi, e in zip(x, exponent, strict=True):
            value *= Fraction(xi) ** e
        total += value

    return total


def average(elements: Sequence[WeylElement], f: Polynomial) -> Polynomial:
    total = Polynomial.zero(f.nvars)
    for w in elements:
        total += act(w, f)

    return total.scale(Fraction(1, len(elements)))


def reynolds(rs: RootSystem, f: Polynomial) -> Polynomial:
    return average(weyl_group(rs).elements, f)


def weyl_vector_product(rs: RootSystem) -> Polynomial:
    """d = product of the reduced positive roots."""
    d = Polynomial.constant(rs.rank, 1)
    for root in rs.reduced_positive_roots:
        d *= Polynomial.linear_form(root)

    return d


def divide_by_linear_form(f: Polynomial, alpha: Sequence[Scalar]) -> Polynomial:
    """Exact quotient f / alpha.

    With p the first index where alpha is nonzero, the coordinates y_p = alpha and
    y_j = gamma_j (j != p) turn division by alpha into a shift of the p-th exponent.
    """
    nvars = f.nvars
    p = next((i for i, c in enumerate(alpha) if c), None)
    if p is None or len(alpha) != nvars:
        msg = f"cannot divide by the linear form {tuple(alpha)}"
        raise ValueError(msg)

    c_p = Fraction(alpha[p])
    to_y = [Polynomial.variable(nvars, j) for j in range(nvars)]
    to_y[p] = Polynomial(
        nvars,
        {tuple(int(i == j) for i in range(nvars)): (1 if j == p else -Fraction(alpha[j])) / c_p for j in range(nvars)},
    )
    in_y = substitute(f, to_y)

    remainder = {e: c for e, c in in_y.terms.items() if e[p] == 0}
    if remainder:
        raise DivisionRemainderError(
            str(f), format_polynomial(Polynomial.linear_form(alpha)), str(Polynomial(nvars, remainder))
        )

    shifted = {tuple(k - 1 if i == p else k for i, k in enumerate(e)): c for e, c in in_y.terms.items()}
    back = [Polynomial.variable(nvars, j) for j in range(nvars)]
    back[p] = Polynomial.linear_form(alpha)

    return substitute(Polynomial(nvars, shifted), back)


def graded_dimension(nvars: int, k: int) -> int:
    if k < 0:
        return 0

    return comb(k + nvars - 1, nvars - 1)


def monomial_basis(nvars: int, k: int) -> list[Exponent]:
    """Exponents of degree k in graded-lex descending order."""
    if nvars == 0:
        return [()] if k == 0 else []
    if nvars == 1:
        return [(k,)]

    return [(head, *tail) for head in range(k, -1, -1) for tail in monomial_basis(nvars - 1, k - head)]


def coordinates(f: Polynomial, basis: Sequence[Exponent], index: Mapping[Exponent, int] | None = None) -> list[Fraction]:
    index = index if index is not None else {e: k for k, e in enumerate(basis)}
    vector = [Fraction(0)] * len(basis)
    for exponent, coefficient in f.terms.items():
        vector[index[exponent]] = coefficient

    return vector


def from_coordinates(vector: Sequence[Scalar], basis: Sequence[Exponent], nvars: int) -> Polynomial:
    return Polynomial(nvars, {e: c for e, c in zip(basis, vector, strict=True) if c})


def check_degree(degree: int, cap: int) -> None:
    if degree > cap:
        raise DegreeCapExceededError(degree, cap)
