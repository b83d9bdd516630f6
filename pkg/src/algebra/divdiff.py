"""Divided differences Delta_alpha(f) = (f - s_alpha.f) / alpha and their compositions."""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from functools import cache

from src import config
from src.algebra.polyring import (
    Exponent,
    Polynomial,
    divide_by_linear_form,
    monomial_basis,
    transform,
)
from src.exceptions import NotARootError
from src.lie.rootsys import RootSystem, reflection_matrix
from src.lie.weyl import WeylElement, reduced_words, weyl_group
from src.models import LawReport

logger = logging.getLogger(__name__)

_MAX_REPORTED_FAILURES = 5


class DividedDifferences:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.group = weyl_group(rs)
        self._simple: dict[tuple[int, Exponent], Polynomial] = {}
        self._element: dict[tuple[tuple[tuple[int, ...], ...], Exponent], Polynomial] = {}

    def root(self, alpha: Sequence[int], f: Polynomial) -> Polynomial:
        alpha = tuple(alpha)
        if alpha not in self.rs.root_index:
            raise NotARootError(alpha)

        return divide_by_linear_form(f - transform(reflection_matrix(self.rs, alpha), f), alpha)

    def simple(self, i: int, f: Polynomial) -> Polynomial:
        result = Polynomial.zero(self.rs.rank)
        for exponent, coefficient in f.terms.items():
            key = (i, exponent)
            if key not in self._simple:
                simple_root = self.rs.simple_roots[i]
                self._simple[key] = self.root(simple_root, Polynomial.monomial(exponent))
            result += self._simple[key].scale(coefficient)

        return result

    def word(self, word: Sequence[int], f: Polynomial) -> Polynomial:
        """Delta_{i1} ... Delta_{ik} f; the rightmost operator acts first."""
        for i in reversed(word):
            if not f:
                break
            f = self.simple(i, f)

        return f

    def element(self, w: WeylElement, f: Polynomial) -> Polynomial:
        result = Polynomial.zero(self.rs.rank)
        for exponent, coefficient in f.terms.items():
            result += self._on_monomial(w, exponent).scale(coefficient)

        return result

    def _on_monomial(self, w: WeylElement, exponent: Exponent) -> Polynomial:
        if w.length == 0:
            return Polynomial.monomial(exponent)
        if w.length > sum(exponent):
            return Polynomial.zero(self.rs.rank)

        key = (w.matrix, exponent)
        if key not in self._element:
            # Delta_w = Delta_{i1} Delta_{s_i1 w}, and s_i1 w has the reduced word w.word[1:]
            head = w.word[0]
            rest = self.group.multiply(self.group.simple(head), w)
            self._element[key] = self.simple(head, self._on_monomial(rest, exponent))
            logger.debug("Cached Delta_%s on %s", w.word, exponent)

        return self._element[key]


@cache
def calculus(rs: RootSystem) -> DividedDifferences:
    return DividedDifferences(rs)


def delta_alpha(rs: RootSystem, alpha: Sequence[int], f: Polynomial) -> Polynomial:
    return calculus(rs).root(alpha, f)


def delta_w(rs: RootSystem, w: WeylElement, f: Polynomial) -> Polynomial:
    return calculus(rs).element(w, f)


def delta_word(rs: RootSystem, word: Sequence[int], f: Polynomial) -> Polynomial:
    return calculus(rs).word(word, f)


def monomials_up_to(nvars: int, cap: int) -> list[Exponent]:
    return [e for k in range(cap + 1) for e in monomial_basis(nvars, k)]


def _note(failures: list[str], text: str) -> None:
    if len(failures) < _MAX_REPORTED_FAILURES:
        failures.append(text)


def well_defined(rs: RootSystem, w: WeylElement, degree_cap: int) -> LawReport:
    """Every reduced word of w gives the same operator on S^{<=degree_cap}."""
    ops = calculus(rs)
    words = reduced_words(rs, w)
    failures: list[str] = []
    cases = 0

    for exponent in monomials_up_to(rs.rank, degree_cap):
        m = Polynomial.monomial(exponent)
        reference = ops.word(words[0], m)
        for word in words[1:]:
            cases += 1
            if ops.word(word, m) != reference:
                _note(failures, f"words {words[0]} and {word} differ on {m}")

    return LawReport(law="reduced_word_independence", passed=not failures, cases=cases, failures=failures)


def composition_check(rs: RootSystem, w: WeylElement, w_prime: WeylElement, degree_cap: int) -> LawReport:
    """Delta_w Delta_w' = Delta_ww' if l(ww') = l(w) + l(w'), else 0."""
    ops = calculus(rs)
    product = ops.group.multiply(w, w_prime)
    additive = product.length == w.length + w_prime.length
    failures: list[str] = []
    cases = 0

    for exponent in monomials_up_to(rs.rank, degree_cap):
        m = Polynomial.monomial(exponent)
        cases += 1
        composed = ops.element(w, ops.element(w_prime, m))
        expected = ops.element(product, m) if additive else Polynomial.zero(rs.rank)
        if composed != expected:
            _note(failures, f"Delta_{w.word} Delta_{w_prime.word} on {m}: {composed} != {expected}")

    return LawReport(law="composition_rule", passed=not failures, cases=cases, failures=failures)


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 3, max_terms: int = 3) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree)
        exponent = rng.choice(monomial_basis(nvars, degree))
        terms[exponent] = rng.choice([c for c in range(-3, 4) if c])

    return Polynomial(nvars, terms)


def leibniz_check(rs: RootSystem, seed: int | None = None, samples: int | None = None) -> LawReport:
    rng = random.Random(seed if seed is not None else config.DEFAULT_SEED)  # noqa: S311
    samples = samples if samples is not None else config.LEIBNIZ_SAMPLES
    ops = calculus(rs)
    failures: list[str] = []
    cases = 0

    for _ in range(samples):
        f = random_polynomial(rng, rs.rank)
        g = random_polynomial(rng, rs.rank)
        for i in range(rs.rank):
            cases += 1
            lhs = ops.simple(i, f * g)
            rhs = ops.simple(i, f) * g + transform(ops.group.generators[i], f) * ops.simple(i, g)
            if lhs != rhs:
                _note(failures, f"s{i + 1} on f = {f}, g = {g}")

    logger.info("Leibniz rule on %s: %s cases, %s failures", rs.label, cases, len(failures))

    return LawReport(law="leibniz", passed=not failures, cases=cases, failures=failures)


def nilpotence_check(rs: RootSystem, degree_cap: int) -> LawReport:
    ops = calculus(rs)
    failures: list[str] = []
    cases = 0

    for alpha in rs.reduced_positive_roots:
        for exponent in monomials_up_to(rs.rank, degree_cap):
            cases += 1
            once = ops.root(alpha, Polynomial.monomial(exponent))
            if ops.root(alpha, once):
                _note(failures, f"Delta_{alpha}^2 on {Polynomial.monomial(exponent)}")

    return LawReport(law="nilpotence", passed=not failures, cases=cases, failures=failures)

