from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from fractions import Fraction

from src.exceptions import UsageError
from src.lie.enums import CartanType

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_CARTAN_LABEL = re.compile(r"^\s*([A-Ga-g])\s*(\d*)\s*$")


def parse_rational(text: str | int) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)

    match = _RATIONAL.match(text)
    if not match:
        msg = f"{text!r} is not a rational of the form p or p/q"
        raise ValueError(msg)

    denominator = int(match.group(2) or 1)
    if denominator == 0:
        msg = f"{text!r} has a zero denominator"
        raise ValueError(msg)

    return Fraction(int(match.group(1)), denominator)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def parse_csv_rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise UsageError(str(e)) from e


def parse_word(text: str) -> tuple[int, ...]:
    try:
        word = tuple(int(part) - 1 for part in text.split(",") if part.strip())
    except ValueError as e:
        msg = f"{text!r} is not a comma separated list of generator indices"
        raise UsageError(msg) from e

    if any(i < 0 for i in word):
        msg = f"generator indices are 1-based, got {text!r}"
        raise UsageError(msg)

    return word


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "e"

    return "".join(f"s{i + 1}" for i in word)


def parse_cartan_label(label: str, rank: int | None = None) -> tuple[CartanType, int]:
    match = _CARTAN_LABEL.match(label)
    if not match:
        msg = f"{label!r} is not a Cartan type label like A2 or E6"
        raise UsageError(msg)

    letter, digits = match.group(1).upper(), match.group(2)
    if digits and rank is not None and int(digits) != rank:
        msg = f"--type {label} contradicts --rank {rank}"
        raise UsageError(msg)

    resolved = int(digits) if digits else rank
    if resolved is None:
        msg = f"--type {label} needs a rank (e.g. {letter}2 or --rank 2)"
        raise UsageError(msg)

    return CartanType(letter), resolved


def stringify_numbers(obj: object) -> object:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int | Fraction):
        return format_rational(obj)
    if isinstance(obj, Mapping):
        return {str(key): stringify_numbers(value) for key, value in obj.items()}
    if isinstance(obj, list | tuple):
        return [stringify_numbers(value) for value in obj]

    return obj
