from __future__ import annotations

from collections.abc import Sequence


class RootSystemError(ValueError):
    def __init__(self, field: str, reason: str):
        self.field = field
        super().__init__(f"{field}: {reason}")


class CustomSystemError(RootSystemError):
    pass


class NotARootError(ValueError):
    def __init__(self, vector: Sequence[object]):
        super().__init__(f"{tuple(vector)} is not a root of this system")


class MultiplicityError(ValueError):
    def __init__(self, reason: str):
        super().__init__(f"multiplicities: {reason}")


class WeylGroupTooLargeError(ValueError):
    def __init__(self, bound: int, order: int | None = None):
        self.bound = bound
        detail = f" (|W| = {order})" if order is not None else ""
        super().__init__(f"Weyl group exceeds the enumeration bound of {bound} elements{detail}")


class NotInClosedChamberError(ValueError):
    def __init__(self, x0: Sequence[object]):
        super().__init__(
            f"x0 = {tuple(str(x) for x in x0)} has a negative simple-root value; "
            "move it to the closed positive chamber first"
        )


class DimensionMismatchError(ValueError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} coordinates, got {got}")


class NotHomogeneousError(ValueError):
    def __init__(self, text: str):
        super().__init__(f"polynomial {text} is not homogeneous")


class DegreeCapExceededError(ValueError):
    def __init__(self, degree: int, cap: int):
        super().__init__(f"degree {degree} exceeds the configured degree cap {cap}")


class PolynomialParseError(ValueError):
    def __init__(self, text: str, reason: str):
        super().__init__(f"cannot parse polynomial {text!r}: {reason}")


class RegimeError(ValueError):
    def __init__(self, reason: str):
        super().__init__(
            f"{reason}; the coinvariant presentation needs all simple root multiplicities "
            "equal to one value m, at least 2 (m in {2, 4, 8})"
        )


class UsageError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """An exact identity that must hold failed: this is a bug, never bad input."""


class DivisionRemainderError(ConsistencyError):
    def __init__(self, dividend: str, divisor: str, remainder: str):
        super().__init__(f"division of {dividend} by {divisor} left the remainder {remainder}")


class RankDefectError(ConsistencyError):
    def __init__(self, what: str, expected: int, got: int):
        super().__init__(f"{what}: expected rank {expected}, got {got}")
