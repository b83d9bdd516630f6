import sys
from enum import Enum

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class CartanType(StrEnum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"


class SymmetricSpace(StrEnum):
    COMPACT_GROUP = "compact-group"
    SU_SP = "su-sp"
    E6_F4 = "e6-f4"
