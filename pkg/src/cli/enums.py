import sys
from enum import Enum, IntEnum

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class Command(StrEnum):
    ROOTS = "roots"
    WEYL = "weyl"
    DIVDIFF = "divdiff"
    COINV = "coinv"
    MORSE = "morse"
    VERIFY = "verify"


class OutputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"


class CheckStatus(StrEnum):
    PASS = "pass"  # noqa: S105
    FAIL = "fail"
    SKIP = "skip"


class ExitCode(IntEnum):
    OK = 0
    FAILED = 1
    USAGE = 2
    INCONSISTENT = 3
