from __future__ import annotations

from fractions import Fraction
from pathlib import Path  # noqa: TC003

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from src.cli.enums import CheckStatus, OutputFormat
from src.lie.enums import SymmetricSpace
from src.utils import parse_rational


class CustomRootSystemModel(BaseModel):
    """Root data read from a JSON file; rationals are written as "p/q" strings."""

    model_config = ConfigDict(extra="forbid")

    name: str | None = None
    rank: int = Field(ge=1)
    gram: list[list[str | int]]
    positive_roots: list[list[int]]
    multiplicities: dict[str, int] | None = None

    @field_validator("gram")
    @classmethod
    def _check_rationals(cls, gram: list[list[str | int]]) -> list[list[str | int]]:
        for row in gram:
            for entry in row:
                parse_rational(entry)

        return gram

    @field_validator("multiplicities")
    @classmethod
    def _check_keys(cls, multiplicities: dict[str, int] | None) -> dict[str, int] | None:
        for key in multiplicities or {}:
            parse_root_key(key)

        return multiplicities

    @property
    def gram_matrix(self) -> list[list[Fraction]]:
        return [[parse_rational(entry) for entry in row] for row in self.gram]

    @property
    def multiplicity_table(self) -> dict[tuple[int, ...], int] | None:
        if self.multiplicities is None:
            return None

        return {parse_root_key(key): value for key, value in self.multiplicities.items()}


def parse_root_key(key: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in key.split(","))
    except ValueError as e:
        msg = f"multiplicity key {key!r} is not a comma separated root"
        raise ValueError(msg) from e


class MultiplicityFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    multiplicities: dict[str, int]

    @property
    def table(self) -> dict[tuple[int, ...], int]:
        return {parse_root_key(key): value for key, value in self.multiplicities.items()}


class RunConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    command: str
    action: str | None = None
    cartan_type: str | None = None
    rank: int | None = None
    custom: Path | None = None
    space: SymmetricSpace | None = None
    m: int | None = None
    mult_table: Path | None = None
    x0: tuple[Fraction, ...] | None = None
    cap: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    seed: int = 0
    repeat_cosets: bool = False

    @model_validator(mode="after")
    def _one_source(self) -> RunConfig:
        if self.space is not None:
            if self.custom is not None or self.m is not None or self.mult_table is not None:
                msg = "--space fixes the root system and multiplicities; drop --custom, --m and --mult-table"
                raise ValueError(msg)
        elif (self.cartan_type is None) == (self.custom is None):
            msg = "give exactly one root system source: --type, --custom or --space"
            raise ValueError(msg)
        if self.m is not None and self.mult_table is not None:
            msg = "--m and --mult-table are mutually exclusive"
            raise ValueError(msg)
        if self.cap is not None and self.cap < 0:
            msg = "--cap must be nonnegative"
            raise ValueError(msg)

        return self


class CheckModel(BaseModel):
    name: str
    status: CheckStatus
    expected: str = ""
    computed: str = ""
    anchor: str = ""
    reason: str | None = None


class VerificationReport(BaseModel):
    system: str
    checks: list[CheckModel] = []

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.status != CheckStatus.FAIL for check in self.checks)


class LawReport(BaseModel):
    law: str
    passed: bool
    cases: int
    failures: list[str] = []


class PoincareReport(BaseModel):
    census: list[int]
    product_formula: list[int]
    length_census: list[int]
    full_from_degree: int | None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.census == self.product_formula == self.length_census
            and self.full_from_degree == len(self.census)
        )


class HillerReport(BaseModel):
    extra_generators: list[str]
    dimensions: list[tuple[int, int]]
    d_in_ideal: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def equals_weyl_ideal(self) -> bool:
        return not self.d_in_ideal


class MorseReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True, arbitrary_types_allowed=True)

    x0: list[Fraction]
    orbit_size: int
    stabilizer_order: int
    indices: list[int]
    betti: list[int]
    coinvariant_series: list[int]
    euler_characteristic: int
    passed: bool = Field(serialization_alias="pass")


class PerfectnessReport(BaseModel):
    pairs_checked: int
    violations: list[str]
    hypothesis_holds: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.hypothesis_holds or not self.violations
