from __future__ import annotations

import logging
from dataclasses import dataclass

from src.exceptions import UsageError
from src.lie.enums import CartanType, SymmetricSpace
from src.lie.rootsys import RootSystem, attach_multiplicities, build_root_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpacePreset:
    space: SymmetricSpace
    name: str
    m: int
    letter: CartanType | None = None
    rank: int | None = None

    def resolve(self, letter: CartanType | None, rank: int | None) -> tuple[CartanType, int]:
        if self.letter is None:
            if letter is None or rank is None:
                msg = f"--space {self.space} needs --type"
                raise UsageError(msg)
            return letter, rank

        if letter is not None and letter != self.letter:
            msg = f"--space {self.space} has restricted roots of type {self.letter}, not {letter}"
            raise UsageError(msg)
        if self.rank is not None and rank is not None and rank != self.rank:
            msg = f"--space {self.space} has restricted rank {self.rank}, not {rank}"
            raise UsageError(msg)

        resolved = self.rank if self.rank is not None else rank
        if resolved is None:
            msg = f"--space {self.space} needs --rank"
            raise UsageError(msg)

        return self.letter, resolved


# the restricted roots of these spaces are reduced, so m is also m_alpha + m_2alpha
SPACE_PRESETS: dict[SymmetricSpace, SpacePreset] = {
    SymmetricSpace.COMPACT_GROUP: SpacePreset(SymmetricSpace.COMPACT_GROUP, "G_C/B = K/T", 2),
    SymmetricSpace.SU_SP: SpacePreset(SymmetricSpace.SU_SP, "SU(2n)/Sp(n), rank n - 1", 4, CartanType.A),
    SymmetricSpace.E6_F4: SpacePreset(SymmetricSpace.E6_F4, "E6(-26)/F4", 8, CartanType.A, 2),
}


def space_system(space: SymmetricSpace | str, letter: CartanType | str | None, rank: int | None) -> RootSystem:
    try:
        preset = SPACE_PRESETS[SymmetricSpace(space)]
    except ValueError as e:
        msg = f"unknown space {space!r}, expected one of {', '.join(SymmetricSpace)}"
        raise UsageError(msg) from e

    cartan_type, resolved = preset.resolve(CartanType(letter) if letter is not None else None, rank)
    rs = attach_multiplicities(build_root_system(cartan_type, resolved), preset.m)
    logger.info("Space %s: restricted roots %s with m = %s", preset.name, rs.label, preset.m)

    return rs
