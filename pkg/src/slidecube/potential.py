"""Weighted potential function and the safe-sequence ledger.

Every cube contributes ``w * (x + 2y + 4z)`` where the weight tier depends on
height (and, at ground level, on depth).  The compactor must strictly lower
the total per emitted plan, spending at most ``C_SAFE`` moves per unit of
potential; ``assert_safe`` enforces both at plan boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .grid import Cell, Configuration, ModelError

# Frozen after measuring the worst per-plan ratio across the development
# corpus (exhaustive n<=4 sweep, 1000 random instances, shove/gather fixtures).
# The observed maximum stayed below 12; 16 leaves headroom without letting a
# regression hide.
C_SAFE = 16


class NotPotentialReducing(ModelError):
    pass


class SafetyFactorExceeded(ModelError):
    pass


def weight(c: Cell) -> int:
    x, y, z = c
    if x < 0 or y < 0 or z < 0:
        raise ModelError(f"weight of a negative cell: {c}")
    if z > 1:
        return 5
    if z == 1:
        return 4
    if y > 1:
        return 3
    if y == 1:
        return 2
    return 1


def cube_potential(c: Cell) -> int:
    x, y, z = c
    return weight(c) * (x + 2 * y + 4 * z)


def config_potential(cfg: Configuration) -> int:
    return sum(cube_potential(c) for c in cfg.cubes)


def potential_of_cells(cells: Iterable[Cell]) -> int:
    return sum(cube_potential(c) for c in cells)


def coord_sum(cells: Iterable[Cell]) -> tuple[int, int, int]:
    sx = sy = sz = 0
    for x, y, z in cells:
        sx += x
        sy += y
        sz += z
    return (sx, sy, sz)


@dataclass(frozen=True)
class PotentialLedger:
    pi_start: int
    pi_end: int
    moves: int

    @property
    def safety_factor(self) -> Fraction:
        return Fraction(self.moves, self.pi_start - self.pi_end)


def assert_safe(
    before: Configuration, after: Configuration, moves: int
) -> PotentialLedger:
    """Check a completed move sequence against the safety contract.

    Both endpoint configurations must be nonnegative; the potential must have
    strictly dropped and the move count must stay within C_SAFE times the
    drop.
    """
    if moves < 1:
        raise ModelError("a move sequence has at least one move")
    if not before.is_nonnegative() or not after.is_nonnegative():
        raise ModelError("safe sequences start and end nonnegative")
    pi_before = config_potential(before)
    pi_after = config_potential(after)
    if pi_after >= pi_before:
        raise NotPotentialReducing(
            f"potential did not drop: {pi_before} -> {pi_after}"
        )
    if moves > C_SAFE * (pi_before - pi_after):
        raise SafetyFactorExceeded(
            f"{moves} moves for a potential drop of {pi_before - pi_after}"
        )
    return PotentialLedger(pi_before, pi_after, moves)


def move_gain(frm: Cell, to: Cell) -> int:
    """Potential change of relocating one cube (negative is an improvement)."""
    return cube_potential(to) - cube_potential(frm)


def rank_key(frm: Cell, to: Cell) -> tuple:
    """Greedy ranking: biggest potential drop, ties to the smallest (z, y, x)."""
    return (move_gain(frm, to), (to[2], to[1], to[0]))
