"""Core lattice model: cells, configurations, moves and their legality rules.

Cells are plain ``(x, y, z)`` integer tuples.  A configuration is a finite,
face-connected set of occupied cells.  A cube may relocate by a *slide* (to a
face-adjacent cell, witnessed by a 4-cycle containing three cubes) or by a
*convex transition* (diagonally across a 4-cycle containing exactly two
adjacent cubes).  Either is legal only if the remaining cubes stay connected.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

Cell = tuple[int, int, int]

# Face-neighbour offsets, fixed order: +x, -x, +y, -y, +z, -z.
DIRS6: tuple[Cell, ...] = (
    (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1),
)

# Horizontal sides of a column, fixed scan order: +x, -x, +y, -y.
SIDES4: tuple[tuple[int, int], ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


def add(c: Cell, d: Cell) -> Cell:
    return (c[0] + d[0], c[1] + d[1], c[2] + d[2])


def neighbors(c: Cell) -> Iterator[Cell]:
    x, y, z = c
    yield (x + 1, y, z)
    yield (x - 1, y, z)
    yield (x, y + 1, z)
    yield (x, y - 1, z)
    yield (x, y, z + 1)
    yield (x, y, z - 1)


class MoveKind(Enum):
    SLIDE = "slide"
    CONVEX = "convex"


class Move(NamedTuple):
    kind: MoveKind
    frm: Cell
    to: Cell

    def reversed(self) -> "Move":
        return Move(self.kind, self.to, self.frm)


class ModelError(Exception):
    """Base class for model-level failures."""


class IllegalMove(ModelError):
    """A move failed a legality condition; ``reason`` names the first one."""

    def __init__(self, reason: str, move: Move):
        super().__init__(f"{reason}: {move.kind.value} {move.frm} -> {move.to}")
        self.reason = reason
        self.move = move


class BoundingBox(NamedTuple):
    lo: Cell
    hi: Cell

    def __contains__(self, c) -> bool:
        return all(self.lo[i] <= c[i] <= self.hi[i] for i in range(3))

    def cells(self) -> Iterator[Cell]:
        for x in range(self.lo[0], self.hi[0] + 1):
            for y in range(self.lo[1], self.hi[1] + 1):
                for z in range(self.lo[2], self.hi[2] + 1):
                    yield (x, y, z)


def is_connected_cells(cells: Iterable[Cell]) -> bool:
    """True iff the face-adjacency graph over ``cells`` has one component.

    The empty set counts as connected.
    """
    cs = set(cells)
    if not cs:
        return True
    start = next(iter(cs))
    seen = {start}
    queue = deque((start,))
    while queue:
        cur = queue.popleft()
        for nb in neighbors(cur):
            if nb in cs and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cs)


def connected_components(cells: Iterable[Cell]) -> list[frozenset[Cell]]:
    cs = set(cells)
    comps = []
    while cs:
        start = next(iter(cs))
        seen = {start}
        queue = deque((start,))
        while queue:
            cur = queue.popleft()
            for nb in neighbors(cur):
                if nb in cs and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        comps.append(frozenset(seen))
        cs -= seen
    return comps


class Configuration:
    """An immutable, face-connected set of at least two cubes.

    Negative coordinates are representable (a floor walk transits z = -1);
    nonnegativity is enforced only at safe-sequence boundaries.
    """

    __slots__ = ("cubes",)

    def __init__(self, cubes: Iterable[Cell], validate: bool = True):
        frozen = frozenset(cubes)
        if validate:
            for c in frozen:
                if len(c) != 3 or not all(isinstance(v, int) for v in c):
                    raise ModelError(f"not an integer cell: {c!r}")
            if len(frozen) < 2:
                raise ModelError("configuration needs at least two cubes")
            if not is_connected_cells(frozen):
                raise ModelError("configuration is not connected")
        object.__setattr__(self, "cubes", frozen)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Configuration is immutable")

    def __len__(self) -> int:
        return len(self.cubes)

    def __contains__(self, c) -> bool:
        return c in self.cubes

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cubes)

    def __eq__(self, other) -> bool:
        return isinstance(other, Configuration) and self.cubes == other.cubes

    def __hash__(self) -> int:
        return hash(self.cubes)

    def __repr__(self) -> str:
        return f"Configuration({sorted(self.cubes)!r})"

    @property
    def count(self) -> int:
        return len(self.cubes)

    def sorted_cubes(self) -> list[Cell]:
        return sorted(self.cubes)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 and y >= 0 and z >= 0 for x, y, z in self.cubes)


def is_connected(cfg: Configuration) -> bool:
    return is_connected_cells(cfg.cubes)


def is_non_cut(cfg: Configuration, s: Iterable[Cell]) -> bool:
    """True iff removing ``s`` leaves a connected-or-empty cube set."""
    s = set(s)
    if not s <= cfg.cubes:
        raise ModelError("non-cut query for cells not in the configuration")
    return is_connected_cells(cfg.cubes - s)


def _slide_witness(cubes: frozenset[Cell] | set[Cell], frm: Cell, to: Cell) -> bool:
    """A slide needs a 4-cycle through frm and to whose other two cells are cubes."""
    d = (to[0] - frm[0], to[1] - frm[1], to[2] - frm[2])
    for p in DIRS6:
        if p == d or p == (-d[0], -d[1], -d[2]):
            continue
        if add(frm, p) in cubes and add(to, p) in cubes:
            return True
    return False


def _convex_witness(cubes: frozenset[Cell] | set[Cell], frm: Cell, to: Cell) -> bool:
    """A convex transition's 4-cycle must hold exactly two cubes: the mover and
    one corner adjacent to it; the destination is the cell opposite the mover."""
    i, j = [a for a in range(3) if frm[a] != to[a]]
    corner_a = list(frm)
    corner_a[i] = to[i]
    corner_b = list(frm)
    corner_b[j] = to[j]
    return (tuple(corner_a) in cubes) != (tuple(corner_b) in cubes)


def _diff_axes(frm: Cell, to: Cell) -> list[int]:
    return [i for i in range(3) if frm[i] != to[i]]


def check_move(cfg: Configuration, mv: Move) -> None:
    """Raise IllegalMove naming the first violated condition; return on success."""
    if mv.frm not in cfg.cubes:
        raise IllegalMove("SourceEmpty", mv)
    if mv.to in cfg.cubes:
        raise IllegalMove("DestinationOccupied", mv)
    axes = _diff_axes(mv.frm, mv.to)
    steps = [abs(mv.to[i] - mv.frm[i]) for i in axes]
    if mv.kind is MoveKind.SLIDE:
        if len(axes) != 1 or steps != [1]:
            raise IllegalMove("NoWitnessCycle", mv)
        if not _slide_witness(cfg.cubes, mv.frm, mv.to):
            raise IllegalMove("NoWitnessCycle", mv)
    else:
        if len(axes) != 2 or steps != [1, 1]:
            raise IllegalMove("NoWitnessCycle", mv)
        if not _convex_witness(cfg.cubes, mv.frm, mv.to):
            raise IllegalMove("NoWitnessCycle", mv)
    if not is_connected_cells(cfg.cubes - {mv.frm}):
        raise IllegalMove("Disconnects", mv)


def is_legal_move(cfg: Configuration, mv: Move) -> bool:
    try:
        check_move(cfg, mv)
    except IllegalMove:
        return False
    return True


def _candidate_moves_of(cubes: frozenset[Cell], c: Cell) -> Iterator[Move]:
    """Occupancy-legal moves of cube ``c`` (connectivity not yet checked)."""
    for d in DIRS6:
        to = add(c, d)
        if to not in cubes and _slide_witness(cubes, c, to):
            yield Move(MoveKind.SLIDE, c, to)
    for i in range(3):
        for j in range(i + 1, 3):
            for si in (1, -1):
                for sj in (1, -1):
                    to = list(c)
                    to[i] += si
                    to[j] += sj
                    to = (to[0], to[1], to[2])
                    if to not in cubes and _convex_witness(cubes, c, to):
                        yield Move(MoveKind.CONVEX, c, to)


def moves_of_cube(cfg: Configuration, c: Cell) -> list[Move]:
    """Legal moves of one cube, in deterministic (frm, to, kind) order."""
    if not is_connected_cells(cfg.cubes - {c}):
        return []
    out = [mv for mv in _candidate_moves_of(cfg.cubes, c)]
    out.sort(key=lambda m: (m.frm, m.to, m.kind.value))
    return out


def legal_moves(cfg: Configuration) -> list[Move]:
    """All legal moves, sorted by (frm, to, kind)."""
    out: list[Move] = []
    for c in cfg.sorted_cubes():
        out.extend(moves_of_cube(cfg, c))
    out.sort(key=lambda m: (m.frm, m.to, m.kind.value))
    return out


def apply_move(cfg: Configuration, mv: Move) -> Configuration:
    check_move(cfg, mv)
    return Configuration((cfg.cubes - {mv.frm}) | {mv.to}, validate=False)


def apply_move_unchecked(cfg: Configuration, mv: Move) -> Configuration:
    return Configuration((cfg.cubes - {mv.frm}) | {mv.to}, validate=False)


def is_finished_cube(cfg: Configuration, c: Cell) -> bool:
    """True iff the axis-aligned cuboid spanned by the origin and ``c`` is filled."""
    if c not in cfg.cubes:
        raise ModelError(f"cube not in configuration: {c}")
    x, y, z = c
    if x < 0 or y < 0 or z < 0:
        return False
    cubes = cfg.cubes
    for i in range(x + 1):
        for j in range(y + 1):
            for k in range(z + 1):
                if (i, j, k) not in cubes:
                    return False
    return True


def is_finished(cfg: Configuration) -> bool:
    if (0, 0, 0) not in cfg.cubes:
        return False
    # Checking maximal cells first fails fast on unfinished shapes.
    for c in sorted(cfg.cubes, key=lambda c: -(c[0] + c[1] + c[2])):
        if not is_finished_cube(cfg, c):
            return False
    return True


def bounding_box(cfg: Configuration) -> BoundingBox:
    if not cfg.cubes:
        raise ModelError("bounding box of an empty configuration")
    xs = [c[0] for c in cfg.cubes]
    ys = [c[1] for c in cfg.cubes]
    zs = [c[2] for c in cfg.cubes]
    return BoundingBox((min(xs), min(ys), min(zs)), (max(xs), max(ys), max(zs)))
