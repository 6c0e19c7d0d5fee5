"""Vertical-run decomposition and queries used by the compaction operations.

A subpillar is a contiguous vertical run of cubes at a fixed (x, y); a pillar
is a maximal one.  The pillar graph joins pillars containing face-adjacent
cubes.  Non-cut, locking and side-adjacency queries all reduce to set
operations on the host configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator

from .grid import Cell, Configuration, ModelError, is_connected_cells

SIDES: tuple[tuple[int, int], ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True, order=True)
class Subpillar:
    x: int
    y: int
    z_b: int
    z_t: int

    def __post_init__(self):
        if self.z_b > self.z_t:
            raise ModelError(f"pillar with z_b > z_t: {self}")

    @property
    def height(self) -> int:
        return self.z_t - self.z_b + 1

    @property
    def head(self) -> Cell:
        return (self.x, self.y, self.z_t)

    @property
    def base(self) -> Cell:
        return (self.x, self.y, self.z_b)

    def cells(self) -> Iterator[Cell]:
        for z in range(self.z_b, self.z_t + 1):
            yield (self.x, self.y, z)

    def support(self) -> Iterator[Cell]:
        for z in range(self.z_b, self.z_t):
            yield (self.x, self.y, z)

    def column(self) -> tuple[int, int]:
        return (self.x, self.y)

    def overlaps_range(self, other: "Subpillar") -> bool:
        return max(self.z_b, other.z_b) <= min(self.z_t, other.z_t)


def decompose_pillars(cells: Iterable[Cell]) -> list[Subpillar]:
    """Maximal vertical runs, sorted by (x, y, z_b); a partition of the input."""
    out: list[Subpillar] = []
    for (x, y), group in groupby(
        sorted(cells), key=lambda c: (c[0], c[1])
    ):
        zs = [c[2] for c in group]
        run_start = zs[0]
        prev = zs[0]
        for z in zs[1:]:
            if z != prev + 1:
                out.append(Subpillar(x, y, run_start, prev))
                run_start = z
            prev = z
        out.append(Subpillar(x, y, run_start, prev))
    return out


@dataclass
class PillarGraph:
    vertices: list[Subpillar]
    edges: dict[Subpillar, list[Subpillar]]


def pillars_adjacent(a: Subpillar, b: Subpillar) -> bool:
    dx = abs(a.x - b.x)
    dy = abs(a.y - b.y)
    if dx + dy != 1:
        return False
    return a.overlaps_range(b)


def pillar_graph(cells: Iterable[Cell]) -> PillarGraph:
    verts = decompose_pillars(cells)
    by_col: dict[tuple[int, int], list[Subpillar]] = {}
    for p in verts:
        by_col.setdefault(p.column(), []).append(p)
    edges: dict[Subpillar, list[Subpillar]] = {p: [] for p in verts}
    for p in verts:
        for dx, dy in SIDES:
            for q in by_col.get((p.x + dx, p.y + dy), ()):
                if p.overlaps_range(q):
                    edges[p].append(q)
    for p in edges:
        edges[p].sort()
    return PillarGraph(verts, edges)


def _pillar_of(cfg: Configuration, p: Subpillar) -> None:
    cells = set(p.cells())
    if not cells <= cfg.cubes:
        raise ModelError(f"not a subpillar of the configuration: {p}")


def is_maximal_pillar(cfg: Configuration, p: Subpillar) -> bool:
    _pillar_of(cfg, p)
    return (
        (p.x, p.y, p.z_b - 1) not in cfg.cubes
        and (p.x, p.y, p.z_t + 1) not in cfg.cubes
    )


def is_non_cut_pillar(cfg: Configuration, p: Subpillar) -> bool:
    """Removal of the pillar leaves the rest connected or empty.

    For a maximal pillar this coincides with being a non-cut vertex of the
    pillar graph; ``non_cut_pillar_by_graph`` offers that second
    characterization for cross-checking.
    """
    _pillar_of(cfg, p)
    return is_connected_cells(cfg.cubes - set(p.cells()))


def non_cut_pillar_by_graph(cfg: Configuration, p: Subpillar) -> bool:
    pg = pillar_graph(cfg.cubes)
    if p not in pg.edges:
        raise ModelError(f"not a maximal pillar of the configuration: {p}")
    rest = [v for v in pg.vertices if v != p]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        cur = stack.pop()
        for nb in pg.edges[cur]:
            if nb != p and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(rest)


def is_locked(cfg: Configuration, p: Subpillar) -> bool:
    """The head's only neighbour is the pillar's own support cube.

    Height-1 pillars have no support and count as unlocked.
    """
    _pillar_of(cfg, p)
    if p.height < 2:
        return False
    hx, hy, hz = p.head
    support = (hx, hy, hz - 1)
    for nb in ((hx + 1, hy, hz), (hx - 1, hy, hz), (hx, hy + 1, hz),
               (hx, hy - 1, hz), (hx, hy, hz + 1)):
        if nb in cfg.cubes:
            return False
    return support in cfg.cubes


def adjacent_pillars(
    cfg: Configuration, p: Subpillar, side: tuple[int, int]
) -> list[Subpillar]:
    """Maximal pillars in the neighbouring column that touch ``p``, by z_b."""
    _pillar_of(cfg, p)
    cx, cy = p.x + side[0], p.y + side[1]
    col = sorted(z for (x, y, z) in cfg.cubes if x == cx and y == cy)
    out: list[Subpillar] = []
    if not col:
        return out
    run_start = prev = col[0]
    runs = []
    for z in col[1:]:
        if z != prev + 1:
            runs.append((run_start, prev))
            run_start = z
        prev = z
    runs.append((run_start, prev))
    for z_b, z_t in runs:
        q = Subpillar(cx, cy, z_b, z_t)
        if p.overlaps_range(q):
            out.append(q)
    return out
