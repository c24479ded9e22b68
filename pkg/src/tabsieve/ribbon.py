"""Semistandard r-ribbon tableaux, domino reading words and Yamanouchi domino
tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

from .partitions import (Cell, Partition, PartitionError, removable_ribbons,
                         ribbon_height, r_core, trim)
from .tableaux import is_yamanouchi


class RibbonError(ValueError):
    """Precondition failure for ribbon tableau operations."""


Ribbon = frozenset  # frozenset[Cell]


def ribbon_head(ribbon: Ribbon) -> Cell:
    """North-east end: the rightmost cell of the top row."""
    top = min(r for r, _ in ribbon)
    return (top, max(c for r, c in ribbon if r == top))


def ribbon_tail(ribbon: Ribbon) -> Cell:
    """South-west end: the leftmost cell of the bottom row."""
    bottom = max(r for r, _ in ribbon)
    return (bottom, min(c for r, c in ribbon if r == bottom))


@dataclass(frozen=True)
class RibbonTableau:
    """Ribbons with one entry each, listed in canonical order (by entry, then
    by head cell)."""

    shape: Partition
    r: int
    ribbons: tuple[tuple[Ribbon, int], ...]

    @property
    def content(self) -> tuple[int, ...]:
        top = max((e for _, e in self.ribbons), default=0)
        counts = [0] * top
        for _, e in self.ribbons:
            counts[e - 1] += 1
        return tuple(counts)

    def cell_entries(self) -> dict[Cell, int]:
        return {cell: e for rib, e in self.ribbons for cell in rib}

    def spin(self) -> int:
        return sum(ribbon_height(rib) - 1 for rib, _ in self.ribbons)

    def __str__(self) -> str:
        return format_ribbon_tableau(self)


def is_horizontal_ribbon_strip(ribbons: Sequence[Ribbon]) -> bool:
    """No cell of the strip lies directly above the head of one of its
    ribbons."""
    cells = set().union(*ribbons) if ribbons else set()
    for rib in ribbons:
        r, c = ribbon_head(rib)
        if (r - 1, c) in cells:
            return False
    return True


@cache
def horizontal_ribbon_strips(p: Partition, r: int, k: int
                             ) -> tuple[tuple[Partition, tuple[Ribbon, ...]], ...]:
    """All (q, ribbons) with p/q tiled by k r-ribbons forming a horizontal
    ribbon strip, where the ribbons can be peeled one by one from p."""
    found: dict[frozenset, tuple[Partition, tuple[Ribbon, ...]]] = {}

    def rec(q: Partition, taken: tuple[Ribbon, ...]) -> None:
        if len(taken) == k:
            key = frozenset(taken)
            if key not in found and is_horizontal_ribbon_strip(taken):
                found[key] = (q, tuple(sorted(taken, key=ribbon_head)))
            return
        for q2, rib in removable_ribbons(q, r):
            rec(q2, taken + (rib,))

    rec(trim(p), ())
    return tuple(sorted(found.values(), key=lambda x: (x[0], [sorted(y) for y in x[1]])))


def _check_ribbon_args(shape: Partition, r: int, content: Sequence[int]) -> None:
    if r < 1:
        raise RibbonError("r must be positive")
    if r_core(shape, r):
        raise RibbonError(f"{shape} has nonempty {r}-core")
    if r * sum(content) != sum(shape):
        raise RibbonError("weight mismatch: r * |content| must equal |shape|")
    if any(x < 0 for x in content):
        raise RibbonError("negative content entry")


def enumerate_ribbon_tableaux(shape: Sequence[int], r: int,
                              content: Sequence[int]) -> list[RibbonTableau]:
    """Semistandard r-ribbon tableaux of the given shape and content.

    The ribbons carrying entry i form a horizontal ribbon strip between the
    shapes filled by entries < i and <= i.  Enumeration peels the largest entry
    first.
    """
    shape = trim(shape)
    content = tuple(content)
    _check_ribbon_args(shape, r, content)
    return list(_iter_ribbon(shape, r, content))


def _iter_ribbon(shape: Partition, r: int, content: tuple[int, ...]
                 ) -> Iterator[RibbonTableau]:
    t = len(content)

    def rec(p: Partition, level: int) -> Iterator[tuple[tuple[Ribbon, int], ...]]:
        if level == 0:
            if not p:
                yield ()
            return
        for q, ribs in horizontal_ribbon_strips(p, r, content[level - 1]):
            for rest in rec(q, level - 1):
                yield rest + tuple((rib, level) for rib in ribs)

    for ribbons in rec(shape, t):
        yield RibbonTableau(shape, r, ribbons)


def domino_reading_word(d: RibbonTableau) -> tuple[int, ...]:
    """Columns left to right, each bottom to top; every domino is read once,
    where it is first met."""
    if d.r != 2:
        raise RibbonError("reading words are defined for dominoes only")
    owner = {}
    for idx, (rib, _) in enumerate(d.ribbons):
        for cell in rib:
            owner[cell] = idx
    seen = set()
    word = []
    for cell in sorted(owner, key=lambda rc: (rc[1], -rc[0])):
        idx = owner[cell]
        if idx not in seen:
            seen.add(idx)
            word.append(d.ribbons[idx][1])
    return tuple(word)


def enumerate_yamanouchi_domino(shape: Sequence[int],
                                content: Sequence[int]) -> list[RibbonTableau]:
    shape = trim(shape)
    if r_core(shape, 2):
        raise RibbonError(f"{shape} has nonempty 2-core")
    out = []
    for d in enumerate_ribbon_tableaux(shape, 2, content):
        w = domino_reading_word(d)
        if not w or is_yamanouchi(w, 1, max(len(content), 1)):
            out.append(d)
    return out


def format_ribbon_tableau(d: RibbonTableau) -> str:
    """Debug dump: ``{(r,c);(r,c)}=entry`` pairs in canonical order."""
    parts = []
    for rib, e in d.ribbons:
        cells = ";".join(f"({r},{c})" for r, c in sorted(rib))
        parts.append(f"{{{cells}}}={e}")
    return " ".join(parts) if parts else "-"
