"""Jeu-de-taquin slides, rectification, demotion, promotion and evacuation."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Cell, part, trim
from .tableaux import SkewTableau, TableauError


@dataclass(frozen=True)
class SlideTrace:
    start: Cell
    path: tuple[Cell, ...]
    vacated: Cell


def _build(entries: dict[Cell, int], outer: list[int], inner: list[int]) -> SkewTableau:
    outer_t = trim(outer)
    inner_t = trim(inner)
    rows = tuple(tuple(entries[(i + 1, j + 1)] for j in range(part(inner_t, i + 1), row))
                 for i, row in enumerate(outer_t))
    return SkewTableau(outer_t, inner_t, rows)


def inside_corners(t: SkewTableau) -> list[Cell]:
    """Cells of the inner shape with neither the cell below nor the cell to
    the right in the inner shape."""
    inner = t.inner
    return [(i + 1, x) for i, x in enumerate(inner)
            if x > 0 and part(inner, i + 2) < x]


def addable_cells(shape) -> list[Cell]:
    shape = trim(shape)
    out = []
    for i in range(len(shape) + 1):
        c = part(shape, i + 1) + 1
        if i == 0 or part(shape, i) >= c:
            out.append((i + 1, c))
    return out


def slide(t: SkewTableau, corner: Cell) -> tuple[SkewTableau, SlideTrace]:
    """One forward slide into the inside corner ``corner``.

    On a tie between the cell below and the cell to the right, the entry
    below moves.
    """
    if corner not in inside_corners(t):
        raise TableauError(f"{corner} is not an inside corner of {t.outer}/{t.inner}")
    ent = t.entries
    outer = list(t.outer)
    inner = list(t.inner)
    r, c = corner
    path = [corner]
    while True:
        below = ent.get((r + 1, c))
        right = ent.get((r, c + 1))
        if below is None and right is None:
            break
        if right is None or (below is not None and below <= right):
            ent[(r, c)] = ent.pop((r + 1, c))
            r += 1
        else:
            ent[(r, c)] = ent.pop((r, c + 1))
            c += 1
        path.append((r, c))
    inner[corner[0] - 1] -= 1
    outer[r - 1] -= 1
    return _build(ent, outer, inner), SlideTrace(corner, tuple(path), (r, c))


def reverse_slide(t: SkewTableau, cell: Cell) -> SkewTableau:
    """Reverse slide starting from the addable outside cell ``cell``.

    The larger of the entries above and to the left moves into the hole;
    on a tie the entry above moves.  The hole finishes as a new inner cell.
    """
    return reverse_slide_traced(t, cell)[0]


def reverse_slide_traced(t: SkewTableau, cell: Cell) -> tuple[SkewTableau, Cell]:
    if cell not in addable_cells(t.outer):
        raise TableauError(f"{cell} is not addable to {t.outer}")
    ent = t.entries
    outer = list(t.outer) + [0]
    inner = list(t.inner) + [0] * (len(outer) - len(t.inner))
    r, c = cell
    outer[r - 1] += 1
    while True:
        above = ent.get((r - 1, c))
        left = ent.get((r, c - 1))
        if above is None and left is None:
            break
        if left is None or (above is not None and above >= left):
            ent[(r, c)] = ent.pop((r - 1, c))
            r -= 1
        else:
            ent[(r, c)] = ent.pop((r, c - 1))
            c -= 1
    inner[r - 1] += 1
    return _build(ent, outer, inner), (r, c)


def rectify(t: SkewTableau) -> SkewTableau:
    """Slide into the lowest inside corner until the shape is straight."""
    while t.inner:
        t, _ = slide(t, inside_corners(t)[-1])
    return t


def _check_range(t: SkewTableau, s: int) -> None:
    if not t.is_straight:
        raise TableauError("demotion, promotion and evacuation need a straight shape")
    if t.size and not (1 <= min(min(r) for r in t.rows if r) and t.max_entry <= s):
        raise TableauError(f"entries must lie in 1..{s}")


def demote(t: SkewTableau, s: int) -> SkewTableau:
    """Empty the 1s, decrement, rectify, refill the vacated strip with s."""
    _check_range(t, s)
    ones = sum(1 for v in (t.rows[0] if t.rows else ()) if v == 1)
    rest = SkewTableau(t.outer, trim((ones,)),
                       tuple((row[ones:] if i == 0 else row) for i, row in enumerate(t.rows)))
    rect = rectify(rest.shifted(-1))
    ent = rect.entries
    for i, row in enumerate(t.outer):
        for j in range(part(rect.outer, i + 1), row):
            ent[(i + 1, j + 1)] = s
    return _build(ent, list(t.outer), [])


def promote(t: SkewTableau, s: int) -> SkewTableau:
    """Inverse of :func:`demote`, built by reverse slides.

    The s-cells are deleted, the remaining tableau is reverse-slid into the
    vacated horizontal strip from left to right, entries are incremented and
    the new inner row is filled with 1s.
    """
    _check_range(t, s)
    keep = tuple(tuple(v for v in row if v != s) for row in t.rows)
    shape = trim(len(r) for r in keep)
    u = SkewTableau(shape, (), keep[:len(shape)])
    strip = sorted(((i + 1, j + 1) for i, row in enumerate(t.outer)
                    for j in range(part(shape, i + 1), row)), key=lambda x: x[1])
    for cell in strip:
        u = reverse_slide(u, cell)
    if len(u.inner) > 1:
        raise TableauError("promotion produced a non-row inner shape")
    u = u.shifted(1)
    ent = u.entries
    for j in range(part(u.inner, 1)):
        ent[(1, j + 1)] = 1
    return _build(ent, list(u.outer), [])


def evacuate(t: SkewTableau, s: int) -> SkewTableau:
    """Schutzenberger involution via iterated demotion.

    For bound i = s, s-1, ..., 1: drop entries above i, demote with bound i
    and record the resulting shape.  The output fills each difference of
    consecutive recorded shapes with its index.
    """
    _check_range(t, s)
    shapes: dict[int, tuple[int, ...]] = {0: ()}
    cur = t
    for bound in range(s, 0, -1):
        cur = cur.restrict(1, bound)
        cur = demote(cur, bound)
        shapes[bound] = cur.outer
    ent: dict[Cell, int] = {}
    for i in range(1, s + 1):
        outer, inner = shapes[i], shapes[i - 1]
        for r, row in enumerate(outer):
            for c in range(part(inner, r + 1), row):
                ent[(r + 1, c + 1)] = i
    return _build(ent, list(t.outer), [])


def promotion_power(t: SkewTableau, s: int, k: int) -> SkewTableau:
    for _ in range(k):
        t = promote(t, s)
    return t
