"""Type-A crystal operators on (skew) tableaux, highest-weight tests, block
index sets and the block-splitting maps used by the fixed-point theorems."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .jdt import rectify
from .partitions import Cell
from .tableaux import SkewTableau, TableauError


@dataclass(frozen=True)
class CrystalIndexSet:
    s: int
    indices: frozenset[int]

    def __post_init__(self):
        bad = [i for i in self.indices if not 1 <= i <= self.s - 1]
        if bad:
            raise ValueError(f"indices {sorted(bad)} outside 1..{self.s - 1}")

    def __iter__(self):
        return iter(sorted(self.indices))

    @classmethod
    def full(cls, s: int) -> "CrystalIndexSet":
        return cls(s, frozenset(range(1, s)))

    @classmethod
    def evacuation_blocks(cls, m: int) -> "CrystalIndexSet":
        """{1..m-1} and {m+1..2m-1} inside sl_{2m}."""
        return cls(2 * m, frozenset(i for i in range(1, 2 * m) if i != m))

    @classmethod
    def promotion_blocks(cls, m: int, n: int) -> "CrystalIndexSet":
        """Union over k of {km+1..(k+1)m-1} inside sl_{mn}."""
        return cls(m * n, frozenset(i for i in range(1, m * n) if i % m != 0))


def _column_counts(t: SkewTableau, i: int) -> tuple[int, list[int], list[int]]:
    width = t.outer[0] if t.outer else 0
    n_i = [0] * (width + 2)
    n_j = [0] * (width + 2)
    for (r, c), v in t.entries.items():
        if v == i:
            n_i[c] += 1
        elif v == i + 1:
            n_j[c] += 1
    return width, n_i, n_j


def _replace_in_column(t: SkewTableau, col: int, old: int, new: int) -> SkewTableau:
    ent = t.entries
    for (r, c), v in ent.items():
        if c == col and v == old:
            ent[(r, c)] = new
            break
    else:
        raise AssertionError("column statistic picked a column without the letter")
    return t.with_entries(ent)


def _check_index(i: int, s: Optional[int]) -> None:
    if i < 1 or (s is not None and i > s - 1):
        raise ValueError(f"crystal index {i} out of range 1..{'s-1' if s is None else s - 1}")


def apply_e(t: SkewTableau, i: int, s: Optional[int] = None) -> Optional[SkewTableau]:
    """Raising operator; None when it vanishes.

    Uses h_{i,j} = #(i+1) - #i over columns >= j and changes an i+1 to i in
    the rightmost column where h is maximal and positive.
    """
    _check_index(i, s)
    width, n_i, n_j = _column_counts(t, i)
    best, best_col, h = 0, None, 0
    for j in range(width, 0, -1):
        h += n_j[j] - n_i[j]
        if h > best:
            best, best_col = h, j
    if best_col is None:
        return None
    return _replace_in_column(t, best_col, i + 1, i)


def apply_f(t: SkewTableau, i: int, s: Optional[int] = None) -> Optional[SkewTableau]:
    """Lowering operator; None when it vanishes.

    Uses k_{i,j} = #i - #(i+1) over columns <= j and changes an i to i+1 in
    the leftmost column where k is maximal and positive.
    """
    _check_index(i, s)
    width, n_i, n_j = _column_counts(t, i)
    best, best_col, k = 0, None, 0
    for j in range(1, width + 1):
        k += n_i[j] - n_j[j]
        if k > best:
            best, best_col = k, j
    if best_col is None:
        return None
    return _replace_in_column(t, best_col, i, i + 1)


def string_lengths(t: SkewTableau, i: int, s: Optional[int] = None) -> tuple[int, int]:
    """(epsilon_i, phi_i): how often e_i and f_i apply before vanishing."""
    _check_index(i, s)
    eps = 0
    u = apply_e(t, i)
    while u is not None:
        eps += 1
        u = apply_e(u, i)
    phi = 0
    u = apply_f(t, i)
    while u is not None:
        phi += 1
        u = apply_f(u, i)
    return eps, phi


def is_highest_weight(t: SkewTableau, indices: Iterable[int]) -> bool:
    return all(apply_e(t, i) is None for i in indices)


def is_lowest_weight(t: SkewTableau, indices: Iterable[int]) -> bool:
    return all(apply_f(t, i) is None for i in indices)


def split_blocks(t: SkewTableau, m: int, n: int) -> tuple[SkewTableau, ...]:
    """Cut T into its n entry blocks km+1..(k+1)m, shift each block down to
    1..m and rectify it (block 0 is already straight)."""
    if not t.is_straight:
        raise TableauError("split_blocks needs a straight tableau")
    if t.size and (t.max_entry > m * n):
        raise TableauError(f"entries must lie in 1..{m * n}")
    blocks = []
    for k in range(n):
        sub = t.restrict(k * m + 1, (k + 1) * m).shifted(-k * m)
        blocks.append(rectify(sub))
    return tuple(blocks)


def component_of(t: SkewTableau, indices: Iterable[int]) -> list[SkewTableau]:
    """Connected component of T under e_i, f_i for i in ``indices`` (BFS),
    returned sorted by the row-major entry sequence."""
    idx = sorted(indices)
    seen = {t}
    queue = deque([t])
    while queue:
        u = queue.popleft()
        for i in idx:
            for v in (apply_e(u, i), apply_f(u, i)):
                if v is not None and v not in seen:
                    seen.add(v)
                    queue.append(v)
    return sorted(seen, key=lambda x: x.rows)


def highest_weight_of(t: SkewTableau, indices: Iterable[int]) -> SkewTableau:
    """Raise greedily until every e_i in ``indices`` vanishes."""
    idx = sorted(indices)
    moved = True
    while moved:
        moved = False
        for i in idx:
            u = apply_e(t, i)
            if u is not None:
                t, moved = u, True
    return t


# --- signature rule (independent oracle) -------------------------------------

def _reading_positions(t: SkewTableau) -> list[Cell]:
    return sorted(t.entries, key=lambda rc: (rc[1], -rc[0]))


def signature_e(t: SkewTableau, i: int) -> Optional[SkewTableau]:
    """Bracketing rule on the column reading word: an i+1 followed later by an
    i cancel; e_i turns the leftmost unmatched i+1 into i."""
    pos = _reading_positions(t)
    ent = t.entries
    open_stack: list[int] = []
    for k, cell in enumerate(pos):
        v = ent[cell]
        if v == i + 1:
            open_stack.append(k)
        elif v == i and open_stack:
            open_stack.pop()
    if not open_stack:
        return None
    ent[pos[open_stack[0]]] = i
    return SkewTableau.from_cells(ent, t.outer, t.inner)


def signature_f(t: SkewTableau, i: int) -> Optional[SkewTableau]:
    """Bracketing rule: f_i turns the rightmost unmatched i into i+1."""
    pos = _reading_positions(t)
    ent = t.entries
    open_stack: list[int] = []
    unmatched_down: list[int] = []
    for k, cell in enumerate(pos):
        v = ent[cell]
        if v == i + 1:
            open_stack.append(k)
        elif v == i:
            if open_stack:
                open_stack.pop()
            else:
                unmatched_down.append(k)
    if not unmatched_down:
        return None
    ent[pos[unmatched_down[-1]]] = i + 1
    return SkewTableau.from_cells(ent, t.outer, t.inner)
