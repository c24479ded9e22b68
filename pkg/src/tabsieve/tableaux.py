"""Semistandard (skew) tableaux, reading words, Yamanouchi predicates and
enumeration by shape and content."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import (Cell, Composition, Partition, PartitionError, contains,
                         part, partition, trim)


class TableauError(ValueError):
    """Raised for malformed tableaux or violated tableau preconditions."""


@dataclass(frozen=True)
class SkewTableau:
    """A filling of outer/inner.

    ``rows[i]`` holds the entries of row i+1 at columns inner_i+1 .. outer_i.
    Instances are immutable and hashable; construct through :meth:`from_rows`,
    :meth:`from_cells` or :func:`parse_tableau`, which validate.
    """

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]],
                  inner: Sequence[int] = ()) -> "SkewTableau":
        rows = tuple(tuple(r) for r in rows)
        inner = trim(inner)
        outer = trim(part(inner, i + 1) + len(r) for i, r in enumerate(rows))
        rows = rows[:len(outer)]
        t = cls(partition(outer), partition(inner), rows)
        t.validate()
        return t

    @classmethod
    def from_cells(cls, entries: Mapping[Cell, int],
                   outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewTableau":
        outer, inner = trim(outer), trim(inner)
        rows = tuple(tuple(entries[(i + 1, j + 1)] for j in range(part(inner, i + 1), row))
                     for i, row in enumerate(outer))
        t = cls(partition(outer), partition(inner), rows)
        t.validate()
        return t

    def validate(self) -> None:
        if not contains(self.outer, self.inner):
            raise TableauError(f"inner {self.inner} not contained in outer {self.outer}")
        if len(self.rows) != len(self.outer):
            raise TableauError("row count does not match outer shape")
        for i, row in enumerate(self.rows):
            if len(row) != self.outer[i] - part(self.inner, i + 1):
                raise TableauError(f"row {i + 1} has the wrong length")
            if any(x < 1 for x in row):
                raise TableauError("entries must be positive")
            if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
                raise TableauError(f"row {i + 1} is not weakly increasing")
        ent = self.entries
        for (r, c), v in ent.items():
            below = ent.get((r + 1, c))
            if below is not None and below <= v:
                raise TableauError(f"column {c} is not strictly increasing")

    @property
    def entries(self) -> dict[Cell, int]:
        return {(i + 1, part(self.inner, i + 1) + j + 1): v
                for i, row in enumerate(self.rows) for j, v in enumerate(row)}

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        offset = part(self.inner, r)
        if not (1 <= r <= len(self.rows)) or not (offset < c <= self.outer[r - 1]):
            raise KeyError(cell)
        return self.rows[r - 1][c - offset - 1]

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def max_entry(self) -> int:
        return max((max(r) for r in self.rows if r), default=0)

    def columns(self) -> list[list[int]]:
        """Entries of each column 1..outer_1, top to bottom."""
        width = self.outer[0] if self.outer else 0
        cols: list[list[int]] = [[] for _ in range(width)]
        for (r, c), v in sorted(self.entries.items()):
            cols[c - 1].append(v)
        return cols

    def restrict(self, lo: int, hi: int) -> "SkewTableau":
        """Subtableau on the entries in lo..hi (a skew tableau)."""
        outer, inner, rows = [], [], []
        for i, row in enumerate(self.rows):
            base = part(self.inner, i + 1)
            below = sum(1 for v in row if v < lo)
            upto = sum(1 for v in row if v <= hi)
            outer.append(base + upto)
            inner.append(base + below)
            rows.append(row[below:upto])
        outer = trim(outer)
        return SkewTableau(outer, trim(inner[:len(outer)]), tuple(rows[:len(outer)]))

    def with_entries(self, entries: Mapping[Cell, int]) -> "SkewTableau":
        """Same shape, new entries; no semistandard check."""
        rows = tuple(tuple(entries[(i + 1, j + 1)] for j in range(part(self.inner, i + 1), row))
                     for i, row in enumerate(self.outer))
        return SkewTableau(self.outer, self.inner, rows)

    def shifted(self, delta: int) -> "SkewTableau":
        return SkewTableau(self.outer, self.inner,
                           tuple(tuple(v + delta for v in r) for r in self.rows))

    def __str__(self) -> str:
        return format_tableau(self)


def reading_word(t: SkewTableau) -> tuple[int, ...]:
    """Columns left to right, each read bottom to top."""
    return tuple(v for col in t.columns() for v in reversed(col))


def content(t: SkewTableau, alphabet_size: int) -> Composition:
    counts = [0] * alphabet_size
    for row in t.rows:
        for v in row:
            if v > alphabet_size:
                raise TableauError(f"entry {v} exceeds alphabet size {alphabet_size}")
            counts[v - 1] += 1
    return tuple(counts)


def is_yamanouchi(word: Sequence[int], lo: int, hi: int, anti: bool = False) -> bool:
    """Lattice condition for each consecutive pair (i, i+1) with lo <= i < hi.

    Yamanouchi: every suffix has #i >= #(i+1), i.e. e_i vanishes.
    Anti-Yamanouchi: every prefix has #i <= #(i+1), i.e. f_i vanishes.  The
    prefix reading is the one dual to the suffix one under the bracket rule;
    a suffix test with the inequality reversed would accept words such as
    (1, 2) on which f_1 still acts.
    """
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    counts = {}
    for letter in (word if anti else reversed(word)):
        if not lo <= letter <= hi:
            continue
        counts[letter] = counts.get(letter, 0) + 1
        for i in (letter - 1, letter):
            if lo <= i < hi:
                a, b = counts.get(i, 0), counts.get(i + 1, 0)
                if (a < b) if not anti else (a > b):
                    return False
    return True


def enumerate_ssyt(outer: Sequence[int], inner: Sequence[int],
                   content: Sequence[int]) -> list[SkewTableau]:
    """All semistandard fillings of outer/inner with the given content.

    Cells are filled in row-major order, smallest legal entry first, so the
    output is lexicographic in the row-major entry sequence.
    """
    outer, inner = trim(outer), trim(inner)
    content = tuple(content)
    if not contains(outer, inner):
        raise PartitionError(f"{inner} is not contained in {outer}")
    if sum(outer) - sum(inner) != sum(content):
        raise TableauError("weight mismatch between shape and content")
    return list(_iter_ssyt(outer, inner, content))


def _iter_ssyt(outer: Partition, inner: Partition,
               content: tuple[int, ...]) -> Iterator[SkewTableau]:
    order = [(i + 1, j + 1) for i, row in enumerate(outer)
             for j in range(part(inner, i + 1), row)]
    remaining = list(content)
    t = len(content)
    filling: dict[Cell, int] = {}
    n = len(order)

    def rec(k: int) -> Iterator[SkewTableau]:
        if k == n:
            yield SkewTableau.from_cells(filling, outer, inner)
            return
        r, c = order[k]
        lo = max(filling.get((r, c - 1), 1), filling.get((r - 1, c), 0) + 1)
        for v in range(lo, t + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            filling[(r, c)] = v
            yield from rec(k + 1)
            del filling[(r, c)]
            remaining[v - 1] += 1

    yield from rec(0)


def lr_filter(ts: Iterable[SkewTableau]) -> list[SkewTableau]:
    """Keep the tableaux whose reading word is Yamanouchi in 1..max entry."""
    out = []
    for t in ts:
        w = reading_word(t)
        if not w or is_yamanouchi(w, 1, max(w)):
            out.append(t)
    return out


def highest_weight_tableau(shape: Sequence[int]) -> SkewTableau:
    """The unique tableau of shape kappa and content kappa (row i filled with i)."""
    shape = trim(shape)
    return SkewTableau.from_rows([[i + 1] * x for i, x in enumerate(shape)])


# --- text format ---------------------------------------------------------------

def parse_tableau(text: str) -> SkewTableau:
    """Parse rows separated by "/", entries by ",", inner cells written ".".

    "-" denotes the empty tableau.
    """
    text = text.strip()
    if text in ("-", ""):
        return SkewTableau((), (), ())
    rows = []
    inner = []
    for chunk in text.split("/"):
        toks = [x.strip() for x in chunk.split(",")]
        dots = 0
        while dots < len(toks) and toks[dots] == ".":
            dots += 1
        try:
            vals = [int(x) for x in toks[dots:]]
        except ValueError:
            raise TableauError(f"cannot parse tableau row {chunk!r}") from None
        inner.append(dots)
        rows.append(vals)
    if any(inner[i] < inner[i + 1] for i in range(len(inner) - 1)):
        raise TableauError("inner shape is not a partition")
    if any(len(r) + a == 0 for r, a in zip(rows, inner)):
        raise TableauError("empty row in tableau text")
    return SkewTableau.from_rows(rows, inner)


def format_tableau(t: SkewTableau) -> str:
    if not t.outer:
        return "-"
    out = []
    for i, row in enumerate(t.rows):
        toks = ["."] * part(t.inner, i + 1) + [str(v) for v in row]
        out.append(",".join(toks))
    return "/".join(out)
