"""Partitions, compositions, Young diagrams and the r-core / r-quotient / r-sign
statistics.

Partitions are plain tuples of positive integers in weakly decreasing order
(no trailing zeros).  Compositions are tuples of nonnegative integers whose
length is significant.  Cells are 1-based ``(row, col)`` pairs.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Cell = tuple[int, int]


class PartitionError(ValueError):
    """Raised when an argument violates a partition precondition."""


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical (zero-trimmed) partition."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise PartitionError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise PartitionError(f"{p} is not weakly decreasing")
    return trim(p)


def trim(p: Sequence[int]) -> Partition:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pad(p: Sequence[int], length: int) -> tuple[int, ...]:
    """Pad with zeros to exactly ``length`` parts (the declared part count)."""
    p = trim(p)
    if len(p) > length:
        raise PartitionError(f"{p} has more than {length} positive parts")
    return p + (0,) * (length - len(p))


def size(p: Sequence[int]) -> int:
    return sum(p)


def part(p: Sequence[int], i: int) -> int:
    """The i-th part (1-based), zero beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def cells(p: Sequence[int]) -> list[Cell]:
    """Cells of the Young diagram in row-major order."""
    return [(i + 1, j + 1) for i, row in enumerate(p) for j in range(row)]


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> list[Cell]:
    return [(i + 1, j + 1) for i, row in enumerate(outer)
            for j in range(part(inner, i + 1), row)]


def conjugate(p: Sequence[int]) -> Partition:
    p = trim(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def v_stat(p: Sequence[int]) -> int:
    """Sum of (i-1) * p_i over the parts."""
    return sum(i * x for i, x in enumerate(p))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return all(x <= part(outer, i + 1) for i, x in enumerate(inner) if x > 0)


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if not contains(outer, inner):
        raise PartitionError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    # a column holds two strip cells iff some row of outer pokes past the row above in inner
    return all(part(outer, i) <= part(inner, i - 1) for i in range(2, len(outer) + 1))


def is_rectangular(p: Sequence[int]) -> bool:
    p = trim(p)
    return len(set(p)) <= 1


def partitions_of(n: int, max_parts: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_parts is None:
        max_parts = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_parts - 1, first):
            yield (first,) + rest


def horizontal_strips_below(p: Partition, k: int) -> Iterator[Partition]:
    """Partitions q contained in p with p/q a horizontal strip of k cells."""
    p = trim(p)
    rows = len(p)

    def rec(i: int, remaining: int) -> Iterator[list[int]]:
        if i == rows:
            if remaining == 0:
                yield []
            return
        lo = p[i + 1] if i + 1 < rows else 0
        for q_i in range(p[i], lo - 1, -1):
            take = p[i] - q_i
            if take > remaining:
                break
            for rest in rec(i + 1, remaining - take):
                yield [q_i] + rest

    for q in rec(0, k):
        yield trim(q)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += part(a, i + 1)
        sb += part(b, i + 1)
        if sa < sb:
            return False
    return True


# --- ribbons -----------------------------------------------------------------

def beta_numbers(p: Sequence[int], length: int) -> tuple[int, ...]:
    p = pad(p, length)
    return tuple(p[i] + length - 1 - i for i in range(length))


def from_beta(betas: Iterable[int]) -> Partition:
    b = sorted(betas, reverse=True)
    L = len(b)
    return trim(b[i] - (L - 1 - i) for i in range(L))


def removable_ribbons(p: Sequence[int], r: int) -> list[tuple[Partition, frozenset[Cell]]]:
    """All (q, cells) where cells = p/q is an r-ribbon and q is a partition.

    Ordered by the row of the ribbon's top cell.
    """
    p = trim(p)
    if r < 1:
        raise PartitionError("ribbon size must be positive")
    L = len(p)
    betas = beta_numbers(p, L)
    bset = set(betas)
    out = []
    for b in betas:
        if b - r >= 0 and (b - r) not in bset:
            q = from_beta((bset - {b}) | {b - r})
            out.append((q, frozenset(skew_cells(p, q))))
    return out


def ribbon_height(ribbon: Iterable[Cell]) -> int:
    """Number of rows a ribbon occupies."""
    return len({c[0] for c in ribbon})


def r_core(p: Sequence[int], r: int) -> Partition:
    """Remove r-ribbons (first available each time) until none is removable."""
    if r < 1:
        raise PartitionError("r must be positive")
    q = trim(p)
    while True:
        rs = removable_ribbons(q, r)
        if not rs:
            return q
        q = rs[0][0]


def r_quotient(p: Sequence[int], r: int) -> tuple[Partition, ...]:
    """The r-quotient read off an r-runner abacus.

    Beta-numbers use a display length that is a multiple of r; components are
    ordered by runner residue.
    """
    p = trim(p)
    if r_core(p, r):
        raise PartitionError(f"{p} has nonempty {r}-core")
    L = -(-len(p) // r) * r
    betas = beta_numbers(p, L)
    comps = []
    for rho in range(r):
        pos = sorted((b // r for b in betas if b % r == rho), reverse=True)
        c = len(pos)
        comps.append(trim(pos[j] - (c - 1 - j) for j in range(c)))
    return tuple(comps)


def r_sign(p: Sequence[int], r: int) -> int:
    """(-1)^(sum of (height - 1)) over the ribbons of any r-ribbon tiling of p."""
    q = trim(p)
    if r_core(q, r):
        raise PartitionError(f"{q} has nonempty {r}-core")
    total = 0
    while q:
        q, ribbon = removable_ribbons(q, r)[0]
        total += ribbon_height(ribbon) - 1
    return -1 if total % 2 else 1


@cache
def ribbon_tilings(p: Partition, r: int) -> tuple[tuple[frozenset[Cell], ...], ...]:
    """Every r-ribbon tiling of p reachable by successive ribbon removals,
    each tiling reported once as a tuple of ribbons sorted canonically."""
    p = trim(p)
    if not p:
        return ((),)
    seen = set()
    for q, ribbon in removable_ribbons(p, r):
        for tiling in ribbon_tilings(q, r):
            seen.add(tuple(sorted(tiling + (ribbon,), key=sorted)))
    return tuple(sorted(seen, key=lambda t: [sorted(x) for x in t]))


# --- text format ---------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """Parse "3,2,1"; "-" (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    if any(x <= 0 for x in parts):
        raise PartitionError(f"partition text must list positive parts: {text!r}")
    return partition(parts)


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PartitionError(f"cannot parse composition {text!r}") from None
    if any(x < 0 for x in parts):
        raise PartitionError(f"negative entry in composition {text!r}")
    return parts


def format_partition(p: Sequence[int]) -> str:
    p = trim(p)
    return ",".join(map(str, p)) if p else "-"
