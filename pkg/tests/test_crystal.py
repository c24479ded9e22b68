from __future__ import annotations

import pytest

from oracles import bracket_e, bracket_f, ssyt_bf
from tabsieve.crystal import (CrystalIndexSet, apply_e, apply_f, component_of,
                              highest_weight_of, is_highest_weight, signature_e,
                              signature_f, split_blocks, string_lengths)
from tabsieve.jdt import evacuate, promotion_power
from tabsieve.partitions import contains, partitions_of
from tabsieve.tableaux import (content, highest_weight_tableau, is_yamanouchi,
                               parse_tableau, reading_word)

T = parse_tableau


def shapes(max_cells, max_outer=None):
    """(outer, inner) pairs with at most max_cells cells in outer/inner."""
    max_outer = max_outer or max_cells
    for n in range(max_outer + 1):
        for outer in partitions_of(n):
            for k in range(0, n):
                if n - k > max_cells:
                    continue
                for inner in partitions_of(k, max_parts=len(outer)):
                    if contains(outer, inner):
                        yield outer, inner


def tableaux(max_cells, s, max_outer=None):
    for outer, inner in shapes(max_cells, max_outer):
        yield from ssyt_bf(outer, s, inner)


def test_apply_e_examples():
    assert apply_e(T("1,1"), 1) is None
    assert apply_e(T("1,2"), 1) == T("1,1")
    assert apply_e(T("2,2"), 1) == T("1,2")
    with pytest.raises(ValueError):
        apply_e(T("1,2"), 2, s=2)
    with pytest.raises(ValueError):
        apply_e(T("1,2"), 0)


def test_apply_f_examples():
    assert apply_f(T("1,1"), 1) == T("1,2")
    assert apply_f(T("2,2"), 1) is None
    for t in ssyt_bf((2, 1), 3):
        for i in (1, 2):
            u = apply_f(t, i)
            if u is not None:
                assert apply_e(u, i) == t


def test_string_length_examples():
    assert string_lengths(T("1,1"), 1) == (0, 2)
    assert string_lengths(T("1,2"), 1) == (1, 1)
    assert string_lengths(T("-"), 3) == (0, 0)


def test_is_highest_weight_examples():
    for lam in [(1,), (2, 1), (3, 2, 2)]:
        assert is_highest_weight(highest_weight_tableau(lam), CrystalIndexSet.full(len(lam)))
    assert not is_highest_weight(T("1,2/2"), CrystalIndexSet.full(3))
    assert is_highest_weight(T("2,3/3"), CrystalIndexSet(3, frozenset()))


def test_index_sets():
    assert list(CrystalIndexSet.full(4)) == [1, 2, 3]
    assert list(CrystalIndexSet.evacuation_blocks(2)) == [1, 3]
    assert list(CrystalIndexSet.promotion_blocks(2, 3)) == [1, 3, 5]
    assert list(CrystalIndexSet.promotion_blocks(1, 3)) == []
    with pytest.raises(ValueError):
        CrystalIndexSet(3, frozenset({3}))


def test_operators_match_bracket_rule_on_skew_shapes():
    for s in (2, 3, 4):
        for t in tableaux(6 if s < 4 else 5, s, max_outer=7):
            for i in range(1, s):
                e, f = apply_e(t, i), apply_f(t, i)
                assert e == bracket_e(t, i) == signature_e(t, i)
                assert f == bracket_f(t, i) == signature_f(t, i)


def _weight_shift(a, b, i):
    return [x - y for x, y in zip(a, b)] == [0] * (i - 1) + [1, -1] + [0] * (len(a) - i - 1)


def test_crystal_axioms_small_skew():
    for s in (2, 3, 4):
        for t in tableaux(5, s, max_outer=7):
            c = content(t, s)
            for i in range(1, s):
                e, f = apply_e(t, i), apply_f(t, i)
                if e is not None:
                    e.validate()
                    assert _weight_shift(content(e, s), c, i)
                    assert apply_f(e, i) == t
                if f is not None:
                    f.validate()
                    assert _weight_shift(c, content(f, s), i)
                    assert apply_e(f, i) == t
                eps, phi = string_lengths(t, i)
                assert phi - eps == c[i - 1] - c[i]


def test_yamanouchi_iff_operators_vanish():
    for n in range(1, 7):
        for lam in partitions_of(n):
            s = len(lam) + 1
            for t in ssyt_bf(lam, s):
                w = reading_word(t)
                for i in range(1, s):
                    assert is_yamanouchi(w, i, i + 1) == (apply_e(t, i) is None)
                    assert is_yamanouchi(w, i, i + 1, anti=True) == (apply_f(t, i) is None)


def _eps(t, j):
    return string_lengths(t, j)[0]


def test_stembridge_local_axioms_straight():
    """Raising-operator relations of a regular simply laced crystal."""
    for n in range(1, 7):
        for lam in partitions_of(n, max_parts=3):
            for x in ssyt_bf(lam, 3):
                i, j = 1, 2
                for a, b in ((i, j), (j, i)):
                    ea = apply_e(x, a)
                    if ea is not None:
                        assert _eps(ea, b) - _eps(x, b) in (0, 1)
                ei, ej = apply_e(x, i), apply_e(x, j)
                if ei is None or ej is None:
                    continue
                di = _eps(ei, j) - _eps(x, j)
                dj = _eps(ej, i) - _eps(x, i)
                if di == 0:
                    assert apply_e(ei, j) == apply_e(ej, i)
                    assert apply_e(ei, j) is not None
                if di == 1 and dj == 1:
                    lhs = apply_e(apply_e(apply_e(ei, j), j), i)
                    rhs = apply_e(apply_e(apply_e(ej, i), i), j)
                    assert lhs == rhs and lhs is not None


def test_distant_operators_commute():
    for t in ssyt_bf((2, 2, 1), 4):
        for op in (apply_e, apply_f):
            a = op(t, 1)
            b = op(t, 3)
            ab = None if a is None else op(a, 3)
            ba = None if b is None else op(b, 1)
            assert ab == ba


def test_split_blocks_examples():
    assert split_blocks(T("1,1/2,2"), 1, 2) == (T("1,1"), T("1,1"))
    for lam in [(2, 1), (3, 1, 1)]:
        t = highest_weight_tableau(lam)
        assert split_blocks(t, len(lam), 1) == (t,)
    assert split_blocks(T("1,2"), 1, 2) == (T("1"), T("1"))
    with pytest.raises(ValueError):
        split_blocks(T("1,3"), 1, 2)


def test_component_examples():
    assert component_of(T("1,1"), [1]) == [T("1,1"), T("1,2"), T("2,2")]
    assert component_of(T("1,2/3"), []) == [T("1,2/3")]
    full = set(ssyt_bf((2, 1), 3))
    for t in full:
        assert set(component_of(t, [1, 2])) == full


def test_components_have_one_highest_weight_element():
    for m, n in ((1, 2), (2, 2), (1, 3)):
        idx = CrystalIndexSet.promotion_blocks(m, n)
        for k in range(1, 6):
            for lam in partitions_of(k, max_parts=m * n):
                seen = set()
                for t in ssyt_bf(lam, m * n):
                    if t in seen:
                        continue
                    comp = component_of(t, idx)
                    seen.update(comp)
                    tops = [u for u in comp if is_highest_weight(u, idx)]
                    assert tops == [highest_weight_of(t, idx)]


def test_highest_weight_blocks_are_highest_weight_tableaux():
    for m, n in ((1, 2), (2, 2), (1, 3), (2, 3)):
        s = m * n
        idx = CrystalIndexSet.promotion_blocks(m, n)
        for k in range(1, 7 if s <= 4 else 5):
            for lam in partitions_of(k, max_parts=s):
                for t in ssyt_bf(lam, s):
                    if not is_highest_weight(t, idx):
                        continue
                    c = content(t, s)
                    betas = [c[b * m:(b + 1) * m] for b in range(n)]
                    for beta, block in zip(betas, split_blocks(t, m, n)):
                        assert list(beta) == sorted(beta, reverse=True)
                        assert block == highest_weight_tableau(beta)


def test_splitting_intertwines_evacuation():
    for m in (1, 2):
        for k in range(0, 9):
            for lam in partitions_of(k, max_parts=2 * m):
                for t in ssyt_bf(lam, 2 * m):
                    u, v = split_blocks(t, m, 2)
                    assert split_blocks(evacuate(t, 2 * m), m, 2) == (
                        evacuate(v, m), evacuate(u, m))


def test_splitting_rotates_under_j():
    for m, n in ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (1, 6)):
        s = m * n
        for c in range(1, 4):
            for rows in range(1, s + 1):
                if c * rows > 6:
                    continue
                for t in ssyt_bf((c,) * rows, s):
                    blocks = split_blocks(t, m, n)
                    for d in range(n + 1):
                        rotated = blocks[n - d:] + blocks[:n - d]
                        assert split_blocks(promotion_power(t, s, m * d), m, n) == rotated
