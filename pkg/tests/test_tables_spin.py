"""Double cover character tables.

The degree oracle is the classical product formula for spin characters,
implemented here independently of the bar-length route the module uses.
"""

import math
from fractions import Fraction

from isoforge.barpartitions import bar_partitions_of, sigma
from isoforge.chars_spin import (
    is_split_cover_class,
    spin_degree,
    tilde_an_table,
    tilde_sn_table,
)
from isoforge.exactnum import ZERO, exact
from isoforge.partitions import (
    all_parts_distinct,
    all_parts_odd,
    partitions_of,
    perm_sign,
)


def schur_degree(lam):
    """2^floor((n-r)/2) n! / prod(lam_i!) * prod (lam_i-lam_j)/(lam_i+lam_j)."""
    n, r = sum(lam), len(lam)
    val = Fraction(2 ** ((n - r) // 2) * math.factorial(n))
    for a in lam:
        val /= math.factorial(a)
    for i in range(r):
        for j in range(i + 1, r):
            val *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    return val


def test_spin_degree_matches_product_formula():
    for n in range(1, 10):
        for lam in bar_partitions_of(n):
            assert spin_degree(lam) == schur_degree(lam)


def test_basic_spin_degree():
    for n in range(2, 10):
        assert spin_degree((n,)) == 2 ** ((n - 1) // 2)


def test_split_class_predicate():
    assert is_split_cover_class((3, 1, 1))   # all odd
    assert is_split_cover_class((2, 1))      # distinct, odd sign
    assert not is_split_cover_class((2, 2))  # even parts, even sign
    assert not is_split_cover_class((4, 2))
    assert is_split_cover_class((4, 3))


def test_cover_sn_shape():
    for n in range(2, 7):
        t = tilde_sn_table(n)
        assert t.order == 2 * math.factorial(n)
        for pi in partitions_of(n):
            if is_split_cover_class(pi):
                assert t.class_index((pi, 0)) >= 0
                assert t.class_index((pi, 1)) >= 0
            else:
                assert t.class_index((pi, 2)) >= 0
        n_spin = sum(1 for lbl in t.char_labels if lbl[0] == "xi")
        strict = bar_partitions_of(n)
        want = sum(2 if sigma(lam) == -1 else 1 for lam in strict)
        assert n_spin == want


def test_cover_sn_center_behavior():
    """Lift rows repeat their value on the z-shifted class; spin rows
    negate it."""
    for n in range(2, 7):
        t = tilde_sn_table(n)
        one = (1,) * n
        for lbl in t.char_labels:
            deg = t.value(lbl, (one, 0))
            at_z = t.value(lbl, (one, 1))
            if lbl[0] == "chi":
                assert at_z == deg
            else:
                assert at_z == -deg


def test_cover_sn_spin_support():
    """Spin rows vanish on fused classes and on split non-odd classes
    other than their own diagonal."""
    for n in range(2, 7):
        t = tilde_sn_table(n)
        for lbl in t.char_labels:
            if lbl[0] != "xi":
                continue
            lam = lbl[1]
            for cls in t.class_labels:
                pi, k = cls
                v = t.value(lbl, cls)
                if k == 2:
                    assert v == ZERO
                elif not all_parts_odd(pi) and pi != lam:
                    assert v == ZERO
                elif pi == lam and sigma(lam) == -1:
                    assert v != ZERO


def test_cover_sn_associate_pairs():
    """xi+ and xi- agree on odd-type classes and differ by sign on the
    diagonal ones."""
    for n in range(2, 7):
        t = tilde_sn_table(n)
        for lam in bar_partitions_of(n):
            if sigma(lam) != -1:
                continue
            plus = t.row(("xi", lam, 1))
            minus = t.row(("xi", lam, -1))
            for cls, a, b in zip(t.class_labels, plus, minus):
                pi, k = cls
                if all_parts_odd(pi):
                    assert a == b
                elif pi == lam:
                    assert a == -b and a != ZERO
                else:
                    assert a == b == ZERO


def test_cover_sn_sign_twist_swaps_associates():
    """Tensoring with the lifted sign character swaps an associate pair
    and fixes a self-associate spin row up to class relabelling."""
    for n in range(3, 7):
        t = tilde_sn_table(n)
        eps = t.row(("chi", (1,) * n))
        for lam in bar_partitions_of(n):
            if sigma(lam) == -1:
                a = t.row(("xi", lam, 1))
                b = t.row(("xi", lam, -1))
                assert tuple(x * e for x, e in zip(a, eps)) == tuple(b)


def test_cover_an_shape_and_degrees():
    t4 = tilde_an_table(4)
    assert t4.order == 24
    assert sorted(t4.degree(c) for c in t4.char_labels) == [1, 1, 1, 2, 2,
                                                            2, 3]
    t5 = tilde_an_table(5)
    assert t5.order == 120
    assert sorted(t5.degree(c) for c in t5.char_labels) == [1, 2, 2, 3, 3,
                                                            4, 4, 5, 6]


def test_cover_an_four_way_split():
    """Classes of odd distinct type with even sign split four ways."""
    for n in range(4, 7):
        t = tilde_an_table(n)
        for pi in partitions_of(n):
            if perm_sign(pi) != 1:
                continue
            four_way = all_parts_odd(pi) and all_parts_distinct(pi)
            got = [c for c in t.class_labels if c[0] == pi]
            if four_way:
                assert len(got) == 4
            elif all_parts_odd(pi) or all_parts_distinct(pi):
                assert len(got) == 2
            else:
                assert len(got) == 1


def test_cover_an_spin_counts():
    """sigma = -1 labels one row, sigma = +1 an associate pair: the
    opposite of the full cover."""
    for n in range(4, 7):
        t = tilde_an_table(n)
        for lam in bar_partitions_of(n):
            rows = [lbl for lbl in t.char_labels
                    if lbl[0] == "xi" and lbl[1] == lam]
            assert len(rows) == (1 if sigma(lam) == -1 else 2)


def test_cover_an_pair_sum_restricts_the_cover_row():
    """For sigma = +1 the two cover-A rows add up to the restricted
    self-associate spin character."""
    for n in range(4, 7):
        s = tilde_sn_table(n)
        a = tilde_an_table(n)
        for lam in bar_partitions_of(n):
            if sigma(lam) != 1:
                continue
            plus = a.row(("xi", lam, 1))
            minus = a.row(("xi", lam, -1))
            for cls, x, y in zip(a.class_labels, plus, minus):
                pi, k = cls[0], cls[-1]
                tot = x + y
                if k == 2 or not is_split_cover_class(pi):
                    assert tot == ZERO
                else:
                    assert tot == s.value(("xi", lam, 0), (pi, k))


def test_cover_orthogonality_small():
    for n in (3, 4, 5):
        assert tilde_sn_table(n).orthogonality_report() == []
        if n >= 4:
            assert tilde_an_table(n).orthogonality_report() == []
