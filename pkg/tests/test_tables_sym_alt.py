"""Symmetric and alternating group character tables.

Cross-checks: classical literal tables for tiny n, the hook-length
degree formula, the fixed-point and sign character identities, and the
conjugation twist, all at exact arithmetic.
"""

import math
from fractions import Fraction

import pytest

from isoforge.chars_sym_alt import (
    an_char_label,
    an_split_diff,
    an_table,
    is_split_an_class,
    sn_character_value,
    sn_table,
)
from isoforge.exactnum import ExactScalar, exact, rt
from isoforge.partitions import (
    conjugate,
    diagonal_hooks,
    hook_lengths,
    is_self_conjugate,
    partitions_of,
    perm_sign,
    size,
)


def hook_formula_degree(lam):
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return Fraction(math.factorial(size(lam)), prod)


# -- S_n -------------------------------------------------------------------

def test_s3_literal():
    t = sn_table(3)
    assert t.class_labels == ((3,), (2, 1), (1, 1, 1))
    assert [t.centralizer(c) for c in t.class_labels] == [3, 2, 6]
    assert t.row((3,)) == (exact(1), exact(1), exact(1))
    assert t.row((2, 1)) == (exact(-1), exact(0), exact(2))
    assert t.row((1, 1, 1)) == (exact(1), exact(-1), exact(1))


def test_s4_literal():
    t = sn_table(4)
    rows = {
        (4,): [1, 1, 1, 1, 1],
        (3, 1): [-1, 0, -1, 1, 3],
        (2, 2): [0, -1, 2, 0, 2],
        (2, 1, 1): [1, 0, -1, -1, 3],
        (1, 1, 1, 1): [-1, 1, 1, -1, 1],
    }
    assert t.class_labels == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for lam, vals in rows.items():
        assert t.row(lam) == tuple(exact(v) for v in vals)


def test_sn_degrees_match_hook_formula():
    for n in range(1, 9):
        t = sn_table(n)
        for lam in t.char_labels:
            assert t.degree(lam) == hook_formula_degree(lam)


def test_sn_class_sizes_sum_to_group_order():
    for n in range(1, 9):
        t = sn_table(n)
        assert sum(t.class_size(c) for c in t.class_labels) == t.order


def test_sn_values_are_rational_integers():
    for n in range(1, 8):
        t = sn_table(n)
        for lam in t.char_labels:
            for v in t.row(lam):
                q = v.rational()
                assert q.denominator == 1


def test_sn_special_rows():
    """Trivial, sign, and natural-minus-trivial rows have closed forms."""
    for n in range(2, 9):
        t = sn_table(n)
        for pi in t.class_labels:
            fix = sum(1 for a in pi if a == 1)
            assert t.value((n,), pi) == exact(1)
            assert t.value((1,) * n, pi) == exact(perm_sign(pi))
            assert t.value((n - 1, 1), pi) == exact(fix - 1)


def test_sn_conjugation_twists_by_sign():
    for n in range(2, 8):
        t = sn_table(n)
        for lam in t.char_labels:
            for pi in t.class_labels:
                assert t.value(conjugate(lam), pi) == \
                    t.value(lam, pi) * perm_sign(pi)


def test_sn_orthogonality_small():
    for n in range(1, 7):
        assert sn_table(n).orthogonality_report() == []


def test_sn_character_value_errors():
    with pytest.raises(ValueError):
        sn_character_value((2, 1), (4,))


# -- A_n -------------------------------------------------------------------

def test_an_rejects_tiny():
    with pytest.raises(ValueError):
        an_table(1)


def test_a4_literal():
    t = an_table(4)
    assert t.class_labels == (((3, 1), 1), ((3, 1), -1), (2, 2),
                              (1, 1, 1, 1))
    assert t.order == 12
    w = exact(Fraction(-1, 2)) + rt(-3) / 2
    wbar = w.conj()
    assert t.row((4,)) == (exact(1),) * 4
    assert t.row(((2, 2), 1)) == (w, wbar, exact(1), exact(1))
    assert t.row(((2, 2), -1)) == (wbar, w, exact(1), exact(1))
    assert t.row((3, 1)) == (exact(0), exact(0), exact(-1), exact(3))


def test_a5_golden_rows():
    t = an_table(5)
    gold = (exact(1) + rt(5)) / 2
    dual = (exact(1) - rt(5)) / 2
    assert t.row(((3, 1, 1), 1))[:2] == (gold, dual)
    assert t.row(((3, 1, 1), -1))[:2] == (dual, gold)
    assert sorted(t.degree(c) for c in t.char_labels) == [1, 3, 3, 4, 5]


def test_an_split_class_predicate():
    assert is_split_an_class((3, 1))
    assert is_split_an_class((5,))
    assert not is_split_an_class((1, 1, 1))
    assert not is_split_an_class((2, 2))


def test_an_degrees():
    """Restricted rows keep the parent degree; split pairs halve it."""
    for n in range(3, 8):
        t = an_table(n)
        for lbl in t.char_labels:
            if isinstance(lbl[0], tuple):
                lam = lbl[0]
                assert t.degree(lbl) == hook_formula_degree(lam) / 2
            else:
                assert t.degree(lbl) == hook_formula_degree(lbl)


def test_an_merged_rows_restrict_the_parent():
    for n in range(3, 8):
        s = sn_table(n)
        a = an_table(n)
        for lbl in a.char_labels:
            if isinstance(lbl[0], tuple):
                continue
            for cls in a.class_labels:
                parent_cls = cls[0] if isinstance(cls[0], tuple) else cls
                assert a.value(lbl, cls) == s.value(lbl, parent_cls)


def test_an_split_rows_sum_to_the_restriction():
    for n in range(3, 8):
        s = sn_table(n)
        a = an_table(n)
        for lam in partitions_of(n):
            if not is_self_conjugate(lam):
                continue
            for cls in a.class_labels:
                parent_cls = cls[0] if isinstance(cls[0], tuple) else cls
                tot = a.value((lam, 1), cls) + a.value((lam, -1), cls)
                assert tot == s.value(lam, parent_cls)


def test_an_split_diff_squares():
    """The split difference is a square root of +-prod(diagonal hooks),
    the sign depending on (n - k)/2 mod 2."""
    for lam in [(2, 1), (3, 1, 1), (2, 2), (3, 2, 1), (4, 1, 1, 1)]:
        hooks = diagonal_hooks(lam)
        prod = 1
        for h in hooks:
            prod *= h
        if ((size(lam) - len(hooks)) // 2) % 2:
            prod = -prod
        d = an_split_diff(lam)
        assert d * d == exact(prod)


def test_an_char_label_routing():
    assert an_char_label(5, (4, 1)) in ((4, 1), (2, 1, 1, 1))
    assert an_char_label(5, (2, 1, 1, 1)) == an_char_label(5, (4, 1))
    assert an_char_label(4, (2, 2)) == (2, 2)


def test_an_orthogonality_small():
    for n in range(2, 7):
        assert an_table(n).orthogonality_report() == []
