"""Character tables of the symmetric and alternating groups.

S_n values come from the Murnaghan-Nakayama recursion on beta-sets.
A_n is produced by index-2 descent from S_n: sign-twist orbits merge,
self-conjugate rows split, and the split rows differ on the classes
with all cycle lengths odd and distinct, where the difference character
is supported on the diagonal-hook type of the row's label with value
sqrt((-1)^((n-k)/2) a_1 ... a_k).
"""

from functools import lru_cache

from .chartable import CharTable, index2_descent
from .exactnum import ExactScalar, rt
from .partitions import (
    all_parts_distinct,
    all_parts_odd,
    centralizer_order,
    conjugate,
    diagonal_hooks,
    hook_removals,
    is_self_conjugate,
    partitions_of,
    perm_sign,
)


@lru_cache(maxsize=None)
def sn_character_value(lam, pi):
    """chi_lam evaluated at cycle type pi, by removing the longest cycle."""
    if sum(lam) != sum(pi):
        raise ValueError("size mismatch: %r at %r" % (lam, pi))
    if not lam:
        return 1
    q = pi[0]
    total = 0
    for mu, leg in hook_removals(lam, q):
        total += (-1) ** leg * sn_character_value(mu, pi[1:])
    return total


@lru_cache(maxsize=None)
def sn_table(n):
    labels = partitions_of(n)
    classes = [(pi, centralizer_order(pi)) for pi in labels]
    chars = [
        (lam, [ExactScalar(sn_character_value(lam, pi)) for pi in labels])
        for lam in labels
    ]
    return CharTable("S%d" % n, _factorial(n), classes, chars,
                     identity=(1,) * n if n else ())


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def is_split_an_class(pi):
    """Cycle types whose A_n class is half of the S_n class."""
    return all_parts_odd(pi) and all_parts_distinct(pi)


def an_split_diff(lam):
    """Difference of the two split A_n rows on the (+) class of type
    a(lam), for self-conjugate lam with diagonal hooks a_1 > ... > a_k."""
    hooks = diagonal_hooks(lam)
    n = sum(lam)
    k = len(hooks)
    prod = 1
    for h in hooks:
        prod *= h
    if ((n - k) // 2) % 2:
        prod = -prod
    return rt(prod)


@lru_cache(maxsize=None)
def an_table(n):
    if n < 2:
        raise ValueError("need n >= 2")
    parent = sn_table(n)
    eps = (1,) * n  # the sign character's label
    split = [pi for pi in parent.class_labels
             if perm_sign(pi) == 1 and is_split_an_class(pi)]
    diff = {}
    for lam in parent.char_labels:
        if is_self_conjugate(lam):
            diff[(lam, diagonal_hooks(lam))] = an_split_diff(lam)
    return index2_descent(parent, eps, split, diff, "A%d" % n,
                          identity=(1,) * n)


def an_char_label(n, lam):
    """The label carrying chi_lam's data in an_table(n): the row of the
    earlier of lam, lam' in the parent order for merged pairs, the pair
    ((lam, +1), (lam, -1)) for self-conjugate lam (returned as lam)."""
    if is_self_conjugate(lam):
        return lam
    conj = conjugate(lam)
    for cand in partitions_of(n):
        if cand == lam or cand == conj:
            return cand
    raise ValueError("not a partition of %d: %r" % (n, lam))
