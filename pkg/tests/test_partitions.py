"""Hook, core/quotient, and sign combinatorics for ordinary partitions.

The removal-order and leg-transfer identities are checked exhaustively
at the sizes the block/isometry machinery relies on.
"""

from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from isoforge.partitions import (
    centralizer_order,
    conjugate,
    core_and_quotient,
    delta_sign,
    diagonal_hooks,
    from_core_and_quotient,
    from_diagonal_hooks,
    hook_lengths,
    hook_removal_leg,
    hook_removals,
    is_self_conjugate,
    multipartitions_of,
    p_core,
    p_quotient,
    p_weight,
    parse_partition,
    partitions_of,
    perm_sign,
    self_conjugate_removal,
    size,
    two_step_sign_sum,
    two_step_targets,
    with_core,
)


def all_partitions(max_n):
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            yield lam


# -- basic structure -------------------------------------------------------

def test_partitions_of_counts():
    counts = [len(partitions_of(n)) for n in range(11)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_parse_and_format():
    assert parse_partition("4,2,1") == (4, 2, 1)
    assert parse_partition("") == ()
    with pytest.raises(ValueError):
        parse_partition("1,2")


def test_conjugate_involution_and_fixed_points():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 1)) == (2, 1)
    for lam in all_partitions(10):
        assert conjugate(conjugate(lam)) == lam
        assert is_self_conjugate(lam) == (conjugate(lam) == lam)


def test_hook_length_multiset_is_conjugation_invariant():
    for lam in all_partitions(10):
        mine = sorted(h for row in hook_lengths(lam) for h in row)
        dual = sorted(h for row in hook_lengths(conjugate(lam)) for h in row)
        assert mine == dual


def test_hook_removal_examples():
    assert hook_removals((2, 1), 3) == [((), 1)]
    assert hook_removals((1,), 2) == []
    assert sorted(hook_removals((2, 1), 1)) == [((1, 1), 0), ((2,), 0)]


def test_hook_removals_against_cell_enumeration():
    """Every q-hook found by the beta-set route must match a diagram cell
    with hook length q, and removal must shrink the size by q."""
    for lam in all_partitions(9):
        hl = hook_lengths(lam)
        for q in range(1, 10):
            cells = sum(row.count(q) for row in hl)
            rem = hook_removals(lam, q)
            assert len(rem) == cells
            for mu, leg in rem:
                assert size(mu) == size(lam) - q
                assert 0 <= leg < q


def test_centralizer_order_formula():
    import math
    for lam in all_partitions(8):
        mult = {}
        for a in lam:
            mult[a] = mult.get(a, 0) + 1
        want = 1
        for a, m in mult.items():
            want *= a ** m * math.factorial(m)
        assert centralizer_order(lam) == want
        assert perm_sign(lam) == (-1) ** (size(lam) - len(lam))


# -- core / quotient -------------------------------------------------------

def test_core_quotient_round_trip():
    for p in (2, 3, 5):
        for lam in all_partitions(12):
            core, quot = core_and_quotient(lam, p)
            assert len(quot) == p
            assert not hook_removals(core, p)
            assert size(lam) == size(core) + p * sum(size(c) for c in quot)
            assert from_core_and_quotient(core, quot, p) == lam
            assert p_weight(lam, p) == sum(size(c) for c in quot)


def test_from_core_rejects_non_core():
    with pytest.raises(ValueError):
        from_core_and_quotient((3,), ((), (), ()), 3)
    with pytest.raises(ValueError):
        from_core_and_quotient((), ((), ()), 3)


def test_small_core_cases():
    assert core_and_quotient((2, 1), 5) == ((2, 1), ((), (), (), (), ()))
    core, quot = core_and_quotient((2, 1), 3)
    assert core == ()
    assert sum(size(c) for c in quot) == 1


def test_quotient_conjugation_compatibility():
    """The quotient of the transpose is the reversed tuple of transposed
    components."""
    for p in (2, 3):
        for lam in all_partitions(10):
            core, quot = core_and_quotient(lam, p)
            core_c, quot_c = core_and_quotient(conjugate(lam), p)
            assert core_c == conjugate(core)
            assert quot_c == tuple(conjugate(c) for c in reversed(quot))


def test_weight_equals_divisible_hook_count():
    for p in (2, 3):
        for lam in all_partitions(10):
            hooks = [h for row in hook_lengths(lam) for h in row]
            assert p_weight(lam, p) == sum(1 for h in hooks if h % p == 0)


# -- delta sign ------------------------------------------------------------

def brute_delta_signs(lam, q):
    """Set of (-1)^(sum of legs) over all complete q-stripping orders."""
    @lru_cache(maxsize=None)
    def rec(mu):
        rem = hook_removals(mu, q)
        if not rem:
            return frozenset([1])
        out = set()
        for nu, leg in rem:
            for s in rec(nu):
                out.add(s * (-1) ** leg)
        return frozenset(out)
    return rec(tuple(lam))


def test_delta_sign_order_independent():
    for q in (2, 3, 5):
        for lam in all_partitions(9):
            signs = brute_delta_signs(lam, q)
            assert len(signs) == 1
            assert delta_sign(lam, q) == next(iter(signs))


def test_delta_sign_of_core_is_plus_one():
    for q in (2, 3):
        for lam in all_partitions(8):
            if not hook_removals(lam, q):
                assert delta_sign(lam, q) == 1


def test_delta_odd_q_conjugation_invariant():
    for q in (3, 5):
        for lam in all_partitions(10):
            assert delta_sign(lam, q) == delta_sign(conjugate(lam), q)


def test_leg_plus_conjugate_leg_for_odd_hooks():
    for q in (3, 5):
        for lam in all_partitions(9):
            for mu, leg in hook_removals(lam, q):
                dual = hook_removal_leg(conjugate(lam), conjugate(mu), q)
                assert leg + dual == q - 1


def _quotient_step(lam, mu, p):
    """The slot and leg of the quotient-level hook removal matching a
    p-divisible hook removal lam -> mu; cores must agree."""
    ql = p_quotient(lam, p)
    qm = p_quotient(mu, p)
    slots = [s for s in range(p) if ql[s] != qm[s]]
    assert len(slots) == 1
    s = slots[0]
    k = size(ql[s]) - size(qm[s])
    return s, hook_removal_leg(ql[s], qm[s], k)


def test_leg_transfer_through_the_quotient():
    """Removing a pk-hook acts as a k-hook removal on one quotient slot;
    the two legs differ exactly by the delta signs of the endpoints."""
    for p in (2, 3):
        for lam in all_partitions(10):
            for q in range(p, size(lam) + 1, p):
                for mu, leg in hook_removals(lam, q):
                    assert p_core(mu, p) == p_core(lam, p)
                    _, qleg = _quotient_step(lam, mu, p)
                    assert (-1) ** leg == ((-1) ** qleg
                                           * delta_sign(lam, p)
                                           * delta_sign(mu, p))


# -- self-conjugate tools --------------------------------------------------

def test_diagonal_hooks_round_trip():
    assert diagonal_hooks((2, 1)) == (3,)
    assert diagonal_hooks((3, 1, 1)) == (5,)
    for lam in all_partitions(11):
        if is_self_conjugate(lam):
            d = diagonal_hooks(lam)
            assert all(h % 2 == 1 for h in d)
            assert list(d) == sorted(d, reverse=True)
            assert len(set(d)) == len(d)
            assert from_diagonal_hooks(d) == lam


def test_unique_self_conjugate_removal():
    """For self-conjugate lam and odd q, M_q(lam) holds exactly one
    self-conjugate member, and only when q is a diagonal hook length."""
    for lam in all_partitions(11):
        if not is_self_conjugate(lam):
            continue
        d = set(diagonal_hooks(lam))
        for q in range(1, 12, 2):
            selfconj = [(mu, leg) for mu, leg in hook_removals(lam, q)
                        if is_self_conjugate(mu)]
            got = self_conjugate_removal(lam, q)
            if q in d:
                assert len(selfconj) == 1
                mu, leg = selfconj[0]
                assert got == (mu, leg)
                assert leg == (q - 1) // 2
                assert sorted(diagonal_hooks(mu), reverse=True) == sorted(
                    d - {q}, reverse=True)
            else:
                assert selfconj == []
                assert got is None


# -- core transplantation --------------------------------------------------

CORES_3 = [(), (1,), (2,), (1, 1), (3, 1), (2, 1, 1)]


def test_with_core_identity_and_size():
    for lam in all_partitions(9):
        for p in (2, 3):
            core = p_core(lam, p)
            assert with_core(lam, core, p) == lam
    for lam in all_partitions(8):
        for new_core in CORES_3:
            mu = with_core(lam, new_core, 3)
            assert size(mu) == size(new_core) + 3 * p_weight(lam, 3)
            assert p_core(mu, 3) == new_core
            assert p_quotient(mu, 3) == p_quotient(lam, 3)


def test_with_core_commutes_with_divisible_hook_removal():
    """M_q(transplanted) = transplanted M_q for q a multiple of p."""
    p = 3
    for lam in all_partitions(9):
        for new_core in CORES_3:
            moved = with_core(lam, new_core, p)
            for q in (3, 6):
                direct = {mu for mu, _ in hook_removals(moved, q)}
                routed = {with_core(mu, new_core, p)
                          for mu, _ in hook_removals(lam, q)}
                assert direct == routed


# -- operator commutation --------------------------------------------------

def test_two_step_removals_commute():
    """Signed path sums agree in either order; target sets alone need
    not, because paths can cancel."""
    for lam in all_partitions(8):
        for q1, q2 in ((2, 3), (3, 3), (2, 5)):
            union = (set(two_step_targets(lam, q1, q2))
                     | set(two_step_targets(lam, q2, q1)))
            for mu in union:
                assert (two_step_sign_sum(lam, q1, q2, mu)
                        == two_step_sign_sum(lam, q2, q1, mu))


# -- multipartitions -------------------------------------------------------

def test_multipartition_enumeration():
    mps = multipartitions_of(3, 2)
    assert len(mps) == 10
    assert len(set(mps)) == 10
    for mp in mps:
        assert len(mp) == 2
        assert sum(size(c) for c in mp) == 3


@given(st.integers(0, 6), st.integers(1, 3))
def test_multipartition_count_matches_convolution(n, slots):
    def count(n, slots):
        if slots == 1:
            return len(partitions_of(n))
        return sum(len(partitions_of(k)) * count(n - k, slots - 1)
                   for k in range(n + 1))
    assert len(multipartitions_of(n, slots)) == count(n, slots)
