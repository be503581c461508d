"""Bar (strict partition) combinatorics: bars, bar cores/quotients, and
the sign laws the spin isometries depend on."""

from functools import lru_cache

import pytest

from isoforge.barpartitions import (
    bar_core,
    bar_core_and_quotient,
    bar_cores_of,
    bar_lengths,
    bar_partitions_of,
    bar_removal_leg,
    bar_removals,
    bar_weight,
    check_bar_partition,
    delta_bar,
    from_bar_core_and_quotient,
    quotient_sigma,
    quotients_of_weight,
    sigma,
    stripped_bar_core,
    with_bar_core,
)
from isoforge.partitions import size


def all_bars(max_n):
    for n in range(max_n + 1):
        for lam in bar_partitions_of(n):
            yield lam


def test_strictness_is_enforced():
    check_bar_partition((4, 2, 1))
    with pytest.raises(ValueError):
        check_bar_partition((2, 2))
    with pytest.raises(ValueError):
        check_bar_partition((1, 2))


def test_bar_partition_counts():
    # distinct-part partitions: 1,1,1,2,2,3,4,5,6,8,10,12
    counts = [len(bar_partitions_of(n)) for n in range(12)]
    assert counts == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12]


def test_sigma_sign():
    assert sigma(()) == 1
    assert sigma((3, 2, 1)) == -1
    for lam in all_bars(10):
        assert sigma(lam) == (-1) ** (size(lam) - len(lam))


def test_bar_length_examples():
    assert sorted(bar_lengths((3, 2, 1))) == [1, 2, 3, 3, 4, 5]
    assert sorted(bar_lengths((3,))) == [1, 2, 3]
    assert bar_lengths(()) == []


def test_bar_removal_examples():
    assert bar_removals((2, 1), 3) == [((), 1)]
    assert bar_removals((3,), 1) == [((2,), 0)]
    assert bar_removals((3, 2, 1), 5) == [((1,), 2)]


def test_bar_removals_match_bar_length_multiset():
    """For odd q every bar of length q is removable, so the removal
    count equals the multiplicity of q among the bar lengths."""
    for lam in all_bars(10):
        lengths = bar_lengths(lam)
        for q in (1, 3, 5, 7):
            rem = bar_removals(lam, q)
            assert len(rem) == lengths.count(q)
            for mu, leg in rem:
                assert size(mu) == size(lam) - q
                assert leg >= 0


def test_weight_counts_divisible_bars():
    for q in (3, 5):
        for lam in all_bars(11):
            divisible = sum(1 for b in bar_lengths(lam) if b % q == 0)
            assert bar_weight(lam, q) == divisible


def test_bar_core_round_trip():
    for q in (3, 5):
        for lam in all_bars(11):
            core, quot = bar_core_and_quotient(lam, q)
            assert not bar_removals(core, q)
            assert size(lam) == size(core) + q * bar_weight(lam, q)
            assert from_bar_core_and_quotient(core, quot, q) == lam
            # stripping bars one at a time is an independent route to
            # the core
            assert stripped_bar_core(lam, q) == core


def test_from_bar_core_rejects_non_core():
    with pytest.raises(ValueError):
        from_bar_core_and_quotient((3,), ((), ()), 3)
    with pytest.raises(ValueError):
        from_bar_core_and_quotient((4, 1), ((), (), ()), 5)


def test_divisible_parts_match_quotient_first_component():
    for q in (3, 5):
        for lam in all_bars(11):
            _, quot = bar_core_and_quotient(lam, q)
            mine = sorted(a for a in lam if a % q == 0)
            theirs = sorted(q * b for b in quot[0])
            assert mine == theirs


def test_sigma_multiplicativity():
    """sigma(lam) = sigma(core) * sigma(quotient)."""
    for q in (3, 5):
        for lam in all_bars(11):
            core, quot = bar_core_and_quotient(lam, q)
            assert sigma(lam) == sigma(core) * quotient_sigma(quot)


def brute_delta_bar_signs(lam, q):
    @lru_cache(maxsize=None)
    def rec(mu):
        rem = bar_removals(mu, q)
        if not rem:
            return frozenset([1])
        out = set()
        for nu, leg in rem:
            for s in rec(nu):
                out.add(s * (-1) ** leg)
        return frozenset(out)
    return rec(tuple(lam))


def test_delta_bar_order_independent():
    for q in (3, 5):
        for lam in all_bars(10):
            signs = brute_delta_bar_signs(lam, q)
            assert len(signs) == 1
            assert delta_bar(lam, q) == next(iter(signs))


def test_delta_bar_of_core_is_plus_one():
    for q in (3, 5):
        for lam in all_bars(10):
            if not bar_removals(lam, q):
                assert delta_bar(lam, q) == 1


def _bar_quotient_step(lam, mu, q):
    """Leg of the quotient-level move matching a q-bar removal
    lam -> mu: a 1-bar in component 0 or a bead shift (leg 0) on one of
    the paired runners."""
    _, ql = bar_core_and_quotient(lam, q)
    _, qm = bar_core_and_quotient(mu, q)
    slots = [s for s in range(len(ql)) if ql[s] != qm[s]]
    assert len(slots) == 1
    s = slots[0]
    if s == 0:
        return bar_removal_leg(ql[0], qm[0], 1)
    from isoforge.partitions import hook_removal_leg
    return hook_removal_leg(ql[s], qm[s], 1)


def test_bar_leg_transfer_through_the_quotient():
    """(-1)^leg of a q-bar removal equals the quotient-level leg sign
    twisted by the delta-bar signs of the endpoints."""
    q = 3
    for lam in all_bars(10):
        for mu, leg in bar_removals(lam, q):
            assert bar_core(mu, q) == bar_core(lam, q)
            qleg = _bar_quotient_step(lam, mu, q)
            assert (-1) ** leg == ((-1) ** qleg
                                   * delta_bar(lam, q) * delta_bar(mu, q))


def test_multiple_bar_removal_respects_core_and_weight():
    q = 3
    for k in (2, 3):
        for lam in all_bars(10):
            for mu, _ in bar_removals(lam, k * q):
                assert bar_core(mu, q) == bar_core(lam, q)
                assert bar_weight(mu, q) == bar_weight(lam, q) - k


def test_with_bar_core_identity_and_sign_law():
    q = 3
    cores = [c for n in range(6) for c in bar_cores_of(n, q)]
    for w in range(4):
        for quot in quotients_of_weight(q, w):
            for core in cores:
                lam = from_bar_core_and_quotient(core, quot, q)
                assert with_bar_core(lam, core, q) == lam
                for core2 in cores:
                    moved = with_bar_core(lam, core2, q)
                    assert bar_core_and_quotient(moved, q) == (core2, quot)
                    assert sigma(moved) == (sigma(lam) * sigma(core)
                                            * sigma(core2))


def test_with_bar_core_commutes_with_bar_removal():
    q = 3
    cores = [(), (1,), (2,), (4, 1)]
    for lam in all_bars(9):
        for core2 in cores:
            moved = with_bar_core(lam, core2, q)
            direct = {mu for mu, _ in bar_removals(moved, q)}
            routed = {with_bar_core(mu, core2, q)
                      for mu, _ in bar_removals(lam, q)}
            assert direct == routed
