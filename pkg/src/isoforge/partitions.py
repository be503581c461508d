"""Partition combinatorics: hooks, beta-sets, cores, quotients, signs.

A partition is a tuple of weakly decreasing positive integers; () is the
empty partition.  Hook removal and core/quotient extraction both go
through beta-sets (first-column hook lengths padded with a staircase),
with the beta-set size kept a multiple of p whenever a p-quotient is
read off, so the quotient components are independent of padding.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial


def check_partition(lam):
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a <= 0 for a in lam):
        raise ValueError("not a partition: %r" % (lam,))
    return lam


def parse_partition(text):
    """Inverse of format_partition; accepts '' or the empty-set glyph."""
    text = text.strip()
    if text in ("", "∅"):
        return ()
    return check_partition(int(t) for t in text.split(","))


def format_partition(lam):
    if not lam:
        return "∅"
    return ",".join(str(a) for a in lam)


def parse_multipartition(text, k):
    parts = text.split(";")
    if len(parts) != k:
        raise ValueError("expected %d components, got %d" % (k, len(parts)))
    return tuple(parse_partition(t) for t in parts)


def format_multipartition(mu):
    return ";".join(format_partition(m) for m in mu)


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(
        sum(1 for a in lam if a > j) for j in range(lam[0])
    )


def is_self_conjugate(lam):
    return tuple(lam) == conjugate(lam)


def size(lam):
    return sum(lam)


def length(lam):
    return len(lam)


def perm_sign(lam):
    """Sign of a permutation with cycle type lam (fixed points optional)."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def centralizer_order(lam):
    """Order of the centralizer of a cycle-type-lam element of S_|lam|."""
    z = 1
    mult = {}
    for a in lam:
        mult[a] = mult.get(a, 0) + 1
    for a, m in mult.items():
        z *= a**m * factorial(m)
    return z


def all_parts_odd(lam):
    return all(a % 2 == 1 for a in lam)


def all_parts_distinct(lam):
    return len(set(lam)) == len(lam)


def hook_lengths(lam):
    """Matrix of hook lengths h(i,j) = lam_i - j + lam'_j - i + 1."""
    conj = conjugate(lam)
    return [
        [lam[i] - (j + 1) + conj[j] - (i + 1) + 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def beta_set(lam, size_):
    """First-column hook lengths of lam padded to the given size."""
    if size_ < len(lam):
        raise ValueError("beta-set too small")
    padded = list(lam) + [0] * (size_ - len(lam))
    return sorted(padded[i] + (size_ - 1 - i) for i in range(size_))


def partition_from_beta(beta):
    beta = sorted(beta)
    lam = [b - i for i, b in enumerate(beta)]
    return tuple(a for a in reversed(lam) if a > 0)


def hook_removals(lam, q):
    """All ways to remove a q-hook: list of (mu, leg_length).

    Each resulting mu appears once; the hook joining lam to mu is unique.
    """
    beta = beta_set(lam, len(lam))
    bset = set(beta)
    out = []
    for b in beta:
        if b >= q and (b - q) not in bset:
            leg = sum(1 for c in beta if b - q < c < b)
            mu = partition_from_beta([c for c in beta if c != b] + [b - q])
            out.append((mu, leg))
    assert len({mu for mu, _ in out}) == len(out)
    return out


def hook_removal_leg(lam, mu, q):
    for nu, leg in hook_removals(lam, q):
        if nu == mu:
            return leg
    raise ValueError("%s is not a q-hook removal of %s" % (mu, lam))


@lru_cache(maxsize=None)
def core_and_quotient(lam, p):
    """(p-core, p-quotient) read from the abacus with p runners.

    The beta-set size is padded to a multiple of p; runner r holds the
    beads congruent to r mod p and becomes quotient component r.
    """
    lam = tuple(lam)
    size_ = ((len(lam) + p - 1) // p) * p
    if size_ == 0:
        size_ = p
    beta = beta_set(lam, size_)
    runners = [[] for _ in range(p)]
    for b in beta:
        runners[b % p].append(b // p)
    quotient = tuple(partition_from_beta(r) for r in runners)
    core_beta = []
    for r in range(p):
        core_beta.extend(p * k + r for k in range(len(runners[r])))
    core = partition_from_beta(core_beta)
    return core, quotient


def p_core(lam, p):
    return core_and_quotient(lam, p)[0]


def p_quotient(lam, p):
    return core_and_quotient(lam, p)[1]


def p_weight(lam, p):
    return sum(sum(c) for c in core_and_quotient(lam, p)[1])


def from_core_and_quotient(core, quotient, p):
    """Rebuild the partition with the given p-core and p-quotient."""
    if len(quotient) != p:
        raise ValueError("need a %d-tuple quotient" % p)
    if hook_removals(tuple(core), p):
        raise ValueError("core %r still has a %d-hook" % (core, p))
    comp_len = max([0] + [len(c) for c in quotient])
    size_ = p * (len(core) + comp_len + 1)
    beta = beta_set(core, size_)
    runners = [[] for _ in range(p)]
    for b in beta:
        runners[b % p].append(b // p)
    out_beta = []
    for r in range(p):
        nbeads = len(runners[r])
        comp = quotient[r]
        sub = beta_set(comp, nbeads)
        out_beta.extend(p * k + r for k in sub)
    lam = partition_from_beta(out_beta)
    got_core, got_quot = core_and_quotient(lam, p)
    assert got_core == tuple(core) and got_quot == tuple(quotient)
    return lam


def with_core(lam, new_core, p):
    """The partition with the same p-quotient as lam but p-core new_core."""
    return from_core_and_quotient(new_core, p_quotient(lam, p), p)


def delta_sign(lam, q):
    """Product of (-1)^leg over any full q-hook stripping of lam.

    Independent of the removal order; this implementation always strips
    the hook with the largest beta-number.
    """
    sign = 1
    cur = tuple(lam)
    while True:
        rem = hook_removals(cur, q)
        if not rem:
            return sign
        mu, leg = rem[0]
        sign *= (-1) ** leg
        cur = mu


def two_step_sign_sum(lam, q1, q2, mu):
    """Sum of (-1)^(L1+L2) over removal paths lam -> nu -> mu.

    The first step removes a q1-hook, the second a q2-hook.
    """
    total = 0
    for nu, leg1 in hook_removals(lam, q1):
        for mu2, leg2 in hook_removals(nu, q2):
            if mu2 == mu:
                total += (-1) ** (leg1 + leg2)
    return total


def two_step_targets(lam, q1, q2):
    out = set()
    for nu, _ in hook_removals(lam, q1):
        for mu, _ in hook_removals(nu, q2):
            out.add(mu)
    return sorted(out, reverse=True)


def diagonal_hooks(lam):
    """Principal hook lengths (h_11 > h_22 > ...), all odd iff self-conj."""
    conj = conjugate(lam)
    d = sum(1 for i in range(len(lam)) if lam[i] > i)
    return tuple(lam[i] + conj[i] - 2 * i - 1 for i in range(d))


def from_diagonal_hooks(hooks):
    """The self-conjugate partition with the given principal hooks."""
    hooks = tuple(hooks)
    if any(h % 2 == 0 for h in hooks) or any(
        a <= b for a, b in zip(hooks, hooks[1:])
    ):
        raise ValueError("need strictly decreasing odd hooks")
    k = len(hooks)
    rows = {}
    for t in range(1, k + 1):
        arm = (hooks[t - 1] - 1) // 2
        for j in range(t, t + arm + 1):
            rows[t] = max(rows.get(t, 0), j)
            rows.setdefault(j, 0)
            rows[j] = max(rows[j], t)
    lam = tuple(rows[i] for i in sorted(rows))
    lam = tuple(sorted((a for a in lam if a), reverse=True))
    assert is_self_conjugate(lam) and diagonal_hooks(lam) == hooks
    return lam


def self_conjugate_removal(lam, q):
    """The unique self-conjugate member of the q-hook removals, if any.

    Exists exactly when q is a principal hook length of self-conjugate
    lam; returns (mu, leg) or None.
    """
    found = None
    for mu, leg in hook_removals(lam, q):
        if is_self_conjugate(mu):
            assert found is None
            found = (mu, leg)
    return found


@lru_cache(maxsize=None)
def multipartitions_of(n, slots):
    """All tuples of `slots` partitions with total size n.

    Ordered with the leading slot taking sizes n, n-1, ..., 0 and each
    slot running through partitions_of.
    """
    if slots == 0:
        return ((),) if n == 0 else ()
    out = []
    for a in range(n, -1, -1):
        for head in partitions_of(a):
            for tail in multipartitions_of(n - a, slots - 1):
                out.append((head,) + tail)
    return tuple(out)
