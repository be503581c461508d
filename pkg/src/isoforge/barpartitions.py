"""Bar partitions (distinct parts): bars, legs, cores, quotients, signs.

For a strict partition lam = (l1 > ... > lr > 0), row i carries the bar
lengths J_i = {1..l_i} u {l_i + l_j : j > i} \\ {l_i - l_j : j > i}.
A bar of length a in row i either lowers l_i to l_i - a (which must not
collide with another part) or, when a = l_i + l_m for some m > i,
removes the two parts l_i and l_m.  Leg lengths follow the Morris
convention:

    single row:  #{k : l_i > l_k > l_i - a}
    pair:        l_m + #{k : l_i > l_k > l_m}

Cores and quotients are read from one Maya runner per residue pair
(j, q-j): position c >= 0 is occupied iff qc + j is a part, position
c <= -1 is occupied iff q|c| - j is not a part; a q-bar removal is one
bead slide.  Parts divisible by q form their own bar partition (the 0th
quotient component) after division by q.
"""

from functools import lru_cache

from .partitions import partitions_of


def check_bar_partition(lam):
    lam = tuple(lam)
    if any(a <= b for a, b in zip(lam, lam[1:])) or any(a <= 0 for a in lam):
        raise ValueError("parts must be strictly decreasing: %r" % (lam,))
    return lam


@lru_cache(maxsize=None)
def bar_partitions_of(n):
    return tuple(
        lam for lam in partitions_of(n) if len(set(lam)) == len(lam)
    )


def sigma(lam):
    """(-1)^(|lam| - length); +1 means one self-associate spin character."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def bar_lengths(lam):
    """The multiset of bar lengths, row by row."""
    lam = check_bar_partition(lam)
    out = []
    for i, a in enumerate(lam):
        tail = lam[i + 1 :]
        row = set(range(1, a + 1)) | {a + b for b in tail}
        row -= {a - b for b in tail}
        out.extend(sorted(row, reverse=True))
    return out


def bar_removals(lam, q):
    """All ways to remove a q-bar: list of (mu, leg_length)."""
    lam = check_bar_partition(lam)
    parts = set(lam)
    out = []
    for i, a in enumerate(lam):
        if a >= q and (a - q) not in parts:
            rest = [b for b in lam if b != a]
            if a > q:
                rest.append(a - q)
            mu = tuple(sorted(rest, reverse=True))
            leg = sum(1 for b in lam if a > b > a - q)
            out.append((mu, leg))
    for i in range(len(lam)):
        for m in range(i + 1, len(lam)):
            if lam[i] + lam[m] == q:
                mu = tuple(b for b in lam if b not in (lam[i], lam[m]))
                leg = lam[m] + sum(1 for b in lam if lam[i] > b > lam[m])
                out.append((mu, leg))
    assert len({mu for mu, _ in out}) == len(out)
    return out


def bar_removal_leg(lam, mu, q):
    for nu, leg in bar_removals(lam, q):
        if nu == mu:
            return leg
    raise ValueError("%s is not a q-bar removal of %s" % (mu, lam))


def stripped_bar_core(lam, q):
    """The q-bar core computed by greedy stripping (largest part first)."""
    cur = check_bar_partition(lam)
    while True:
        rem = bar_removals(cur, q)
        if not rem:
            return cur
        cur = rem[0][0]


def delta_bar(lam, q):
    """Product of (-1)^leg over a full q-bar stripping of lam."""
    sign = 1
    cur = check_bar_partition(lam)
    while True:
        rem = bar_removals(cur, q)
        if not rem:
            return sign
        mu, leg = rem[0]
        sign *= (-1) ** leg
        cur = mu


def _runner_charge_and_partition(lam, q, j):
    # Maya model for the residue pair (j, q-j); returns (charge, partition)
    nneg = lam[0] // q + 2 if lam else 2
    occupied = []
    top = lam[0] // q + 1 if lam else 0
    for c in range(top, -1, -1):
        if q * c + j in lam:
            occupied.append(c)
    for c in range(1, nneg + 1):
        if (q * c - j) not in lam:
            occupied.append(-c)
    charge = len(occupied) - nneg
    parts = []
    for t, pos in enumerate(occupied, start=1):
        a = pos - charge + t
        if a > 0:
            parts.append(a)
    assert parts == sorted(parts, reverse=True)
    return charge, tuple(parts)


@lru_cache(maxsize=None)
def bar_core_and_quotient(lam, q):
    """(q-bar core, quotient (lam0, lam1, ..., lam_e)) with e = (q-1)/2."""
    if q % 2 == 0 or q < 3:
        raise ValueError("q must be odd and >= 3")
    lam = check_bar_partition(lam)
    e = (q - 1) // 2
    lam0 = tuple(a // q for a in lam if a % q == 0)
    charges = []
    quotient = [lam0]
    for j in range(1, e + 1):
        d, comp = _runner_charge_and_partition(lam, q, j)
        charges.append(d)
        quotient.append(comp)
    core_parts = []
    for j, d in zip(range(1, e + 1), charges):
        if d > 0:
            core_parts.extend(q * c + j for c in range(d))
        elif d < 0:
            core_parts.extend(q * c - j for c in range(1, -d + 1))
    core = tuple(sorted(core_parts, reverse=True))
    return core, tuple(quotient)


def bar_core(lam, q):
    return bar_core_and_quotient(lam, q)[0]


def bar_quotient(lam, q):
    return bar_core_and_quotient(lam, q)[1]


def bar_weight(lam, q):
    return sum(sum(c) for c in bar_core_and_quotient(lam, q)[1])


def quotient_sigma(quotient):
    """(-1)^(size - length of the 0th component), cf. the sign of a strict
    partition; multiplies with the core sign to give sigma(lam)."""
    w = sum(sum(c) for c in quotient)
    return -1 if (w - len(quotient[0])) % 2 else 1


def from_bar_core_and_quotient(core, quotient, q):
    """Rebuild the bar partition with the given q-bar core and quotient."""
    e = (q - 1) // 2
    if len(quotient) != e + 1:
        raise ValueError("need %d quotient components" % (e + 1))
    core = check_bar_partition(core)
    if bar_removals(core, q):
        raise ValueError("core %r still has a %d-bar" % (core, q))
    parts = [q * a for a in quotient[0]]
    for j in range(1, e + 1):
        d, comp = _runner_charge_and_partition(core, q, j)
        assert comp == (), "core has a nonempty runner component"
        mu = quotient[j]
        span = len(mu) + abs(d) + 2
        beads = set()
        for t in range(1, 2 * span + 3):
            a = mu[t - 1] if t <= len(mu) else 0
            beads.add(a + d - t)
        for c in range(0, (max(beads) if beads else 0) + 1):
            if c in beads:
                parts.append(q * c + j)
        for c in range(1, span + 1):
            if -c not in beads:
                parts.append(q * c - j)
    lam = tuple(sorted(parts, reverse=True))
    lam = check_bar_partition(lam)
    got_core, got_quot = bar_core_and_quotient(lam, q)
    assert got_core == core and got_quot == tuple(quotient)
    return lam


def with_bar_core(lam, new_core, q):
    """Same q-bar quotient as lam, new q-bar core."""
    return from_bar_core_and_quotient(new_core, bar_quotient(lam, q), q)


def bar_cores_of(n, q):
    """All q-bar cores of size n."""
    return tuple(
        lam for lam in bar_partitions_of(n) if not bar_removals(lam, q)
    )


def quotients_of_weight(q, w):
    """All q-bar quotients of total size w, in a fixed deterministic order."""
    e = (q - 1) // 2
    out = []

    def rec(idx, remaining, acc):
        if idx == e + 1:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for k in range(remaining + 1):
            pool = (
                bar_partitions_of(k) if idx == 0 else partitions_of(k)
            )
            for comp in pool:
                acc.append(comp)
                rec(idx + 1, remaining - k, acc)
                acc.pop()

    rec(0, w, [])
    return tuple(out)
