"""Shared test helpers.

The permutation-group machinery here is an oracle that is independent of
the table modules: groups are generated as explicit permutations, their
classes and class-algebra structure constants are computed by brute
force, and a character table is accepted only if some class matching
satisfies every central-character equation exactly.  A class function
chi with <chi,chi> = 1, chi(1) > 0, whose central character is an
algebra homomorphism is an irreducible character, so a full match
certifies the table.
"""

import itertools
from fractions import Fraction

from isoforge.exactnum import exact


# -- permutations as tuples (images of 0..m-1) -----------------------------

def pmul(a, b):
    """(a*b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def pinv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def pid(m):
    return tuple(range(m))


def from_cycles(m, *cycles):
    out = list(range(m))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            out[x] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def closure(gens):
    m = len(gens[0])
    seen = {pid(m)}
    frontier = [pid(m)]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = pmul(g, h)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen


def element_order(a):
    n = 1
    x = a
    e = pid(len(a))
    while x != e:
        x = pmul(x, a)
        n += 1
    return n


def conjugacy_classes(elements):
    """List of frozensets, identity class first, then by size."""
    elements = set(elements)
    left = set(elements)
    classes = []
    while left:
        g = next(iter(left))
        orbit = {pmul(pmul(h, g), pinv(h)) for h in elements}
        classes.append(frozenset(orbit))
        left -= orbit
    m = len(next(iter(elements)))
    classes.sort(key=lambda c: (pid(m) not in c, len(c)))
    return classes


def structure_constants(elements, classes):
    """a[j][k][l] = multiplicity of class l in the class-sum product
    K_j * K_k, i.e. the number of factorizations rep_l = x*y."""
    where = {}
    for idx, c in enumerate(classes):
        for g in c:
            where[g] = idx
    n = len(classes)
    counts = [[dict() for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for x in classes[j]:
            for k in range(n):
                bucket = counts[j][k]
                for y in classes[k]:
                    l = where[pmul(x, y)]
                    bucket[l] = bucket.get(l, 0) + 1
    a = [[[0] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            for l, c in counts[j][k].items():
                assert c % len(classes[l]) == 0
                a[j][k][l] = c // len(classes[l])
    return a


def table_matches_group(table, elements, cap=20000):
    """True iff some size-preserving bijection from table classes to
    group classes satisfies all central-character equations
    omega_r(j) * omega_r(k) = sum_l a_jkl * omega_r(l) exactly."""
    elements = set(elements)
    if table.order != len(elements):
        return False
    classes = conjugacy_classes(elements)
    n = len(classes)
    if n != len(table.class_labels):
        return False
    a = structure_constants(elements, classes)
    sizes_g = [len(c) for c in classes]

    id_idx = table.class_index(table.identity)

    def omega_rows(assign):
        out = []
        for lbl in table.char_labels:
            vals = table.row(lbl)
            deg = vals[id_idx]
            om = [None] * n
            for ti, gi in enumerate(assign):
                om[gi] = vals[ti] * Fraction(sizes_g[gi]) / deg.rational()
            out.append(om)
        return out

    def check(assign):
        for om in omega_rows(assign):
            for j in range(n):
                for k in range(j, n):
                    total = exact(0)
                    for l in range(n):
                        if a[j][k][l]:
                            total = total + om[l] * a[j][k][l]
                    if om[j] * om[k] != total:
                        return False
        return True

    by_size_g = {}
    for gi, s in enumerate(sizes_g):
        by_size_g.setdefault(s, []).append(gi)
    by_size_t = {}
    for ti, lbl in enumerate(table.class_labels):
        by_size_t.setdefault(table.class_size(lbl), []).append(ti)
    if sorted(by_size_g) != sorted(by_size_t):
        return False
    sizes = sorted(by_size_t)
    choices = []
    total = 1
    for s in sizes:
        if len(by_size_t[s]) != len(by_size_g[s]):
            return False
        perms = list(itertools.permutations(by_size_g[s]))
        total *= len(perms)
        if total > cap:
            raise RuntimeError("class matching search too large")
        choices.append(perms)
    for combo in itertools.product(*choices):
        assign = [None] * n
        for s, perm in zip(sizes, combo):
            for ti, gi in zip(by_size_t[s], perm):
                assign[ti] = gi
        if check(assign):
            return True
    return False
