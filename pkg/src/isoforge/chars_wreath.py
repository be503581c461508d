"""Character tables of wreath products H wr S_w and two index-2 kernels.

Classes and characters of H wr S_w are both labelled by tuples of
partitions, one slot per conjugacy class (resp. irreducible character)
of the base group H.  A class label records, for each base class, the
lengths of the cycles whose cycle product falls in that class; fixed
points with trivial product land in the slot of the identity class.
Values come from the one-cycle removal recursion: stripping a k-cycle
with product in base class g picks up psi_s(g) times a signed k-hook
removal in slot s.

Bases provided here: cyclic groups Z_l (l = 1, 2, 3, 4, 6, so that the
values stay inside the quadratic ring), and the normalizer N of a Sylow
p-subgroup of S_p for p in {3, 5, 7}, i.e. Z_p : Z_{p-1}.

Two descents to index-2 subgroups:
  * dn_table(n): kernel in Z_2 wr S_n of the linear character detecting
    the parity of the number of sign flips; this is the Weyl group D_n.
  * hpw_table(p, w): kernel in N wr S_w of the restriction of the sign
    character of S_{pw} under the natural embedding.
"""

from functools import lru_cache
from math import gcd

from .exactnum import exact, rt, zeta, i_pow, ZERO, ONE
from .chartable import CharTable, index2_descent
from .partitions import (
    partitions_of,
    multipartitions_of,
    centralizer_order,
    conjugate,
    diagonal_hooks,
    hook_removals,
)
from .chars_sym_alt import sn_character_value

MINUS_ONE = exact(-1)


# -- base tables -----------------------------------------------------------

@lru_cache(maxsize=None)
def cyclic_table(l):
    """Z_l with classes g^0, ..., g^(l-1) and chars psi_s: g -> zeta_l^(s-1).

    The identity comes first, so slot 1 of any Z_l wreath label collects
    the cycles with trivial product.
    """
    if l not in (1, 2, 3, 4, 6):
        raise ValueError("cyclic base of order %r not representable" % (l,))
    classes = [(("g", j), l) for j in range(l)]
    chars = []
    for s in range(l):
        row = [zeta(l, s * j) for j in range(l)]
        chars.append((("psi", s + 1), row))
    table = CharTable("Z%d" % l, l, classes, chars, identity=("g", 0))
    table.element_orders = {("g", j): l // gcd(l, j) for j in range(l)}
    return table


@lru_cache(maxsize=None)
def normalizer_base_table(p):
    """Z_p : Z_{p-1}, the normalizer of a Sylow p-subgroup of S_p.

    Class representatives are eta^1, ..., eta^(p-1) = 1, omega, where
    eta generates the complement of order p - 1 and omega the normal
    Z_p.  Characters are labelled so that psi_1 is the restriction of
    the sign of S_p, psi_p is trivial, psi_{p+1-s} = psi_s tensor psi_1,
    and psi at (p+1)/2 is the character of degree p - 1.
    """
    if p not in (3, 5, 7):
        raise ValueError("normalizer base needs p in {3, 5, 7}, got %r" % (p,))
    m = p - 1
    pstar = (p + 1) // 2
    classes = []
    for i in range(1, p + 1):
        if i == m:
            z = p * m
        elif i == p:
            z = p
        else:
            z = m
        classes.append((("g", i), z))

    expo = {p: 0}
    for s in range(1, pstar):
        expo[s] = m // 2 + s - 1
    for s in range(pstar + 1, p):
        expo[s] = (expo[p + 1 - s] + m // 2) % m

    chars = []
    for s in range(1, p + 1):
        if s == pstar:
            row = [ZERO] * (p - 2) + [exact(m)] + [MINUS_ONE]
        else:
            row = [zeta(m, expo[s] * i) for i in range(1, p)] + [ONE]
        chars.append((("psi", s), row))
    table = CharTable("N%d" % p, p * m, classes, chars, identity=("g", m))
    orders = {("g", i): m // gcd(m, i) for i in range(1, p)}
    orders[("g", p)] = p
    table.element_orders = orders
    # the labelling rules above are load-bearing downstream; check them
    eps = table.row(("psi", 1))
    for s in range(1, p + 1):
        twisted = tuple(v * e for v, e in zip(table.row(("psi", s)), eps))
        assert twisted == table.row(("psi", p + 1 - s))
    return table


# -- generic wreath product ------------------------------------------------

def _strip_last(mp):
    """Remove the smallest part of the last nonempty slot.

    Returns (slot index, part, remaining label).
    """
    for t in range(len(mp) - 1, -1, -1):
        if mp[t]:
            k = mp[t][-1]
            rest = mp[:t] + (mp[t][:-1],) + mp[t + 1:]
            return t, k, rest
    raise ValueError("empty cycle structure")


class _WreathEvaluator:
    def __init__(self, base):
        self.base = base
        self.r = base.n_classes()
        self.rows = [base.row(lbl) for lbl in base.char_labels]
        self.cache = {}

    def theta(self, mu, pi):
        """Value of the character labelled mu at the class labelled pi."""
        if not any(pi):
            return ONE
        key = (mu, pi)
        try:
            return self.cache[key]
        except KeyError:
            pass
        t, k, rest = _strip_last(pi)
        total = ZERO
        for s in range(self.r):
            c = self.rows[s][t]
            if not c:
                continue
            for nu, leg in hook_removals(mu[s], k):
                sub = mu[:s] + (nu,) + mu[s + 1:]
                term = c * self.theta(sub, rest)
                if leg % 2:
                    term = -term
                if term:
                    total = total + term
        self.cache[key] = total
        return total


_EVALUATORS = {}


def _evaluator(base):
    ev = _EVALUATORS.get(base.name)
    if ev is None or ev.base is not base:
        ev = _WreathEvaluator(base)
        _EVALUATORS[base.name] = ev
    return ev


def wreath_centralizer(pi, base_centralizers):
    z = 1
    for part, zb in zip(pi, base_centralizers):
        z *= centralizer_order(part) * zb ** len(part)
    return z


def wreath_table(base, w, name=None):
    """Character table of (base group) wr S_w."""
    if w < 0:
        raise ValueError("negative number of copies: %r" % (w,))
    r = base.n_classes()
    base_cz = [base.centralizer(lbl) for lbl in base.class_labels]
    idx0 = base.class_index(base.identity)
    labels = multipartitions_of(w, r)
    classes = [(pi, wreath_centralizer(pi, base_cz)) for pi in labels]
    ev = _evaluator(base)
    chars = [(mu, [ev.theta(mu, pi) for pi in labels]) for mu in labels]
    empty = ((),) * r
    identity = empty[:idx0] + ((1,) * w,) + empty[idx0 + 1:]
    if name is None:
        name = "%swrS%d" % (base.name, w)
    table = CharTable(name, base.order ** w * _factorial(w), classes, chars,
                      identity=identity)
    table.base = base
    return table


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def zl_wreath_table(l, w):
    return wreath_table(cyclic_table(l), w)


def bn_table(n):
    """Weyl group of type B_n, i.e. Z_2 wr S_n."""
    return zl_wreath_table(2, n)


@lru_cache(maxsize=None)
def gpw_table(p, w):
    return wreath_table(normalizer_base_table(p), w,
                        name="G(%d,%d)" % (p, w))


# -- Weyl groups of type D -------------------------------------------------

@lru_cache(maxsize=None)
def dn_table(n):
    """Weyl group of type D_n inside B_n = Z_2 wr S_n.

    Split classes are the (2.pi, -) with all cycles of even length and
    trivial product; the difference of a split pair (mu, mu)^+- takes
    the value +-2^l(pi) chi_mu(pi) there.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %r" % (n,))
    parent = bn_table(n)
    eps_label = ((), (n,))
    eps = parent.row(eps_label)
    for i, pi in enumerate(parent.class_labels):
        assert eps[i] == exact((-1) ** len(pi[1]))
    split = []
    diff = {}
    if n % 2 == 0:
        half = n // 2
        split = [(tuple(2 * a for a in piv), ()) for piv in partitions_of(half)]
        for mu in partitions_of(half):
            lbl = (mu, mu)
            for piv in partitions_of(half):
                cls = (tuple(2 * a for a in piv), ())
                val = 2 ** len(piv) * sn_character_value(mu, piv)
                if val:
                    diff[(lbl, cls)] = exact(val)
    table = index2_descent(parent, eps_label, split, diff, "D%d" % n,
                           identity=((1,) * n, ()))
    table.base = parent.base
    return table


# -- even subgroups of G_{p,w} ---------------------------------------------

def mp_star(mu):
    """Reverse the slots and conjugate each partition."""
    return tuple(conjugate(m) for m in reversed(mu))


def is_split_hpw_class(p, pi):
    """Does the class of G_{p,w} labelled pi split in the even subgroup?

    Slots at even positions must be empty (this includes the identity
    slot p - 1), slots at odd positions below p carry only even parts,
    and slot p carries distinct odd parts.
    """
    for i in range(1, p + 1):
        parts = pi[i - 1]
        if i == p:
            if any(a % 2 == 0 for a in parts) or len(set(parts)) != len(parts):
                return False
        elif i % 2 == 0:
            if parts:
                return False
        else:
            if any(a % 2 for a in parts):
                return False
    return True


def hpw_split_classes(p, w):
    return [pi for pi in multipartitions_of(w, p) if is_split_hpw_class(p, pi)]


def _diagonal_split_value(p, mu):
    """Difference value contributed by the self-conjugate slot (p+1)/2.

    For a(mu) = (c_1 > ... > c_d) the value is
    (sqrt(eps_p p))^d sqrt(eps_mu c_1 ... c_d) with
    eps_p = (-1)^((p-1)/2) and eps_mu = (-1)^((|mu|-d)/2).
    """
    hooks = diagonal_hooks(mu)
    d = len(hooks)
    eps_p = (-1) ** ((p - 1) // 2)
    eps_mu = (-1) ** ((sum(mu) - d) // 2)
    ph = 1
    for c in hooks:
        ph *= c
    val = rt(eps_mu * ph)
    for _ in range(d):
        val = val * rt(eps_p * p)
    return val


@lru_cache(maxsize=None)
def hpw_table(p, w):
    """The even subgroup H_{p,w} of G_{p,w}.

    G_{p,w} sits inside S_{pw} and H_{p,w} is the kernel of the
    restricted sign character, which is the wreath character with the
    sign partition (1^w) in the slot of psi_1.

    A split character, labelled by a slot-reversal-conjugation fixed
    mu, has nonzero difference exactly on the split classes whose slot
    p part equals the diagonal hooks a(mu_{p*}) and whose doubled slots
    match the sizes of the matching character slots.  Each doubled
    2k-cycle contributes 2(-i)^(k mod 2), each doubled slot a symmetric
    group character value, and slot p the diagonal hook product value.
    """
    if w < 1:
        raise ValueError("need w >= 1, got %r" % (w,))
    parent = gpw_table(p, w)
    base = normalizer_base_table(p)
    pstar = (p + 1) // 2
    eps_label = tuple([(1,) * w] + [()] * (p - 1))
    eps = parent.row(eps_label)
    eps_h = base.row(("psi", 1))
    for idx, pi in enumerate(parent.class_labels):
        sign = 1
        for slot, part in enumerate(pi):
            for k in part:
                sign *= (-1) ** (k - 1)
            if eps_h[slot] == MINUS_ONE and len(part) % 2:
                sign = -sign
        assert eps[idx] == exact(sign)
    split = hpw_split_classes(p, w)
    fixed = [mu for mu in parent.char_labels if mp_star(mu) == mu]
    assert len(fixed) == len(split)
    diff = {}
    for mu in fixed:
        tail = _diagonal_split_value(p, mu[pstar - 1])
        hooks = diagonal_hooks(mu[pstar - 1])
        for pi in split:
            if pi[p - 1] != hooks:
                continue
            if any(sum(pi[2 * i - 2]) != 2 * sum(mu[i - 1])
                   for i in range(1, pstar)):
                continue
            val = tail
            for i in range(1, pstar):
                halved = tuple(a // 2 for a in pi[2 * i - 2])
                val = val * exact(sn_character_value(mu[i - 1], halved))
                for k in halved:
                    factor = exact(2)
                    if k % 2:
                        factor = factor * i_pow(3)
                    val = val * factor
            if val:
                diff[(mu, pi)] = val
    table = index2_descent(parent, eps_label, split, diff,
                           "H(%d,%d)" % (p, w), identity=parent.identity)
    table.base = parent.base
    return table
