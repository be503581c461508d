"""Character tables of the double covers of S_n and A_n.

Class labels are (pi, k): cycle type pi with k = 0 for the class of
t_pi, k = 1 for the class of z t_pi, and k = 2 for a merged class
{t_pi ~ z t_pi}.  In the alternating cover, cycle types with all parts
odd and distinct label four classes (pi, s, k) where s = +-1 tags the
two A_n-classes and k the z-coset as before.

Character labels: ('chi', mu) for rows lifted from S_n or A_n, and
('xi', lam, e) for spin rows, where e = 0 marks the self-associate
character of an even strict partition and e = +-1 an associate pair.

Spin rows vanish off split classes.  On classes with all cycle lengths
odd the value is computed by the bar-removal recursion (remove the
largest cycle; coefficient (-1)^((q^2-1)/8) * (-1)^leg * 2^m with m = 1
exactly when the label goes from even to odd); the recursion bottoms
out in the spin degree.  The remaining support sits on the diagonal
classes of type lam itself, with the classical sqrt values.
"""

from functools import lru_cache

from .barpartitions import bar_lengths, bar_removals, sigma
from .chartable import CharTable
from .chars_sym_alt import an_table, sn_character_value, sn_table
from .exactnum import ExactScalar, ZERO, i_pow, rt
from .partitions import (
    all_parts_distinct,
    all_parts_odd,
    centralizer_order,
    partitions_of,
    perm_sign,
)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@lru_cache(maxsize=None)
def spin_degree(lam):
    """Degree of (each) spin character labelled by the strict partition."""
    n = sum(lam)
    num = 2 ** ((n - len(lam)) // 2) * _factorial(n)
    den = 1
    for b in bar_lengths(lam) if lam else []:
        den *= b
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def spin_o_value(lam, pi):
    """Common value of the spin characters of lam on the class of t_pi,
    for pi with all parts odd.  Always an integer."""
    if sum(lam) != sum(pi):
        raise ValueError("size mismatch")
    if not pi or pi[0] == 1:
        return spin_degree(lam)
    q = pi[0]
    pref = -1 if ((q * q - 1) // 8) % 2 else 1
    total = 0
    for mu, leg in bar_removals(lam, q):
        m = 1 if (sigma(lam) == 1 and sigma(mu) == -1) else 0
        total += pref * (-1) ** leg * 2**m * spin_o_value(mu, pi[1:])
    return total


def is_split_cover_class(pi):
    """Split classes of the double cover of S_n: all parts odd, or
    distinct parts with negative sign."""
    return all_parts_odd(pi) or (
        all_parts_distinct(pi) and perm_sign(pi) == -1
    )


def diag_minus_value(lam):
    """xi_lam^+ at t_lam for odd strict lam: i^((n-r+1)/2) sqrt(z/2)."""
    n, r = sum(lam), len(lam)
    z = centralizer_order(lam)
    assert z % 2 == 0
    return i_pow((n - r + 1) // 2) * rt(z // 2)


def diag_plus_delta(lam):
    """Difference character value at the (+,0)-class of type lam for
    even strict lam: i^((n-l)/2) sqrt(z)."""
    n, l = sum(lam), len(lam)
    return i_pow((n - l) // 2) * rt(centralizer_order(lam))


@lru_cache(maxsize=None)
def tilde_sn_table(n):
    base = sn_table(n)
    classes = []
    for pi in base.class_labels:
        z = centralizer_order(pi)
        if is_split_cover_class(pi):
            classes.append(((pi, 0), 2 * z))
            classes.append(((pi, 1), 2 * z))
        else:
            classes.append(((pi, 2), z))
    labels = [lbl for lbl, _ in classes]

    chars = []
    for mu in base.char_labels:
        row = [base.value(mu, pi) for (pi, _k) in labels]
        chars.append((("chi", mu), row))

    for lam in partitions_of(n):
        if not all_parts_distinct(lam):
            continue
        if sigma(lam) == 1:
            tags = (0,)
        else:
            tags = (1, -1)
        for e in tags:
            row = []
            for pi, k in labels:
                if k == 2:
                    row.append(ZERO)
                elif all_parts_odd(pi):
                    v = ExactScalar(spin_o_value(lam, pi))
                    row.append(-v if k else v)
                elif pi == lam and sigma(lam) == -1:
                    v = diag_minus_value(lam)
                    if e == -1:
                        v = -v
                    row.append(-v if k else v)
                else:
                    row.append(ZERO)
            chars.append((("xi", lam, e), row))

    return CharTable(
        "cover-S%d" % n, 2 * _factorial(n), classes, chars,
        identity=((1,) * n, 0),
    ).validate()


def _an_class_centralizer(pi):
    z = centralizer_order(pi)
    if all_parts_odd(pi) and all_parts_distinct(pi):
        return 2 * z
    return z


@lru_cache(maxsize=None)
def tilde_an_table(n):
    abase = an_table(n)
    classes = []
    for albl in abase.class_labels:
        if isinstance(albl[0], tuple):
            pi, s = albl
            classes.append(((pi, s, 0), 2 * centralizer_order(pi)))
            classes.append(((pi, s, 1), 2 * centralizer_order(pi)))
        else:
            pi = albl
            if all_parts_odd(pi) or (
                all_parts_distinct(pi) and perm_sign(pi) == 1
            ):
                z = centralizer_order(pi)
                classes.append(((pi, 0), z))
                classes.append(((pi, 1), z))
            else:
                classes.append(((pi, 2), centralizer_order(pi) // 2))
    labels = [lbl for lbl, _ in classes]

    def base_label(lbl):
        return (lbl[0], lbl[1]) if len(lbl) == 3 else lbl[0]

    chars = []
    for mu in abase.char_labels:
        row = []
        for lbl in labels:
            pi = lbl[0]
            if len(lbl) == 3:
                row.append(abase.value(mu, (pi, lbl[1])))
            else:
                row.append(abase.value(mu, pi))
        chars.append((("chi", mu), row))

    for lam in partitions_of(n):
        if not all_parts_distinct(lam):
            continue
        if sigma(lam) == -1:
            row = []
            for lbl in labels:
                pi = lbl[0]
                k = lbl[-1]
                if k == 2 or not all_parts_odd(pi):
                    row.append(ZERO)
                else:
                    v = ExactScalar(spin_o_value(lam, pi))
                    row.append(-v if k else v)
            chars.append((("xi", lam, 1), row))
            continue
        delta = diag_plus_delta(lam)
        for e in (1, -1):
            row = []
            for lbl in labels:
                pi = lbl[0]
                k = lbl[-1]
                if k == 2:
                    row.append(ZERO)
                    continue
                if all_parts_odd(pi):
                    v = ExactScalar(spin_o_value(lam, pi))
                    v = (-v if k else v) / 2
                else:
                    v = ZERO
                if pi == lam:
                    d = delta
                    if len(lbl) == 3 and lbl[1] == -1:
                        d = -d
                    if k:
                        d = -d
                    v = v + ExactScalar(e) * d / 2
                row.append(v)
            chars.append((("xi", lam, e), row))

    return CharTable(
        "cover-A%d" % n, _factorial(n), classes, chars,
        identity=((1,) * n, 0),
    ).validate()
