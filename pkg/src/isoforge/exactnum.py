"""Exact scalars from multi-quadratic extensions of the rationals.

Every value manipulated by the higher layers (character values, kernel
entries, certificate payloads) is an ExactScalar: a finite rational
combination of radicals rt(m) for squarefree integers m, where

    rt(m) = sqrt(m)          for m > 0,
    rt(m) = i * sqrt(|m|)    for m < 0,
    rt(1) = 1.

This is closed under products because rt(m1)*rt(m2) collapses to an
integer multiple of a single rt(+-e).  No floats ever appear.
"""

from fractions import Fraction
from math import gcd

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _factor(n):
    """Factor a positive integer by trial division; plenty at our scale."""
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 41
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def reduce_root(n):
    """Write n = k^2 * d with k > 0 and d squarefree of the sign of n.

    Returns (k, d).  Requires n != 0.
    """
    if n == 0:
        raise ValueError("reduce_root(0)")
    sign = 1 if n > 0 else -1
    k = 1
    d = 1
    for p, e in _factor(abs(n)).items():
        k *= p ** (e // 2)
        if e % 2:
            d *= p
    return k, sign * d


def _vp(q, p):
    """p-adic valuation of a nonzero Fraction (or +inf for 0, encoded big)."""
    if q == 0:
        return 1 << 30
    v = 0
    num = q.numerator
    den = q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class ExactScalar:
    """Immutable element of Q(rt(m1), rt(m2), ...)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, ExactScalar):
            terms = dict(value._terms)
        else:
            q = Fraction(value)
            terms = {1: q} if q else {}
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, terms):
        self = object.__new__(cls)
        object.__setattr__(self, "_terms", {m: q for m, q in terms.items() if q})
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, *a):
        raise AttributeError("ExactScalar is immutable")

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self._terms

    def is_rational(self):
        return all(m == 1 for m in self._terms)

    def rational(self):
        """The value as a Fraction; raises if an irrational term remains."""
        if not self.is_rational():
            raise ValueError("not rational: %s" % self)
        return self._terms.get(1, Fraction(0))

    def coefficient(self, m):
        return self._terms.get(m, Fraction(0))

    def radicands(self):
        return sorted(self._terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, q in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + q
        return ExactScalar._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._make({m: -q for m, q in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, q1 in self._terms.items():
            for m2, q2 in other._terms.items():
                g = gcd(abs(m1), abs(m2))
                e = (abs(m1) // g) * (abs(m2) // g)
                coeff = q1 * q2 * g
                negs = (m1 < 0) + (m2 < 0)
                if negs == 1:
                    mt = -e
                else:
                    mt = e
                    if negs == 2:
                        coeff = -coeff
                terms[mt] = terms.get(mt, Fraction(0)) + coeff
        return ExactScalar._make(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExactScalar):
            if other.is_rational():
                other = other.rational()
            else:
                raise TypeError("division only by rationals")
        q = Fraction(other)
        if q == 0:
            raise ZeroDivisionError
        return ExactScalar._make({m: c / q for m, c in self._terms.items()})

    def conj(self):
        """Complex conjugation: negates every rt(m) with m < 0."""
        return ExactScalar._make(
            {m: (-q if m < 0 else q) for m, q in self._terms.items()}
        )

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._terms)

    # -- p-integrality ----------------------------------------------------

    def is_p_integral(self, p):
        """Whether the value lies in the localization of the integers at p.

        Cheap path: rational combinations of the rt(m) with p-integral
        coefficients are p-integral.  Otherwise fall back on the
        characteristic polynomial over the full sign-flip Galois orbit,
        which must have p-integral rational coefficients.
        """
        if all(_vp(q, p) >= 0 for q in self._terms.values()):
            return True
        if self.is_rational():
            return False
        return _charpoly_p_integral(self, p)

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms, key=lambda m: (m != 1, abs(m), m < 0)):
            q = self._terms[m]
            neg = q < 0
            aq = -q if neg else q
            if m == 1:
                body = str(aq)
            elif aq == 1:
                body = "rt(%d)" % m
            else:
                body = "%s*rt(%d)" % (aq, m)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "ExactScalar(%s)" % self


def _coerce(x):
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar(x)
    return NotImplemented


def _conjugates(x):
    """All images of x under independently flipping each sqrt(prime) and i."""
    primes = set()
    has_i = False
    for m in x._terms:
        if m < 0:
            has_i = True
        for p in _factor(abs(m)):
            primes.add(p)
    gens = sorted(primes)
    r = len(gens) + (1 if has_i else 0)
    out = []
    for mask in range(1 << r):
        terms = {}
        for m, q in x._terms.items():
            s = 1
            if m < 0 and has_i and (mask >> len(gens)) & 1:
                s = -s
            for idx, p in enumerate(gens):
                if abs(m) % p == 0 and (mask >> idx) & 1:
                    s = -s
            terms[m] = terms.get(m, Fraction(0)) + s * q
        out.append(ExactScalar._make(terms))
    return out


def _charpoly_p_integral(x, p):
    # coefficients of prod (X - sigma(x)) are rational; check their valuations
    coeffs = [ExactScalar(1)]
    for c in _conjugates(x):
        nxt = [ExactScalar(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i] = nxt[i] + a
            nxt[i + 1] = nxt[i + 1] - a * c
        coeffs = nxt
    for a in coeffs:
        if _vp(a.rational(), p) < 0:
            return False
    return True


def rt(n):
    """sqrt(n) for n >= 0, i*sqrt(|n|) for n < 0, as an ExactScalar."""
    if n == 0:
        return ExactScalar(0)
    k, d = reduce_root(n)
    return ExactScalar._make({d: Fraction(k)})


def exact(q):
    return ExactScalar(q)


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = rt(-1)

_HALF = Fraction(1, 2)
_ZETA = {
    1: ONE,
    2: ExactScalar(-1),
    3: ExactScalar._make({1: -_HALF, -3: _HALF}),
    4: I,
    6: ExactScalar._make({1: _HALF, -3: _HALF}),
}


def zeta(l, k=1):
    """The k-th power of a primitive l-th root of unity, l in {1,2,3,4,6}."""
    if l not in _ZETA:
        raise ValueError("zeta(%d) is not representable here" % l)
    z = ONE
    base = _ZETA[l]
    for _ in range(k % l):
        z = z * base
    return z


def i_pow(k):
    """i^k without repeated multiplication."""
    k %= 4
    if k == 0:
        return ONE
    if k == 1:
        return I
    if k == 2:
        return ExactScalar(-1)
    return ExactScalar._make({-1: Fraction(-1)})
