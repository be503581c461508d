"""Signed bijections between equal-weight blocks, and their certification.

An isometry is stored as a list of (source character, sign, target
character) triples between two blocks, with enough context (tables,
family tags, the prime) to evaluate the pairing

    I_hat(x, x') = sum_chi conj(chi(x)) * sign * (I chi)(x')

and run three checks at exact arithmetic:

  * generalized: I_hat vanishes whenever exactly one of x, x' lies in
    its designated regular class set;
  * kor: Gram matrices of the block characters over the regular class
    sets agree;
  * broue: generalized over p-regular classes on both sides, plus
    p-integrality of I_hat(x, x') over either centralizer order.

Builders cover the construction recipes keyed by the request tokens of
the command line tool; see build_isometry.  Cycle-removal bookkeeping
(the r-map commutation checks) lives in the commutation module.
"""

import os
import time
from concurrent.futures import ThreadPoolExecutor

from .barpartitions import (
    bar_core,
    delta_bar,
    from_bar_core_and_quotient,
    quotients_of_weight,
    sigma,
    with_bar_core,
)
from .blocks import class_subset, theoretical_blocks
from .chars_spin import tilde_an_table, tilde_sn_table
from .chars_sym_alt import an_char_label, an_table, sn_table
from .chars_wreath import dn_table, gpw_table, hpw_table, mp_star, \
    zl_wreath_table
from .chartable import CharTable
from .exactnum import ONE, ZERO, exact
from .partitions import (
    conjugate,
    delta_sign,
    from_core_and_quotient,
    is_self_conjugate,
    multipartitions_of,
    p_core,
    p_quotient,
    with_core,
)


class IsometryError(Exception):
    """A request that no builder can honour."""


KINDS = (
    "mainAn",
    "mainAn2",
    "mainAnpegal2",
    "mainTilde",
    "brouetilde",
    "brgr",
    "osima",
    "couronne",
    "dn-conj",
    "dn-nonconj",
    "fh",
)

# class sets the vanishing is checked against outside broue mode
DEFAULT_SUBSETS = {
    "brgr": ("p-regular", "brgr-Cprime"),
    "osima": ("p-regular", "osima-Cprime"),
    "fh": ("p-regular", "fh-regular"),
}


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def thread_count():
    """Worker cap from ISOFORGE_THREADS; anything unusable means 1."""
    raw = os.environ.get("ISOFORGE_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return n if n >= 1 else 1


def _pmap(fn, items):
    """Map preserving order, threaded when ISOFORGE_THREADS allows."""
    n = thread_count()
    items = list(items)
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# -- small-group fallbacks -------------------------------------------------

def tiny_alt_table(n):
    """The alternating group on n < 2 letters: the trivial group, with
    the partition of n as both class and character label."""
    lam = (1,) * n
    return CharTable("A%d" % n, 1, [(lam, 1)], [(lam, [ONE])], identity=lam)


def alt_table(n):
    return an_table(n) if n >= 2 else tiny_alt_table(n)


def tiny_cover_alt_table(n):
    """Preimage of the trivial alternating group in the double cover:
    a central Z_2 with a lifted and a faithful character."""
    lam = (1,) * n
    classes = [((lam, 0), 2), ((lam, 1), 2)]
    chars = [
        (("chi", lam), [ONE, ONE]),
        (("xi", lam, 1), [ONE, -ONE]),
    ]
    return CharTable("cover-A%d" % n, 2, classes, chars,
                     identity=(lam, 0))


def cover_table(cover, n):
    if cover == "spin-sym":
        return tilde_sn_table(n)
    if n < 2:
        return tiny_cover_alt_table(n)
    return tilde_an_table(n)


# -- the isometry container ------------------------------------------------

class BlockSide:
    """One side of an isometry: a table, its family tag, and the block."""

    def __init__(self, table, family, labels):
        self.table = table
        self.family = family
        order = {lbl: i for i, lbl in enumerate(table.char_labels)}
        missing = [l for l in labels if l not in order]
        if missing:
            raise IsometryError(
                "label %r is not a character of %s"
                % (missing[0], table.name))
        self.labels = tuple(sorted(set(labels), key=order.__getitem__))
        self.label_set = frozenset(self.labels)

    def __repr__(self):
        return "BlockSide(%s, %d chars)" % (self.table.name,
                                            len(self.labels))


def _check_is_block(side, p):
    """The labels must form exactly one block of the table."""
    part = theoretical_blocks(side.table, p, side.family)
    blk = part.block_of(side.labels[0])
    if blk.chars != side.label_set:
        raise IsometryError(
            "labels do not form a %d-block of %s" % (p, side.table.name))


class Isometry:
    def __init__(self, kind, p, source, target, pairs, params=None):
        self.kind = kind
        self.p = p
        self.source = source
        self.target = target
        self.pairs = tuple(pairs)
        self.params = dict(params or {})
        self._map = {}
        hit = set()
        for src, sign, tgt in self.pairs:
            if sign not in (1, -1):
                raise IsometryError("sign %r is not +-1" % (sign,))
            if src in self._map:
                raise IsometryError("duplicate source label %r" % (src,))
            if tgt in hit:
                raise IsometryError("duplicate target label %r" % (tgt,))
            self._map[src] = (sign, tgt)
            hit.add(tgt)
        if set(self._map) != set(source.label_set):
            raise IsometryError("map does not cover the source block")
        if hit != set(target.label_set):
            raise IsometryError("map does not cover the target block")
        self._ihat = None

    def image(self, src):
        return self._map[src]

    def __repr__(self):
        return "Isometry(%s: %s -> %s, %d chars)" % (
            self.kind, self.source.table.name, self.target.table.name,
            len(self.pairs))

    def i_hat(self):
        """Matrix of I_hat over (source classes) x (target classes)."""
        if self._ihat is not None:
            return self._ihat
        src_t, tgt_t = self.source.table, self.target.table
        rows = [
            (src_t.row(s), sign, tgt_t.row(t)) for s, sign, t in self.pairs
        ]
        m = tgt_t.n_classes()

        def one_row(i):
            out = []
            for j in range(m):
                acc = ZERO
                for srow, sign, trow in rows:
                    term = srow[i].conj() * trow[j]
                    acc = acc + (term if sign == 1 else -term)
                out.append(acc)
            return tuple(out)

        self._ihat = tuple(_pmap(one_row, range(src_t.n_classes())))
        return self._ihat


def compose(second, first):
    """second o first; the middle block must match exactly."""
    if first.target.table is not second.source.table:
        raise IsometryError("middle tables differ")
    if first.target.label_set != second.source.label_set:
        raise IsometryError("middle blocks differ")
    pairs = []
    for src, s1, mid in first.pairs:
        s2, tgt = second.image(mid)
        pairs.append((src, s1 * s2, tgt))
    return Isometry(
        "composite", first.p, first.source, second.target, pairs,
        params={"of": (second.kind, first.kind)})


def invert(iso):
    pairs = [(tgt, sign, src) for src, sign, tgt in iso.pairs]
    return Isometry(
        iso.kind, iso.p, iso.target, iso.source, pairs,
        params=dict(iso.params, inverted=True))


def adjoint_check(iso):
    """I_hat of the inverse is the conjugate transpose of I_hat."""
    fwd = iso.i_hat()
    bwd = invert(iso).i_hat()
    for i in range(len(fwd)):
        for j in range(len(fwd[0])):
            if bwd[j][i] != fwd[i][j].conj():
                return False
    return True


# -- verification ----------------------------------------------------------

WITNESS_CAP = 20


class CheckSection:
    def __init__(self, name):
        self.name = name
        self.passed = True
        self.witnesses = []
        self.counts = {}

    def fail(self, witness):
        self.passed = False
        if len(self.witnesses) < WITNESS_CAP:
            self.witnesses.append(witness)

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "witnesses": self.witnesses,
            "counts": self.counts,
        }


class VerificationReport:
    def __init__(self, kind, mode):
        self.kind = kind
        self.mode = mode
        self.sections = []
        self.timing = None
        self.sizes = {}
        self.subsets = {}

    @property
    def passed(self):
        return all(s.passed for s in self.sections)

    def section(self, name):
        s = CheckSection(name)
        self.sections.append(s)
        return s

    def summary(self):
        lines = []
        for s in self.sections:
            tag = "pass" if s.passed else "FAIL"
            extra = "  e.g. %r" % (s.witnesses[0],) if s.witnesses else ""
            lines.append("%-18s %s%s" % (s.name, tag, extra))
        return "\n".join(lines)

    def to_dict(self, include_timing=False):
        out = {
            "kind": self.kind,
            "mode": self.mode,
            "passed": self.passed,
            "sections": [s.to_dict() for s in self.sections],
            "sizes": self.sizes,
            "subsets": self.subsets,
        }
        if include_timing and self.timing is not None:
            out["timing_seconds"] = self.timing
        return out


def _subset_pair(iso, mode, source_predicate, target_predicate):
    dflt = DEFAULT_SUBSETS.get(iso.kind, ("p-regular", "p-regular"))
    if mode == "broue":
        dflt = ("p-regular", "p-regular")
    source_predicate = source_predicate or dflt[0]
    target_predicate = target_predicate or dflt[1]
    cs = class_subset(iso.source.table, source_predicate,
                      iso.source.family, iso.p)
    ct = class_subset(iso.target.table, target_predicate,
                      iso.target.family, iso.p)
    return cs, ct


def verify(iso, mode="broue", source_predicate=None, target_predicate=None):
    """Run the requested certification mode over every class pair."""
    if mode not in ("generalized", "kor", "broue"):
        raise IsometryError("unknown verification mode %r" % (mode,))
    started = time.monotonic()
    report = VerificationReport(iso.kind, mode)
    cs, ct = _subset_pair(iso, mode, source_predicate, target_predicate)
    report.subsets = {"source": cs.predicate, "target": ct.predicate}
    report.sizes = {
        "source_classes": iso.source.table.n_classes(),
        "target_classes": iso.target.table.n_classes(),
        "block_characters": len(iso.pairs),
    }
    if mode == "kor":
        _check_gram(iso, report, cs, ct)
    else:
        _check_mixed_vanishing(iso, report, cs, ct)
        if mode == "broue":
            _check_integrality(iso, report)
    report.timing = time.monotonic() - started
    return report


def _check_mixed_vanishing(iso, report, cs, ct):
    sec = report.section("mixed_vanishing")
    ihat = iso.i_hat()
    checked = 0
    for i, x in enumerate(iso.source.table.class_labels):
        xin = x in cs
        for j, xp in enumerate(iso.target.table.class_labels):
            if xin == (xp in ct):
                continue
            checked += 1
            if ihat[i][j] != ZERO:
                sec.fail({
                    "source_class": repr(x),
                    "target_class": repr(xp),
                    "value": str(ihat[i][j]),
                })
    sec.counts["mixed_pairs"] = checked


def _check_integrality(iso, report):
    sec = report.section("broue_integrality")
    ihat = iso.i_hat()
    src_t, tgt_t = iso.source.table, iso.target.table
    p = iso.p
    checked = 0
    for i, x in enumerate(src_t.class_labels):
        zx = src_t.centralizer(x)
        for j, xp in enumerate(tgt_t.class_labels):
            v = ihat[i][j]
            if not v:
                continue
            zxp = tgt_t.centralizer(xp)
            checked += 1
            ok_x = (v / exact(zx)).is_p_integral(p)
            ok_xp = (v / exact(zxp)).is_p_integral(p)
            if not (ok_x and ok_xp):
                sec.fail({
                    "source_class": repr(x),
                    "target_class": repr(xp),
                    "value": str(v),
                    "source_centralizer": zx,
                    "target_centralizer": zxp,
                    "integral_over_source": ok_x,
                    "integral_over_target": ok_xp,
                })
    sec.counts["nonzero_pairs"] = checked


def _check_gram(iso, report, cs, ct):
    sec = report.section("kor_gram")
    labels = iso.source.labels
    sub_s = list(cs.labels)
    sub_t = list(ct.labels)
    src_t, tgt_t = iso.source.table, iso.target.table
    checked = 0
    for a_i, a in enumerate(labels):
        sa, ta = iso.image(a)
        for b in labels[a_i:]:
            sb, tb = iso.image(b)
            lhs = src_t.row_inner(a, b, sub_s)
            rhs = tgt_t.row_inner(ta, tb, sub_t)
            if sa * sb == -1:
                rhs = -rhs
            checked += 1
            if lhs != rhs:
                sec.fail({
                    "char_a": repr(a),
                    "char_b": repr(b),
                    "source_inner": str(lhs),
                    "target_inner": str(rhs),
                })
    sec.counts["char_pairs"] = checked


# -- negative controls -----------------------------------------------------

def flip_sign(iso, index):
    """Copy of the isometry with one sign negated (for falsification)."""
    pairs = list(iso.pairs)
    src, sign, tgt = pairs[index]
    pairs[index] = (src, -sign, tgt)
    return Isometry(iso.kind, iso.p, iso.source, iso.target, pairs,
                    params=dict(iso.params, corrupted="sign@%d" % index))


def swap_targets(iso, i, j):
    """Copy with two target labels exchanged (for falsification)."""
    pairs = list(iso.pairs)
    si, gi, ti = pairs[i]
    sj, gj, tj = pairs[j]
    pairs[i] = (si, gi, tj)
    pairs[j] = (sj, gj, ti)
    return Isometry(iso.kind, iso.p, iso.source, iso.target, pairs,
                    params=dict(iso.params, corrupted="swap@%d,%d" % (i, j)))


# -- label helpers ---------------------------------------------------------

def partition_set(core, w, p):
    """Partitions with the given p-core and weight, in the deterministic
    quotient order."""
    return tuple(
        from_core_and_quotient(core, q, p) for q in multipartitions_of(w, p)
    )


def bar_partition_set(core, w, p):
    return tuple(
        from_bar_core_and_quotient(core, q, p)
        for q in quotients_of_weight(p, w)
    )


def alt_label(n, lam):
    """Table label carrying the restriction of the row of lam."""
    if n < 2:
        return (1,) * n
    return an_char_label(n, lam)


def spin_label(cover, lam):
    """Table label(s) of the spin row(s) of a strict partition: one
    self-paired label, or the two labels of an associate pair."""
    s = sigma(lam)
    if cover == "spin-sym":
        return [("xi", lam, 0)] if s == 1 else [("xi", lam, 1),
                                                ("xi", lam, -1)]
    return [("xi", lam, 1)] if s == -1 else [("xi", lam, 1),
                                             ("xi", lam, -1)]


def dn_label(table, mu1, mu2):
    """The fused-label representative of {(mu1,mu2), (mu2,mu1)}."""
    if (mu1, mu2) in table.rows:
        return (mu1, mu2)
    if (mu2, mu1) in table.rows:
        return (mu2, mu1)
    raise IsometryError("no restricted row for %r" % ((mu1, mu2),))


def orbit_label(table, mu, star):
    """Representative label of the orbit {mu, star(mu)} in the table."""
    if mu in table.rows:
        return mu
    other = star(mu)
    if other in table.rows:
        return other
    raise IsometryError("no restricted row for %r" % (mu,))


def conjugate_middle(quot):
    """Conjugate the middle component (odd number of slots assumed)."""
    quot = list(quot)
    quot[(len(quot) - 1) // 2] = conjugate(quot[(len(quot) - 1) // 2])
    return tuple(quot)


# -- builders --------------------------------------------------------------

def _require(cond, msg):
    if not cond:
        raise IsometryError(msg)


def _check_core(core, p, what):
    _require(p_core(core, p) == core,
             "%s %r is not a %d-core" % (what, core, p))


def _build_alt_pair(kind, p, w, core1, core2):
    if kind == "mainAnpegal2":
        _require(p == 2, "this recipe is specific to p = 2")
    else:
        _require(_is_prime(p) and p % 2 == 1,
                 "p must be an odd prime (p = 2 has its own recipe)")
    _require(w >= 1, "positive weight required")
    _check_core(core1, p, "source core")
    _check_core(core2, p, "target core")
    if kind in ("mainAn", "mainAnpegal2"):
        _require(is_self_conjugate(core1) and is_self_conjugate(core2),
                 "this recipe needs self-conjugate cores")
    else:
        _require(not is_self_conjugate(core1)
                 and not is_self_conjugate(core2),
                 "self-conjugate cores need the mainAn recipe")
    n = sum(core1) + p * w
    m = sum(core2) + p * w
    tsrc, ttgt = alt_table(n), alt_table(m)
    pairs = []
    seen = {}
    for lam in partition_set(core1, w, p):
        lam2 = with_core(lam, core2, p)
        d = delta_sign(lam, p) * delta_sign(lam2, p)
        if is_self_conjugate(lam):
            for e in (1, -1):
                pairs.append(((lam, e), d, (lam2, e * d)))
        else:
            lbl = alt_label(n, lam)
            val = (d, alt_label(m, lam2))
            if lbl in seen:
                # the conjugate walk must land on the same signed target
                assert seen[lbl] == val
                continue
            seen[lbl] = val
            pairs.append((lbl, d, val[1]))
    source = BlockSide(tsrc, "alt", [q[0] for q in pairs])
    target = BlockSide(ttgt, "alt", [q[2] for q in pairs])
    _check_is_block(source, p)
    _check_is_block(target, p)
    return Isometry(kind, p, source, target, pairs,
                    params={"p": p, "w": w, "core1": core1,
                            "core2": core2})


def _spin_block_pairs(p, w, cover1, core1, cover2, core2):
    """Label pairs of the bar-weight-w spin recipe, source to target."""
    pairs = []
    for lam in bar_partition_set(core1, w, p):
        lam2 = with_bar_core(lam, core2, p)
        d = delta_bar(lam, p) * delta_bar(lam2, p)
        src = spin_label(cover1, lam)
        tgt = spin_label(cover2, lam2)
        if len(src) == 1:
            _require(len(tgt) == 1, "associate-pair structure mismatch")
            pairs.append((src[0], d, tgt[0]))
        else:
            _require(len(tgt) == 2, "associate-pair structure mismatch")
            for e in (1, -1):
                pairs.append((("xi", lam, e), d, ("xi", lam2, e * d)))
    return pairs


def _spin_side(cover, n, pairs, which, p):
    table = cover_table(cover, n)
    side = BlockSide(table, cover, [q[which] for q in pairs])
    _check_is_block(side, p)
    return side


def _build_spin_pair(p, w, core1, core2):
    """Spin blocks of equal bar-weight.  The source is the double cover
    of the symmetric group holding core1; the target cover is forced by
    the core signs (equal signs stay on symmetric covers, opposite
    signs put the target on the alternating cover)."""
    _require(_is_prime(p) and p % 2 == 1, "spin blocks need an odd prime")
    _require(w >= 1, "positive weight required")
    _require(bar_core(core1, p) == core1,
             "source core %r is not a %d-bar core" % (core1, p))
    _require(bar_core(core2, p) == core2,
             "target core %r is not a %d-bar core" % (core2, p))
    n = sum(core1) + p * w
    m = sum(core2) + p * w
    cover2 = "spin-sym" if sigma(core1) == sigma(core2) else "spin-alt"
    pairs = _spin_block_pairs(p, w, "spin-sym", core1, cover2, core2)
    source = _spin_side("spin-sym", n, pairs, 0, p)
    target = _spin_side(cover2, m, pairs, 2, p)
    return Isometry("mainTilde", p, source, target, pairs,
                    params={"p": p, "w": w, "core1": core1,
                            "core2": core2})


def _build_spin_alt_pair(p, w, core1, core2):
    """Blocks on alternating covers with equal core signs: composed
    through a symmetric-cover block whose core has the opposite sign,
    then compared against the one-step transplant formula."""
    _require(_is_prime(p) and p % 2 == 1, "spin blocks need an odd prime")
    _require(w >= 1, "positive weight required")
    _require(bar_core(core1, p) == core1 and bar_core(core2, p) == core2,
             "cores must be %d-bar cores" % p)
    s = sigma(core1)
    _require(s == sigma(core2),
             "opposite core signs belong to the mainTilde recipe")
    mid = (2,) if s == 1 else ()
    n, m, k = sum(core1) + p * w, sum(core2) + p * w, sum(mid) + p * w
    first = _spin_block_pairs(p, w, "spin-alt", core1, "spin-sym", mid)
    second = _spin_block_pairs(p, w, "spin-alt", core2, "spin-sym", mid)
    i1 = Isometry("mainTilde", p,
                  _spin_side("spin-alt", n, first, 0, p),
                  _spin_side("spin-sym", k, first, 2, p),
                  first, params={"core1": core1, "core2": mid})
    i2 = Isometry("mainTilde", p,
                  _spin_side("spin-alt", m, second, 0, p),
                  _spin_side("spin-sym", k, second, 2, p),
                  second, params={"core1": core2, "core2": mid})
    composed = compose(invert(i2), i1)
    direct = {
        q[0]: (q[1], q[2])
        for q in _spin_block_pairs(p, w, "spin-alt", core1, "spin-alt",
                                   core2)
    }
    for src, sign, tgt in composed.pairs:
        if direct[src] != (sign, tgt):
            raise IsometryError(
                "composition disagrees with the one-step formula at %r"
                % (src,))
    return Isometry("brouetilde", p, composed.source, composed.target,
                    composed.pairs,
                    params={"p": p, "w": w, "core1": core1,
                            "core2": core2, "via_core": mid})


def _build_sym_to_wreath(kind, p, w):
    """Principal block of the symmetric group on p*w letters against the
    full character set of a p-local wreath product: over the Sylow
    normalizer base (brgr) or the cyclic base of order p (osima)."""
    _require(w >= 1, "positive weight required")
    n = p * w
    tsrc = sn_table(n)
    if kind == "brgr":
        _require(p in (3, 5, 7), "normalizer base needs p in {3, 5, 7}")
        ttgt = gpw_table(p, w)
    else:
        _require(_is_prime(p), "p must be prime")
        ttgt = zl_wreath_table(p, w)
    mid = (p - 1) // 2
    pairs = []
    for lam in partition_set((), w, p):
        quot = p_quotient(lam, p)
        d = delta_sign(lam, p)
        if kind == "brgr":
            if sum(quot[mid]) % 2:
                d = -d
            tgt = conjugate_middle(quot)
        else:
            tgt = tuple(quot)
        pairs.append((lam, d, tgt))
    source = BlockSide(tsrc, "sym", [q[0] for q in pairs])
    target = BlockSide(ttgt, "wreath", [q[2] for q in pairs])
    _check_is_block(source, p)
    _check_is_block(target, p)
    return Isometry(kind, p, source, target, pairs,
                    params={"p": p, "w": w})


def _letter_count(cores, weights, p):
    return sum(sum(c) + p * b for c, b in zip(cores, weights))


def _build_couronne(l, p, weights, cores1, cores2):
    _require(_is_prime(p), "p must be prime")
    _require(l in (1, 2, 3, 4, 6),
             "cyclic base of order %r unavailable" % (l,))
    _require(l % p != 0, "base order must be prime to p")
    weights = tuple(weights)
    cores1, cores2 = tuple(cores1), tuple(cores2)
    _require(len(weights) == l and len(cores1) == l and len(cores2) == l,
             "need one weight and one core per base character")
    _require(all(b >= 0 for b in weights) and any(weights),
             "weights must be nonnegative, with at least one positive")
    for c in cores1 + cores2:
        _check_core(c, p, "core")
    tsrc = zl_wreath_table(l, _letter_count(cores1, weights, p))
    ttgt = zl_wreath_table(l, _letter_count(cores2, weights, p))
    slot_sets = [partition_set(c, b, p) for c, b in zip(cores1, weights)]
    pairs = []

    def emit(idx, acc_src, acc_tgt, acc_sign):
        if idx == l:
            pairs.append((tuple(acc_src), acc_sign, tuple(acc_tgt)))
            return
        for mu in slot_sets[idx]:
            nu = with_core(mu, cores2[idx], p)
            d = delta_sign(mu, p) * delta_sign(nu, p)
            emit(idx + 1, acc_src + [mu], acc_tgt + [nu], acc_sign * d)

    emit(0, [], [], 1)
    source = BlockSide(tsrc, "wreath", [q[0] for q in pairs])
    target = BlockSide(ttgt, "wreath", [q[2] for q in pairs])
    _check_is_block(source, p)
    _check_is_block(target, p)
    return Isometry("couronne", p, source, target, pairs,
                    params={"l": l, "p": p, "weights": weights,
                            "cores1": cores1, "cores2": cores2})


def _build_d_conj(p, b, core1, core2, side=None):
    _require(_is_prime(p) and p % 2 == 1,
             "even-index Weyl blocks are handled at odd primes")
    _require(b >= 0, "negative weight")
    _check_core(core1, p, "source core")
    _check_core(core2, p, "target core")
    n = 2 * sum(core1) + 2 * p * b
    m = 2 * sum(core2) + 2 * p * b
    _require(n >= 1 and m >= 1, "empty group")
    tsrc, ttgt = dn_table(n), dn_table(m)
    if b == 0:
        _require(side in (1, -1),
                 "a defect-zero split pair needs side=+1 or side=-1")
        d = delta_sign(core1, p) * delta_sign(core2, p)
        pairs = [(((core1, core1), side), 1, ((core2, core2), side * d))]
    else:
        _require(side is None, "side only applies to weight zero")
        eset = partition_set(core1, b, p)
        pairs = []
        for i, mu1 in enumerate(eset):
            n1 = with_core(mu1, core2, p)
            d1 = delta_sign(mu1, p) * delta_sign(n1, p)
            for mu2 in eset[i:]:
                n2 = with_core(mu2, core2, p)
                d2 = delta_sign(mu2, p) * delta_sign(n2, p)
                if mu1 == mu2:
                    for e in (1, -1):
                        pairs.append((((mu1, mu1), e), 1,
                                      ((n1, n1), e * d1)))
                else:
                    pairs.append((dn_label(tsrc, mu1, mu2), d1 * d2,
                                  dn_label(ttgt, n1, n2)))
    source = BlockSide(tsrc, "weylD", [q[0] for q in pairs])
    target = BlockSide(ttgt, "weylD", [q[2] for q in pairs])
    _check_is_block(source, p)
    _check_is_block(target, p)
    return Isometry("dn-conj", p, source, target, pairs,
                    params={"p": p, "b": b, "core1": core1,
                            "core2": core2, "side": side})


def _build_d_nonconj(p, weights, cores1, cores2):
    _require(_is_prime(p) and p % 2 == 1,
             "even-index Weyl blocks are handled at odd primes")
    cores1, cores2 = tuple(cores1), tuple(cores2)
    weights = tuple(weights)
    _require(len(cores1) == 2 and len(cores2) == 2 and len(weights) == 2,
             "need two cores per side and two weights")
    _require(cores1[0] != cores1[1] and cores2[0] != cores2[1],
             "equal cores need the dn-conj recipe")
    _require(all(x >= 0 for x in weights), "weights must be nonnegative")
    for c in cores1 + cores2:
        _check_core(c, p, "core")
    n = _letter_count(cores1, weights, p)
    m = _letter_count(cores2, weights, p)
    tsrc, ttgt = dn_table(n), dn_table(m)
    pairs = []
    for mu1 in partition_set(cores1[0], weights[0], p):
        n1 = with_core(mu1, cores2[0], p)
        d1 = delta_sign(mu1, p) * delta_sign(n1, p)
        for mu2 in partition_set(cores1[1], weights[1], p):
            n2 = with_core(mu2, cores2[1], p)
            d2 = delta_sign(mu2, p) * delta_sign(n2, p)
            pairs.append((dn_label(tsrc, mu1, mu2), d1 * d2,
                          dn_label(ttgt, n1, n2)))
    source = BlockSide(tsrc, "weylD", [q[0] for q in pairs])
    target = BlockSide(ttgt, "weylD", [q[2] for q in pairs])
    _check_is_block(source, p)
    _check_is_block(target, p)
    return Isometry("dn-nonconj", p, source, target, pairs,
                    params={"p": p, "weights": weights, "cores1": cores1,
                            "cores2": cores2})


def _build_alt_to_even_wreath(p, w):
    """Principal block of the alternating group on p*w letters against
    the even subgroup of the normalizer wreath product."""
    _require(p in (3, 5, 7), "normalizer base needs p in {3, 5, 7}")
    _require(w >= 1, "positive weight required")
    n = p * w
    tsrc = alt_table(n)
    ttgt = hpw_table(p, w)
    mid = (p - 1) // 2
    pairs = []
    seen = {}
    for lam in partition_set((), w, p):
        quot = p_quotient(lam, p)
        dp = delta_sign(lam, p)
        d = -dp if sum(quot[mid]) % 2 else dp
        mp = conjugate_middle(quot)
        if is_self_conjugate(lam):
            assert mp_star(mp) == mp
            for e in (1, -1):
                pairs.append(((lam, e), d, (mp, e * dp)))
        else:
            lbl = alt_label(n, lam)
            val = (d, orbit_label(ttgt, mp, mp_star))
            if lbl in seen:
                assert seen[lbl] == val
                continue
            seen[lbl] = val
            pairs.append((lbl, d, val[1]))
    source = BlockSide(tsrc, "alt", [q[0] for q in pairs])
    target = BlockSide(ttgt, "hpw", [q[2] for q in pairs])
    _check_is_block(source, p)
    _check_is_block(target, p)
    return Isometry("fh", p, source, target, pairs,
                    params={"p": p, "w": w})


def build_isometry(kind, **params):
    """Construct the signed bijection for one of the request tokens.

    Raises IsometryError on anything malformed: an unknown token, sizes
    or weights that do not match, cores of the wrong kind for the
    recipe, or a prime the recipe does not cover.
    """
    try:
        if kind in ("mainAn", "mainAn2", "mainAnpegal2"):
            return _build_alt_pair(kind, params["p"], params["w"],
                                   params["core1"], params["core2"])
        if kind == "mainTilde":
            return _build_spin_pair(params["p"], params["w"],
                                    params["core1"], params["core2"])
        if kind == "brouetilde":
            return _build_spin_alt_pair(params["p"], params["w"],
                                        params["core1"], params["core2"])
        if kind in ("brgr", "osima"):
            return _build_sym_to_wreath(kind, params["p"], params["w"])
        if kind == "couronne":
            return _build_couronne(params["l"], params["p"],
                                   params["weights"], params["cores1"],
                                   params["cores2"])
        if kind == "dn-conj":
            return _build_d_conj(params["p"], params["b"], params["core1"],
                                 params["core2"], params.get("side"))
        if kind == "dn-nonconj":
            return _build_d_nonconj(params["p"], params["weights"],
                                    params["cores1"], params["cores2"])
        if kind == "fh":
            return _build_alt_to_even_wreath(params["p"], params["w"])
    except KeyError as missing:
        raise IsometryError("missing parameter %s" % (missing,))
    raise IsometryError("unknown kind %r" % (kind,))
