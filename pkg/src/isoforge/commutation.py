"""Restriction compatibility of the signed block bijections.

Splitting a group element into a product of cycles of p-divisible
order and a p-regular remainder turns every block character into a
family of class functions on smaller groups, one for each singular
cycle structure.  The table recursions compute those restrictions one
cycle at a time, so a block character can be tracked symbolically: it
becomes a vector over sum and difference symbols, each singular cycle
is one step of the family recursion, and the transplant formula of the
bijection acts on symbols at any size.  The bijection is compatible
with restriction when applying the transplant before or after a chain
of steps gives the same vector, for every structure that fits inside
the block weight; a structure that exceeds the weight must kill the
chain outright.

Sum symbols ('S', key) stand for a single row, for the two rows of an
associate pair added together, or for a fused restricted row; the
recursion on them is the plain hook or bar recursion of the covering
table.  Difference symbols ('D', key) stand for the difference of an
associate pair and follow the one-track recursion of the family: a
self-conjugate hook removal with a quadratic factor, a whole-part bar
removal with a quadratic factor, a halved removal with a doubling, or
nothing at all when the step size has the wrong shape.  Difference
symbols are kept formally even when the residual size is too small to
carry an actual pair; the boundary information of the bijection lives
exactly there.
"""

from fractions import Fraction

from .chars_wreath import (cyclic_table, mp_star, normalizer_base_table)
from .exactnum import exact, rt
from .barpartitions import bar_removals, delta_bar, sigma, with_bar_core
from .isometry import IsometryError, VerificationReport
from .partitions import (conjugate, delta_sign, hook_removals,
                         is_self_conjugate, multipartitions_of, p_quotient,
                         partitions_of, self_conjugate_removal, with_core)

HALF = exact(Fraction(1, 2))

CHAINED_KINDS = ("mainAn", "mainAn2", "mainAnpegal2", "mainTilde", "brgr",
                 "osima", "couronne", "dn-conj", "fh")


def _acc(vec, key, coeff):
    cur = vec.get(key)
    cur = coeff if cur is None else cur + coeff
    if cur:
        vec[key] = cur
    elif key in vec:
        del vec[key]


def _scaled(vec, sign):
    if sign == 1:
        return dict(vec)
    return {k: -v for k, v in vec.items()}


def _apply_map(vec, rule):
    out = {}
    for sym, c in vec.items():
        coeff, sym2 = rule(sym)
        _acc(out, sym2, c if coeff == 1 else -c if coeff == -1 else c * coeff)
    return out


def _canonical(vec, canon):
    out = {}
    for sym, c in vec.items():
        _acc(out, canon(sym), c)
    return out


def _run(vec, steps, step):
    for q in steps:
        if not vec:
            break
        vec = step(vec, q)
    return vec


# -- step operators --------------------------------------------------------

def _sym_step(vec, q):
    out = {}
    for (_tag, lam), c in vec.items():
        for mu, leg in hook_removals(lam, q):
            _acc(out, ("S", mu), -c if leg % 2 else c)
    return out


def _alt_step(vec, q):
    out = {}
    for (tag, lam), c in vec.items():
        if tag == "S":
            for mu, leg in hook_removals(lam, q):
                _acc(out, ("S", mu), -c if leg % 2 else c)
        else:
            if q % 2 == 0:
                continue
            hit = self_conjugate_removal(lam, q)
            if hit is None:
                continue
            _acc(out, ("D", hit[0]), c * rt((-1) ** ((q - 1) // 2) * q))
    return out


def _spin_pref(q):
    return -1 if ((q * q - 1) // 8) % 2 else 1


def _spin_step(cover, vec, q):
    pair = (lambda lam: sigma(lam) == -1) if cover == "spin-sym" else (
        lambda lam: sigma(lam) == 1)
    pref = _spin_pref(q)
    out = {}
    for (tag, lam), c in vec.items():
        if tag == "S":
            lam_pair = pair(lam)
            for mu, leg in bar_removals(lam, q):
                coeff = c if pref * (-1) ** leg == 1 else -c
                if lam_pair and not pair(mu):
                    coeff = coeff + coeff
                _acc(out, ("S", mu), coeff)
        else:
            if q not in lam:
                continue
            mu = tuple(a for a in lam if a != q)
            factor = rt((-1) ** ((q - 1) // 2) * q)
            if pref < 0:
                factor = -factor
            _acc(out, ("D", mu), c * factor)
    return out


def _wreath_step(base_rows, vec, step):
    k, t = step
    out = {}
    for (_tag, mp), c in vec.items():
        for s, row in enumerate(base_rows):
            val = row[t]
            if not val:
                continue
            for nu, leg in hook_removals(mp[s], k):
                sub = mp[:s] + (nu,) + mp[s + 1:]
                term = c * val
                _acc(out, ("S", sub), -term if leg % 2 else term)
    return out


def _dn_step(base_rows, vec, step):
    k, t = step
    out = {}
    for (tag, key), c in vec.items():
        if tag == "S":
            for s, row in enumerate(base_rows):
                val = row[t]
                if not val:
                    continue
                for nu, leg in hook_removals(key[s], k):
                    sub = key[:s] + (nu,) + key[s + 1:]
                    term = c * val
                    _acc(out, ("S", sub), -term if leg % 2 else term)
        else:
            if t != 0 or k % 2:
                continue
            for nu, leg in hook_removals(key, k // 2):
                term = c + c
                _acc(out, ("D", nu), -term if leg % 2 else term)
    return out


def _hpw_step(p, base_rows, vec, step):
    k, t = step
    mid = (p - 1) // 2
    eps_p = (-1) ** ((p - 1) // 2)
    out = {}
    for (tag, mp), c in vec.items():
        if tag == "S":
            for s, row in enumerate(base_rows):
                val = row[t]
                if not val:
                    continue
                for nu, leg in hook_removals(mp[s], k):
                    sub = mp[:s] + (nu,) + mp[s + 1:]
                    term = c * val
                    _acc(out, ("S", sub), -term if leg % 2 else term)
        else:
            if k % 2 == 0:
                continue
            hit = self_conjugate_removal(mp[mid], k)
            if hit is None:
                continue
            sub = mp[:mid] + (hit[0],) + mp[mid + 1:]
            factor = rt(eps_p * p) * rt((-1) ** ((k - 1) // 2) * k)
            _acc(out, ("D", sub), c * factor)
    return out


# -- start vectors and canonical forms -------------------------------------

def _plain_start(label):
    return {("S", label): exact(1)}


def _alt_start(label):
    if (len(label) == 2 and isinstance(label[0], tuple)
            and label[1] in (1, -1)):
        lam, e = label
        return {("S", lam): HALF, ("D", lam): HALF if e == 1 else -HALF}
    return {("S", label): exact(1)}


def _spin_start(cover, label):
    _xi, lam, e = label
    if cover == "spin-sym":
        if sigma(lam) == 1:
            return {("S", lam): exact(1)}
    elif sigma(lam) == -1:
        return {("S", lam): exact(1)}
    return {("S", lam): HALF, ("D", lam): HALF if e == 1 else -HALF}


def _dn_start(label):
    if label and isinstance(label[-1], tuple):
        return {("S", label): exact(1)}
    pair, e = label
    return {("S", pair): HALF, ("D", pair[0]): HALF if e == 1 else -HALF}


def _hpw_start(label):
    if len(label) == 2 and label[1] in (1, -1) and not isinstance(
            label[1], tuple):
        mp, e = label
        return {("S", mp): HALF, ("D", mp): HALF if e == 1 else -HALF}
    return {("S", label): exact(1)}


def _identity_canon(sym):
    return sym


def _alt_canon(sym):
    tag, lam = sym
    if tag == "S":
        return (tag, min(lam, conjugate(lam)))
    return sym


def _dn_canon(sym):
    tag, key = sym
    if tag == "S":
        return (tag, min(key, (key[1], key[0])))
    return sym


def _hpw_canon(sym):
    tag, mp = sym
    if tag == "S":
        return (tag, min(mp, mp_star(mp)))
    return sym


# -- transplant rules one level down ---------------------------------------

def _alt_rule(p, core2):
    def rule(sym):
        tag, lam = sym
        lam2 = with_core(lam, core2, p)
        if tag == "D":
            return 1, ("D", lam2)
        return delta_sign(lam, p) * delta_sign(lam2, p), ("S", lam2)
    return rule


def _spin_rule(p, core2):
    def rule(sym):
        tag, lam = sym
        lam2 = with_bar_core(lam, core2, p)
        if tag == "D":
            return 1, ("D", lam2)
        return delta_bar(lam, p) * delta_bar(lam2, p), ("S", lam2)
    return rule


def _conjugate_middle(quot):
    quot = list(quot)
    quot[(len(quot) - 1) // 2] = conjugate(quot[(len(quot) - 1) // 2])
    return tuple(quot)


def _sym_to_wreath_rule(kind, p):
    mid = (p - 1) // 2

    def rule(sym):
        _tag, lam = sym
        quot = p_quotient(lam, p)
        d = delta_sign(lam, p)
        if kind == "brgr":
            if sum(quot[mid]) % 2:
                d = -d
            return d, ("S", _conjugate_middle(quot))
        return d, ("S", tuple(quot))
    return rule


def _couronne_rule(p, cores2):
    def rule(sym):
        _tag, mp = sym
        d = 1
        tgt = []
        for mu, core in zip(mp, cores2):
            nu = with_core(mu, core, p)
            d *= delta_sign(mu, p) * delta_sign(nu, p)
            tgt.append(nu)
        return d, ("S", tuple(tgt))
    return rule


def _dn_rule(p, core2):
    def rule(sym):
        tag, key = sym
        if tag == "D":
            nu = with_core(key, core2, p)
            return delta_sign(key, p) * delta_sign(nu, p), ("D", nu)
        n1 = with_core(key[0], core2, p)
        n2 = with_core(key[1], core2, p)
        d = (delta_sign(key[0], p) * delta_sign(n1, p)
             * delta_sign(key[1], p) * delta_sign(n2, p))
        return d, ("S", (n1, n2))
    return rule


def _fh_rule(p):
    mid = (p - 1) // 2

    def rule(sym):
        tag, lam = sym
        quot = p_quotient(lam, p)
        twist = -1 if sum(quot[mid]) % 2 else 1
        mp = _conjugate_middle(quot)
        if tag == "D":
            return twist, ("D", mp)
        return twist * delta_sign(lam, p), ("S", mp)
    return rule


# -- singular structure enumeration ----------------------------------------

def _even_product(parts):
    return sum(1 for a in parts if a % 2 == 0) % 2 == 0


def _alt_betas(lo, hi, p):
    out = []
    for s in range(lo, hi + 1):
        for beta in partitions_of(s):
            scaled = tuple(p * b for b in beta)
            if _even_product(scaled):
                out.append(beta)
    return out


def _odd_betas(lo, hi):
    return [beta for s in range(lo, hi + 1) for beta in partitions_of(s)
            if all(b % 2 for b in beta)]


def _sym_betas(lo, hi):
    return [beta for s in range(lo, hi + 1) for beta in partitions_of(s)]


def _slot_structures(slots, lo, hi):
    return [mp for s in range(lo, hi + 1)
            for mp in multipartitions_of(s, slots)]


def _dn_structures(lo, hi):
    return [bp for bp in _slot_structures(2, lo, hi)
            if len(bp[1]) % 2 == 0]


def _slot_steps(mp, p):
    steps = []
    for t, part in enumerate(mp):
        steps.extend((p * k, t) for k in part)
    return steps


# -- the check -------------------------------------------------------------

def _family_plan(iso):
    """Chain data for one bijection: start vectors, step operators,
    canonical forms, the transplant rule, and the structure lists."""
    params = iso.params
    p = iso.p
    kind = iso.kind
    if kind in ("mainAn", "mainAn2", "mainAnpegal2"):
        w = params["w"]
        cap = (sum(params["core1"]) + p * w) // p
        betas = _alt_betas(1, w, p)
        over = _alt_betas(w + 1, cap, p)
        return {
            "src_start": _alt_start, "tgt_start": _alt_start,
            "src_step": _alt_step, "tgt_step": _alt_step,
            "src_canon": _alt_canon, "tgt_canon": _alt_canon,
            "rule": _alt_rule(p, params["core2"]),
            "structures": [(beta, [p * b for b in beta],
                            [p * b for b in beta]) for beta in betas],
            "overweight": [(beta, [p * b for b in beta]) for beta in over],
        }
    if kind == "mainTilde":
        w = params["w"]
        cap = (sum(params["core1"]) + p * w) // p
        cover2 = iso.target.family
        betas = _odd_betas(1, w)
        over = _odd_betas(w + 1, cap)
        return {
            "src_start": lambda lbl: _spin_start("spin-sym", lbl),
            "tgt_start": lambda lbl: _spin_start(cover2, lbl),
            "src_step": lambda vec, q: _spin_step("spin-sym", vec, q),
            "tgt_step": lambda vec, q: _spin_step(cover2, vec, q),
            "src_canon": _identity_canon, "tgt_canon": _identity_canon,
            "rule": _spin_rule(p, params["core2"]),
            "structures": [(beta, [p * b for b in beta],
                            [p * b for b in beta]) for beta in betas],
            "overweight": [(beta, [p * b for b in beta]) for beta in over],
        }
    if kind in ("brgr", "osima"):
        w = params["w"]
        base = normalizer_base_table(p) if kind == "brgr" else cyclic_table(p)
        rows = [base.row(lbl) for lbl in base.char_labels]
        slot = base.class_index(("g", p)) if kind == "brgr" else 0
        betas = _sym_betas(1, w)
        return {
            "src_start": _plain_start, "tgt_start": _plain_start,
            "src_step": _sym_step,
            "tgt_step": lambda vec, st: _wreath_step(rows, vec, st),
            "src_canon": _identity_canon, "tgt_canon": _identity_canon,
            "rule": _sym_to_wreath_rule(kind, p),
            "structures": [(beta, [p * b for b in beta],
                            [(b, slot) for b in beta]) for beta in betas],
            "overweight": [],
        }
    if kind == "couronne":
        base = cyclic_table(params["l"])
        rows = [base.row(lbl) for lbl in base.char_labels]
        wtot = sum(params["weights"])
        letters = sum(sum(c) + p * b
                      for c, b in zip(params["cores1"], params["weights"]))
        cap = letters // p
        mps = _slot_structures(params["l"], 1, wtot)
        over = _slot_structures(params["l"], wtot + 1, cap)
        return {
            "src_start": _plain_start, "tgt_start": _plain_start,
            "src_step": lambda vec, st: _wreath_step(rows, vec, st),
            "tgt_step": lambda vec, st: _wreath_step(rows, vec, st),
            "src_canon": _identity_canon, "tgt_canon": _identity_canon,
            "rule": _couronne_rule(p, params["cores2"]),
            "structures": [(mp, _slot_steps(mp, p), _slot_steps(mp, p))
                           for mp in mps],
            "overweight": [(mp, _slot_steps(mp, p)) for mp in over],
        }
    if kind == "dn-conj":
        b = params["b"]
        base = cyclic_table(2)
        rows = [base.row(lbl) for lbl in base.char_labels]
        cap = (2 * sum(params["core1"]) + 2 * p * b) // p
        bps = _dn_structures(1, 2 * b)
        over = _dn_structures(2 * b + 1, cap)
        return {
            "src_start": _dn_start, "tgt_start": _dn_start,
            "src_step": lambda vec, st: _dn_step(rows, vec, st),
            "tgt_step": lambda vec, st: _dn_step(rows, vec, st),
            "src_canon": _dn_canon, "tgt_canon": _dn_canon,
            "rule": _dn_rule(p, params["core2"]),
            "structures": [(bp, _slot_steps(bp, p), _slot_steps(bp, p))
                           for bp in bps],
            "overweight": [(bp, _slot_steps(bp, p)) for bp in over],
        }
    if kind == "fh":
        w = params["w"]
        base = normalizer_base_table(p)
        rows = [base.row(lbl) for lbl in base.char_labels]
        slot = base.class_index(("g", p))
        betas = _alt_betas(1, w, p)
        return {
            "src_start": _alt_start, "tgt_start": _hpw_start,
            "src_step": _alt_step,
            "tgt_step": lambda vec, st: _hpw_step(p, rows, vec, st),
            "src_canon": _alt_canon, "tgt_canon": _hpw_canon,
            "rule": _fh_rule(p),
            "structures": [(beta, [p * b for b in beta],
                            [(b, slot) for b in beta]) for beta in betas],
            "overweight": [],
        }
    raise IsometryError(
        "no single-cycle recursion backs %r; verify its factors instead"
        % (kind,))


def r_commutation_check(iso):
    """Check that the bijection commutes with every singular restriction.

    Returns a report with one section for the structures inside the
    weight and one for the structures beyond it.  Raises IsometryError
    for the composed kinds, whose factors carry the recursions.
    """
    plan = _family_plan(iso)
    report = VerificationReport(iso.kind, "r-commutation")
    report.sizes = {
        "characters": len(iso.pairs),
        "structures": len(plan["structures"]),
        "overweight": len(plan["overweight"]),
    }
    sec = report.section("r_commutation")
    for desc, src_steps, tgt_steps in plan["structures"]:
        for src, sign, tgt in iso.pairs:
            pushed = _run(_scaled(plan["tgt_start"](tgt), sign),
                          tgt_steps, plan["tgt_step"])
            pulled = _apply_map(_run(plan["src_start"](src), src_steps,
                                     plan["src_step"]), plan["rule"])
            if (_canonical(pushed, plan["tgt_canon"])
                    != _canonical(pulled, plan["tgt_canon"])):
                sec.fail({"structure": desc, "char": src})
    sec.counts["checked"] = len(plan["structures"]) * len(iso.pairs)
    over = report.section("r_overweight")
    for desc, src_steps in plan["overweight"]:
        for src, _sign, _tgt in iso.pairs:
            left = _run(plan["src_start"](src), src_steps, plan["src_step"])
            if left:
                over.fail({"structure": desc, "char": src})
    over.counts["checked"] = len(plan["overweight"]) * len(iso.pairs)
    return report
