"""Command-line front end: tables, block partitions, certificates.

Output is deterministic: the table modules fix the order of classes and
characters, values are rendered exactly (never as floats), and JSON is
dumped with sorted keys, so identical invocations produce identical
bytes.  The environment variable ISOFORGE_THREADS caps the number of
worker threads used while verifying; output assembly is always
single-threaded.

Exit codes: 0 all requested checks pass, 1 a check failed (the
certificate is still emitted, with witnesses), 2 malformed request.
"""

import argparse
import json
import sys

from . import __version__
from .blocks import (BlocksError, class_subset, kor_blocks,
                     theoretical_blocks)
from .chars_spin import tilde_an_table, tilde_sn_table
from .chars_sym_alt import sn_table
from .chars_wreath import (bn_table, dn_table, gpw_table, hpw_table,
                           zl_wreath_table)
from .commutation import CHAINED_KINDS, r_commutation_check
from .exactnum import ExactScalar
from .isometry import (IsometryError, KINDS, alt_table, build_isometry,
                       cover_table, verify)

SCHEMA_TAG = "isoforge-certificate/1"

DETERMINISM_NOTE = ("exact arithmetic throughout; no randomness; class and "
                    "character orders are fixed by the table modules")


def _jsonable(obj):
    if isinstance(obj, ExactScalar):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


def _dump(payload, out=None):
    text = json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _partition(text):
    if text is None or text == "":
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise IsometryError("partition %r is not a comma list of integers"
                            % (text,))
    if any(a <= 0 for a in parts) or list(parts) != sorted(parts,
                                                          reverse=True):
        raise IsometryError("partition %r must list positive parts in "
                            "weakly decreasing order" % (text,))
    return parts


def _partition_list(text):
    if text is None:
        raise IsometryError("missing a semicolon-separated list of "
                            "partitions")
    return tuple(_partition(piece) for piece in text.split(";"))


def _int_list(text):
    if text is None:
        raise IsometryError("missing a comma list of integers")
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise IsometryError("%r is not a comma list of integers" % (text,))


# -- table and blocks ------------------------------------------------------

FAMILY_IDS = ("sn", "an", "tilde-sn", "tilde-an", "bn", "dn", "zl", "gpw",
              "hpw")


def resolve_family(args):
    """Return (table, family token, request params) for a family id."""
    fam = args.family
    if fam in ("sn", "an", "tilde-sn", "tilde-an", "bn", "dn"):
        if args.n is None or args.n < 1:
            raise IsometryError("family %r needs --n at least 1" % (fam,))
        params = {"n": args.n}
        if fam == "sn":
            return sn_table(args.n), "sym", params
        if fam == "an":
            return alt_table(args.n), "alt", params
        if fam == "tilde-sn":
            return tilde_sn_table(args.n), "spin-sym", params
        if fam == "tilde-an":
            return tilde_an_table(args.n), "spin-alt", params
        if fam == "bn":
            return bn_table(args.n), "wreath", params
        return dn_table(args.n), "weylD", params
    if fam == "zl":
        if args.l is None or args.w is None:
            raise IsometryError("family 'zl' needs --l and --w")
        return (zl_wreath_table(args.l, args.w), "wreath",
                {"l": args.l, "w": args.w})
    if fam in ("gpw", "hpw"):
        if args.p is None or args.w is None:
            raise IsometryError("family %r needs --p and --w" % (fam,))
        table = (gpw_table if fam == "gpw" else hpw_table)(args.p, args.w)
        return table, "wreath" if fam == "gpw" else "hpw", \
            {"p": args.p, "w": args.w}
    raise IsometryError("unknown family %r" % (fam,))


def _label_str(label):
    return json.dumps(_jsonable(label))


def table_payload(table, family, params):
    return {
        "family": family,
        "params": params,
        "group_order": table.order,
        "classes": [{"label": lbl, "centralizer": table.centralizer(lbl)}
                    for lbl in table.class_labels],
        "characters": [{"label": lbl,
                        "values": [str(v) for v in table.row(lbl)]}
                       for lbl in table.char_labels],
    }


def render_table_text(table):
    heads = [_label_str(c) for c in table.class_labels]
    body = []
    for lbl in table.char_labels:
        body.append([_label_str(lbl)] + [str(v) for v in table.row(lbl)])
    widths = [max(len(r[j]) for r in body + [[""] + heads])
              for j in range(len(heads) + 1)]
    lines = ["  ".join(h.rjust(w) for h, w in zip([""] + heads, widths))]
    for row in body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


def blocks_payload(table, family, p, predicate, params):
    """Block list with metadata plus the agreement flag between the
    inner-product closure on the named classes and the core/weight
    prediction."""
    theo = theoretical_blocks(table, p, family)
    subset = class_subset(table, predicate, family, p)
    agree = kor_blocks(table, subset) == theo
    order = {lbl: i for i, lbl in enumerate(table.char_labels)}
    blocks = []
    for b in theo.blocks:
        entry = {"characters": sorted(b.chars, key=order.get),
                 "size": len(b.chars)}
        for field in ("core", "weight", "sign", "weights"):
            value = getattr(b, field)
            if value is not None:
                entry[field] = value
        blocks.append(entry)
    return {
        "family": args_family_name(family),
        "params": params,
        "p": p,
        "classes": predicate,
        "n_blocks": len(blocks),
        "blocks": blocks,
        "agreement": agree,
    }


def args_family_name(family_token):
    return family_token


def cmd_table(args):
    table, family, params = resolve_family(args)
    if args.json:
        _dump(table_payload(table, family, params))
    else:
        sys.stdout.write(render_table_text(table) + "\n")
    return 0


def cmd_blocks(args):
    if args.p is None:
        raise IsometryError("blocks needs --p")
    table, family, params = resolve_family(args)
    payload = blocks_payload(table, family, args.p, args.classes, params)
    _dump(payload)
    return 0


# -- verify ----------------------------------------------------------------

def _verify_params(args):
    kind = args.kind
    need_p = args.p
    if need_p is None:
        raise IsometryError("verify needs --p")
    if kind in ("mainAn", "mainAn2", "mainAnpegal2", "mainTilde",
                "brouetilde"):
        if args.w is None:
            raise IsometryError("kind %r needs --w" % (kind,))
        return {"p": need_p, "w": args.w,
                "core1": _partition(args.core1),
                "core2": _partition(args.core2)}
    if kind in ("brgr", "osima", "fh"):
        w = args.w
        if w is None and args.n is not None:
            if args.n < 1 or args.n % need_p:
                raise IsometryError(
                    "--n must be a positive multiple of p for %r" % (kind,))
            w = args.n // need_p
        if w is None:
            raise IsometryError("kind %r needs --w or --n" % (kind,))
        return {"p": need_p, "w": w}
    if kind == "couronne":
        if args.l is None:
            raise IsometryError("kind 'couronne' needs --l")
        return {"l": args.l, "p": need_p,
                "weights": _int_list(args.weights),
                "cores1": _partition_list(args.cores1),
                "cores2": _partition_list(args.cores2)}
    if kind == "dn-conj":
        if args.b is None:
            raise IsometryError("kind 'dn-conj' needs --b")
        params = {"p": need_p, "b": args.b,
                  "core1": _partition(args.core1),
                  "core2": _partition(args.core2)}
        if args.side is not None:
            params["side"] = args.side
        return params
    if kind == "dn-nonconj":
        return {"p": need_p, "weights": _int_list(args.weights),
                "cores1": _partition_list(args.cores1),
                "cores2": _partition_list(args.cores2)}
    raise IsometryError("unknown kind %r" % (kind,))


def run_verify(kind, mode, params):
    """Build the bijection, run the requested check plus the restriction
    compatibility check where the family recursion exists."""
    iso = build_isometry(kind, **params)
    report = verify(iso, mode=mode)
    if kind in CHAINED_KINDS:
        chain = r_commutation_check(iso)
        report.sections.extend(chain.sections)
        for key, val in chain.sizes.items():
            report.sizes["r_" + key] = val
    return iso, report


def certificate(kind, mode, params, report):
    return {
        "schema": SCHEMA_TAG,
        "request": {"kind": kind, "mode": mode, "params": params},
        "environment": {"package": "isoforge", "version": __version__,
                        "determinism": DETERMINISM_NOTE},
        "report": report.to_dict(),
    }


def cmd_verify(args):
    params = _verify_params(args)
    _iso, report = run_verify(args.kind, args.mode, params)
    _dump(certificate(args.kind, args.mode, params, report), args.out)
    return 0 if report.passed else 1


# -- argument plumbing -----------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="isoforge",
        description="exact character tables, block partitions, and "
                    "perfect-isometry certificates")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print a character table")
    t.add_argument("--family", required=True, choices=FAMILY_IDS)
    t.add_argument("--n", type=int)
    t.add_argument("--p", type=int)
    t.add_argument("--w", type=int)
    t.add_argument("--l", type=int)
    t.add_argument("--json", action="store_true",
                   help="emit JSON instead of aligned text")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("blocks", help="print the block partition")
    b.add_argument("--family", required=True, choices=FAMILY_IDS)
    b.add_argument("--n", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--w", type=int)
    b.add_argument("--l", type=int)
    b.add_argument("--classes", default="p-regular",
                   help="class predicate backing the inner-product "
                        "closure (default p-regular)")
    b.set_defaults(func=cmd_blocks)

    v = sub.add_parser("verify", help="build a bijection and certify it")
    v.add_argument("--kind", required=True, choices=list(KINDS))
    v.add_argument("--mode", default="broue",
                   choices=("broue", "generalized", "kor"))
    v.add_argument("--p", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--w", type=int)
    v.add_argument("--l", type=int)
    v.add_argument("--b", type=int)
    v.add_argument("--side", type=int, choices=(1, -1))
    v.add_argument("--core1", default="")
    v.add_argument("--core2", default="")
    v.add_argument("--weights")
    v.add_argument("--cores1")
    v.add_argument("--cores2")
    v.add_argument("--out", help="write the certificate here instead of "
                                 "stdout")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IsometryError, BlocksError, ValueError) as err:
        sys.stderr.write("error: %s\n" % (err,))
        return 2


if __name__ == "__main__":
    sys.exit(main())
