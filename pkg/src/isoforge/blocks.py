"""Class subsets, Gram-closure block partitions, and block labelling.

Two independent routes to the p-blocks are provided.  kor_blocks takes
the transitive closure of "nonzero inner product after restricting to a
class subset"; with the p-regular subset this is the p-block partition.
theoretical_blocks predicts the same partition from core combinatorics
(p-cores, bar cores, componentwise cores for wreath products), without
touching character values.  Tests and the CLI compare the two.

For tables with all-rational values a third route goes through a Z-basis
of the restricted character lattice; see rational_lattice_suite.
"""

from fractions import Fraction

from .exactnum import ZERO
from .partitions import conjugate, is_self_conjugate, p_core, p_weight
from .barpartitions import bar_core, bar_weight, sigma


class BlocksError(Exception):
    pass


PREDICATES = ("all", "p-regular", "spin-C", "brgr-Cprime", "osima-Cprime",
              "fh-regular")

FAMILIES = ("sym", "alt", "spin-sym", "spin-alt", "wreath", "weylD", "hpw")


def split_side(label):
    """(underlying label, +-1) for an index-2 split class or character
    label, (label, 0) otherwise."""
    if (
        len(label) == 2
        and label[1] in (1, -1)
        and isinstance(label[0], tuple)
    ):
        return label[0], label[1]
    return label, 0


class ClassSubset:
    """A named set of class labels of one table."""

    def __init__(self, predicate, table_name, labels, universe):
        self.predicate = predicate
        self.table_name = table_name
        self.labels = tuple(labels)
        self.universe = tuple(universe)
        self.label_set = frozenset(self.labels)
        missing = self.label_set - frozenset(self.universe)
        if missing:
            raise BlocksError("labels outside the table: %r" % (missing,))

    def complement(self):
        rest = [c for c in self.universe if c not in self.label_set]
        return ClassSubset("not-" + self.predicate, self.table_name, rest,
                           self.universe)

    def __contains__(self, label):
        return label in self.label_set

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return "ClassSubset(%s, %s, %d classes)" % (
            self.predicate, self.table_name, len(self.labels))


def _wreath_regular(label, base_orders, p):
    """No cycle may have length times base-element order divisible by p."""
    for part, z in zip(label, base_orders):
        if not part:
            continue
        if z % p == 0:
            return False
        if any(k % p == 0 for k in part):
            return False
    return True


def _base_order_list(table):
    base = getattr(table, "base", None)
    if base is None or not hasattr(base, "element_orders"):
        raise BlocksError(
            "table %s carries no base-group data" % (table.name,))
    return base, [base.element_orders[c] for c in base.class_labels]


def class_subset(table, predicate, family, p=None):
    """Resolve a named predicate to the matching classes of the table."""
    if family not in FAMILIES:
        raise BlocksError("unknown family %r" % (family,))
    if predicate == "all":
        return ClassSubset("all", table.name, table.class_labels,
                           table.class_labels)
    if predicate not in PREDICATES:
        raise BlocksError("unknown class predicate %r" % (predicate,))

    def keep(label):
        if predicate == "p-regular":
            if p is None:
                raise BlocksError("p-regular needs p")
            if family == "sym":
                return all(k % p for k in label)
            if family == "alt":
                pi, _ = split_side(label)
                return all(k % p for k in pi)
            if family in ("spin-sym", "spin-alt"):
                return all(k % p for k in label[0])
            if family in ("wreath", "weylD", "hpw"):
                pi, _ = split_side(label)
                return _wreath_regular(pi, orders, p)
        if predicate == "spin-C":
            if p is None:
                raise BlocksError("spin-C needs p")
            if family not in ("spin-sym", "spin-alt"):
                raise BlocksError("spin-C only applies to cover tables")
            return not any(
                k % p == 0 and (k // p) % 2 for k in label[0])
        if predicate == "brgr-Cprime":
            if family != "wreath":
                raise BlocksError("brgr-Cprime applies to wreath tables")
            return label[-1] == ()
        if predicate == "osima-Cprime":
            if family != "wreath":
                raise BlocksError("osima-Cprime applies to wreath tables")
            return label[0] == ()
        if predicate == "fh-regular":
            if family != "hpw":
                raise BlocksError("fh-regular applies to hpw tables")
            pi, _ = split_side(label)
            return pi[-1] == ()
        raise BlocksError("unknown class predicate %r" % (predicate,))

    orders = None
    if predicate == "p-regular" and family in ("wreath", "weylD", "hpw"):
        _, orders = _base_order_list(table)
    labels = [c for c in table.class_labels if keep(c)]
    return ClassSubset(predicate, table.name, labels, table.class_labels)


# -- block partitions ------------------------------------------------------

class Block:
    def __init__(self, chars, core=None, weight=None, sign=None,
                 weights=None):
        self.chars = frozenset(chars)
        self.core = core
        self.weight = weight
        self.sign = sign
        self.weights = weights

    def __len__(self):
        return len(self.chars)

    def __contains__(self, label):
        return label in self.chars

    def __repr__(self):
        bits = ["%d chars" % len(self.chars)]
        if self.core is not None:
            bits.append("core=%r" % (self.core,))
        if self.weight is not None:
            bits.append("w=%r" % (self.weight,))
        if self.sign is not None:
            bits.append("sign=%+d" % self.sign)
        return "Block(%s)" % ", ".join(bits)


def _block_sort_key(block):
    return sorted(repr(c) for c in block.chars)


class BlockPartition:
    def __init__(self, blocks):
        self.blocks = tuple(sorted(blocks, key=_block_sort_key))
        self._lookup = {}
        for b in self.blocks:
            for c in b.chars:
                if c in self._lookup:
                    raise BlocksError("label %r in two blocks" % (c,))
                self._lookup[c] = b

    def block_of(self, char_label):
        return self._lookup[char_label]

    def as_sets(self):
        return frozenset(b.chars for b in self.blocks)

    def restrict(self, labels):
        """The induced partition on a subset of the characters."""
        keep = frozenset(labels)
        out = frozenset(
            b.chars & keep for b in self.blocks if b.chars & keep)
        return out

    def __eq__(self, other):
        if isinstance(other, BlockPartition):
            return self.as_sets() == other.as_sets()
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return "BlockPartition(%d blocks / %d chars)" % (
            len(self.blocks), len(self._lookup))


class _UnionFind:
    def __init__(self, items):
        self.up = {x: x for x in items}

    def find(self, x):
        root = x
        while self.up[root] != root:
            root = self.up[root]
        while self.up[x] != root:
            self.up[x], x = root, self.up[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.up[rb] = ra

    def groups(self):
        out = {}
        for x in self.up:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def kor_blocks(table, subset):
    """Transitive closure of nonzero inner products restricted to the
    subset.  With the p-regular classes this computes the p-blocks."""
    labels = table.char_labels
    uf = _UnionFind(labels)
    sub = subset.label_set
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if uf.find(a) == uf.find(b):
                continue
            if table.row_inner(a, b, sub) != ZERO:
                uf.union(a, b)
    return BlockPartition([Block(g) for g in uf.groups()])


# -- theoretical partitions ------------------------------------------------

def base_blocks(base, p):
    """p-blocks of a wreath base table, as (char indices, defect0 flag).

    Cyclic bases follow the dual-group coset rule.  The Sylow normalizer
    base is a single block at p; at p = 2 (only needed for p = 3, where
    the base is the symmetric group on three points) the sign and
    trivial characters form the principal block and the degree-2
    character is alone with defect zero.
    """
    r = base.n_classes()
    if base.name.startswith("Z"):
        l = base.order
        lp = l
        while lp % p == 0:
            lp //= p
        groups = {}
        for s in range(r):
            groups.setdefault(s % lp, []).append(s)
        return [(tuple(g), l == lp) for _, g in sorted(groups.items())]
    if base.name.startswith("N"):
        q = r  # the base is Z_q : Z_{q-1} on q classes
        if p == q:
            return [(tuple(range(r)), False)]
        if p == 2 and q == 3:
            return [((0, 2), False), ((1,), True)]
        raise BlocksError(
            "no block data for base %s at p=%d" % (base.name, p))
    raise BlocksError("unrecognized base table %s" % (base.name,))


def _wreath_block_data(table, p):
    base, _ = _base_order_list(table)
    bblocks = base_blocks(base, p)
    r = base.n_classes()

    def datum(mu):
        cores = [None] * r
        weights = [None] * r
        key = []
        for idx, (slots, defect0) in enumerate(bblocks):
            if defect0:
                # core and weight per coordinate; the weight belongs to
                # the block datum, so equal cores with the sizes spread
                # differently over the coordinates stay separate
                s = slots[0]
                cores[s] = p_core(mu[s], p)
                weights[s] = p_weight(mu[s], p)
                key.append(("core", s, cores[s], weights[s]))
            else:
                key.append(("size", idx, sum(sum(mu[s]) for s in slots)))
        return tuple(key), tuple(cores), tuple(weights)

    return datum


def theoretical_blocks(table, p, family):
    """Predict the p-block partition of the table from core data alone."""
    if family not in FAMILIES:
        raise BlocksError("unknown family %r" % (family,))
    if p < 2:
        raise BlocksError("p must be at least 2")

    if family == "sym":
        groups = {}
        for lam in table.char_labels:
            groups.setdefault(p_core(lam, p), []).append(lam)
        return BlockPartition([
            Block(g, core=core, weight=p_weight(g[0], p))
            for core, g in groups.items()
        ])

    if family == "alt":
        return _alt_partition(table.char_labels, p)

    if family in ("spin-sym", "spin-alt"):
        if p == 2:
            raise BlocksError("spin block labels need an odd prime")
        ordinary = [l for l in table.char_labels if l[0] == "chi"]
        spin = [l for l in table.char_labels if l[0] == "xi"]
        if family == "spin-sym":
            groups = {}
            for lbl in ordinary:
                groups.setdefault(p_core(lbl[1], p), []).append(lbl)
            blocks = [
                Block(g, core=core, weight=p_weight(g[0][1], p))
                for core, g in groups.items()
            ]
        else:
            inner = _alt_partition([l[1] for l in ordinary], p)
            blocks = [
                Block([("chi", l) for l in b.chars], core=b.core,
                      weight=b.weight)
                for b in inner
            ]
        groups = {}
        for lbl in spin:
            lam = lbl[1]
            core = bar_core(lam, p)
            w = bar_weight(lam, p)
            if w == 0:
                blocks.append(Block([lbl], core=core, weight=0,
                                    sign=sigma(core)))
            else:
                groups.setdefault(core, []).append(lbl)
        for core, g in groups.items():
            blocks.append(Block(g, core=core,
                                weight=bar_weight(g[0][1], p),
                                sign=sigma(core)))
        return BlockPartition(blocks)

    if family == "wreath":
        datum = _wreath_block_data(table, p)
        groups = {}
        meta = {}
        for mu in table.char_labels:
            key, cores, weights = datum(mu)
            groups.setdefault(key, []).append(mu)
            meta[key] = (cores, weights)
        blocks = []
        for key, g in groups.items():
            cores, weights = meta[key]
            defined = [x for x in weights if x is not None]
            total = sum(defined) if defined else None
            blocks.append(Block(g, core=cores, weight=total,
                                weights=weights))
        return BlockPartition(blocks)

    if family == "weylD":
        if p == 2:
            return BlockPartition([Block(table.char_labels)])
        groups = {}
        singles = []
        for lbl in table.char_labels:
            under, side = split_side(lbl)
            mu1, mu2 = under
            d1 = (p_core(mu1, p), p_weight(mu1, p))
            d2 = (p_core(mu2, p), p_weight(mu2, p))
            w = d1[1] + d2[1]
            if side and w == 0:
                singles.append(Block([lbl], core=(d1[0], d2[0]), weight=0))
                continue
            # unordered pair of per-component (core, weight) data, since
            # the fused label stands for both component orders
            key = tuple(sorted((d1, d2)))
            groups.setdefault(key, []).append(lbl)
        blocks = singles
        for key, g in groups.items():
            blocks.append(Block(g, core=tuple(d[0] for d in key),
                                weight=sum(d[1] for d in key),
                                weights=tuple(d[1] for d in key)))
        return BlockPartition(blocks)

    if family == "hpw":
        base, _ = _base_order_list(table)
        if p != base.n_classes():
            raise BlocksError(
                "hpw blocks implemented only at the defining prime")
        return BlockPartition([Block(table.char_labels)])

    raise BlocksError("unknown family %r" % (family,))


def _alt_partition(labels, p):
    """Blocks of an alternating-group table: sign-twist orbits of cores
    merge, and a self-conjugate core of weight zero gives two defect
    zero singletons."""
    groups = {}
    blocks = []
    for lbl in labels:
        under, side = split_side(lbl)
        core = p_core(under, p)
        w = p_weight(under, p)
        if side and w == 0:
            blocks.append(Block([lbl], core=core, weight=0))
            continue
        key = tuple(sorted((core, conjugate(core))))
        groups.setdefault(key, []).append(lbl)
    for key, g in groups.items():
        under, _ = split_side(g[0])
        blocks.append(Block(g, core=key[0] if key[0] == key[1] else key,
                            weight=p_weight(under, p)))
    return BlockPartition(blocks)


# -- rational lattice route ------------------------------------------------

def _hermite_rows(rows):
    """Row Hermite form of an integer matrix; returns the nonzero rows.

    Small sizes only; plain gcd elimination column by column.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    top = 0
    for col in range(ncols):
        pivot = None
        for i in range(top, len(mat)):
            if mat[i][col]:
                if pivot is None or abs(mat[i][col]) < abs(mat[pivot][col]):
                    pivot = i
        if pivot is None:
            continue
        mat[top], mat[pivot] = mat[pivot], mat[top]
        while True:
            done = True
            for i in range(top + 1, len(mat)):
                if mat[i][col]:
                    qq = mat[i][col] // mat[top][col]
                    mat[i] = [a - qq * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][col]:
                        done = False
            if done:
                break
            pivot = top
            for i in range(top, len(mat)):
                if mat[i][col] and abs(mat[i][col]) < abs(mat[pivot][col]):
                    pivot = i
            mat[top], mat[pivot] = mat[pivot], mat[top]
        if mat[top][col] < 0:
            mat[top] = [-a for a in mat[top]]
        for i in range(top):
            qq = mat[i][col] // mat[top][col]
            if qq:
                mat[i] = [a - qq * b for a, b in zip(mat[i], mat[top])]
        top += 1
    return [r for r in mat[:top]]


def _in_basis(vec, basis):
    """Integer coordinates of vec in the Hermite-form basis."""
    v = list(vec)
    coords = [0] * len(basis)
    for i, row in enumerate(basis):
        col = next(j for j, a in enumerate(row) if a)
        if v[col] % row[col]:
            raise BlocksError("vector outside the lattice")
        c = v[col] // row[col]
        coords[i] = c
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    if any(v):
        raise BlocksError("vector outside the lattice")
    return coords


class LatticeSuite:
    """Z-basis of the restricted-character lattice and what hangs off it:
    decomposition matrix, dual characters, and the block graph."""

    def __init__(self, table, subset, basis, decomposition):
        self.table = table
        self.subset = subset
        self.basis = tuple(tuple(r) for r in basis)
        self.decomposition = tuple(tuple(r) for r in decomposition)
        self.char_labels = table.char_labels

    def dual(self, j):
        """Phi_j = sum over characters of d[chi][j] * chi, as a dict."""
        return {
            lbl: row[j]
            for lbl, row in zip(self.char_labels, self.decomposition)
            if row[j]
        }

    def blocks(self):
        uf = _UnionFind(self.char_labels)
        for j in range(len(self.basis)):
            touched = [
                lbl for lbl, row in zip(self.char_labels, self.decomposition)
                if row[j]
            ]
            for other in touched[1:]:
                uf.union(touched[0], other)
        return BlockPartition([Block(g) for g in uf.groups()])


def rational_lattice_suite(table, subset):
    """Hermite-form basis route; every table value must be rational."""
    cols = [table.class_index(c) for c in subset.labels]
    rows = []
    for lbl in table.char_labels:
        row = table.row(lbl)
        ints = []
        for j in cols:
            try:
                x = row[j].rational()
            except ValueError:
                raise BlocksError(
                    "irrational value at %r / %r" % (lbl, subset.labels[len(ints)]))
            if x.denominator != 1:
                # rational character values are rational algebraic
                # integers, so this indicates a broken table
                raise BlocksError("non-integral rational value %s" % (x,))
            ints.append(int(x))
        rows.append(ints)
    basis = _hermite_rows(rows)
    dec = [_in_basis(r, basis) for r in rows]
    return LatticeSuite(table, subset, basis, dec)
