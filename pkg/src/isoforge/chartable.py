"""Character table container with exact orthogonality validation,
plus the generic index-2 descent used for A_n, Weyl D and the
sign-kernel subgroups of wreath products.

A table stores, in a fixed canonical order, class labels with their
centralizer orders and character rows of ExactScalar values.  Row inner
products weight by 1/centralizer, so no separate class sizes are kept.
"""

from fractions import Fraction

from .exactnum import ExactScalar, ZERO


class TableError(Exception):
    pass


class CharTable:
    def __init__(self, name, order, classes, chars, identity=None):
        self.name = name
        self.order = order
        self.class_labels = tuple(lbl for lbl, _ in classes)
        self.centralizers = {lbl: z for lbl, z in classes}
        if len(self.centralizers) != len(self.class_labels):
            raise TableError("duplicate class label")
        self.char_labels = tuple(lbl for lbl, _ in chars)
        self.rows = {}
        for lbl, values in chars:
            if lbl in self.rows:
                raise TableError("duplicate character label %r" % (lbl,))
            values = tuple(ExactScalar(v) for v in values)
            if len(values) != len(self.class_labels):
                raise TableError("row length mismatch for %r" % (lbl,))
            self.rows[lbl] = values
        self.identity = identity if identity is not None else self.class_labels[0]
        self._index = {lbl: i for i, lbl in enumerate(self.class_labels)}
        if sum(Fraction(1, z) for z in self.centralizers.values()) != 1:
            raise TableError("centralizer orders inconsistent with a partition"
                             " into conjugacy classes")

    # -- access -----------------------------------------------------------

    def class_index(self, label):
        return self._index[label]

    def centralizer(self, label):
        return self.centralizers[label]

    def class_size(self, label):
        return self.order // self.centralizers[label]

    def value(self, char_label, class_label):
        return self.rows[char_label][self._index[class_label]]

    def row(self, char_label):
        return self.rows[char_label]

    def degree(self, char_label):
        return self.value(char_label, self.identity).rational()

    def n_classes(self):
        return len(self.class_labels)

    # -- inner products ---------------------------------------------------

    def row_inner(self, a, b, class_subset=None):
        """<a, b> = sum over classes of a(c) conj(b(c)) / centralizer(c).

        Restricting class_subset gives the truncated inner products the
        block theory is built on.
        """
        ra, rb = self.rows[a], self.rows[b]
        total = ExactScalar(0)
        for i, lbl in enumerate(self.class_labels):
            if class_subset is not None and lbl not in class_subset:
                continue
            v = ra[i] * rb[i].conj()
            if v:
                total = total + v / self.centralizers[lbl]
        return total

    def orthogonality_report(self, max_failures=5):
        """Exact check of both orthogonality relations; [] means pass."""
        fails = []
        labels = self.char_labels
        rows = [self.rows[l] for l in labels]
        k = len(self.class_labels)
        for i, a in enumerate(labels):
            for j in range(i, len(labels)):
                got = self.row_inner(a, labels[j])
                want = ExactScalar(1 if i == j else 0)
                if got != want:
                    fails.append(("row", a, labels[j], str(got)))
                    if len(fails) >= max_failures:
                        return fails
        for ci in range(k):
            for cj in range(ci, k):
                tot = ExactScalar(0)
                for r in rows:
                    v = r[ci] * r[cj].conj()
                    if v:
                        tot = tot + v
                want = (
                    ExactScalar(self.centralizers[self.class_labels[ci]])
                    if ci == cj
                    else ZERO
                )
                if tot != want:
                    fails.append(
                        ("column", self.class_labels[ci],
                         self.class_labels[cj], str(tot))
                    )
                    if len(fails) >= max_failures:
                        return fails
        return fails

    def validate(self):
        fails = self.orthogonality_report()
        if fails:
            raise TableError(
                "%s: orthogonality failed: %s" % (self.name, fails[:3])
            )
        return self


def index2_descent(parent, eps_label, split_labels, diff_values, name,
                   identity=None):
    """Character table of the index-2 kernel of the linear character eps.

    split_labels: parent classes (inside the kernel) whose intersection
    with the subgroup breaks into two classes, labelled (c, +1), (c, -1).
    diff_values: {(char_label, class_label): ExactScalar} giving, for each
    eps-fixed character and split class, the value D of the difference
    character on the (c, +1) class; the (c, -1) class gets -D.

    Restricted characters of an eps-orbit {chi, chi*eps} keep the label
    of whichever member comes first in the parent order.  The resulting
    table is validated before being returned.
    """
    eps = parent.rows[eps_label]
    kernel = [
        lbl
        for i, lbl in enumerate(parent.class_labels)
        if eps[parent.class_index(lbl)] == ExactScalar(1)
    ]
    kernel_set = set(kernel)
    for lbl in split_labels:
        if lbl not in kernel_set:
            raise TableError("split class %r not in the kernel" % (lbl,))
    split_set = set(split_labels)

    classes = []
    layout = []  # (child label, parent label, +-1 or 0)
    for lbl in kernel:
        z = parent.centralizer(lbl)
        if lbl in split_set:
            classes.append(((lbl, 1), z))
            classes.append(((lbl, -1), z))
            layout.append(((lbl, 1), lbl, 1))
            layout.append(((lbl, -1), lbl, -1))
        else:
            if z % 2:
                raise TableError("odd centralizer on a non-split class")
            classes.append((lbl, z // 2))
            layout.append((lbl, lbl, 0))

    def restricted(row):
        return [row[parent.class_index(par)] for _, par, _ in layout]

    chars = []
    seen = set()
    for lbl in parent.char_labels:
        if lbl in seen:
            continue
        row = parent.rows[lbl]
        twisted = tuple(
            row[i] * eps[i] for i in range(len(parent.class_labels))
        )
        partner = None
        for other in parent.char_labels:
            if parent.rows[other] == twisted:
                partner = other
                break
        if partner is None:
            raise TableError("eps-twist of %r is not a character" % (lbl,))
        if partner != lbl:
            seen.add(lbl)
            seen.add(partner)
            chars.append((lbl, restricted(row)))
        else:
            seen.add(lbl)
            res = restricted(row)
            half = Fraction(1, 2)
            for tag in (1, -1):
                vals = []
                for (_, par, side), v in zip(layout, res):
                    if side:
                        d = diff_values.get((lbl, par), ZERO) * side
                        vals.append((v + tag * d) * half)
                    else:
                        vals.append(v * half)
                chars.append(((lbl, tag), vals))

    child = CharTable(name, parent.order // 2, classes, chars,
                      identity=identity)
    return child.validate()
