"""Exact scaffolding: partitions, integer Laurent polynomials in t, basis kinds,
and sequences of partitions that index tables.

Partitions are plain tuples of weakly decreasing positive integers (the empty
tuple is the empty partition); trailing zeros are never stored, so equal
partitions have identical representations.  Integer index vectors are plain
tuples that may contain zeros and negative entries.  All arithmetic is exact;
there is no floating point anywhere in the package.
"""

from __future__ import annotations

import itertools

# ---------------------------------------------------------------------------
# basis kinds

KINDS = ("none", "box", "vdom", "hdom")

_KIND_ALIASES = {
    "none": "none", "empty": "none", "schur": "none",
    "box": "box", "cell": "box",
    "vdom": "vdom", "vd": "vdom",
    "hdom": "hdom", "hd": "hdom",
}

KIND_TRANSPOSE = {"none": "none", "box": "box", "vdom": "hdom", "hdom": "vdom"}

# Schur support of the degree-two seed that generates each family's series:
# the one-column pair for vertical dominoes, the one-row pair for horizontal
# ones, both plus a single cell for boxes, nothing for the plain Schur kind.
KIND_SEED = {
    "none": (),
    "box": ((1,), (1, 1)),
    "vdom": ((1, 1),),
    "hdom": ((2,),),
}


def canonical_kind(k):
    """Normalize a kind tag, accepting the short aliases vd/hd/cell."""
    try:
        return _KIND_ALIASES[k.lower()]
    except (KeyError, AttributeError):
        raise ValueError("unknown kind tag: %r" % (k,))


# ---------------------------------------------------------------------------
# partitions

def as_partition(seq):
    """Validate and canonicalize a partition given as any integer iterable."""
    parts = tuple(int(x) for x in seq)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError("not weakly decreasing: %r" % (parts,))
    if parts and parts[-1] < 0:
        raise ValueError("negative part in %r" % (parts,))
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(seq):
    try:
        as_partition(seq)
        return True
    except ValueError:
        return False


def conjugate(lam):
    """Transpose of a partition (column lengths)."""
    if not lam:
        return ()
    out = []
    for c in range(lam[0]):
        out.append(sum(1 for p in lam if p > c))
    return tuple(out)


def diagonal_size(lam):
    """Number of diagonal cells (i, i) in the diagram."""
    return sum(1 for i, p in enumerate(lam) if p > i)


def frobenius(lam):
    """Frobenius coordinates (arms, legs) of a partition.

    arms[i] = lam[i] - i - 1 counts cells strictly right of the diagonal in
    row i; legs[i] does the same below the diagonal in column i.  Both lists
    are strictly decreasing and nonnegative.
    """
    lamt = conjugate(lam)
    d = diagonal_size(lam)
    arms = tuple(lam[i] - i - 1 for i in range(d))
    legs = tuple(lamt[i] - i - 1 for i in range(d))
    return arms, legs


def from_frobenius(arms, legs):
    """Rebuild the partition with the given Frobenius coordinates."""
    if len(arms) != len(legs):
        raise ValueError("arm/leg length mismatch")
    d = len(arms)
    rows = []
    for i in range(d):
        rows.append(arms[i] + i + 1)
    # column lengths below the diagonal determine the remaining rows
    total_len = (legs[0] + 1) if d else 0
    for r in range(d, total_len):
        rows.append(sum(1 for j in range(d) if legs[j] + j + 1 > r))
    return as_partition(rows)


def contains(lam, mu):
    """Whether mu fits inside lam as a diagram."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def intersect(lam, mu):
    """Entrywise minimum shape of two partitions."""
    return tuple(min(a, b) for a, b in zip(lam, mu))


def rotate_complement(mu, rect):
    """Complement of mu inside the rectangle rect, rotated 180 degrees."""
    if not is_rectangle(rect):
        raise ValueError("not a rectangle: %r" % (rect,))
    rows = len(rect)
    cols = rect[0] if rect else 0
    if len(mu) > rows or (mu and mu[0] > cols):
        raise ValueError("%r does not fit in %d x %d box" % (mu, rows, cols))
    padded = list(mu) + [0] * (rows - len(mu))
    return as_partition(cols - padded[rows - 1 - i] for i in range(rows))


def is_rectangle(lam):
    """True for nonempty partitions with all parts equal."""
    return bool(lam) and all(p == lam[0] for p in lam)


def member_p_kind(lam, kind):
    """Whether lam lies in the tileable family of the given kind."""
    kind = canonical_kind(kind)
    if kind == "none":
        return lam == ()
    if kind == "box":
        return True
    if kind == "hdom":
        return all(p % 2 == 0 for p in lam)
    return all(p % 2 == 0 for p in conjugate(lam))


def partitions_of(n, max_part=None, max_len=None):
    """Generate partitions of n in reverse lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    first = n if max_part is None else min(n, max_part)
    if max_len is not None and max_len <= 0:
        return
    rest_len = None if max_len is None else max_len - 1
    for head in range(first, 0, -1):
        for tail in partitions_of(n - head, max_part=head, max_len=rest_len):
            yield (head,) + tail


def partitions_upto(d, max_len=None):
    """All partitions of size 0..d, sorted by the package partition order."""
    out = []
    for n in range(d + 1):
        out.extend(partitions_of(n, max_len=max_len))
    return out


def kind_partitions_of(n, kind, max_len=None):
    """Partitions of n inside the tileable family of the given kind."""
    kind = canonical_kind(kind)
    if kind == "none":
        return [()] if n == 0 else []
    if kind == "box":
        return list(partitions_of(n, max_len=max_len))
    if kind == "hdom":
        if n % 2:
            return []
        return [tuple(2 * p for p in lam)
                for lam in partitions_of(n // 2, max_len=max_len)]
    if n % 2:
        return []
    out = []
    for lam in partitions_of(n // 2):
        mu = conjugate(tuple(2 * p for p in lam))
        if max_len is None or len(mu) <= max_len:
            out.append(mu)
    return sorted(out, key=partition_key)


def partition_key(lam):
    """Total order: degree first, then reverse lexicographic."""
    return (sum(lam), tuple(-p for p in lam))


# ---------------------------------------------------------------------------
# Laurent polynomials in t with integer coefficients

class LaurentPoly:
    """Integer-coefficient Laurent polynomial in one variable t.

    Stored as a dict exponent -> coefficient with no zero values.  Instances
    are treated as immutable; every operation returns a fresh object.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs:
            self.c = {e: v for e, v in coeffs.items() if v}
        else:
            self.c = {}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, n):
        return cls({0: n})

    @classmethod
    def t(cls, exp=1, coeff=1):
        return cls({exp: coeff})

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = {e: -v for e, v in self.c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            r = LaurentPoly.__new__(LaurentPoly)
            r.c = {e: v * other for e, v in self.c.items()}
            return r
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                else:
                    del out[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = out
        return r

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t**k."""
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = {e + k: v for e, v in self.c.items()}
        return r

    def subs_power(self, k):
        """The ring map t -> t**k (k may be negative, e.g. -1)."""
        if k == 0:
            raise ValueError("t -> t^0 is not a Laurent substitution")
        r = LaurentPoly.__new__(LaurentPoly)
        r.c = {e * k: v for e, v in self.c.items()}
        return r

    def eval_int(self, v):
        """Evaluate at an integer t = v; v = 0 requires no negative exponents."""
        if v == 0:
            if any(e < 0 for e in self.c):
                raise ValueError("t=0 undefined: negative exponents present")
            return self.c.get(0, 0)
        total = 0
        for e, coeff in self.c.items():
            if e < 0:
                if v not in (1, -1):
                    raise ValueError("t=%d undefined on negative exponents" % v)
                total += coeff * (v ** (-e))
            else:
                total += coeff * (v ** e)
        return total

    def min_exp(self):
        return min(self.c) if self.c else None

    def max_exp(self):
        return max(self.c) if self.c else None

    def __str__(self):
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if e == 0:
                term = str(abs(v))
            else:
                mag = "" if abs(v) == 1 else "%d*" % abs(v)
                term = mag + ("t" if e == 1 else "t^%d" % e)
            if not bits:
                bits.append(("-" if v < 0 else "") + term)
            else:
                bits.append((" - " if v < 0 else " + ") + term)
        return "".join(bits)

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    def to_json(self):
        return {str(e): str(v) for e, v in sorted(self.c.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(v) for e, v in obj.items()})


P_ZERO = LaurentPoly.zero()
P_ONE = LaurentPoly.const(1)


# ---------------------------------------------------------------------------
# sequences of partitions

def seq_weight(rects):
    """Total number of cells |R| of a sequence of partitions."""
    return sum(sum(r) for r in rects)


def seq_overlap(rects):
    """Pairwise overlap ||R|| = sum over i<j of |R_i meet R_j|."""
    total = 0
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            total += sum(intersect(rects[i], rects[j]))
    return total


def is_dominant_seq(rects):
    """Widths weakly decrease along the sequence."""
    widths = [r[0] if r else 0 for r in rects]
    return all(a >= b for a, b in zip(widths, widths[1:]))


def all_rectangles_seq(rects):
    return all(is_rectangle(r) for r in rects)


def dominant_rearrangement(rects):
    """Sort rectangles into a dominant sequence (widths weakly decreasing)."""
    return tuple(sorted(rects, key=lambda r: (-(r[0] if r else 0), -len(r))))


def partition_to_json(lam):
    return list(lam)


def partition_from_json(obj):
    return as_partition(obj)
