"""Schur-basis arithmetic: Littlewood-Richardson products, skewing operators,
straightening of integer indices, and semistandard-tableau evaluation.

A SymFunc is a finite sparse map partition -> LaurentPoly and is read as a
linear combination of Schur functions (or of the basis named by an Expansion
tag).  Products and skews reduce to Littlewood-Richardson data computed by
enumerating ballot fillings; the enumerations are memoized in module caches
that act as pure memos (results never depend on hits).
"""

from __future__ import annotations

import itertools

from .core import (LaurentPoly, P_ONE, as_partition, canonical_kind,
                   contains, partition_key)

# ---------------------------------------------------------------------------
# caches (read-mostly; insertion is plain dict assignment, entries are frozen)

_PROD_CACHE = {}    # (mu, nu) -> dict lam -> int
_SKEW_CACHE = {}    # (lam, mu) -> tuple of (nu, int)
_HSTRIP_ADD = {}    # (lam, m) -> tuple of shapes
_ESTRIP_ADD = {}
_HSTRIP_DEL = {}
_ESTRIP_DEL = {}
_CONTENT_CACHE = {}  # (lam, nvars) -> dict content-composition -> count


def clear_caches():
    for d in (_PROD_CACHE, _SKEW_CACHE, _HSTRIP_ADD, _ESTRIP_ADD,
              _HSTRIP_DEL, _ESTRIP_DEL, _CONTENT_CACHE):
        d.clear()


def prod_cache_items():
    """Snapshot of the product cache, for persistence."""
    return [(mu, nu, dict(spec)) for (mu, nu), spec in _PROD_CACHE.items()]


def prod_cache_insert(mu, nu, spec):
    _PROD_CACHE[(mu, nu)] = dict(spec)


# ---------------------------------------------------------------------------
# strip enumeration (Pieri moves)

def hstrips_added(lam, m):
    """Shapes obtained from lam by adding a horizontal strip of m cells."""
    key = (lam, m)
    got = _HSTRIP_ADD.get(key)
    if got is not None:
        return got
    out = []
    n = len(lam)

    def rec(row, remaining, acc):
        if remaining == 0:
            shape = tuple(lam[r] + (acc[r] if r < len(acc) else 0)
                          for r in range(n))
            if len(acc) > n and acc[n]:
                shape = shape + (acc[n],)
            out.append(tuple(p for p in shape if p))
            return
        if row > n:
            return
        above = lam[row - 1] if row > 0 else None
        here = lam[row] if row < n else 0
        hi = remaining if above is None else min(remaining, above - here)
        for c in range(hi, -1, -1):
            rec(row + 1, remaining - c, acc + [c])

    rec(0, m, [])
    got = tuple(sorted(set(out), key=partition_key))
    _HSTRIP_ADD[key] = got
    return got


def estrips_added(lam, m):
    """Shapes obtained from lam by adding a vertical strip of m cells."""
    key = (lam, m)
    got = _ESTRIP_ADD.get(key)
    if got is not None:
        return got
    n = len(lam)
    padded = list(lam) + [0] * m
    out = set()
    for rows in itertools.combinations(range(n + m), m):
        shape = list(padded)
        for r in rows:
            shape[r] += 1
        if all(a >= b for a, b in zip(shape, shape[1:])):
            out.add(tuple(p for p in shape if p))
    got = tuple(sorted(out, key=partition_key))
    _ESTRIP_ADD[key] = got
    return got


def hstrips_removed(lam, m):
    """Shapes nu inside lam with lam/nu a horizontal strip of m cells."""
    key = (lam, m)
    got = _HSTRIP_DEL.get(key)
    if got is not None:
        return got
    out = []
    n = len(lam)

    def keep(row, remaining, shape):
        if row == n:
            if remaining == 0:
                out.append(tuple(p for p in shape if p))
            return
        below = lam[row + 1] if row + 1 < n else 0
        upper = min(lam[row], shape[-1]) if shape else lam[row]
        # interlacing lam[row] >= kept >= lam[row+1] keeps lam/nu horizontal
        for kept in range(upper, below - 1, -1):
            removed = lam[row] - kept
            if removed > remaining:
                break
            keep(row + 1, remaining - removed, shape + [kept])

    keep(0, m, [])
    got = tuple(sorted(set(out), key=partition_key))
    _HSTRIP_DEL[key] = got
    return got


def estrips_removed(lam, m):
    """Shapes nu inside lam with lam/nu a vertical strip of m cells."""
    key = (lam, m)
    got = _ESTRIP_DEL.get(key)
    if got is not None:
        return got
    n = len(lam)
    out = set()
    for rows in itertools.combinations(range(n), m):
        shape = list(lam)
        for r in rows:
            shape[r] -= 1
        if all(a >= b for a, b in zip(shape, shape[1:])):
            out.add(tuple(p for p in shape if p))
    got = tuple(sorted(out, key=partition_key))
    _ESTRIP_DEL[key] = got
    return got


# ---------------------------------------------------------------------------
# Littlewood-Richardson enumeration

def _prod_spectrum(mu, nu):
    """dict lam -> c^lam_{mu,nu}, by growing mu with ballot horizontal strips."""
    if sum(nu) > sum(mu):
        mu, nu = nu, mu
    key = (mu, nu)
    got = _PROD_CACHE.get(key)
    if got is not None:
        return got
    out = {}
    ell = len(nu)

    def letter(k, shape, prev_prefix):
        # prev_prefix[r] = number of (k-1)-letters in rows 0..r
        m = nu[k]
        rows = len(shape)

        def rec(r, remaining, placed_below_r, acc):
            if remaining == 0:
                finish(acc)
                return
            if r > rows:
                return
            above = shape[r - 1] if r > 0 else None
            here = shape[r] if r < rows else 0
            hi = remaining if above is None else min(remaining, above - here)
            if k > 0:
                # ballot: k-letters in rows 0..r at most (k-1)-letters in rows 0..r-1
                cap = 0
                if r > 0:
                    cap = prev_prefix[min(r - 1, len(prev_prefix) - 1)]
                hi = min(hi, cap - placed_below_r)
            for c in range(hi, -1, -1):
                rec(r + 1, remaining - c, placed_below_r + c, acc + [c])

        def finish(acc):
            shape2 = [shape[r] + (acc[r] if r < len(acc) else 0)
                      for r in range(rows)]
            if len(acc) > rows and acc[rows]:
                shape2.append(acc[rows])
            shape2 = tuple(p for p in shape2 if p)
            if k + 1 == ell:
                out[shape2] = out.get(shape2, 0) + 1
                return
            prefix = []
            run = 0
            for r in range(len(shape2) + 1):
                run += acc[r] if r < len(acc) else 0
                prefix.append(run)
            letter(k + 1, shape2, prefix)

        rec(0, m, 0, [])

    if ell == 0:
        out[mu] = 1
    else:
        letter(0, mu, [])
    _PROD_CACHE[key] = out
    return out


def _skew_spectrum(lam, mu):
    """tuple of (nu, c^lam_{mu,nu}) over all nu, via ballot fillings of lam/mu."""
    key = (lam, mu)
    got = _SKEW_CACHE.get(key)
    if got is not None:
        return got
    if not contains(lam, mu):
        _SKEW_CACHE[key] = ()
        return ()
    if lam == mu:
        got = (((), 1),)
        _SKEW_CACHE[key] = got
        return got
    # cells in reverse reading order: rows top to bottom, columns right to left
    cells = []
    mup = list(mu) + [0] * (len(lam) - len(mu))
    for r in range(len(lam)):
        for c in range(lam[r] - 1, mup[r] - 1, -1):
            cells.append((r, c))
    out = {}
    values = {}
    counts = {}

    def fill(i):
        if i == len(cells):
            content = []
            v = 1
            while counts.get(v):
                content.append(counts[v])
                v += 1
            nu = tuple(content)
            out[nu] = out.get(nu, 0) + 1
            return
        r, c = cells[i]
        right = values.get((r, c + 1))
        hi = r + 1 if right is None else min(r + 1, right)
        above = values.get((r - 1, c)) if r > 0 and c >= mup[r - 1] else None
        lo = (above + 1) if above is not None else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts.get(v - 1, 0) <= counts.get(v, 0):
                continue
            values[(r, c)] = v
            counts[v] = counts.get(v, 0) + 1
            fill(i + 1)
            counts[v] -= 1
            del values[(r, c)]

    fill(0)
    got = tuple(sorted(out.items(), key=lambda kv: partition_key(kv[0])))
    _SKEW_CACHE[key] = got
    return got


def lr_coefficient(lam, mu, nu):
    """The Littlewood-Richardson coefficient c^lam_{mu,nu}."""
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _prod_spectrum(mu, nu).get(lam, 0)


# ---------------------------------------------------------------------------
# symmetric functions in the Schur basis

class SymFunc:
    """Finite sparse map partition -> LaurentPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                if isinstance(c, int):
                    c = LaurentPoly.const(c)
                if c:
                    self.terms[lam] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): P_ONE})

    @classmethod
    def schur(cls, lam, coeff=P_ONE):
        return cls({as_partition(lam): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): LaurentPoly.const(other)} if other else {})
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(self.freeze())

    def freeze(self):
        """Canonical hashable form, usable as a cache key."""
        return tuple((lam, tuple(sorted(self.terms[lam].c.items())))
                     for lam in sorted(self.terms, key=partition_key))

    def coeff(self, lam):
        return self.terms.get(as_partition(lam), LaurentPoly.zero())

    def degree(self):
        """Max partition size with a nonzero term; -1 when zero."""
        return max((sum(l) for l in self.terms), default=-1)

    def support(self):
        return sorted(self.terms, key=partition_key)

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        r = SymFunc.__new__(SymFunc)
        r.terms = out
        return r

    def __neg__(self):
        r = SymFunc.__new__(SymFunc)
        r.terms = {lam: -c for lam, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, poly):
        """Multiply every coefficient by a LaurentPoly or int."""
        if isinstance(poly, int):
            poly = LaurentPoly.const(poly)
        if not poly:
            return SymFunc()
        r = SymFunc.__new__(SymFunc)
        r.terms = {lam: c * poly for lam, c in self.terms.items()}
        return r

    def map_coeffs(self, fn):
        out = {}
        for lam, c in self.terms.items():
            v = fn(c)
            if v:
                out[lam] = v
        r = SymFunc.__new__(SymFunc)
        r.terms = out
        return r

    def subs_power(self, k):
        """Apply t -> t**k to every coefficient."""
        return self.map_coeffs(lambda c: c.subs_power(k))

    def eval_t(self, v):
        """Evaluate t at an integer; returns dict partition -> int."""
        out = {}
        for lam, c in self.terms.items():
            n = c.eval_int(v)
            if n:
                out[lam] = n
        return out

    def transposed(self):
        """Index transpose on every term (the classical degree involution)."""
        from .core import conjugate
        r = SymFunc.__new__(SymFunc)
        r.terms = {conjugate(lam): c for lam, c in self.terms.items()}
        return r

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in self.support():
            c = self.terms[lam]
            name = "s%r" % (list(lam),)
            if c == P_ONE:
                bits.append(name)
            else:
                bits.append("(%s)*%s" % (c, name))
        return " + ".join(bits)

    __repr__ = __str__


class Expansion:
    """A SymFunc whose terms are read as coefficients of the basis of a kind."""

    __slots__ = ("kind", "func")

    def __init__(self, kind, func):
        self.kind = canonical_kind(kind)
        self.func = func

    def __eq__(self, other):
        return (isinstance(other, Expansion) and self.kind == other.kind
                and self.func == other.func)

    def coeff(self, lam):
        return self.func.coeff(lam)

    def is_zero(self):
        return self.func.is_zero()

    def __repr__(self):
        return "Expansion(%s, %s)" % (self.kind, self.func)


# ---------------------------------------------------------------------------
# products and skews

def _accumulate(acc, lam, c):
    s = acc.get(lam)
    s = c if s is None else s + c
    if s:
        acc[lam] = s
    else:
        acc.pop(lam, None)


def multiply(p, q):
    """Product in the Schur basis via Littlewood-Richardson coefficients."""
    out = SymFunc()
    acc = out.terms
    for mu, c1 in p.terms.items():
        for nu, c2 in q.terms.items():
            c = c1 * c2
            for lam, k in _prod_spectrum(mu, nu).items():
                _accumulate(acc, lam, c * k)
    return out


def multiply_h(p, m):
    """Multiply by the one-row Schur function of degree m (zero for m < 0)."""
    if m < 0:
        return SymFunc()
    if m == 0:
        return p
    out = SymFunc()
    acc = out.terms
    for lam, c in p.terms.items():
        for shape in hstrips_added(lam, m):
            _accumulate(acc, shape, c)
    return out


def multiply_e(p, m):
    """Multiply by the one-column Schur function of degree m (zero for m < 0)."""
    if m < 0:
        return SymFunc()
    if m == 0:
        return p
    out = SymFunc()
    acc = out.terms
    for lam, c in p.terms.items():
        for shape in estrips_added(lam, m):
            _accumulate(acc, shape, c)
    return out


def skew_by(p, q):
    """Apply the adjoint of multiplication by q to p."""
    out = SymFunc()
    acc = out.terms
    for lam, c1 in p.terms.items():
        for mu, c2 in q.terms.items():
            c = c1 * c2
            for nu, k in _skew_spectrum(lam, mu):
                _accumulate(acc, nu, c * k)
    return out


def skew_h(p, m):
    """Adjoint of multiplication by the one-row function of degree m."""
    if m < 0:
        return SymFunc()
    if m == 0:
        return p
    out = SymFunc()
    acc = out.terms
    for lam, c in p.terms.items():
        if sum(lam) < m:
            continue
        for shape in hstrips_removed(lam, m):
            _accumulate(acc, shape, c)
    return out


def skew_e(p, m):
    """Adjoint of multiplication by the one-column function of degree m."""
    if m < 0:
        return SymFunc()
    if m == 0:
        return p
    out = SymFunc()
    acc = out.terms
    for lam, c in p.terms.items():
        if len(lam) < m:
            continue
        for shape in estrips_removed(lam, m):
            _accumulate(acc, shape, c)
    return out


def inner_product(p, q):
    """Orthonormal-Schur pairing of two SymFuncs."""
    total = LaurentPoly.zero()
    small, big = (p, q) if len(p.terms) <= len(q.terms) else (q, p)
    for lam, c in small.terms.items():
        d = big.terms.get(lam)
        if d is not None:
            total = total + c * d
    return total


# ---------------------------------------------------------------------------
# straightening

def straighten(nu):
    """Normalize an integer index vector for the Schur family.

    Returns None when the indexed function vanishes, otherwise (sign, lam)
    with sign in {1, -1} and lam a partition.
    """
    n = len(nu)
    v = [nu[i] + (n - 1 - i) for i in range(n)]
    if len(set(v)) != n:
        return None
    if min(v, default=0) < 0:
        return None
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] < v[j]:
                inversions += 1
    sign = -1 if inversions % 2 else 1
    w = sorted(v, reverse=True)
    lam = tuple(w[i] - (n - 1 - i) for i in range(n))
    return sign, as_partition(lam)


def schur_of_vector(nu):
    """SymFunc of an arbitrary integer index vector, straightened."""
    st = straighten(tuple(nu))
    if st is None:
        return SymFunc()
    sign, lam = st
    return SymFunc.schur(lam, LaurentPoly.const(sign))


# ---------------------------------------------------------------------------
# evaluation on finite alphabets of monomials

def ssyt_contents(lam, nvars):
    """dict content-composition -> number of semistandard fillings of lam."""
    key = (lam, nvars)
    got = _CONTENT_CACHE.get(key)
    if got is not None:
        return got
    out = {}
    if len(lam) > nvars:
        _CONTENT_CACHE[key] = out
        return out

    total = sum(lam)

    def rec(letter, shape, placed, content):
        if letter == nvars:
            if placed == total:
                out[content] = out.get(content, 0) + 1
            return
        if total - placed > (nvars - letter) * (lam[0] if lam else 0):
            return
        for target in _shapes_between(shape, lam):
            rec(letter + 1, target, placed + sum(target) - sum(shape),
                content + (sum(target) - sum(shape),))

    rec(0, (), 0, ())
    _CONTENT_CACHE[key] = out
    return out


def _shapes_between(shape, lam):
    """Shapes target with shape <= target <= lam and target/shape horizontal."""
    n = len(lam)
    sh = list(shape) + [0] * (n - len(shape))
    results = []

    def rec(r, acc):
        if r == n:
            results.append(tuple(p for p in acc if p))
            return
        hi = lam[r]
        if r > 0:
            hi = min(hi, sh[r - 1])          # horizontal strip
            hi = min(hi, acc[-1])            # partition shape
        for v in range(sh[r], hi + 1):
            rec(r + 1, acc + [v])

    rec(0, [])
    return results


def evaluate(p, alphabet, nvars):
    """Evaluate a SymFunc on a finite alphabet of Laurent monomials.

    alphabet is a sequence of integer exponent vectors of length nvars; each
    Schur term is expanded over semistandard fillings.  Returns a dict from
    exponent vector to LaurentPoly.
    """
    alphabet = [tuple(a) for a in alphabet]
    out = {}
    m = len(alphabet)
    for lam, c in p.terms.items():
        for content, cnt in ssyt_contents(lam, m).items():
            exp = [0] * nvars
            for i, mult in enumerate(content):
                if mult:
                    mono = alphabet[i]
                    for k in range(nvars):
                        exp[k] += mult * mono[k]
            _accumulate(out, tuple(exp), c * cnt)
    return out
