"""Row creation operators for the four bases, their determinantal formulas,
the t-deformed row and parabolic operators, and the deformed products they
generate together with their coefficient polynomials.

Single-row operators expand the defining generating functions into finite
sums of (multiply by one-row) o (skew by one-row/one-column) steps.  Parabolic
operators compose single rows and correct with the pairwise index shifts that
come from commuting deformed rows past each other; the correction bookkeeping
runs as a small dynamic program over pending index shifts.  A brute-force
multivariate extraction oracle is provided for cross-checking.
"""

from __future__ import annotations

import itertools

from .core import LaurentPoly, P_ONE, as_partition, canonical_kind
from .schur import (SymFunc, multiply, multiply_h, skew_e, skew_h,
                    straighten)
from .series import diamond_unit, to_diamond


class InvariantViolation(Exception):
    """An internal exactness invariant failed (e.g. an inexact halving)."""


# ---------------------------------------------------------------------------
# undeformed row operators

def bernstein_row(r, p):
    """Add an indexed row in the Schur basis: sum of signed Pieri moves."""
    out = SymFunc()
    i = 0
    while True:
        f = skew_e(p, i)
        if f.is_zero():
            break
        if r + i >= 0:
            out = out + multiply_h(f, r + i).scaled((-1) ** i)
        i += 1
    return out


def bernstein_create(nu):
    """Compose row operators along an integer vector, applied to 1."""
    f = SymFunc.one()
    for r in reversed(tuple(nu)):
        f = bernstein_row(r, f)
        if not f:
            break
    return f


def bernstein_diamond_row(kind, r, p):
    """Row creation operator for the basis of a kind, in the Schur basis."""
    kind = canonical_kind(kind)
    if kind == "none":
        return bernstein_row(r, p)
    if kind == "box":
        return _bernstein_vdom_row(r, p) - _bernstein_vdom_row(r - 1, p)
    if kind == "hdom":
        return _bernstein_vdom_row(r, p) - _bernstein_vdom_row(r - 2, p)
    return _bernstein_vdom_row(r, p)


def _bernstein_vdom_row(r, p):
    out = SymFunc()
    j = 0
    while True:
        fj = skew_e(p, j)
        if fj.is_zero():
            break
        i = 0
        while True:
            fij = skew_e(fj, i)
            if fij.is_zero():
                break
            m = r + i - j
            if m >= 0:
                out = out + multiply_h(fij, m).scaled((-1) ** (i + j))
            i += 1
        j += 1
    return out


def bernstein_diamond_create(kind, nu):
    """Compose kind row operators along an integer vector, applied to 1."""
    f = SymFunc.one()
    for r in reversed(tuple(nu)):
        f = bernstein_diamond_row(kind, r, f)
        if not f:
            break
    return f


# ---------------------------------------------------------------------------
# determinants

def _h(m):
    if m < 0:
        return SymFunc()
    return SymFunc.schur((m,) if m else ())


def _onerow_entry(kind, r):
    """One-row basis element of a kind, expanded in the Schur basis."""
    if kind == "vdom":
        return _h(r)
    if kind == "box":
        return _h(r) - _h(r - 1)
    if kind == "hdom":
        return _h(r) - _h(r - 2)
    raise ValueError(kind)


def _tilde_entry(kind, r):
    """One-row seeds for the second determinant family."""
    if r < 0:
        return SymFunc()
    if kind == "hdom":
        return _h(r)
    out = SymFunc()
    if kind == "vdom":
        for k in range(0, r + 1, 2):
            out = out + _h(r - k)
        return out
    for k in range(r + 1):
        out = out + _h(r - k).scaled((-1) ** k)
    return out


def _bar_entry(kind, r):
    """One-row seeds for the third determinant family."""
    if r < 0:
        return SymFunc()
    if kind == "box":
        return _h(r)
    if kind == "hdom":
        return _h(r) + _h(r - 1)
    out = SymFunc()
    for k in range(r + 1):
        out = out + _h(r - k)
    return out


def sym_det(matrix):
    """Determinant of a square matrix of SymFuncs (column-subset expansion)."""
    n = len(matrix)
    if n == 0:
        return SymFunc.one()
    memo = {}

    def minor(row, colmask):
        if row == n:
            return SymFunc.one()
        key = colmask
        got = memo.get(key)
        if got is not None:
            return got
        acc = SymFunc()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if colmask & bit:
                entry = matrix[row][j]
                if entry:
                    acc = acc + multiply(entry, minor(row + 1, colmask & ~bit)).scaled(sign)
                sign = -sign
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def jacobi_trudi(lam):
    """Determinant of one-row functions equal to the Schur function of lam."""
    lam = as_partition(lam)
    n = len(lam)
    matrix = [[_h(lam[i] - (i + 1) + (j + 1)) for j in range(n)]
              for i in range(n)]
    return sym_det(matrix)


DET_FAMILIES = ("D", "C", "B")


def det_diamond(kind, lam, family):
    """One of the three determinantal formulas for the basis of a kind.

    family 'D' halves a determinant of sums of one-row basis elements;
    families 'C' and 'B' use difference patterns with telescoped one-row
    seeds.  The result is returned expanded in the basis of the kind and
    must equal the single basis element at lam.
    """
    kind = canonical_kind(kind)
    if kind == "none":
        raise ValueError("determinant families require a non-Schur kind")
    lam = as_partition(lam)
    f = det_diamond_schur(kind, lam, family)
    return to_diamond(f, kind)


def det_diamond_schur(kind, lam, family):
    """Same determinant, left in the Schur basis."""
    kind = canonical_kind(kind)
    lam = as_partition(lam)
    n = len(lam)
    if n == 0:
        return SymFunc.one()
    if family == "D":
        matrix = [[_onerow_entry(kind, lam[i - 1] - i + j)
                   + _onerow_entry(kind, lam[i - 1] - i - j + 2)
                   for j in range(1, n + 1)] for i in range(1, n + 1)]
        det = sym_det(matrix)
        return _halve_exact(det)
    if family == "C":
        matrix = [[_tilde_entry(kind, lam[i - 1] - i + j)
                   - _tilde_entry(kind, lam[i - 1] - i - j)
                   for j in range(1, n + 1)] for i in range(1, n + 1)]
        return sym_det(matrix)
    if family == "B":
        matrix = [[_bar_entry(kind, lam[i - 1] - i + j)
                   - _bar_entry(kind, lam[i - 1] - i - j + 1)
                   for j in range(1, n + 1)] for i in range(1, n + 1)]
        return sym_det(matrix)
    raise ValueError("unknown determinant family: %r" % (family,))


def _halve_exact(f):
    out = {}
    for lam, poly in f.terms.items():
        half = {}
        for e, v in poly.c.items():
            if v % 2:
                raise InvariantViolation("inexact halving at %r" % (lam,))
            half[e] = v // 2
        out[lam] = LaurentPoly(half)
    return SymFunc(out)


# ---------------------------------------------------------------------------
# t-deformed single rows

def tilde_b_row(r, p, texp=1):
    """Deformed row operator for the Schur basis; texp=2 substitutes t^2."""
    out = SymFunc()
    b = 0
    while True:
        fb = skew_e(p, b)
        if fb.is_zero():
            break
        a = 0
        while True:
            fab = skew_h(fb, a)
            if fab.is_zero():
                break
            m = r + a + b
            if m >= 0:
                w = LaurentPoly.t(a * texp, (-1) ** b)
                out = out + multiply_h(fab, m).scaled(w)
            a += 1
        b += 1
    return out


def tilde_b_diamond_row(kind, r, p, texp=1):
    """Deformed row operator for the basis of a kind."""
    kind = canonical_kind(kind)
    if kind == "none":
        return tilde_b_row(r, p, texp)
    if kind == "box":
        return _tilde_vdom_row(r, p, texp) - _tilde_vdom_row(r - 1, p, texp)
    if kind == "hdom":
        return _tilde_vdom_row(r, p, texp) - _tilde_vdom_row(r - 2, p, texp)
    return _tilde_vdom_row(r, p, texp)


def _tilde_vdom_row(r, p, texp):
    if p.is_zero() or r < -p.degree():
        return SymFunc()
    out = SymFunc()
    d = 0
    while True:
        fd = skew_e(p, d)
        if fd.is_zero():
            break
        c = 0
        while True:
            fcd = skew_h(fd, c)
            if fcd.is_zero():
                break
            b = 0
            while True:
                fbcd = skew_e(fcd, b)
                if fbcd.is_zero():
                    break
                a = 0
                while True:
                    fabcd = skew_h(fbcd, a)
                    if fabcd.is_zero():
                        break
                    m = r - a - b + c + d
                    if m >= 0:
                        w = LaurentPoly.t((a + c) * texp, (-1) ** (b + d))
                        out = out + multiply_h(fabcd, m).scaled(w)
                    a += 1
                b += 1
            c += 1
        d += 1
    return out


# ---------------------------------------------------------------------------
# parabolic operators

_LEVEL_CACHE = {}   # (p, texp, diamond?) -> dict ds -> ((drop, poly), ...)


def _level_weights(p, texp, diamond):
    """Joint pair-correction weights for one parabolic position.

    Maps each vector of pending index shifts for the p earlier positions to
    the list of (index drop at the current position, weight).
    """
    key = (p, texp, diamond)
    got = _LEVEL_CACHE.get(key)
    if got is not None:
        return got
    if diamond:
        options = ((0, 0, P_ONE),
                   (1, 1, LaurentPoly.t(texp, -1)),
                   (-1, 1, LaurentPoly.t(texp, -1)),
                   (0, 2, LaurentPoly.t(2 * texp)))
    else:
        options = ((0, 0, P_ONE),
                   (1, 1, LaurentPoly.t(texp, -1)))
    joint = {((), 0): P_ONE}
    for _ in range(p):
        nxt = {}
        for (ds, drop), w in joint.items():
            for delta, dr, wf in options:
                k = (ds + (delta,), drop + dr)
                cur = nxt.get(k)
                piece = w * wf
                nxt[k] = piece if cur is None else cur + piece
        joint = nxt
    grouped = {}
    for (ds, drop), w in joint.items():
        grouped.setdefault(ds, []).append((drop, w))
    got = {ds: tuple(lst) for ds, lst in grouped.items()}
    _LEVEL_CACHE[key] = got
    return got


def _parabolic_apply(nu, p, texp, kind):
    """Coefficient extraction for a deformed parabolic operator.

    Processes index positions right to left; the state maps vectors of
    pending index shifts for the unprocessed positions to accumulated
    operands.
    """
    nu = tuple(int(x) for x in nu)
    n = len(nu)
    if n == 0:
        return p
    kind = canonical_kind(kind)
    diamond = kind != "none"

    def row(r, f):
        if diamond:
            return tilde_b_diamond_row(kind, r, f, texp)
        return tilde_b_row(r, f, texp)

    if n == 1:
        return row(nu[0], p)
    states = {(0,) * n: p}
    for pos in range(n - 1, -1, -1):
        grouped = _level_weights(pos, texp, diamond)
        new_states = {}
        for pending, f in states.items():
            if f.is_zero():
                continue
            base = nu[pos] + pending[pos]
            rowcache = {}
            for ds, drops in grouped.items():
                acc = None
                for drop, w in drops:
                    g = rowcache.get(drop)
                    if g is None:
                        g = row(base - drop, f)
                        rowcache[drop] = g
                    if g.is_zero():
                        continue
                    piece = g.scaled(w)
                    acc = piece if acc is None else acc + piece
                if acc is None or acc.is_zero():
                    continue
                newpending = tuple(pending[i] + ds[i] for i in range(pos))
                cur = new_states.get(newpending)
                new_states[newpending] = acc if cur is None else cur + acc
        states = new_states
        if not states:
            return SymFunc()
    total = SymFunc()
    for f in states.values():
        total = total + f
    return total


def tilde_b_parabolic(nu, p, texp=1):
    """Deformed parabolic operator for the Schur basis."""
    return _parabolic_apply(nu, p, texp, "none")


def tilde_b_diamond_parabolic(kind, nu, p, texp=1):
    """Deformed parabolic operator for the basis of a kind."""
    return _parabolic_apply(nu, p, texp, kind)


# ---------------------------------------------------------------------------
# brute-force extraction oracle

def direct_extraction_oracle(nu, p, kind="none", texp=1):
    """Coefficient extraction from the full multivariate generating function.

    Expands the staircase determinant and, for the vertical-domino kind, the
    signed pair product, then sums over all per-variable skew index tuples.
    Exponential in the number of variables; guarded for cross-checks only.
    """
    nu = tuple(int(x) for x in nu)
    kind = canonical_kind(kind)
    n = len(nu)
    if kind == "none":
        if n > 5:
            raise ValueError("oracle limited to 5 variables")
        return _oracle_type_a(nu, p, texp)
    if n > 4:
        raise ValueError("diamond oracle limited to 4 variables")
    if kind == "vdom":
        return _oracle_vdom(nu, p, texp)
    if kind == "box":
        out = SymFunc()
        for shift in itertools.product((0, 1), repeat=n):
            sub = tuple(nu[i] - shift[i] for i in range(n))
            out = out + _oracle_vdom(sub, p, texp).scaled((-1) ** sum(shift))
        return out
    out = SymFunc()
    for shift in itertools.product((0, 1), repeat=n):
        sub = tuple(nu[i] - 2 * shift[i] for i in range(n))
        out = out + _oracle_vdom(sub, p, texp).scaled((-1) ** sum(shift))
    return out


def _nonneg_tuples(length, total_max):
    if length == 0:
        yield ()
        return
    for head in range(total_max + 1):
        for tail in _nonneg_tuples(length - 1, total_max - head):
            yield (head,) + tail


def _oracle_type_a(nu, p, texp):
    n = len(nu)
    deg = p.degree()
    if deg < 0:
        return SymFunc()
    out = SymFunc()
    for w in itertools.permutations(range(1, n + 1)):
        sign = _perm_sign(w)
        for a in _nonneg_tuples(n, deg):
            fa = p
            for ai in a:
                fa = skew_h(fa, ai)
            if fa.is_zero():
                continue
            rest = deg - sum(a)
            for b in _nonneg_tuples(n, rest):
                fab = fa
                for bi in b:
                    fab = skew_e(fab, bi)
                if fab.is_zero():
                    continue
                ms = [nu[i] + (w[i] - (i + 1)) + a[i] + b[i] for i in range(n)]
                if any(m < 0 for m in ms):
                    continue
                g = fab
                for m in ms:
                    g = multiply_h(g, m)
                weight = LaurentPoly.t(sum(a) * texp,
                                       sign * (-1) ** sum(b))
                out = out + g.scaled(weight)
    return out


def _oracle_vdom(nu, p, texp):
    n = len(nu)
    deg = p.degree()
    if deg < 0:
        return SymFunc()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = SymFunc()
    for w in itertools.permutations(range(1, n + 1)):
        wsign = _perm_sign(w)
        for chosen in itertools.chain.from_iterable(
                itertools.combinations(pairs, k) for k in range(len(pairs) + 1)):
            pair_shift = [0] * n
            for i, j in chosen:
                pair_shift[i] += 1
                pair_shift[j] += 1
            psign = (-1) ** len(chosen)
            for quad in _nonneg_tuples(4 * n, deg):
                a = quad[0:n]          # z-negative, t-weighted row skews
                b = quad[n:2 * n]      # z-negative column skews
                e = quad[2 * n:3 * n]  # z-positive, t-weighted row skews
                f = quad[3 * n:]       # z-positive column skews
                g = p
                for i in range(n):
                    if a[i]:
                        g = skew_h(g, a[i])
                    if b[i]:
                        g = skew_e(g, b[i])
                    if e[i]:
                        g = skew_h(g, e[i])
                    if f[i]:
                        g = skew_e(g, f[i])
                    if g.is_zero():
                        break
                if g.is_zero():
                    continue
                ok = True
                ms = []
                for i in range(n):
                    m = (nu[i] - (i + 1 - w[i]) - pair_shift[i]
                         - (e[i] + f[i]) + (a[i] + b[i]))
                    if m < 0:
                        ok = False
                        break
                    ms.append(m)
                if not ok:
                    continue
                for m in ms:
                    g = multiply_h(g, m)
                weight = LaurentPoly.t((sum(a) + sum(e)) * texp,
                                       wsign * psign
                                       * (-1) ** (sum(b) + sum(f)))
                out = out + g.scaled(weight)
    return out


def _perm_sign(w):
    inv = 0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                inv += 1
    return -1 if inv % 2 else 1


# ---------------------------------------------------------------------------
# deformed products over sequences of factors

_BB_CACHE = {}   # (kind, texp, factors-suffix) -> SymFunc


def clear_bb_cache():
    _BB_CACHE.clear()


def bb_r(factors, texp=1):
    """Deformed product over a sequence of index vectors, Schur basis."""
    return _bb("none", tuple(tuple(f) for f in factors), texp)


def bb_diamond_r(kind, factors, texp=1):
    """Deformed product over a sequence of index vectors for a kind."""
    return _bb(canonical_kind(kind), tuple(tuple(f) for f in factors), texp)


def _bb(kind, factors, texp):
    if not factors:
        return SymFunc.one()
    key = (kind, texp, factors)
    got = _BB_CACHE.get(key)
    if got is not None:
        return got
    if len(factors) == 1:
        # rightmost factor acts on 1: the result is undeformed
        st = straighten(factors[0])
        if st is None:
            out = SymFunc()
        else:
            sign, lam = st
            base = (SymFunc.schur(lam) if kind == "none"
                    else diamond_unit(lam, kind))
            out = base.scaled(sign)
    else:
        tail = _bb(kind, factors[1:], texp)
        out = _parabolic_apply(factors[0], tail, texp, kind)
    _BB_CACHE[key] = out
    return out


def c_polynomial(lam, factors):
    """Schur coefficient of the type-A deformed product."""
    return bb_r(factors).coeff(lam)


def d_polynomial(kind, lam, factors):
    """Basis coefficient of the deformed product for a kind."""
    kind = canonical_kind(kind)
    f = bb_diamond_r(kind, factors)
    return to_diamond(f, kind).coeff(lam)
