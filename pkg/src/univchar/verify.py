"""Verification suites: every module invariant and acceptance check, runnable
from the command line and reused by the test suite.

Each suite returns a list of (name, passed, detail) triples.  Checks compare
the production algorithms against the independent oracles; exact equality is
required everywhere.
"""

from __future__ import annotations

import itertools
import random

from .core import (LaurentPoly, KINDS, KIND_TRANSPOSE, as_partition,
                   conjugate, is_dominant_seq, member_p_kind, partitions_of,
                   partitions_upto, seq_weight, frobenius, from_frobenius)
from .schur import (Expansion, SymFunc, _prod_spectrum, _skew_spectrum,
                    evaluate, inner_product, lr_coefficient, multiply,
                    skew_by, straighten, schur_of_vector)
from .series import (change_basis, diamond_product, diamond_unit,
                     dual_basis_truncated, from_diamond, newell_littlewood,
                     omega_diamond, series_terms, to_diamond)
from .operators import (bb_diamond_r, bb_r, bernstein_create,
                        bernstein_diamond_create, d_polynomial, det_diamond,
                        det_diamond_schur, direct_extraction_oracle,
                        jacobi_trudi, tilde_b_diamond_parabolic,
                        tilde_b_parabolic, tilde_b_row)
from .kpoly import (duality_check, h_row, h_row_via_expansion,
                    hb_connection, hh_r, ktable_via_recurrence,
                    single_rectangle_table, singlerow_equivalence)
from . import oracles

DIAMOND_KINDS = ("box", "vdom", "hdom")


def _check(results, name, ok, detail=""):
    results.append((name, bool(ok), detail))
    return ok


# ---------------------------------------------------------------------------
# sequence enumeration helpers

def rectangles_of(n):
    """All rectangles with n cells."""
    out = []
    for h in range(1, n + 1):
        if n % h == 0:
            out.append(as_partition((n // h,) * h))
    return out


def rect_sequences(total_max, max_height=None):
    """All ordered sequences of rectangles with total size <= total_max."""
    rect_pool = {n: [r for r in rectangles_of(n)
                     if max_height is None or len(r) <= max_height]
                 for n in range(1, total_max + 1)}

    def rec(budget):
        yield ()
        for n in range(1, budget + 1):
            for r in rect_pool[n]:
                for tail in rec(budget - n):
                    yield (r,) + tail

    return list(rec(total_max))


def partition_sequences(total_max, max_height=None):
    """All ordered sequences of nonempty partitions, total size bounded."""
    pool = {n: [p for p in partitions_of(n)
                if max_height is None or len(p) <= max_height]
            for n in range(1, total_max + 1)}

    def rec(budget):
        yield ()
        for n in range(1, budget + 1):
            for p in pool[n]:
                for tail in rec(budget - n):
                    yield (p,) + tail

    return list(rec(total_max))


def dominant_rect_sequences(total_max):
    return [r for r in rect_sequences(total_max) if r and is_dominant_seq(r)]


# ---------------------------------------------------------------------------
# suite: lr

def suite_lr(max_degree=12):
    results = []
    rng = random.Random(20240601)

    # symmetry and transpose symmetry through skew spectra
    bad = []
    for n in range(max_degree + 1):
        for lam in partitions_of(n):
            lamt = conjugate(lam)
            seen = {}
            for m in range(n + 1):
                for mu in partitions_of(m):
                    spec = dict(_skew_spectrum(lam, mu))
                    for nu, c in spec.items():
                        seen[(mu, nu)] = c
                    tspec = dict(_skew_spectrum(lamt, conjugate(mu)))
                    for nu, c in spec.items():
                        if tspec.get(conjugate(nu), 0) != c:
                            bad.append((lam, mu, nu))
            for (mu, nu), c in seen.items():
                if seen.get((nu, mu), 0) != c:
                    bad.append((lam, mu, nu))
    _check(results, "lr.symmetry_transpose(|lam|<=%d)" % max_degree,
           not bad, "%d mismatches" % len(bad))

    # monomial oracle in 6 variables, all |mu|,|nu| <= 6
    bound = min(6, max_degree)
    shapes = partitions_upto(bound)
    bad = 0
    for i, mu in enumerate(shapes):
        for nu in shapes[i:]:
            mine = _prod_spectrum(mu, nu)
            want = oracles.lr_product_oracle(mu, nu, 6)
            got = {lam: c for lam, c in mine.items() if len(lam) <= 6}
            if got != want:
                bad += 1
    _check(results, "lr.monomial_oracle(<=%d, 6 vars)" % bound, bad == 0,
           "%d pairs disagree" % bad)

    # long shapes covered through transpose symmetry of the product tables
    bad = 0
    for i, mu in enumerate(shapes):
        for nu in shapes[i:]:
            mine = _prod_spectrum(mu, nu)
            other = _prod_spectrum(conjugate(mu), conjugate(nu))
            if {conjugate(l): c for l, c in mine.items()} != dict(other):
                bad += 1
    _check(results, "lr.transpose_completion(<=%d)" % bound, bad == 0,
           "%d pairs disagree" % bad)

    # signed one-row-chain oracle on random triples
    allp = partitions_upto(bound)
    bad = 0
    for _ in range(200):
        mu = rng.choice(allp)
        nu = rng.choice(allp)
        lams = list(partitions_of(sum(mu) + sum(nu)))
        lam = rng.choice(lams)
        if lr_coefficient(lam, mu, nu) != \
                oracles.lr_coefficient_via_chains(lam, mu, nu):
            bad += 1
    _check(results, "lr.chain_oracle(200 random)", bad == 0,
           "%d mismatches" % bad)

    # associativity on random triples
    bad = 0
    small = partitions_upto(5)
    for _ in range(200):
        while True:
            mu, nu, rho = (rng.choice(small) for _ in range(3))
            if sum(mu) + sum(nu) + sum(rho) <= 14:
                break
        a = multiply(multiply(SymFunc.schur(mu), SymFunc.schur(nu)),
                     SymFunc.schur(rho))
        b = multiply(SymFunc.schur(mu),
                     multiply(SymFunc.schur(nu), SymFunc.schur(rho)))
        if a != b:
            bad += 1
    _check(results, "lr.associativity(200 random)", bad == 0,
           "%d mismatches" % bad)

    # adjointness of skewing
    bad = 0
    for lam in partitions_upto(min(10, max_degree)):
        for mu in partitions_upto(5):
            if sum(mu) > sum(lam):
                continue
            skew = skew_by(SymFunc.schur(lam), SymFunc.schur(mu))
            for nu in partitions_of(sum(lam) - sum(mu)):
                lhs = skew.coeff(nu)
                rhs = multiply(SymFunc.schur(mu),
                               SymFunc.schur(nu)).coeff(lam)
                if lhs != rhs:
                    bad += 1
    _check(results, "lr.adjointness", bad == 0, "%d mismatches" % bad)

    # straightening of padded partitions
    bad = 0
    for lam in partitions_upto(8):
        st = straighten(lam + (0,) * 2)
        if st != (1, lam):
            bad += 1
    _check(results, "lr.straighten_padded", bad == 0, "%d mismatches" % bad)
    return results


# ---------------------------------------------------------------------------
# suite: bases

def suite_bases(max_degree=8):
    results = []
    rng = random.Random(20240602)

    # series shapes and signs against polynomial expansion
    d = min(8, max_degree)
    ok_all = True
    for kind in DIAMOND_KINDS:
        for sign in ("+", "-"):
            brute = oracles.brute_series_schur(kind, sign, d, d)
            mine = {}
            for lam, poly in series_terms(kind, sign, 1, d):
                mine[lam] = poly.c.get(0, 0)
            if brute != mine:
                ok_all = False
    _check(results, "bases.series_polynomial_oracle(deg<=%d)" % d, ok_all)

    # golden expansions of the three bases at (4,3,3)
    gold_hd = {(4, 3, 3): 1, (4, 3, 1): -1, (3, 3, 2): -1, (4, 2): 1,
               (3, 3): 1, (3, 2, 1): 1, (4,): -1, (3, 1): -1, (2, 2): -1,
               (2,): 1}
    gold_vd = {(4, 3, 3): 1, (4, 2, 2): -1, (3, 3, 2): -1, (3, 2, 1): 1,
               (2, 2, 2): 1, (2, 1, 1): -1}
    gold_box = {(4, 3, 3): 1, (4, 3, 2): -1, (3, 3, 3): -1, (4, 2, 1): 1,
                (3, 3, 1): 1, (3, 2, 2): 1, (4, 1, 1): -1, (3, 2, 1): -1,
                (3, 2): -1, (2, 2, 1): -1, (3, 1): 1, (2, 2): 1,
                (2, 1, 1): 1, (2,): -1, (1, 1): -1, (1,): 1}
    for kind, gold in (("hdom", gold_hd), ("vdom", gold_vd),
                       ("box", gold_box)):
        f = diamond_unit((4, 3, 3), kind)
        got = {lam: c.c.get(0, 0) for lam, c in f.terms.items()}
        _check(results, "bases.golden_433_%s" % kind, got == gold)

    # inverse property on single terms
    bad = 0
    for kind in KINDS:
        for lam in partitions_upto(min(10, max_degree + 2)):
            e = Expansion(kind, SymFunc.schur(lam))
            back = to_diamond(from_diamond(e), kind)
            if back.func != e.func:
                bad += 1
    _check(results, "bases.inverse_roundtrip", bad == 0, "%d bad" % bad)

    # basis change is multiplicative on the three deformed kinds
    bad = 0
    small = partitions_upto(4)
    for _ in range(40):
        k1, k2 = rng.choice(DIAMOND_KINDS), rng.choice(DIAMOND_KINDS)
        mu, nu = rng.choice(small), rng.choice(small)
        e1 = Expansion(k1, SymFunc.schur(mu))
        e2 = Expansion(k1, SymFunc.schur(nu))
        lhs = change_basis(diamond_product(e1, e2), k2)
        rhs = diamond_product(change_basis(e1, k2), change_basis(e2, k2))
        if lhs.func != rhs.func:
            bad += 1
    _check(results, "bases.change_basis_multiplicative", bad == 0)

    # explicit small change-of-basis value
    got = change_basis(Expansion("vdom", SymFunc.schur((1, 1))), "box")
    want = SymFunc({(1, 1): LaurentPoly.const(1), (1,): LaurentPoly.const(1)})
    _check(results, "bases.change_vd_to_box_11", got.func == want)

    # Newell-Littlewood: symmetry and transpose invariance
    bad = 0
    triples = 0
    lim = min(14, max_degree + 6)
    for a in range(0, lim + 1):
        for mu in partitions_of(a):
            for b in range(a, lim + 1 - a):
                for nu in partitions_of(b):
                    for c in range(b, lim + 1 - a - b):
                        for lam in partitions_of(c):
                            triples += 1
                            d0 = newell_littlewood(lam, mu, nu)
                            if d0 != newell_littlewood(mu, lam, nu):
                                bad += 1
                            elif d0 != newell_littlewood(nu, mu, lam):
                                bad += 1
                            elif d0 != newell_littlewood(
                                    conjugate(lam), conjugate(mu),
                                    conjugate(nu)):
                                bad += 1
    _check(results, "bases.nl_symmetry_transpose(total<=%d)" % lim,
           bad == 0, "%d of %d triples" % (bad, triples))

    # structure constants of the three kinds coincide and equal the cubic sum
    bad = 0
    shapes = partitions_upto(min(6, max_degree))
    for i, mu in enumerate(shapes):
        for nu in shapes[i:]:
            ref = None
            for kind in DIAMOND_KINDS:
                e = diamond_product(Expansion(kind, SymFunc.schur(mu)),
                                    Expansion(kind, SymFunc.schur(nu)))
                table = {lam: c for lam, c in e.func.terms.items()}
                if ref is None:
                    ref = table
                elif table != ref:
                    bad += 1
            for lam, c in (ref or {}).items():
                if c != LaurentPoly.const(newell_littlewood(lam, mu, nu)):
                    bad += 1
    _check(results, "bases.structure_constants_independent(<=6)", bad == 0,
           "%d mismatches" % bad)

    # transpose involution is multiplicative and intertwines the kinds
    bad = 0
    for kind in DIAMOND_KINDS + ("none",):
        for lam in partitions_upto(min(8, max_degree)):
            e = Expansion(kind, SymFunc.schur(lam))
            lhs = from_diamond(omega_diamond(e))
            rhs = from_diamond(
                Expansion(KIND_TRANSPOSE[kind], SymFunc.schur(lam))
            ).transposed()
            if lhs != rhs:
                bad += 1
    _check(results, "bases.omega_intertwines", bad == 0, "%d bad" % bad)

    bad = 0
    for _ in range(30):
        kind = rng.choice(DIAMOND_KINDS)
        mu, nu = rng.choice(small), rng.choice(small)
        e1 = Expansion(kind, SymFunc.schur(mu))
        e2 = Expansion(kind, SymFunc.schur(nu))
        lhs = omega_diamond(diamond_product(e1, e2))
        rhs = diamond_product(omega_diamond(e1), omega_diamond(e2))
        if lhs.func != rhs.func:
            bad += 1
    _check(results, "bases.omega_multiplicative", bad == 0)

    # truncated dual bases pair correctly
    bad = 0
    for kind in KINDS:
        for lam in partitions_upto(3):
            dual = dual_basis_truncated(lam, kind, 5)
            for mu in partitions_upto(5):
                want = 1 if mu == lam else 0
                got = inner_product(dual, diamond_unit(mu, kind))
                if got != LaurentPoly.const(want):
                    bad += 1
    _check(results, "bases.dual_pairing", bad == 0, "%d bad" % bad)

    # partition scaffolding invariants
    bad = 0
    for _ in range(1000):
        n = rng.randrange(0, 31)
        lams = list(partitions_of(n))
        lam = rng.choice(lams)
        if conjugate(conjugate(lam)) != lam:
            bad += 1
    _check(results, "bases.conjugate_involution(1000 random)", bad == 0)

    bad = 0
    for lam in partitions_upto(12):
        if from_frobenius(*frobenius(lam)) != lam:
            bad += 1
        if member_p_kind(lam, "vdom") != member_p_kind(conjugate(lam), "hdom"):
            bad += 1
    _check(results, "bases.frobenius_member_roundtrip", bad == 0)

    # Laurent ring axioms, spot checks
    ps = [LaurentPoly({i - 2: rng.randrange(-5, 6) for i in range(5)})
          for _ in range(9)]
    bad = 0
    for p, q, r in zip(ps[0::3], ps[1::3], ps[2::3]):
        if (p * q) * r != p * (q * r) or p * LaurentPoly.const(1) != p:
            bad += 1
        if (p * q).eval_int(1) != p.eval_int(1) * q.eval_int(1):
            bad += 1
        if (p + q).eval_int(1) != p.eval_int(1) + q.eval_int(1):
            bad += 1
    _check(results, "bases.laurent_ring_axioms", bad == 0)
    return results


# ---------------------------------------------------------------------------
# suite: operators

def suite_operators(max_degree=8):
    results = []
    rng = random.Random(20240603)

    # undeformed creation matches straightening, exhaustively to length four
    bad = 0
    for n in (1, 2, 3, 4):
        for nu in itertools.product(range(-2, 6), repeat=n):
            if bernstein_create(nu) != schur_of_vector(nu):
                bad += 1
    _check(results, "operators.create_straighten(n<=4)", bad == 0,
           "%d bad" % bad)

    # kind row operators create the kind bases
    bad = 0
    for kind in DIAMOND_KINDS:
        for lam in partitions_upto(min(8, max_degree)):
            f = bernstein_diamond_create(kind, lam)
            e = to_diamond(f, kind)
            if e.func != SymFunc.schur(lam):
                bad += 1
    _check(results, "operators.diamond_creation(<=%d)" % min(8, max_degree),
           bad == 0, "%d bad" % bad)

    # deformed row examples
    one = SymFunc.one()
    _check(results, "operators.trow_unit",
           tilde_b_row(2, one) == SymFunc.schur((2,)))
    want = SymFunc({(2,): LaurentPoly.t(1), (1, 1): LaurentPoly.const(1)})
    _check(results, "operators.trow_s1",
           tilde_b_row(1, SymFunc.schur((1,))) == want)
    _check(results, "operators.trow_annihilation",
           tilde_b_row(-3, SymFunc.schur((1,))).is_zero())

    # parabolic against the extraction oracle
    bad = total = 0
    operands = [SymFunc.schur(l) for l in partitions_upto(3)]
    for texp in (1, 2):
        for n in (1, 2):
            for nu in itertools.product(range(-2, 5), repeat=n):
                for p in operands:
                    total += 1
                    if tilde_b_parabolic(nu, p, texp) != \
                            direct_extraction_oracle(nu, p, "none", texp):
                        bad += 1
    for texp in (1, 2):
        for _ in range(60):
            nu = tuple(rng.randrange(-2, 5) for _ in range(3))
            p = rng.choice(operands)
            total += 1
            if tilde_b_parabolic(nu, p, texp) != \
                    direct_extraction_oracle(nu, p, "none", texp):
                bad += 1
    _check(results, "operators.parabolic_oracle(%d cases)" % total, bad == 0,
           "%d bad" % bad)

    # kind parabolic against its oracle
    bad = total = 0
    small_ops = [SymFunc.one(), SymFunc.schur((1,)), SymFunc.schur((2,)),
                 SymFunc.schur((1, 1))]
    for kind in DIAMOND_KINDS:
        for nu in itertools.product(range(-1, 4), repeat=2):
            for p in small_ops:
                total += 1
                if tilde_b_diamond_parabolic(kind, nu, p) != \
                        direct_extraction_oracle(nu, p, kind):
                    bad += 1
    for kind in DIAMOND_KINDS:
        for _ in range(8):
            nu = tuple(rng.randrange(-1, 4) for _ in range(3))
            p = rng.choice(small_ops)
            total += 1
            if tilde_b_diamond_parabolic(kind, nu, p, 2) != \
                    direct_extraction_oracle(nu, p, kind, 2):
                bad += 1
    _check(results, "operators.diamond_parabolic_oracle(%d cases)" % total,
           bad == 0, "%d bad" % bad)

    # deformed products: specializations at 0 and 1
    seqs = partition_sequences(min(6, max_degree))
    seqs += [r for r in rect_sequences(min(8, max_degree))
             if r not in set(seqs)]
    bad0 = bad1 = 0
    for rects in seqs:
        flat = tuple(x for r in rects for x in r)
        base = bb_r(rects)
        at0 = SymFunc(base.eval_t(0))
        if at0 != schur_of_vector(flat):
            bad0 += 1
        at1 = SymFunc(base.eval_t(1))
        prod = SymFunc.one()
        for r in rects:
            prod = multiply(prod, SymFunc.schur(r))
        if at1 != prod:
            bad1 += 1
    _check(results, "operators.bb_at0(%d seqs)" % len(seqs), bad0 == 0,
           "%d bad" % bad0)
    _check(results, "operators.bb_at1", bad1 == 0, "%d bad" % bad1)

    # Kostka-Foulkes via the charge statistic
    bad = 0
    for mu in partitions_upto(min(6, max_degree)):
        if not mu:
            continue
        rows = tuple((m,) for m in mu)
        table = bb_r(rows)
        lams = set(table.terms) | set(partitions_of(sum(mu)))
        for lam in lams:
            if table.coeff(lam) != oracles.kostka_foulkes_charge(lam, mu):
                bad += 1
    _check(results, "operators.kostka_foulkes_charge(<=%d)"
           % min(6, max_degree), bad == 0, "%d bad" % bad)

    # single-factor deformed products are undeformed
    bad = 0
    for lam in partitions_upto(5):
        if not lam:
            continue
        if bb_r((lam,)) != SymFunc.schur(lam):
            bad += 1
        got = tilde_b_parabolic(lam, SymFunc.one())
        if got != SymFunc.schur(lam):
            bad += 1
    _check(results, "operators.single_factor_rigid", bad == 0, "%d bad" % bad)
    return results


def suite_operators_diamond(max_degree=7):
    """Deformed kind products: constancy, positivity, specializations.

    Exhaustive over all partition sequences up to the degree bound, plus all
    rectangle sequences one size above it.
    """
    results = []
    bound = min(7, max_degree)
    chosen = [s for s in partition_sequences(bound) if s]
    if max_degree >= 7:
        seen = set(chosen)
        chosen += [s for s in rect_sequences(8)
                   if s and seq_weight(s) == 8 and s not in seen]

    bad_const = bad_spec0 = bad_spec1 = 0
    neg_rows = []
    for rects in chosen:
        ref = None
        for kind in DIAMOND_KINDS:
            f = bb_diamond_r(kind, rects)
            table = to_diamond(f, kind).func
            if ref is None:
                ref = table
            elif table != ref:
                bad_const += 1
            at0 = SymFunc(table.eval_t(0))
            flat = tuple(x for r in rects for x in r)
            st = straighten(flat)
            want0 = SymFunc() if st is None else \
                SymFunc.schur(st[1], LaurentPoly.const(st[0]))
            if at0 != want0:
                bad_spec0 += 1
            at1 = SymFunc(table.eval_t(1))
            prod = SymFunc.one()
            for r in rects:
                prod = multiply(prod, diamond_unit(r, kind))
            if at1 != to_diamond(prod, kind).func:
                bad_spec1 += 1
        if all(len(r) == 1 for r in rects):
            widths = tuple(r[0] for r in rects)
            if tuple(sorted(widths, reverse=True)) == widths:
                for lam, poly in ref.terms.items():
                    if any(v < 0 for v in poly.c.values()):
                        neg_rows.append((rects, lam))
    _check(results, "operators.d_constancy(%d seqs)" % len(chosen),
           bad_const == 0, "%d bad" % bad_const)
    _check(results, "operators.dd_at0", bad_spec0 == 0, "%d bad" % bad_spec0)
    _check(results, "operators.dd_at1", bad_spec1 == 0, "%d bad" % bad_spec1)
    _check(results, "operators.d_row_nonnegativity", not neg_rows,
           "%d negative rows" % len(neg_rows))

    # nonnegativity for single-row sequences up to size 8
    bad = []
    for mu in partitions_upto(8):
        if not mu:
            continue
        rows = tuple((m,) for m in mu)
        table = to_diamond(bb_diamond_r("vdom", rows), "vdom").func
        for lam, poly in table.terms.items():
            if any(v < 0 for v in poly.c.values()):
                bad.append((mu, lam))
    _check(results, "operators.d_rows_nonnegative(<=8)", not bad,
           "%d negative" % len(bad))

    # the worked single-row example
    rows = ((3,), (2,), (1,))
    t = LaurentPoly.t
    want = {
        (3, 2, 1): LaurentPoly.const(1),
        (3, 3): t(1), (4, 1, 1): t(1),
        (4, 2): t(2) + t(1), (5, 1): t(2) + t(3), (6,): t(4),
        (2, 2): t(2) + t(1), (2, 1, 1): t(1),
        (3, 1): t(2) * 2 + t(1) + t(3),
        (4,): t(4) + t(2) + t(3), (1, 1): t(2) + t(3),
        (2,): t(4) + t(2) + t(3), (): t(4),
    }
    ok = True
    for kind in DIAMOND_KINDS:
        table = to_diamond(bb_diamond_r(kind, rows), kind).func
        if dict(table.terms) != want:
            ok = False
    _check(results, "operators.example_321", ok)

    # the negative-coefficient witness
    witness = d_polynomial("hdom", (1, 1), ((3,), (2, 2), (1,)))
    want_w = LaurentPoly({5: 1, 3: 1, 4: -1})
    _check(results, "operators.negative_witness", witness == want_w,
           str(witness))
    return results


# ---------------------------------------------------------------------------
# suite: determinants

def suite_determinants(max_degree=8, max_len=4):
    results = []
    shapes = [l for l in partitions_upto(max_degree) if len(l) <= max_len]

    bad = 0
    for lam in shapes:
        if jacobi_trudi(lam) != SymFunc.schur(lam):
            bad += 1
    _check(results, "determinants.jacobi_trudi(<=%d)" % max_degree, bad == 0,
           "%d bad" % bad)

    bad = 0
    for fam in ("D", "C", "B"):
        for kind in DIAMOND_KINDS:
            for lam in shapes:
                e = det_diamond(kind, lam, fam)
                if e.func != SymFunc.schur(lam):
                    bad += 1
                    continue
                # and the Schur-level value matches the creation operators
                if det_diamond_schur(kind, lam, fam) != \
                        bernstein_diamond_create(kind, lam):
                    bad += 1
    _check(results, "determinants.families_vs_creation", bad == 0,
           "%d bad" % bad)

    ok = True
    for fam in ("D", "C", "B"):
        for kind in DIAMOND_KINDS:
            if det_diamond(kind, (4, 3, 3), fam).func != \
                    SymFunc.schur((4, 3, 3)):
                ok = False
    _check(results, "determinants.example_433", ok)
    return results


# ---------------------------------------------------------------------------
# suite: kpoly

def suite_kpoly(max_degree=7):
    results = []
    rng = random.Random(20240605)

    # operator route equals the recurrence on rectangle sequences, plus
    # non-rectangle partition factors at a smaller bound
    seqs = rect_sequences(min(7, max_degree))
    seen = set(seqs)
    seqs += [q for q in partition_sequences(min(5, max_degree))
             if q not in seen]
    bad = 0
    for rects in seqs:
        for kind in KINDS:
            a = hh_r(kind, rects)
            b = ktable_via_recurrence(kind, rects)
            if not a.same_rows(b):
                bad += 1
    _check(results, "kpoly.operator_vs_recurrence(%d seqs x 4)" % len(seqs),
           bad == 0, "%d bad" % bad)

    # single rectangles within a 3x3 box
    bad = 0
    for h in (1, 2, 3):
        for w in (1, 2, 3):
            rect = (w,) * h
            for kind in KINDS:
                a = single_rectangle_table(kind, rect)
                b = ktable_via_recurrence(kind, (rect,))
                if not a.same_rows(b):
                    bad += 1
    _check(results, "kpoly.single_rectangle_3x3", bad == 0, "%d bad" % bad)

    # specializations at 0 and 1 for tables over partition sequences
    seqs2 = [s for s in partition_sequences(min(6, max_degree)) if s]
    seqs2 += [s for s in rect_sequences(min(8, max_degree + 1))
              if s and s not in set(seqs2)]
    bad0 = bad1 = badsupp = 0
    for rects in seqs2:
        flat = tuple(x for r in rects for x in r)
        st = straighten(flat)
        prod = SymFunc.one()
        for r in rects:
            prod = multiply(prod, SymFunc.schur(r))
        for kind in KINDS:
            table = ktable_via_recurrence(kind, rects)
            rows0 = {lam: poly.eval_int(0)
                     for lam, poly in table.rows.items()}
            rows0 = {l: v for l, v in rows0.items() if v}
            want0 = {} if st is None else {st[1]: st[0]}
            if rows0 != want0:
                bad0 += 1
            at1 = SymFunc({lam: LaurentPoly.const(poly.eval_int(1))
                           for lam, poly in table.rows.items()})
            if from_diamond(Expansion(kind, at1)) != prod:
                bad1 += 1
            if kind == "none":
                w = seq_weight(rects)
                if any(sum(l) != w for l in table.rows):
                    badsupp += 1
    _check(results, "kpoly.at0(%d seqs x 4)" % len(seqs2), bad0 == 0,
           "%d bad" % bad0)
    _check(results, "kpoly.at1", bad1 == 0, "%d bad" % bad1)
    _check(results, "kpoly.schur_kind_degree_support", badsupp == 0)

    # the worked two-factor example block
    t = LaurentPoly.t
    c1 = LaurentPoly.const(1)
    R = ((2, 2), (1,))
    want_tables = {
        "none": {(2, 2, 1): c1, (3, 2): t(2)},
        "vdom": {(2, 2, 1): c1, (3, 2): t(2), (1, 1, 1): t(2),
                 (2, 1): t(2) + t(4), (1,): t(4) + t(6)},
        "hdom": {(2, 2, 1): c1, (3, 2): t(2), (2, 1): t(2) + t(4),
                 (3,): t(4), (1,): t(4) + t(6)},
        "box": {(2, 2, 1): c1, (3, 2): t(2), (2, 1, 1): t(1),
                (2, 2): t(1) + t(3), (3, 1): t(3), (1, 1, 1): t(2),
                (2, 1): (t(2) + t(4)) * 2, (3,): t(4),
                (1, 1): t(3) * 2 + t(5), (2,): t(3) + t(5) * 2,
                (1,): (t(4) + t(6)) * 2, (): t(5) + t(7)},
    }
    ok = True
    for kind, want in want_tables.items():
        table = hh_r(kind, R)
        if table.rows != want:
            ok = False
    _check(results, "kpoly.example_block_22_1", ok)

    # single-row equivalence
    bad = 0
    for mu in partitions_upto(min(6, max_degree)):
        if not mu:
            continue
        for lam in partitions_upto(sum(mu)):
            ok1, lhs, rhs = singlerow_equivalence(lam, mu)
            if not ok1:
                bad += 1
    _check(results, "kpoly.singlerow_equivalence(<=%d)" % min(6, max_degree),
           bad == 0, "%d bad" % bad)

    # the connection between the two deformed families
    ok = True
    details = []
    for kind in DIAMOND_KINDS:
        match, rep, _ = hb_connection(kind, R)
        ok = ok and match
        factor1 = dict()
        for r, terms in rep["factor_terms"]:
            if r == [2, 2]:
                factor1 = terms
        details.append((kind, factor1.get((2, 2)), factor1.get((1, 1)),
                        factor1.get((2, 0))))
    _check(results, "kpoly.hb_connection_example", ok, repr(details))

    bad = 0
    for rects in rect_sequences(5):
        if not rects:
            continue
        for kind in DIAMOND_KINDS:
            match, _, _ = hb_connection(kind, rects)
            if not match:
                bad += 1
    _check(results, "kpoly.hb_connection_sweep(<=5)", bad == 0,
           "%d bad" % bad)

    # row operator: truncation-insensitivity and expansion route,
    # including index vectors with negative entries
    bad = 0
    for _ in range(12):
        lam = rng.choice(partitions_upto(4))
        nu = tuple(rng.randrange(-1, 3) for _ in range(rng.randrange(1, 3)))
        kind = rng.choice(DIAMOND_KINDS)
        p = SymFunc.schur(lam)
        need = p.degree() + sum(x for x in nu if x > 0)
        a = h_row(kind, nu, p, conj_degree=need)
        b = h_row(kind, nu, p, conj_degree=need + 4)
        if a != b:
            bad += 1
        if h_row_via_expansion(kind, nu, p) != a:
            bad += 1
    _check(results, "kpoly.h_row_truncation_and_expansion", bad == 0,
           "%d bad" % bad)

    # positivity observation on dominant rectangle sequences
    neg = []
    for rects in dominant_rect_sequences(min(7, max_degree)):
        for kind in KINDS:
            table = ktable_via_recurrence(kind, rects)
            if table.positivity_report():
                neg.append((kind, rects))
    _check(results, "kpoly.positivity_observation(<=%d)" % min(7, max_degree),
           not neg, "%d negative tables" % len(neg))
    return results


# ---------------------------------------------------------------------------
# suite: duality

def suite_duality(max_degree=6):
    results = []
    bad = 0
    checked = 0
    for rects in dominant_rect_sequences(min(6, max_degree)):
        w = seq_weight(rects)
        for kind in KINDS:
            for n in range(w + 1):
                for lam in partitions_of(n):
                    ok, rep = duality_check(kind, lam, rects)
                    checked += 1
                    if not ok:
                        bad += 1
    _check(results, "duality.transpose(%d checks)" % checked, bad == 0,
           "%d bad" % bad)

    ok, rep = duality_check("vdom", (1,), ((2, 2), (1,)))
    _check(results, "duality.example_vd", ok, repr(rep))
    ok, rep = duality_check("none", (2, 1), ((2,), (1,)))
    _check(results, "duality.example_schur", ok)
    ok, rep = duality_check("box", (), ((1,), (1,)))
    _check(results, "duality.example_smallest", ok)
    return results


# ---------------------------------------------------------------------------
# suite: kernels

def suite_kernels(max_degree=6):
    results = []

    # pairing kernel of the common structure constants, two letters each
    degree = min(6, max_degree)
    lhs = oracles.kernel_triple_expansion(degree)

    def unit(i):
        return tuple(1 if k == i else 0 for k in range(6))

    xs = [unit(0), unit(1)]
    ys = [unit(2), unit(3)]
    zs = [unit(4), unit(5)]
    rhs = {}
    for a in range(degree + 1):
        for lam in partitions_of(a):
            if len(lam) > 2:
                continue
            ex = evaluate(SymFunc.schur(lam), xs, 6)
            for b in range(degree + 1 - a):
                for mu in partitions_of(b):
                    if len(mu) > 2:
                        continue
                    ey = evaluate(SymFunc.schur(mu), ys, 6)
                    for c in range(degree + 1 - a - b):
                        for nu in partitions_of(c):
                            if len(nu) > 2:
                                continue
                            d = newell_littlewood(lam, mu, nu)
                            if not d:
                                continue
                            ez = evaluate(SymFunc.schur(nu), zs, 6)
                            for e1, c1 in ex.items():
                                for e2, c2 in ey.items():
                                    for e3, c3 in ez.items():
                                        key = tuple(e1[k] + e2[k] + e3[k]
                                                    for k in range(6))
                                        v = (c1 * c2 * c3).c.get(0, 0) * d
                                        rhs[key] = rhs.get(key, 0) + v
    rhs = {k: v for k, v in rhs.items() if v}
    lhs = {k: v for k, v in lhs.items() if v}
    _check(results, "kernels.pairing_kernel(deg<=%d)" % degree, lhs == rhs,
           "%d vs %d monomials" % (len(lhs), len(rhs)))

    # character specializations: invariance under letter inversion
    bad = 0
    alphabet = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    for lam in partitions_upto(4):
        f = diamond_unit(lam, "vdom")
        vals = evaluate(f, alphabet, 2)
        for exp, c in vals.items():
            if vals.get((-exp[0], exp[1]), LaurentPoly.zero()) != c:
                bad += 1
            if vals.get((exp[0], -exp[1]), LaurentPoly.zero()) != c:
                bad += 1
    _check(results, "kernels.symplectic_invariance(n=2,<=4)", bad == 0,
           "%d bad" % bad)

    # rank-one symplectic value of the two-cell column
    f = diamond_unit((1, 1), "vdom")
    vals = evaluate(f, [(1,), (-1,)], 1)
    _check(results, "kernels.sp2_column_value", vals == {},
           repr(vals))
    return results


# ---------------------------------------------------------------------------
# driver

SUITES = {
    "lr": suite_lr,
    "bases": suite_bases,
    "operators": lambda d=8: suite_operators(d) + suite_operators_diamond(
        min(d, 7)),
    "determinants": suite_determinants,
    "kpoly": suite_kpoly,
    "duality": suite_duality,
    "kernels": suite_kernels,
}


def run_suite(name, max_degree=None):
    """Run one named suite (or 'all'); returns list of check triples."""
    if name == "all":
        out = []
        for key in ("lr", "bases", "operators", "determinants", "kpoly",
                    "duality", "kernels"):
            out.extend(run_suite(key, max_degree))
        return out
    fn = SUITES.get(name)
    if fn is None:
        raise ValueError("unknown suite %r" % name)
    if max_degree is None:
        return fn()
    return fn(max_degree)
