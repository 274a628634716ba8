import random

from univchar.core import LaurentPoly, conjugate, partitions_of, partitions_upto
from univchar.schur import (Expansion, SymFunc, _prod_spectrum, evaluate,
                            inner_product, lr_coefficient, multiply,
                            multiply_e, multiply_h, schur_of_vector, skew_by,
                            skew_e, skew_h, ssyt_contents, straighten)
from univchar import oracles


def s(*parts):
    return SymFunc.schur(tuple(parts))


def test_pieri_products():
    assert s(1) * s(1) == s(2) + s(1, 1)
    assert multiply_h(s(2), 2) == s(4) + s(3, 1) + s(2, 2)
    assert multiply_e(s(1), 2) == s(2, 1) + s(1, 1, 1)
    assert multiply_h(s(1), 0) == s(1)
    assert multiply_h(s(1), -1).is_zero()


def test_product_example():
    got = s(2, 1) * s(2, 1)
    want = (s(4, 2) + s(4, 1, 1) + s(3, 3) + s(3, 2, 1).scaled(2)
            + s(3, 1, 1, 1) + s(2, 2, 2) + s(2, 2, 1, 1))
    assert got == want
    assert (s(2, 1) * SymFunc.zero()).is_zero()


def test_lr_values():
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((4, 2), (2, 1), (2, 1)) == 1
    # degree mismatch forces zero
    assert lr_coefficient((2, 1), (1,), (1,)) == 0
    assert lr_coefficient((2, 1), (2,), (1,)) == 1
    assert lr_coefficient((2, 1), (1, 1), (1,)) == 1


def test_skew_examples():
    assert skew_by(s(2, 1), s(1)) == s(2) + s(1, 1)
    assert skew_by(s(1, 1), s(1, 1)) == SymFunc.one()
    assert skew_by(s(1, 1), s(2)).is_zero()
    assert skew_h(s(2, 1), 1) == s(2) + s(1, 1)
    assert skew_e(s(2, 1), 2) == s(1)


def test_adjointness_sweep():
    for lam in partitions_upto(7):
        for mu in partitions_upto(4):
            if sum(mu) > sum(lam):
                continue
            skewed = skew_by(SymFunc.schur(lam), SymFunc.schur(mu))
            for nu in partitions_of(sum(lam) - sum(mu)):
                lhs = skewed.coeff(nu)
                rhs = multiply(SymFunc.schur(mu), SymFunc.schur(nu)).coeff(lam)
                assert lhs == rhs, (lam, mu, nu)


def test_lr_symmetry_and_transpose():
    shapes = partitions_upto(5)
    for mu in shapes:
        for nu in shapes:
            a = _prod_spectrum(mu, nu)
            b = _prod_spectrum(nu, mu)
            assert dict(a) == dict(b)
            c = _prod_spectrum(conjugate(mu), conjugate(nu))
            assert {conjugate(l): v for l, v in a.items()} == dict(c)


def test_monomial_oracle_small():
    for mu in partitions_upto(4):
        for nu in partitions_upto(4):
            mine = {l: c for l, c in _prod_spectrum(mu, nu).items()
                    if len(l) <= 6}
            assert mine == oracles.lr_product_oracle(mu, nu, 6), (mu, nu)


def test_chain_oracle_random():
    rng = random.Random(11)
    shapes = partitions_upto(6)
    for _ in range(150):
        mu, nu = rng.choice(shapes), rng.choice(shapes)
        lam = rng.choice(list(partitions_of(sum(mu) + sum(nu))))
        assert lr_coefficient(lam, mu, nu) == \
            oracles.lr_coefficient_via_chains(lam, mu, nu)


def test_straighten():
    assert straighten((1, 3)) == (-1, (2, 2))
    assert straighten((1, 2)) is None
    assert straighten((3, 2, 0)) == (1, (3, 2))
    assert straighten(()) == (1, ())
    assert straighten((-1,)) is None
    for lam in partitions_upto(8):
        assert straighten(lam + (0, 0)) == (1, lam)
    assert schur_of_vector((1, 3)) == s(2, 2).scaled(-1)


def test_associativity_random():
    rng = random.Random(12)
    shapes = partitions_upto(5)
    for _ in range(60):
        a, b, c = (SymFunc.schur(rng.choice(shapes)) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_evaluate():
    assert evaluate(s(1), [(1,), (-1,)], 1) == \
        {(1,): LaurentPoly.const(1), (-1,): LaurentPoly.const(1)}
    assert evaluate(s(1, 1, 1), [(1,), (-1,)], 1) == {}
    assert evaluate(s(1, 1), [(1,), (-1,)], 1) == \
        {(0,): LaurentPoly.const(1)}
    # linear in the function and in the coefficients
    f = s(2).scaled(LaurentPoly.t(1)) + s(1, 1)
    vals = evaluate(f, [(1,), (0,)], 1)
    assert vals[(2,)] == LaurentPoly.t(1)
    assert vals[(1,)] == LaurentPoly.t(1) + LaurentPoly.const(1)


def test_ssyt_contents_kostka():
    # contents of the (2,1) shape in 3 letters: the standard Kostka row
    contents = ssyt_contents((2, 1), 3)
    assert contents[(2, 1, 0)] == 1
    assert contents[(1, 1, 1)] == 2
    assert sum(contents.values()) == 8


def test_symfunc_api():
    f = s(2, 1).scaled(LaurentPoly.t(2)) + s(1)
    assert f.degree() == 3
    assert f.coeff((2, 1)) == LaurentPoly.t(2)
    assert f.coeff((5,)).is_zero()
    assert f.support() == [(1,), (2, 1)]
    assert f.subs_power(2).coeff((2, 1)) == LaurentPoly.t(4)
    assert f.eval_t(1) == {(2, 1): 1, (1,): 1}
    assert (f - f).is_zero()
    assert inner_product(f, s(1)) == LaurentPoly.const(1)
    assert f.transposed().coeff((2, 1)) == LaurentPoly.t(2)
    e = Expansion("vd", f)
    assert e.kind == "vdom"
