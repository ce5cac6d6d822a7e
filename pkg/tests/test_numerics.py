"""Interval arithmetic, elementary enclosures, and Gamma ratios."""

import random
from fractions import Fraction as Fr

import pytest
from mpmath import mp

from qcv.numerics import (
    GridIntervals,
    HalfInteger,
    Interval,
    enclose_elementary,
    eval_polynomial,
    gamma_ratio,
    interval_from_rational,
    pi_enclosure,
)


def test_rational_arithmetic_exact():
    rng = random.Random(7)
    for _ in range(500):
        a = Fr(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        b = Fr(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        assert (a + b) - b == a


def test_interval_from_rational_examples():
    assert interval_from_rational(Fr(1, 2)) == Interval(Fr(1, 2), Fr(1, 2))
    v = interval_from_rational(Fr(22, 7))
    assert v.lo <= Fr(22, 7) <= v.hi and v.width == 0
    # long-division oracle for 113/88 = 1.284090909...
    w = interval_from_rational(Fr(113, 88))
    assert w.contains(Fr(1284090909, 10**9)) or w.lo <= Fr(1284090909, 10**9) + Fr(1, 10**9)
    assert float(w.lo) == pytest.approx(1.2840909090909092)


def test_interval_ops_contain_images():
    rng = random.Random(11)

    def rand_iv():
        p = Fr(rng.randint(-50, 50), rng.randint(1, 9))
        q = Fr(rng.randint(-50, 100), rng.randint(1, 9))
        return Interval(min(p, q), max(p, q))

    for _ in range(300):
        a, b = rand_iv(), rand_iv()
        xa = a.lo + (a.hi - a.lo) * Fr(rng.randint(0, 16), 16)
        xb = b.lo + (b.hi - b.lo) * Fr(rng.randint(0, 16), 16)
        assert (a + b).contains(xa + xb)
        assert (a - b).contains(xa - xb)
        assert (a * b).contains(xa * xb)
        if not b.contains(0):
            assert (a / b).contains(xa / xb)


def test_polynomial_interval_containment_fuzz():
    rng = random.Random(13)
    for _ in range(2000):
        deg = rng.randint(0, 8)
        coeffs = [Fr(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg + 1)]
        lo = Fr(rng.randint(-40, 40), 37)
        hi = lo + Fr(rng.randint(0, 40), 41)
        X = Interval(lo, hi)
        x = lo + (hi - lo) * Fr(rng.randint(0, 32), 32)
        exact = eval_polynomial(coeffs, x)
        enc = eval_polynomial(coeffs, X)
        assert enc.contains(exact)


def test_enclose_sin_zero_exact():
    v = enclose_elementary("sin", Interval(0, 0))
    assert v.lo == 0 and v.hi == 0


def test_enclose_sqrt_perfect_square():
    v = enclose_elementary("sqrt", Interval(4, 4))
    assert v.contains(2)
    assert v.width <= Fr(2, 2**100)


def test_monotone_refinement_never_widens():
    x = Interval(Fr(1, 3), Fr(2, 3))
    for f in ("sin", "cos", "sqrt", "ln"):
        w_prev = None
        for prec in (64, 128, 256, 512):
            w = enclose_elementary(f, x, prec).width
            if w_prev is not None:
                assert w <= w_prev
            w_prev = w


def test_domain_violations_rejected():
    with pytest.raises(ValueError):
        enclose_elementary("sqrt", Interval(-2, -1))
    with pytest.raises(ValueError):
        enclose_elementary("ln", Interval(0, 1))
    with pytest.raises(ValueError):
        enclose_elementary("arcsin", Interval(Fr(1), Fr(3, 2)))


def test_gamma_ratio_against_high_precision_oracle():
    mp.dps = 60
    for k, s in ((10, HalfInteger(7)), (3, HalfInteger(1)), (201, HalfInteger(12)),
                 (50, HalfInteger(15)), (201, HalfInteger(13))):
        g = gamma_ratio(k, s)
        ref = mp.gamma(k) / mp.gamma(k + mp.mpf(s.twice_value) / 2)
        lo = mp.mpf(g.lo.numerator) / g.lo.denominator
        hi = mp.mpf(g.hi.numerator) / g.hi.denominator
        assert lo <= ref <= hi
        assert (hi - lo) / ref < mp.mpf(10) ** -20


def test_pi_and_arcsin():
    p = pi_enclosure(128)
    mp.dps = 60
    pi_ref = Fr(int(mp.pi * 10**55), 10**55)  # well within the 2^-128 width
    assert p.contains(pi_ref)
    assert p.width < Fr(1, 2**120)
    half = enclose_elementary("arcsin", Interval(Fr(1, 2), Fr(1, 2)), 64)
    # arcsin(1/2) = pi/6
    assert half.contains(Fr((pi_enclosure(128) / 6).lo))
    assert half.width < Fr(1, 2**40)


def test_grid_intervals_enclose():
    import numpy as np
    a = GridIntervals(np.array([1.0, -2.0]), np.array([1.5, -1.0]))
    b = GridIntervals(np.array([0.5, 3.0]), np.array([0.75, 4.0]))
    s = a + b
    assert s.lo[0] <= 1.6 <= s.hi[0]
    p = a * b
    assert p.lo[1] <= -2.0 * 3.5 <= p.hi[1]


def test_halfinteger_validation():
    with pytest.raises(ValueError):
        HalfInteger(0)
    assert str(HalfInteger(7)) == "7/2"
