"""Large-degree expansion, remainder validity, and the theta-window checks."""

from fractions import Fraction as Fr

import pytest
from mpmath import mp

from qcv.numerics import HalfInteger, Interval, pi_enclosure
from qcv import asymptotics as asy
from qcv import orthopoly as op


def test_t_coeff_values():
    assert asy.t_coeff(0) == 1
    assert asy.t_coeff(1) == Fr(35, 8)
    assert asy.t_coeff(2) == Fr(945, 128)
    assert asy.t_coeff(3) == Fr(3465, 1024)
    assert asy.t_coeff(4) == Fr(-45045, 32768)


def test_expansion_contains_exact_value():
    mp.dps = 50
    for k, frac in ((201, Fr(1, 4)), (150, Fr(1, 3)), (428, Fr(3, 8))):
        zeta = (pi_enclosure(128) * frac).round_outward(160)
        enc = asy.asymptotic_enclosure(k, zeta, 4, 96)
        exact = mp.gegenbauer(k - 1, mp.mpf(7) / 2, mp.cos(mp.pi * frac.numerator
                                                           / frac.denominator))
        lo = mp.mpf(enc.lo.numerator) / enc.lo.denominator
        hi = mp.mpf(enc.hi.numerator) / enc.hi.denominator
        assert lo <= exact <= hi
        assert (hi - lo) / abs(exact) < 1e-6


def test_remainder_validity():
    """|exact - N-term partial| <= remainder bound at sample points."""
    mp.dps = 50
    for k in (201, 300):
        for frac in (Fr(1, 4), Fr(3, 8)):
            zeta = (pi_enclosure(128) * frac).round_outward(160)
            terms = asy.expansion_terms(k, zeta, 4, 96)
            total = Interval(0, 0)
            for t in terms:
                total = total + (Interval.from_rational(t.t_coeff) * t.gamma_ratio
                                 * t.phase_cos / t.sine_power)
            rb = asy.remainder_bound(k, zeta, 4, 96)
            # reconstruct the bracket from the exact value
            x = mp.cos(mp.pi * frac.numerator / frac.denominator)
            exact = mp.gegenbauer(k - 1, mp.mpf(7) / 2, x)
            pref = 2 / (mp.gamma(mp.mpf(7) / 2)
                        * (2 * mp.sin(mp.pi * frac.numerator / frac.denominator)) ** mp.mpf(3.5))
            bracket = exact / pref
            lo = mp.mpf(total.lo.numerator) / total.lo.denominator
            hi = mp.mpf(total.hi.numerator) / total.hi.denominator
            dist = max(lo - bracket, bracket - hi, mp.mpf(0))
            assert dist <= mp.mpf(rb.bound.hi.numerator) / rb.bound.hi.denominator


def test_f_tilde_prime_asymptotic_matches_recurrence():
    zeta = (pi_enclosure(128) / 4).round_outward(160)
    enc = asy.f_tilde_prime_asymptotic(201, zeta, 4, 96)
    from qcv.numerics import enclose_elementary
    x = enclose_elementary("cos", zeta, 96)
    exact = op.f_tilde_prime_value(201, x)
    assert enc.overlaps(exact)


def test_e4_zero_at_80_over_7():
    l = Interval(Fr(80, 7), Fr(80, 7))
    es = asy.e_terms(l, 201)
    assert es[4].contains(0)


def test_e_terms_domain():
    with pytest.raises(ValueError):
        asy.e_terms(Interval(Fr(4), Fr(5)), 201)
    with pytest.raises(ValueError):
        asy.e_terms(Interval(Fr(6), Fr(7)), 150)


def test_check_lower_bound_large_k_201():
    ok, worst, profile = asy.check_lower_bound_large_k(201)
    assert ok
    assert worst >= Fr(-1, 25)
    assert len(profile) > 10


def test_theta_window_signs():
    for n, tv in ((13, 7), (20, 9)):
        v_bar, v_low = asy.theta_window_signs(n, HalfInteger(tv))
        assert v_bar.hi < 0
        assert v_low.lo > 0


def test_delta_window_value():
    d = asy.delta_window(HalfInteger(7))
    # (7/2 - sqrt(7/2) + 1/2)/4 = 0.53229...
    assert abs(float(d.lo) - (3.5 - 3.5 ** 0.5 + 0.5) / 4) < 1e-12


def test_sine_cubed_inequality_grid():
    """zeta - sin zeta <= (pi/2 - 1) sin^3 zeta <= sin^3 zeta on (0, pi/2);
    checked numerically on a grid (the interval evaluation elsewhere never
    relies on it)."""
    import numpy as np
    z = np.linspace(1e-6, np.pi / 2 - 1e-9, 20001)
    lhs = z - np.sin(z)
    mid = (np.pi / 2 - 1) * np.sin(z) ** 3
    assert np.all(lhs <= mid * (1 + 1e-12) + 1e-18)
    assert np.all(mid <= np.sin(z) ** 3)


def test_phase_reduction_large_argument():
    mp.dps = 60
    phase = Interval(Fr(123456789, 100), Fr(123456789, 100))
    got = asy._reduce_phase_cos(phase, 96)
    ref = mp.cos(mp.mpf(123456789) / 100)
    lo = mp.mpf(got.lo.numerator) / got.lo.denominator
    hi = mp.mpf(got.hi.numerator) / got.hi.denominator
    assert lo <= ref <= hi
    assert hi - lo < 1e-20
