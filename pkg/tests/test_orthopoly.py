"""Gegenbauer construction, identities, and certified extrema."""

from fractions import Fraction as Fr

import numpy as np
import pytest

from qcv.numerics import Interval, NU_52, NU_72, NU_92
from qcv import orthopoly as op


def poly_equal(p, coeffs):
    return p.coefficients == tuple(Fr(c) for c in coeffs)


def test_lambda_values():
    assert op.lambda_(0) == 0
    assert op.lambda_(2) == 14
    assert op.lambda_(5) == 50
    assert Fr(16, op.lambda_(5)) == Fr(8, 25) >= Fr(221, 1000)


def test_normalized_gegenbauer_low_degrees():
    assert poly_equal(op.normalized_gegenbauer(1, NU_52), [0, 1])
    assert poly_equal(op.normalized_gegenbauer(2, NU_52), [Fr(-1, 6), 0, Fr(7, 6)])
    assert poly_equal(op.normalized_gegenbauer(2, NU_72), [Fr(-1, 8), 0, Fr(9, 8)])


def test_unique_quadratic_ode_solution_oracle():
    # independent oracle: the quadratic a x^2 + b x + c satisfying the
    # order-5/2 ODE with lam_2 = 14 and F(1) = 1 is unique
    # ODE: (1-x^2) 2a - 6x(2ax + b) + 14(ax^2+bx+c) = 0 for all x
    # x^2: -2a - 12a + 14a = 0 (free); x^1: -6b + 14b = 8b = 0 -> b = 0
    # x^0: 2a + 14c = 0 -> c = -a/7;  F(1) = a + c = 1 -> a (1 - 1/7) = 1
    a = Fr(7, 6)
    c = -a / 7
    assert poly_equal(op.normalized_gegenbauer(2, NU_52), [c, 0, a])


def test_f_tilde_prime_appendix_forms():
    assert poly_equal(op.f_tilde_prime(3), [Fr(-1, 8), 0, Fr(9, 8)])
    assert poly_equal(op.f_tilde_prime(4), [0, Fr(-3, 8), 0, Fr(11, 8)])
    assert poly_equal(op.f_tilde_prime(5),
                      [Fr(3, 80), 0, Fr(-66, 80), 0, Fr(143, 80)])
    assert op.f_tilde_prime(3)(Fr(1, 3)) == 0


def test_ode_and_derivative_identities_k_up_to_60():
    for nu in (NU_52, NU_72, NU_92):
        for k in range(0, 61):
            assert op.check_ode_identity(k, nu), (k, nu)
            if k >= 1:
                assert op.check_derivative_identity(k, nu), (k, nu)


def test_perturbed_polynomial_fails_ode():
    F2 = op.normalized_gegenbauer(2, NU_52)
    bad = F2 + op.X
    one_minus_x2 = op.Polynomial((Fr(1), Fr(0), Fr(-1)))
    lhs = (one_minus_x2 * bad.derivative().derivative()
           - bad.derivative().shift_mul_x().scale(6)
           + bad.scale(14))
    assert not lhs.is_zero()


def test_derivative_identity_mismatched_order_pair():
    lhs = op.normalized_gegenbauer(3, NU_52).derivative()
    factor = Fr(3 * (3 + 5), 6)
    wrong = op.normalized_gegenbauer(2, NU_92).scale(factor)  # nu+2, not nu+1
    assert not (lhs - wrong).is_zero()


def test_parity():
    for nu in (NU_52, NU_72, NU_92):
        for k in range(0, 61, 7):
            F = op.normalized_gegenbauer(k, nu)
            refl = F.reflected()
            expect = F if k % 2 == 0 else F.scale(-1)
            assert refl.coefficients == expect.coefficients


def test_boundedness_on_grid():
    # evaluate with the stable degree recurrence (monomial evaluation is
    # catastrophically ill-conditioned at this degree in float64)
    xs = np.linspace(-1, 1, 2001)
    for nu in (NU_52, NU_72):
        tv = nu.twice_value
        fm2, fm1 = np.ones_like(xs), xs.copy()
        for k in range(2, 61):
            fm2, fm1 = fm1, ((2 * k + tv - 2) * xs * fm1 - (k - 1) * fm2) / (k + tv - 1)
            assert np.max(np.abs(fm1)) <= 1 + 1e-9, (k, nu)


def test_orthogonality_exact():
    for k in range(0, 21):
        for l in range(k, 21):
            ip = op.weighted_inner_product(k, l)
            if k != l:
                assert ip == 0
            else:
                assert ip == op.orthogonality_constant(k)
    assert op.weighted_inner_product(0, 0) == Fr(16, 15)
    assert op.weighted_inner_product(2, 2) == Fr(16, 405)
    assert op.weighted_inner_product(2, 3) == 0


def test_f_tilde_prime_consistency_full_range():
    for k in range(1, 431):
        lhs = op.normalized_gegenbauer(k, NU_52).derivative().scale(Fr(6, op.lambda_(k)))
        assert (lhs - op.f_tilde_prime(k)).is_zero(), k


def test_gegenbauer_value_matches_polynomial():
    for k in (4, 9, 30):
        P = op.normalized_gegenbauer(k, NU_72)
        for x in (Fr(1, 3), Fr(-2, 5), Fr(1)):
            assert op.gegenbauer_value(k, NU_72, x) == P(x)
    v = op.gegenbauer_value(30, NU_72, Interval(Fr(1, 3), Fr(1, 3)))
    assert v.contains(op.normalized_gegenbauer(30, NU_72)(Fr(1, 3)))
    assert v.width < Fr(1, 2**80)


def test_chebyshev_coefficients_exact_and_positive():
    table = op.chebyshev_coefficients(NU_72, 40)
    for k, (nums, den) in enumerate(table):
        assert sum(nums) == den  # F(1) = 1
        assert all(c >= 0 for c in nums)
    # spot value check against the exact polynomial at x = 1/3
    nums, den = table[17]
    x = Fr(1, 3)
    t0, t1 = Fr(1), x
    acc = Fr(nums[0], den) + Fr(nums[1], den) * x
    for j in range(2, 18):
        t0, t1 = t1, 2 * x * t1 - t0
        acc += Fr(nums[j], den) * t1
    assert acc == op.gegenbauer_value(17, NU_72, x)


def test_certified_cn_against_dense_brute_force():
    ext = op.certified_max_abs_difference(6)
    xs = np.linspace(0, 1, 100001)
    p6 = np.array([float(c) for c in op.f_tilde_prime(7).coefficients])
    p5 = np.array([float(c) for c in op.f_tilde_prime(6).coefficients])
    brute = np.max(np.abs(np.polyval(p6[::-1], xs) - np.polyval(p5[::-1], xs)))
    enc = ext.value_enclosure
    assert float(enc.lo) - 1e-9 <= brute <= float(enc.hi) + 1e-9
    assert enc.width <= Fr(1, 1000)


def test_extremum_soundness_finer_grid():
    for n in (6, 30, 101):
        ext = op.certified_max_abs_difference(n)
        m = 10 * op.DEFAULT_M_HALF
        theta = np.linspace(0, np.pi / 2, m + 1)
        x = np.cos(theta)
        fm2, fm1 = np.ones_like(x), x.copy()
        vals = {0: fm2, 1: fm1}
        for k in range(2, n + 1):
            fm2, fm1 = fm1, ((2 * k + 5) * x * fm1 - (k - 1) * fm2) / (k + 6)
            if k >= n - 1:
                vals[k] = fm1
        finer = np.max(np.abs(vals[n] - vals[n - 1]))
        enc = ext.value_enclosure
        assert float(enc.lo) - 1e-9 <= finer <= float(enc.hi) + 1e-9


def test_certified_min_and_argmin_location():
    ext = op.certified_min(9)
    assert ext.value_enclosure.contains(Fr(-38457, 10**6)) or \
        abs(float(ext.value_enclosure.lo) - (-0.038457)) < 1e-4
    # argmin of ft_prime(9) = F(8, 7/2) sits left of the largest-zero bound
    bound = op.largest_zero_upper_bound(7, NU_92)
    xs = np.linspace(0, 1, 20001)
    coeffs = np.array([float(c) for c in op.f_tilde_prime(9).coefficients])
    argmin = xs[np.argmin(np.polyval(coeffs[::-1], xs))]
    assert argmin <= float(bound.hi)


def test_largest_zero_bound_examples():
    b = op.largest_zero_upper_bound(2, NU_92)
    expected = (9 / (4.5 * 5.5)) ** 0.5 * 0.5
    assert float(b.lo) <= expected <= float(b.hi)
    # for (2, 5/2) the bound formula collapses to exactly 1/sqrt(7), the
    # largest zero of (7x^2 - 1)/6 itself
    b25 = op.largest_zero_upper_bound(2, NU_52)
    from qcv.numerics import enclose_elementary
    root7 = enclose_elementary("sqrt", Interval(Fr(1, 7), Fr(1, 7)))
    assert b25.overlaps(root7)
    assert op.no_sign_change_right_of(2, NU_52, b25.hi)
    k = 201
    b201 = op.largest_zero_upper_bound(k - 2, NU_92)
    assert b201.strictly_below(1 - Fr(125, 10) / (k * k))


def test_hypergeometric_partial_sums():
    lo, hi = op.hypergeometric_partial_sums(102, Fr(0), 5, 6)
    assert lo == hi == 1
    lam = op.lambda_(102)
    t = Fr(8, lam) * (2 - Fr(8, lam))
    lo, hi = op.hypergeometric_partial_sums(102, t, 5, 6)
    x = 1 - Fr(8, lam)
    assert Fr(3, 10) <= lo * x <= hi * x <= Fr(33, 100)
    # full termination: j = m recovers the exact polynomial value
    m = (102 - 2) // 2
    full_lo, full_hi = op.hypergeometric_partial_sums(102, t, m if m % 2 else m + 1,
                                                      m if m % 2 == 0 else m + 1)
    exact = op.f_tilde_prime_value(102, x)
    assert full_lo * x == exact or full_hi * x == exact
    with pytest.raises(ValueError):
        op.hypergeometric_partial_sums(102, Fr(99, 100), 5, 6)


def test_one_minus_x2_f_max_small_case():
    ext = op.one_minus_x2_f_max(12, NU_72)
    xs = np.linspace(0, 1, 50001)
    coeffs = np.array([float(c) for c in
                       op.normalized_gegenbauer(12, NU_72).coefficients])
    brute = np.max(np.abs((1 - xs**2) * np.polyval(coeffs[::-1], xs)))
    enc = ext.value_enclosure
    assert float(enc.lo) - 1e-9 <= brute <= float(enc.hi) + 1e-9


def test_degree_cap():
    with pytest.raises(ValueError):
        op.normalized_gegenbauer(op.MAX_DEGREE + 1, NU_52)


def test_trivial_difference_extremum():
    ext = op.certified_max_abs_difference(1, (Fr(0), Fr(1)))
    assert ext.value_enclosure.width == 0
