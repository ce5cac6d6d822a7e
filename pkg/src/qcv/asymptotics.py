"""Large-degree asymptotics of the order-7/2 Gegenbauer family with a
rigorous remainder, and the assembled large-k lower-bound certificate.

The expansion (a Gegenbauer specialization of the Nemes--Olde Daalhuis
large-degree series) reads, for 0 < zeta < pi and N >= 3,

    C_{k-1}^{(7/2)}(cos zeta)
      = 2 / (Gamma(7/2) (2 sin zeta)^{7/2})
        * ( sum_{m=0}^{N-1} t_m Gamma(k+6)/Gamma(k+m+7/2)
                            * cos(delta_{k-1,m}) / sin^m zeta
            + R_N(zeta, k-1) ),

    delta_{j,m} = (j + m + 7/2) zeta - (7/2 - m) pi/2,
    t_m = (1/2 - mu)_m (1/2 + mu)_m / ((-2)^m m!)  with mu = 3,
    |R_N(zeta, j)| <= |t_N| Gamma(k+6)/Gamma(k+N+7/2) / sin^N zeta
                      * (|sec zeta| on (0, pi/4], 2 sin zeta on (pi/4, pi)).

The coefficient family was cross-validated against exact polynomial
values: with mu = 3 the N = 4 truncation error sits three orders of
magnitude inside the remainder bound over the whole sample grid, while
mu = 2 (the order-5/2 family) fails containment outright.  The E-term
displays in `e_terms` reproduce the published five-way 1/k split, whose
printed coefficients belong to the mu = 2 family; they are kept verbatim
for reproduction purposes and are *not* used by the certificate path,
which evaluates the mu = 3 expansion directly in interval arithmetic.

Rescaling by 720 Gamma(k)/Gamma(k+6) = 720/(lam_k (lam_k+4)(lam_k+6))
turns the expansion into an enclosure of ft_prime(k)(cos zeta); with
sin zeta = l/k this is the working form of the lower-bound sweep

    ft_prime(k)(cos zeta) >= -m0 = -1/25   for k > 200,

which subdivides l geometrically, evaluates the four-term expansion plus
remainder on each piece, and handles the far tail by crude magnitude
bounds.  Phases are reduced modulo 2 pi against a high-precision pi
enclosure before any cosine is taken, since k * zeta can exceed 1e4.

Everything is pure; sweeps over k or over l-pieces parallelize freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import (
    DEFAULT_PRECISION,
    HalfInteger,
    Interval,
    NU_92,
    enclose_elementary,
    gamma_ratio,
    pi_enclosure,
)
from .orthopoly import gegenbauer_value, lambda_, largest_zero_upper_bound

M0 = Fraction(1, 25)


def t_coeff(m: int, mu: HalfInteger = HalfInteger(6)) -> Fraction:
    """t_m(mu) = (1/2-mu)_m (1/2+mu)_m / ((-2)^m m!), exact."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    a = Fraction(1, 2) - mu.value
    b = Fraction(1, 2) + mu.value
    num = Fraction(1)
    for i in range(m):
        num *= (a + i) * (b + i)
    den = Fraction(-2) ** m
    for i in range(1, m + 1):
        den *= i
    return num / den


@dataclass(frozen=True)
class ExpansionTerm:
    """One summand of the N-term expansion at a concrete (k, zeta)."""

    m: int
    t_coeff: Fraction
    gamma_ratio: Interval
    phase_cos: Interval
    sine_power: Interval


@dataclass(frozen=True)
class RemainderBound:
    N: int
    zeta: Interval
    bound: Interval


def _reduce_phase_cos(phase: Interval, precision: int) -> Interval:
    """cos of a possibly huge phase, reduced mod 2 pi first."""
    two_pi = pi_enclosure(precision + 64) * 2
    mid = (phase.lo + phase.hi) / 2
    n_turns = int(mid / float(two_pi.lo)) if abs(mid) > 8 else 0
    reduced = phase - two_pi * n_turns
    if reduced.width > 7:
        return Interval(-1, 1)
    return enclose_elementary("cos", reduced.round_outward(precision + 32), precision)


def expansion_terms(k: int, zeta: Interval, N: int,
                    precision: int = DEFAULT_PRECISION) -> list[ExpansionTerm]:
    if k < 2:
        raise ValueError("k must be >= 2")
    sin_z = enclose_elementary("sin", zeta, precision)
    if sin_z.lo <= 0:
        raise ValueError("zeta must stay inside (0, pi)")
    out = []
    for m in range(N):
        t_m = t_coeff(m)
        # Gamma(k+6)/Gamma(k+m+7/2) = gamma_ratio(k+6, m - 5/2)... for
        # m <= 5 the exponent m + 7/2 - 6 is negative, so write it as
        # 1 / gamma_ratio(k+m+7/2 ...); simplest rigorous form:
        # Gamma(k+6)/Gamma(k+m+7/2)
        #   = [Gamma(k)/Gamma(k+m+7/2)] / [Gamma(k)/Gamma(k+6)]
        g_num = gamma_ratio(k, HalfInteger(2 * m + 7), precision)
        g_den = gamma_ratio(k, HalfInteger(12), precision)
        gr = (g_num / g_den).round_outward(precision + 16)
        delta = (zeta * Fraction(2 * (k - 1 + m) + 7, 2)
                 - pi_enclosure(precision + 64) * Fraction(7 - 2 * m, 4))
        pc = _reduce_phase_cos(delta, precision)
        sp = Interval(1, 1)
        for _ in range(m):
            sp = sp * sin_z
        out.append(ExpansionTerm(m, t_m, gr, pc, sp.round_outward(precision + 16)))
    return out


def remainder_bound(k: int, zeta: Interval, N: int,
                    precision: int = DEFAULT_PRECISION) -> RemainderBound:
    """|R_N(zeta, k-1)| bound from the published estimate: the 1/sin^N
    magnitude carries a |sec zeta| factor on (0, pi/4] and a 2 sin zeta
    factor on (pi/4, pi); an input straddling pi/4 is split there."""
    g_num = gamma_ratio(k, HalfInteger(2 * N + 7), precision)
    g_den = gamma_ratio(k, HalfInteger(12), precision)
    gr = (g_num / g_den).round_outward(precision + 16)

    def piece(z: Interval, sec_branch: bool) -> Fraction:
        sin_z = enclose_elementary("sin", z, precision)
        sp = Interval(1, 1)
        for _ in range(N):
            sp = sp * sin_z
        base = Interval.from_rational(abs(t_coeff(N))) * gr / sp
        if sec_branch:
            cos_z = enclose_elementary("cos", z, precision)
            if cos_z.lo <= 0:
                raise ValueError("sec branch needs cos zeta > 0")
            factor = (Interval(1, 1) / cos_z).abs()
        else:
            factor = sin_z.abs() * 2
        return (base * factor).mag

    quarter_pi = pi_enclosure(precision) / 4
    bounds = []
    if zeta.lo < quarter_pi.hi:  # part of zeta may sit in (0, pi/4]
        bounds.append(piece(Interval(zeta.lo, min(zeta.hi, quarter_pi.hi)), True))
    if zeta.hi > quarter_pi.lo:  # part may sit in (pi/4, pi)
        bounds.append(piece(Interval(max(zeta.lo, quarter_pi.lo), zeta.hi), False))
    b = max(bounds)
    return RemainderBound(N, zeta, Interval(0, b))


def _prefactor(zeta: Interval, precision: int) -> Interval:
    """2 / (Gamma(7/2) (2 sin zeta)^{7/2}); Gamma(7/2) = 15 sqrt(pi) / 8."""
    sin_z = enclose_elementary("sin", zeta, precision)
    two_sin = sin_z * 2
    # (2 sin)^{7/2} = (2 sin)^3 * sqrt(2 sin)
    pw = two_sin ** 3 * enclose_elementary("sqrt", two_sin, precision)
    sqrt_pi = enclose_elementary(
        "sqrt", enclose_elementary("pi", None, precision), precision)
    gamma_72 = sqrt_pi * Fraction(15, 8)
    return (Interval(2, 2) / (gamma_72 * pw)).round_outward(precision + 16)


def asymptotic_enclosure(k: int, zeta: Interval, N: int = 4,
                         precision: int = DEFAULT_PRECISION) -> Interval:
    """Interval containing C_{k-1}^{(7/2)}(cos zeta) for every zeta in the
    input interval, via N explicit terms plus the remainder bound."""
    if N < 3:
        raise ValueError("the remainder estimate needs N >= 3")
    if not (zeta.lo > 0 and zeta.hi < pi_enclosure(precision).lo):
        raise ValueError("zeta must be strictly inside (0, pi)")
    terms = expansion_terms(k, zeta, N, precision)
    total = Interval(0, 0)
    for t in terms:
        total = total + Interval.from_rational(t.t_coeff) * t.gamma_ratio * t.phase_cos / t.sine_power
    rb = remainder_bound(k, zeta, N, precision)
    total = total + Interval(-rb.bound.hi, rb.bound.hi)
    return (total * _prefactor(zeta, precision)).round_outward(precision + 16)


def f_tilde_prime_asymptotic(k: int, zeta: Interval, N: int = 4,
                             precision: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of ft_prime(k)(cos zeta) = 720/(lam(lam+4)(lam+6)) C_{k-1}^{7/2}."""
    lam = lambda_(k)
    scale = Fraction(720, lam * (lam + 4) * (lam + 6))
    return (asymptotic_enclosure(k, zeta, N, precision) * scale).round_outward(precision + 16)


# ---------------------------------------------------------------------------
# published E-term displays (five-way 1/k split); reproduction only
# ---------------------------------------------------------------------------

def e_terms(l: Interval, k: int, precision: int = DEFAULT_PRECISION
            ) -> tuple[Interval, Interval, Interval, Interval, Interval]:
    """The published E_0..E_4 displays evaluated with outward rounding.

    These are the printed five-way grouping of the lower-bound bracket in
    powers of 1/k.  Note: the printed numerators carry the order-5/2
    coefficient family (1, 15/8, 105/128, 315/1024) rather than the
    order-7/2 one used by the expansion itself; the certificate path
    therefore never consumes these, but the displayed minima over l are
    reproduced as stated (see the lemma-min suite's notes).
    """
    if l.lo < 5:
        raise ValueError("E terms assume l >= 5")
    if k <= 200:
        raise ValueError("E terms assume k > 200")
    cp = _reduce_phase_cos(l + pi_enclosure(precision) / 4, precision)
    cm = _reduce_phase_cos(l - pi_enclosure(precision) / 4, precision)
    sq = enclose_elementary("sqrt", l, precision)
    l1, l2, l3 = l, l * l, l * l * l
    kf = Fraction(k)
    e0 = (l3 * cp * 1024 - l2 * cm * 1920 - l1 * cp * 840 - cm * 315) / (l3 * l3 * sq * 1024)
    e1 = ((l3 * 512 + l2 * 1280 - l2 * cp * 2304 + l1 * 700
           - l1 * cm * 1920 + cp * 770 - 315) * -3) / (l2 * l3 * sq * (512 * kf))
    e2 = (l2 * -10368 + l1 * 11520 + l1 * cp * 15296 + cm * 64920 - 5775) / (
        l2 * l2 * sq * (256 * kf ** 2))
    e3 = ((l2 * 478 - l1 * 2705 - l1 * cp * 231 - cm * 1980) * -3) / (
        l2 * l2 * sq * (8 * kf ** 3))
    e4 = (l1 * -7 + 80) * 297 / (l3 * sq * (8 * kf ** 4))
    return tuple(e.round_outward(precision + 16) for e in (e0, e1, e2, e3, e4))


# ---------------------------------------------------------------------------
# assembled large-k certificate for the -1/25 lower bound
# ---------------------------------------------------------------------------

def _arcsin(x: Interval, precision: int) -> Interval:
    return enclose_elementary("arcsin", x, precision)


def _l_subdivision(k: int, l_min: Fraction, ratio: Fraction = Fraction(21, 20)
                   ) -> list[tuple[Fraction, Fraction]]:
    """Geometric subdivision of [l_min, k^0.9-ish]; the far tail is handled
    separately by crude magnitude bounds."""
    pieces = []
    lo = l_min
    cutoff = Fraction(int(float(k) ** 0.9) + 1)
    while lo < cutoff:
        hi = min(lo * ratio, cutoff)
        pieces.append((lo, hi))
        lo = hi
    return pieces


def lower_bound_profile(k: int, precision: int = 96,
                        max_refine: int = 6) -> tuple[Fraction, list[tuple[Fraction, Fraction, Fraction]]]:
    """Certified lower bound for ft_prime(k) over the minimum-carrying
    region of [0, 1], for k > 200.

    The minimum of ft_prime(k) on [0, 1] sits at the largest zero of the
    order-9/2 degree-(k-2) polynomial, which is below the certified
    largest-zero bound B; in the l = k sin(zeta) parameterization that
    region is l >= k sqrt(1 - B^2).  Each l-piece is certified via the
    four-term expansion plus remainder; pieces that cannot immediately
    clear -1/25 are bisected up to max_refine times.

    Returns (certified lower bound, per-piece ledger of (l_lo, l_hi, lb)).
    """
    if k <= 200:
        raise ValueError("the asymptotic path needs k > 200")
    bound = largest_zero_upper_bound(k - 2, NU_92, precision)
    inner = Interval(1, 1) - Interval.from_rational(bound.hi) ** 2
    l_min_iv = enclose_elementary("sqrt", inner, precision) * k
    l_min = l_min_iv.lo

    profile: list[tuple[Fraction, Fraction, Fraction]] = []
    worst = Fraction(0)

    def certify(lo: Fraction, hi: Fraction, depth: int) -> Fraction:
        l_iv = Interval(lo, hi)
        sin_iv = (l_iv * Fraction(1, k)).intersect(Interval(0, 1))
        zeta = _arcsin(sin_iv, precision)
        enc = f_tilde_prime_asymptotic(k, zeta, 4, precision)
        if enc.lo >= -M0 or depth >= max_refine:
            profile.append((lo, hi, enc.lo))
            return enc.lo
        mid = (lo + hi) / 2
        return min(certify(lo, mid, depth + 1), certify(mid, hi, depth + 1))

    for lo, hi in _l_subdivision(k, l_min):
        worst = min(worst, certify(lo, hi, 0))

    # far tail: l in (k^0.9, k]  =>  sin zeta > k^{-0.1}; all four terms and
    # the remainder are bounded in magnitude, with |cos| <= 1
    tail_lo = Fraction(int(float(k) ** 0.9) + 1)
    sin_lo = (tail_lo / k)
    zeta_tail = Interval(_arcsin(Interval(sin_lo, sin_lo), precision).lo,
                         pi_enclosure(precision).hi / 2)
    enc_tail = f_tilde_prime_asymptotic(k, zeta_tail, 4, precision)
    profile.append((tail_lo, Fraction(k), enc_tail.lo))
    worst = min(worst, enc_tail.lo)
    return worst, profile


def check_lower_bound_large_k(k: int, precision: int = 96):
    """(passed, worst_lower_bound, profile) for ft_prime(k) >= -1/25, k > 200."""
    worst, profile = lower_bound_profile(k, precision)
    return worst >= -M0, worst, profile


# ---------------------------------------------------------------------------
# theta-window sanity checks (sampled sign conditions, not a proof)
# ---------------------------------------------------------------------------

def delta_window(nu: HalfInteger, precision: int = DEFAULT_PRECISION) -> Interval:
    """delta = (nu - sqrt(nu) + 1/2) / (nu + 1/2)."""
    nu_iv = Interval.from_rational(nu.value)
    root = enclose_elementary("sqrt", nu_iv, precision)
    return ((nu_iv - root + Fraction(1, 2)) / (nu.value + Fraction(1, 2))).round_outward(precision + 16)


def theta_window_signs(n: int, nu: HalfInteger, precision: int = DEFAULT_PRECISION
                       ) -> tuple[Interval, Interval]:
    """Enclosures of v'(theta_bar) and v'(0.999 theta_low) for
    v(theta) = sin^2(theta) F(n, nu)(cos theta).

    theta_bar = arcsin sqrt((4 nu + 2)/(n (n + 2 nu))),
    theta_low = arcsin sqrt(delta * same), delta as in `delta_window`.
    The sampled sign conditions are v'(theta_bar) < 0 and
    v'(0.999 theta_low) > 0.
    """
    if n < max(nu.twice_value + 2, 12):
        raise ValueError("n below the lemma's range")
    tv = nu.twice_value
    s_bar = Fraction(2 * tv + 2, n * (n + tv))

    def v_prime_at(theta: Interval) -> Interval:
        x = enclose_elementary("cos", theta, precision)
        s = enclose_elementary("sin", theta, precision)
        F = gegenbauer_value(n, nu, x)
        Fnext = gegenbauer_value(n - 1, nu + 1, x)
        dfac = Fraction(n * (n + tv), tv + 1)
        return (s * (x * F * 2 - s * s * Fnext * dfac)).round_outward(precision + 16)

    sq = enclose_elementary("sqrt", Interval.from_rational(s_bar), precision)
    theta_bar = _arcsin(sq, precision)
    v_bar = v_prime_at(theta_bar)

    dlt = delta_window(nu, precision)
    sq_low = enclose_elementary("sqrt", (dlt * s_bar).round_outward(precision + 16), precision)
    theta_low = _arcsin(sq_low, precision) * Fraction(999, 1000)
    v_low = v_prime_at(theta_low)
    return v_bar, v_low


__all__ = [
    "ExpansionTerm",
    "M0",
    "RemainderBound",
    "asymptotic_enclosure",
    "check_lower_bound_large_k",
    "delta_window",
    "e_terms",
    "expansion_terms",
    "f_tilde_prime_asymptotic",
    "lower_bound_profile",
    "remainder_bound",
    "t_coeff",
    "theta_window_signs",
]
