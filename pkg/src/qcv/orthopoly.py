"""Exact Gegenbauer polynomials, their defining identities, and certified
extrema of the normalized-derivative family over [0, 1].

Conventions
-----------
``F(k, nu)`` is the degree-k Gegenbauer (ultraspherical) polynomial of
order nu normalized so F(1) = 1.  It satisfies the second-order ODE

    (1 - x^2) F'' - (2 nu + 1) x F' + k (k + 2 nu) F = 0,

the derivative relation F' = k(k + 2 nu)/(2 nu + 1) * F(k-1, nu+1), and
the three-term recurrence in degree

    (k + 2 nu - 1) F_k = 2 (k + nu - 1) x F_{k-1} - (k - 1) F_{k-2}.

The normalized derivative family central to all pointwise estimates is

    ft_prime(k) := (6 / lam_k) * d/dx F(k, 5/2) = F(k-1, 7/2),

with lam_k = k (k + 5), and the consecutive-cancellation constants

    c_n := max_{0 <= x <= 1} | ft_prime(n+1) - ft_prime(n) |.

Certified extrema
-----------------
Let T(theta) = p(cos theta) for a degree-n polynomial p; T is a cosine
polynomial of degree n.  Sampling T on a uniform theta-grid over
[0, pi/2] that includes both endpoints, with step h, gives

    max_{[0, pi/2]} |T|  <=  max_grid |T| + (h^2 / 8) n^2 M_c,

where M_c bounds |T| over the *full circle*: the max point is either a
grid point (theta = 0 is always critical for a cosine polynomial, and
theta = pi/2 is in the grid) or an interior critical point, where a
second-order Taylor step to the nearest grid point (within h/2) costs at
most (h/2)^2/2 * sup|T''|, and Bernstein's inequality applied twice gives
sup|T''| <= n^2 M_c.  The same bound with min replaces the grid max.
For a single normalized Gegenbauer polynomial M_c = 1 (its modulus on
[-1, 1] peaks at the endpoints); for a difference of two, M_c = 2.

Grid values are enclosed by running the degree recurrence in vectorised
outward-rounded interval arithmetic on enclosures of cos(j pi / M); the
recurrence is numerically benign on [-1, 1] (characteristic roots on the
unit circle), so enclosure widths stay near 1e-12 even at degree 430.

Everything here is pure and immutable; the polynomial cache is a
write-once map keyed by (k, nu), and extremum jobs for different n are
independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import numpy as np

from .numerics import (
    HalfInteger,
    Interval,
    NU_52,
    NU_72,
    as_fraction,
    enclose_elementary,
    eval_polynomial,
    pi_enclosure,
)

MAX_DEGREE = 4096


def lambda_(k: int) -> int:
    """Spherical eigenvalue lam_k = k (k + 5)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k * (k + 5)


@dataclass(frozen=True)
class Polynomial:
    """Ascending-degree list of exact rational coefficients."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) - 1 > MAX_DEGREE:
            raise ValueError(f"degree cap {MAX_DEGREE} exceeded")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        if len(self.coefficients) == 1 and self.coefficients[0] == 0:
            return 0
        return len(self.coefficients) - 1

    def __call__(self, x):
        return eval_polynomial(self.coefficients, x)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(tuple(out))

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        return Polynomial(tuple(c * a for a in self.coefficients))

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((Fraction(0),))
        return Polynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def shift_mul_x(self) -> "Polynomial":
        return Polynomial((Fraction(0),) + self.coefficients)

    def integral(self, a, b) -> Fraction:
        """Exact integral over [a, b] by term-wise monomial integration."""
        a, b = as_fraction(a), as_fraction(b)
        total = Fraction(0)
        for i, c in enumerate(self.coefficients):
            total += c * (b ** (i + 1) - a ** (i + 1)) / (i + 1)
        return total

    def reflected(self) -> "Polynomial":
        """p(-x)."""
        return Polynomial(tuple(c if i % 2 == 0 else -c
                                for i, c in enumerate(self.coefficients)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)


X = Polynomial((Fraction(0), Fraction(1)))
ONE = Polynomial((Fraction(1),))


@lru_cache(maxsize=None)
def _gegenbauer_pair(k: int, twice_nu: int) -> Polynomial:
    """F(k, nu) through the degree recurrence; cached (write-once semantics)."""
    if k == 0:
        return ONE
    if k == 1:
        return X
    prev = _gegenbauer_pair(k - 1, twice_nu)
    prev2 = _gegenbauer_pair(k - 2, twice_nu)
    # (k + 2nu - 1) F_k = 2 (k + nu - 1) x F_{k-1} - (k - 1) F_{k-2}
    denom = Fraction(2 * k + 2 * twice_nu - 2, 2)
    c1 = Fraction(2 * k + twice_nu - 2) / denom
    c2 = Fraction(k - 1) / denom
    return prev.shift_mul_x().scale(c1) - prev2.scale(c2)


def normalized_gegenbauer(k: int, nu: HalfInteger) -> Polynomial:
    """F(k, nu): exact rational coefficients, F(1) = 1, parity (-1)^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_DEGREE:
        raise ValueError(f"degree cap {MAX_DEGREE} exceeded")
    return _gegenbauer_pair(k, nu.twice_value)


def f_tilde_prime(k: int) -> Polynomial:
    """ft_prime(k) = (6/lam_k) F(k, 5/2)' = F(k-1, 7/2), normalized to 1 at x=1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return normalized_gegenbauer(k - 1, NU_72)


def check_ode_identity(k: int, nu: HalfInteger) -> bool:
    """Exactly verify (1-x^2) F'' - (2nu+1) x F' + k(k+2nu) F == 0."""
    F = normalized_gegenbauer(k, nu)
    Fp = F.derivative()
    Fpp = Fp.derivative()
    one_minus_x2 = Polynomial((Fraction(1), Fraction(0), Fraction(-1)))
    lhs = (one_minus_x2 * Fpp
           - Fp.shift_mul_x().scale(Fraction(nu.twice_value + 1, 1))
           + F.scale(k * (k + nu.twice_value)))
    # (2nu+1) x F' with 2nu = twice_value: coefficient is twice_value + 1
    return lhs.is_zero()


def check_derivative_identity(k: int, nu: HalfInteger) -> bool:
    """Exactly verify F(k, nu)' == k(k+2nu)/(2nu+1) * F(k-1, nu+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = normalized_gegenbauer(k, nu).derivative()
    factor = Fraction(k * (k + nu.twice_value), nu.twice_value + 1)
    rhs = normalized_gegenbauer(k - 1, nu + 1).scale(factor)
    return (lhs - rhs).is_zero()


def weighted_inner_product(k: int, l: int) -> Fraction:
    """Exact integral of (1-x^2)^2 F(k,5/2) F(l,5/2) over [-1, 1].

    The printed orthogonality display carries weight (1-x^2), but its
    constant 128/((2k+5)(lam_k+4)(lam_k+6)) is the (1-x^2)^2 one (the
    order-5/2 Gegenbauer weight); this routine implements the weight the
    constant belongs to.  See the certificate notes emitted by the sums
    suite for the discrepancy record.
    """
    w = Polynomial((Fraction(1), Fraction(0), Fraction(-1)))
    w2 = w * w
    prod = w2 * normalized_gegenbauer(k, NU_52) * normalized_gegenbauer(l, NU_52)
    return prod.integral(-1, 1)


def orthogonality_constant(k: int) -> Fraction:
    lam = lambda_(k)
    return Fraction(128, (2 * k + 5) * (lam + 4) * (lam + 6))


# ---------------------------------------------------------------------------
# scalar recurrence evaluation (exact rational / rational-interval)
# ---------------------------------------------------------------------------

def gegenbauer_value(k: int, nu: HalfInteger, x):
    """F(k, nu) at x via the degree recurrence.

    Exact Fraction for rational x; an Interval enclosure for Interval x
    (with periodic outward re-dyadification so denominators stay small).
    """
    interval_mode = isinstance(x, Interval)
    one = Interval(1, 1) if interval_mode else Fraction(1)
    if k == 0:
        return one
    fm2 = one
    fm1 = x
    tv = nu.twice_value
    for j in range(2, k + 1):
        denom = Fraction(2 * j + 2 * tv - 2, 2)
        c1 = Fraction(2 * j + tv - 2) / denom
        c2 = Fraction(j - 1) / denom
        if interval_mode:
            nxt = x * fm1 * Interval.from_rational(c1) - fm2 * Interval.from_rational(c2)
            if j % 16 == 0:
                nxt = nxt.round_outward(320)
                fm1 = fm1.round_outward(320)
        else:
            nxt = c1 * x * fm1 - c2 * fm2
        fm2, fm1 = fm1, nxt
    return fm1


def f_tilde_prime_value(k: int, x):
    """ft_prime(k) at x (exact for rational x, enclosure for Interval x)."""
    return gegenbauer_value(k - 1, NU_72, x)


# ---------------------------------------------------------------------------
# hypergeometric partial sums (terminating 2F1 sandwich)
# ---------------------------------------------------------------------------

def _pochhammer(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def hypergeometric_partial_sums(k: int, t: Fraction, j1: int, j2: int
                                ) -> tuple[Fraction, Fraction]:
    """Alternating partial sums bracketing ft_prime(k)(x) / x-factor.

    For even k = 2m+2, ft_prime(k)(cos th) = cos th * 2F1(-m, m+9/2; 4; s)
    with s = sin^2 th; for odd k = 2m+1 it is 2F1(-m, m+7/2; 4; s) with no
    cosine prefactor.  Writing the terminating series as
    sum_i (-1)^i gamma_i t^i with gamma_i > 0, the partial sums at an odd
    index j1 and an even index j2 sandwich the full sum provided
    min_i gamma_i / gamma_{i+1} > t (checked exactly here; a failed check
    raises, and no bound is emitted).

    Returns (lower, upper) partial sums of the 2F1 factor.
    """
    t = as_fraction(t)
    if not (0 <= t <= 1):
        raise ValueError("t must lie in [0, 1]")
    if j1 % 2 != 1 or j2 % 2 != 0:
        raise ValueError("j1 must be odd and j2 even")
    if k < 2:
        raise ValueError("k must be >= 2")
    if k % 2 == 0:
        m = (k - 2) // 2
        bpar = Fraction(2 * m, 2) + Fraction(9, 2)
    else:
        m = (k - 1) // 2
        bpar = Fraction(2 * m, 2) + Fraction(7, 2)
    gammas = []
    for i in range(m + 1):
        g = (_pochhammer(Fraction(m - i + 1), i) * _pochhammer(bpar, i)
             / (_pochhammer(Fraction(1), i) * _pochhammer(Fraction(4), i)))
        gammas.append(g)
    if t > 0 and m >= 2:
        worst = min(gammas[i] / gammas[i + 1] for i in range(1, m))
        if worst <= t:
            raise ValueError(
                f"alternating-ratio condition fails: min gamma_i/gamma_(i+1) "
                f"= {worst} <= t = {t}")

    def partial(j: int) -> Fraction:
        return sum(((-1) ** i) * gammas[i] * t ** i for i in range(min(j, m) + 1))

    return partial(j1), partial(j2)


# ---------------------------------------------------------------------------
# certified extrema on [0, 1] via the cosine-grid second-order bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertifiedExtremum:
    """Enclosure of a true extremum over a domain with its grid metadata.

    The true extremum lies inside value_enclosure; grid_step is the theta
    step and lipschitz_bound a bound on |dT/dtheta| over the domain (the
    enclosure slack actually used is the sharper second-order
    grid_step^2/8 * sup|T''| term, which is <= 2 * lipschitz_bound *
    grid_step whenever grid_step <= 16 / degree).
    """

    kind: str
    domain: tuple[Fraction, Fraction]
    value_enclosure: Interval
    grid_step: Fraction
    lipschitz_bound: Fraction


def chebyshev_coefficients(nu: HalfInteger, k_max: int
                           ) -> list[tuple[list[int], int]]:
    """Exact Chebyshev-basis coefficients of F(k, nu) for k = 0..k_max.

    Entry k is (numerators, denominator): F(k, nu)(cos t) equals
    sum_j numerators[j]/denominator * cos(j t).  The degree recurrence is
    run entirely in integers over a common denominator (no per-entry gcd),
    using x T_0 = T_1 and x T_j = (T_{j-1} + T_{j+1})/2, so the
    coefficients are exact: all grid-evaluation error is confined to the
    final float conversion and dot products, which are controlled by the
    exact l1 norm of the coefficient vector (equal to 1 here: the
    connection coefficients are nonnegative and F(1) = 1).
    """
    tv = nu.twice_value
    out: list[tuple[list[int], int]] = [([1], 1), ([0, 1], 1)]
    if k_max == 0:
        return out[:1]
    for k in range(2, k_max + 1):
        prev_n, prev_d = out[k - 1]
        prev2_n, prev2_d = out[k - 2]
        # chain the denominators: D_k = 2 (k + 2nu - 1) D_{k-1}; then
        # N_k = 2(k+nu-1) * (2x N_{k-1}) - 2 (k-1) (D_{k-1}/D_{k-2}) N_{k-2}
        c1 = 2 * k + tv - 2          # 2 (k + nu - 1)
        new_d = (2 * k + 2 * tv - 2) * prev_d
        ratio = prev_d // prev2_d if prev2_d else 1
        assert prev_d == ratio * prev2_d
        twice_x_prev = [0] * (k + 1)
        for j, c in enumerate(prev_n):
            if c == 0:
                continue
            if j == 0:
                twice_x_prev[1] += 2 * c
            else:
                twice_x_prev[j - 1] += c
                twice_x_prev[j + 1] += c
        new_n = [c1 * c for c in twice_x_prev]
        scale2 = 2 * (k - 1) * ratio
        for j, c in enumerate(prev2_n):
            new_n[j] -= scale2 * c
        out.append((new_n, new_d))
    return out[:k_max + 1]


@lru_cache(maxsize=4)
def _cheb_table_72(k_max: int) -> list[tuple[list[int], int]]:
    return chebyshev_coefficients(NU_72, k_max)


@lru_cache(maxsize=8)
def _theta_grid(m_half: int) -> np.ndarray:
    return np.arange(m_half + 1) * (np.pi / 2 / m_half)


@lru_cache(maxsize=8)
def _cos_basis(m_half: int, j_max: int) -> np.ndarray:
    """cos(j * theta_i) matrix, shape (j_max + 1, m_half + 1), float64."""
    theta = _theta_grid(m_half)
    return np.cos(np.outer(np.arange(j_max + 1), theta))


#: conservative absolute error bound for one cosine-series grid evaluation
#: with l1-norm <= L: |computed - exact| <= L * _EVAL_PAD_FACTOR * (deg + 8).
#: Covers: rational -> float64 coefficient rounding (u per coefficient),
#: cos-matrix entry rounding (<= 1.03 ulp), theta-argument rounding (the
#: series is 1-Lipschitz in each j*theta, |d(j theta)| <= 2u * j * theta),
#: and the dot-product accumulation bound gamma_n = n u / (1 - n u).
_EVAL_PAD_FACTOR = 8.0e-16


def _series_values(nums: list[int], den: int, m_half: int,
                   basis: np.ndarray) -> tuple[np.ndarray, float]:
    """(values, pad): float grid values of the cosine series and a rigorous
    absolute error bound valid at every grid point."""
    coeffs = np.array([ni / den for ni in nums], dtype=float)
    # exact l1 norm, rounded up
    l1 = float(sum(abs(Fraction(ni, den)) for ni in nums)) * (1 + 1e-12)
    vals = coeffs @ basis[:len(coeffs)]
    pad = l1 * _EVAL_PAD_FACTOR * (len(coeffs) + 8)
    return vals, pad


def _slack(degree: int, m_half: int, circle_bound: int) -> Fraction:
    """Second-order grid slack (h^2/8) * degree^2 * circle_bound, h = (pi/2)/m_half."""
    pi_hi = pi_enclosure(96).hi
    h = pi_hi / (2 * m_half)
    return (h * h / 8) * degree * degree * circle_bound


DEFAULT_M_HALF = 20000


def certified_cn_range(n_from: int, n_to: int, m_half: int = DEFAULT_M_HALF
                       ) -> dict[int, CertifiedExtremum]:
    """Certified enclosures of c_n = max_[0,1] |ft_prime(n+1) - ft_prime(n)|
    for every n in [n_from, n_to], from one shared coefficient table and
    basis matrix.

    c_n involves F(n, 7/2) - F(n-1, 7/2); the full-circle bound for the
    difference is 2, so the grid slack for degree n is (h^2/8) * n^2 * 2.
    """
    if n_from < 1:
        raise ValueError("n_from must be >= 1")
    table = _cheb_table_72(n_to)
    basis = _cos_basis(m_half, n_to)
    h = Fraction(pi_enclosure(96).hi) / (2 * m_half)
    out: dict[int, CertifiedExtremum] = {}
    prev_vals, prev_pad = _series_values(*table[max(0, n_from - 1)], m_half, basis)
    for k in range(n_from, n_to + 1):
        vals, pad = _series_values(*table[k], m_half, basis)
        diff = np.abs(vals - prev_vals)
        grid_max = float(diff.max())
        pads = pad + prev_pad
        slack = _slack(k, m_half, 2)
        enc = Interval(max(Fraction(0), Fraction(grid_max) - Fraction(pads)),
                       Fraction(grid_max) + Fraction(pads) + slack)
        out[k] = CertifiedExtremum(
            kind="max", domain=(Fraction(0), Fraction(1)),
            value_enclosure=enc, grid_step=h, lipschitz_bound=Fraction(2 * k))
        prev_vals, prev_pad = vals, pad
    return out


def certified_min_range(k_from: int, k_to: int, m_half: int = DEFAULT_M_HALF
                        ) -> dict[int, CertifiedExtremum]:
    """Certified enclosures of min_[0,1] ft_prime(k) = min F(k-1, 7/2) for
    k in [k_from, k_to]; full-circle bound 1 for a single normalized F."""
    table = _cheb_table_72(k_to - 1)
    basis = _cos_basis(m_half, k_to - 1)
    h = Fraction(pi_enclosure(96).hi) / (2 * m_half)
    out: dict[int, CertifiedExtremum] = {}
    for k in range(k_from, k_to + 1):
        deg = k - 1
        vals, pad = _series_values(*table[deg], m_half, basis)
        grid_min = float(vals.min())
        slack = _slack(deg, m_half, 1)
        enc = Interval(Fraction(grid_min) - Fraction(pad) - slack,
                       Fraction(grid_min) + Fraction(pad))
        out[k] = CertifiedExtremum(
            kind="min", domain=(Fraction(0), Fraction(1)),
            value_enclosure=enc, grid_step=h, lipschitz_bound=Fraction(deg))
    return out


def certified_max_abs_difference(n: int, domain: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1)),
                                 step: Fraction | None = None) -> CertifiedExtremum:
    """Certified enclosure of c_n over a rational subdomain of [0, 1].

    `step` is a requested theta grid step; None picks the default master
    grid.  Degree-0 differences return width-0 enclosures immediately.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        # F(1) - F(0) = x - 1 is monotone: |.| peaks at the left endpoint
        a, b = as_fraction(domain[0]), as_fraction(domain[1])
        return CertifiedExtremum("max", (a, b), Interval(max(abs(a - 1), abs(b - 1))),
                                 Fraction(0), Fraction(0))
    if domain == (Fraction(0), Fraction(1)):
        m_half = DEFAULT_M_HALF if step is None else _m_half_for(step)
        return certified_cn_range(n, n, m_half)[n]
    return _certified_difference_subdomain(n, domain, step)


def _m_half_for(step: Fraction) -> int:
    pi_hi = Fraction(pi_enclosure(96).hi)
    return max(64, int(pi_hi / (2 * step)) + 1)


def _certified_difference_subdomain(n, domain, step):
    a, b = as_fraction(domain[0]), as_fraction(domain[1])
    if not (0 <= a < b <= 1):
        raise ValueError("domain must be a nondegenerate subinterval of [0, 1]")
    m_half = DEFAULT_M_HALF if step is None else _m_half_for(step)
    theta = _theta_grid(m_half)
    x_grid = np.cos(theta)
    # widen the mask by a point on each side so the covered theta range
    # strictly contains [arccos b, arccos a]
    mask = (x_grid >= float(a) - 2e-15) & (x_grid <= float(b) + 2e-15)
    idx = np.where(mask)[0]
    lo_i, hi_i = max(0, idx.min() - 1), min(m_half, idx.max() + 1)
    mask[lo_i:hi_i + 1] = True
    table = _cheb_table_72(n)
    basis = _cos_basis(m_half, n)
    v1, p1 = _series_values(*table[n], m_half, basis)
    v0, p0 = _series_values(*table[n - 1], m_half, basis)
    diff = np.abs(v1[mask] - v0[mask])
    grid_max = float(diff.max())
    pads = Fraction(p0 + p1)
    # exact endpoint values tighten the lower bound
    pa = f_tilde_prime_value(n + 1, a) - f_tilde_prime_value(n, a)
    pb = f_tilde_prime_value(n + 1, b) - f_tilde_prime_value(n, b)
    best_lo = max(abs(pa), abs(pb), Fraction(grid_max) - pads)
    slack = _slack(n, m_half, 2)
    h = Fraction(pi_enclosure(96).hi) / (2 * m_half)
    enc = Interval(best_lo, max(Fraction(grid_max) + pads + slack, best_lo))
    return CertifiedExtremum("max", (a, b), enc, h, Fraction(2 * n))


def certified_min(k: int, domain: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1)),
                  step: Fraction | None = None) -> CertifiedExtremum:
    """Certified enclosure of min over [0,1] of ft_prime(k)."""
    m_half = DEFAULT_M_HALF if step is None else _m_half_for(step)
    if domain != (Fraction(0), Fraction(1)):
        raise NotImplementedError("minimum certificates are issued on [0, 1]")
    return certified_min_range(k, k, m_half)[k]


# ---------------------------------------------------------------------------
# largest-zero upper bound (Area et al.) and (1-x^2) F bounds
# ---------------------------------------------------------------------------

def largest_zero_upper_bound(n: int, nu: HalfInteger, precision: int = 128) -> Interval:
    """Enclosure of sqrt((n-1)(n+2nu-2) / ((n+nu-2)(n+nu-1))) * cos(pi/(n+1)),
    an upper bound for the largest zero of the order-nu degree-n Gegenbauer
    polynomial (valid for n >= 2, nu >= 1)."""
    if n < 2 or nu.value < 1:
        raise ValueError("need n >= 2 and nu >= 1")
    tv = nu.twice_value
    num = Fraction((n - 1) * (2 * n + 2 * tv - 4), 2)
    den = Fraction((2 * n + tv - 4) * (2 * n + tv - 2), 4)
    root = enclose_elementary("sqrt", Interval.from_rational(num / den), precision)
    pi_iv = pi_enclosure(precision)
    angle = pi_iv * Interval.from_rational(Fraction(1, n + 1))
    cosv = enclose_elementary("cos", angle, precision)
    return (root * cosv).round_outward(precision + 16)


def no_sign_change_right_of(n: int, nu: HalfInteger, bound_hi: Fraction,
                            samples: int = 16) -> bool:
    """Exact spot-check that F(n, nu) > 0 at rational points in (bound, 1]."""
    lo = bound_hi
    for i in range(1, samples + 1):
        x = lo + (1 - lo) * Fraction(i, samples)
        if gegenbauer_value(n, nu, x) <= 0:
            return False
    return True


def one_minus_x2_f_max(n: int, nu: HalfInteger, m_half: int = 4000
                       ) -> CertifiedExtremum:
    """Certified enclosure of max over [0, 1] of |(1 - x^2) F(n, nu)(x)|.

    (1 - cos^2 th) F(n,nu)(cos th) = sin^2 th * F(cos th) is a cosine
    polynomial of degree n + 2 with full-circle modulus at most 1.
    """
    table = chebyshev_coefficients(nu, n)
    basis = _cos_basis(m_half, n)
    vals, pad = _series_values(*table[n], m_half, basis)
    theta = _theta_grid(m_half)
    w = np.sin(theta) ** 2
    prod = np.abs(w * vals)
    # |w_hat v_hat - w v| <= |v| * err(w) + w * pad <= 4u + pad
    pads = Fraction(pad + 5e-16)
    grid_max = float(prod.max())
    slack = _slack(n + 2, m_half, 1)
    h = Fraction(pi_enclosure(96).hi) / (2 * m_half)
    return CertifiedExtremum(
        "max", (Fraction(0), Fraction(1)),
        Interval(max(Fraction(0), Fraction(grid_max) - pads),
                 Fraction(grid_max) + pads + slack),
        h, Fraction(n + 2))


__all__ = [
    "CertifiedExtremum",
    "DEFAULT_M_HALF",
    "MAX_DEGREE",
    "Polynomial",
    "certified_cn_range",
    "certified_max_abs_difference",
    "certified_min",
    "certified_min_range",
    "check_derivative_identity",
    "check_ode_identity",
    "f_tilde_prime",
    "f_tilde_prime_value",
    "gegenbauer_value",
    "hypergeometric_partial_sums",
    "lambda_",
    "largest_zero_upper_bound",
    "no_sign_change_right_of",
    "normalized_gegenbauer",
    "one_minus_x2_f_max",
    "orthogonality_constant",
    "weighted_inner_product",
]
