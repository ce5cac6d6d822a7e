"""Certificate-producing checks: bound envelopes, closed-form sums,
quotient bounds, the scalar inequality ledger, base bounds, and the
induction negativity sweep.

Every check evaluates a stated inequality against a rigorous enclosure
and returns a `Certificate` with verdict Pass / Fail / Inconclusive.
Pass requires the enclosure to satisfy the inequality outright (and is
never granted in float64 screening mode); Fail requires the enclosure to
violate it outright; anything straddling is Inconclusive and is retried
up the precision ladder by the callers in `qcv.cli_report`.

Where the source displays carry typos (they do; see the individual
check notes), the defining sums/integrals are authoritative: corrected
closed forms are derived from the definitions, verified against direct
summation exactly, and the printed variants are re-checked verbatim and
recorded with honest verdicts.

The induction sweep: with b = 33/100, d = 8 and 1/alpha <= 2, the
negativity target for each n = 1 (mod 4) is the quartic

    g(a) = k0 + k1 a + k2 a^2 + k3 a^3 + k4 a^4,

assembled from the eigenvalue-weighted sums S1..S7 (closed forms, exact)
-- see `_g_quartic` for the exact coefficients.  Negativity over the
whole induction window [d0/lam_{n+4}, d0/lam_n] follows from negativity
at both endpoints plus certified convexity of g on the window (g'' > 0
there, checked exactly), which closes the gap left by treating the
quartic as a parabola.

Concurrency: the sweep is a pure map over n; certificates are merged in
ascending order; nothing here mutates shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .numerics import (
    DEFAULT_PRECISION,
    HalfInteger,
    Interval,
    NU_72,
    NU_92,
    as_fraction,
    enclose_elementary,
)
from . import asymptotics, orthopoly
from .orthopoly import lambda_

PASS, FAIL, INCONCLUSIVE = "Pass", "Fail", "Inconclusive"

B_CONST = Fraction(33, 100)
D_CONST = Fraction(8)
D0_CONST = Fraction(16)
M0_CONST = Fraction(1, 25)
ALPHA_LO = Fraction(1, 2)
ALPHA_HI = Fraction(289, 500)  # 0.578


@dataclass(frozen=True)
class VerificationContext:
    """Proof constants and index parameters shared by the checks."""

    alpha: Interval = field(default_factory=lambda: Interval(ALPHA_LO, ALPHA_HI))
    b: Fraction = B_CONST
    d: Fraction = D_CONST
    d0: Fraction = D0_CONST
    m0: Fraction = M0_CONST
    n: int = 0

    def __post_init__(self):
        if not (Fraction(1, 2) <= self.alpha.lo and self.alpha.hi < 1):
            raise ValueError("alpha range must sit inside [1/2, 1)")

    @property
    def inv_alpha(self) -> Interval:
        return Interval(Fraction(1) / self.alpha.hi, Fraction(1) / self.alpha.lo)

    def a_range(self, n: int) -> tuple[Fraction, Fraction]:
        return (self.d0 / lambda_(n + 4), self.d0 / lambda_(n))


DEFAULT_CONTEXT = VerificationContext()


@dataclass
class Certificate:
    """One check: identity, claimed bound, computed enclosure, verdict."""

    check_id: str
    params: dict
    claimed: str
    computed: Interval | Fraction | None
    verdict: str
    mode: str = "exact"
    precision_bits: int = DEFAULT_PRECISION
    runtime_ms: int = 0
    notes: str = ""

    def __post_init__(self):
        if self.verdict == PASS and self.mode == "float64":
            raise ValueError("float64 screening mode cannot emit Pass")


def _screen(verdict: str, mode: str) -> str:
    if mode == "float64" and verdict == PASS:
        return INCONCLUSIVE
    return verdict


def _cert_upper(check_id: str, params: dict, value: Interval, bound: Fraction,
                strict: bool, mode: str, notes: str = "",
                precision: int = DEFAULT_PRECISION) -> Certificate:
    """Certificate for value <= bound (or < bound when strict)."""
    if (value.hi < bound) if strict else (value.hi <= bound):
        verdict = PASS
    elif (value.lo >= bound) if strict else (value.lo > bound):
        verdict = FAIL
    else:
        verdict = INCONCLUSIVE
    op = "<" if strict else "<="
    return Certificate(check_id, params, f"{op} {bound}", value,
                       _screen(verdict, mode), mode, precision, 0, notes)


def _cert_lower(check_id: str, params: dict, value: Interval, bound: Fraction,
                strict: bool, mode: str, notes: str = "",
                precision: int = DEFAULT_PRECISION) -> Certificate:
    if (value.lo > bound) if strict else (value.lo >= bound):
        verdict = PASS
    elif (value.hi <= bound) if strict else (value.hi < bound):
        verdict = FAIL
    else:
        verdict = INCONCLUSIVE
    op = ">" if strict else ">="
    return Certificate(check_id, params, f"{op} {bound}", value,
                       _screen(verdict, mode), mode, precision, 0, notes)


def _cert_bool(check_id: str, params: dict, ok: bool, claim: str, mode: str,
               notes: str = "") -> Certificate:
    return Certificate(check_id, params, claim, None,
                       _screen(PASS if ok else FAIL, mode), mode,
                       DEFAULT_PRECISION, 0, notes)


# ---------------------------------------------------------------------------
# bound envelopes (Theorem-3.2 shape)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundEnvelope:
    branch: str                 # "small_lambda" | "large_lambda"
    a_side: Fraction            # a_plus or a_minus
    lambda_k: int
    chi_flag: bool = True       # chi_{lambda != 1} factor on the minus side


def envelope_A(side: str, a_side, lam_k: int, lam_n: int,
               ctx: VerificationContext = DEFAULT_CONTEXT,
               chi_flag: bool = True) -> Fraction:
    """Envelope value for |A_k^{+/-}|, branch selected by the case split.

    Plus side: parabola branch a - ((1-b)/d) lam_k a^2 when
    lam_k <= lam_n / 4, else b a + (1-b) d/(4 lam_k) (for lam_k <= lam_n).
    Minus side: parabola branch when a_- <= 4/lam_n, the b-branch (with
    the chi factor) when 4/lam_n < a_- <= 8/lam_n.  Inputs outside the
    branch conditions are rejected.
    """
    a_side = as_fraction(a_side)
    if not (0 <= a_side <= 1):
        raise ValueError("envelope mass must lie in [0, 1]")
    if lam_k < lambda_(2):
        raise ValueError("lambda_k below lambda_2")
    b, d = ctx.b, ctx.d
    if side == "+":
        if 4 * lam_k <= lam_n:
            return a_side - (1 - b) / d * lam_k * a_side ** 2
        if lam_k <= lam_n:
            return b * a_side + (1 - b) * d / (4 * lam_k)
        raise ValueError("plus-side branch condition not met (lambda_k > lambda_n)")
    if side == "-":
        if a_side <= Fraction(4, lam_n):
            return a_side - (1 - b) / d * lam_k * a_side ** 2
        if a_side <= Fraction(8, lam_n):
            chi = 1 if chi_flag else 0
            return b * a_side + (1 - b) * d / (4 * lam_k) * chi
        raise ValueError("minus-side branch condition not met (a_- > 8/lambda_n)")
    raise ValueError("side must be '+' or '-'")


def _envelope_best(a_side: Fraction, lam_k: int,
                   ctx: VerificationContext, chi: bool) -> Fraction:
    """Least valid envelope bound for one half-line mass.

    Both branch expressions are upper bounds wherever their validity
    condition holds: the parabola a - ((1-b)/d) lam_k a^2 whenever
    a_side <= d/(2 lam_k) (the increasing part of the parabola), and
    b a + (1-b) d/(4 lam_k) always (the parabola's vertex value).  The
    worst-split comparison is assembled from the least valid bound, which
    is how the lambda-split proposition's own case analysis proceeds; the
    printed case split of the envelope theorem chooses between the same
    two expressions by sufficient conditions only.
    """
    b, d = ctx.b, ctx.d
    cands = [b * a_side + (1 - b) * d / (4 * lam_k) * (1 if chi else 0)]
    if a_side <= d / (2 * lam_k):
        cands.append(a_side - (1 - b) / d * lam_k * a_side ** 2)
    return min(cands)


def envelope_crossover_identity(lam_k: int, ctx: VerificationContext = DEFAULT_CONTEXT) -> bool:
    """Exact: the two envelope branches agree at the crossover mass
    a = d / (2 lam_k), where both equal d (1 + b) / (4 lam_k)."""
    a = ctx.d / (2 * lam_k)
    small = a - (1 - ctx.b) / ctx.d * lam_k * a ** 2
    large = ctx.b * a + (1 - ctx.b) * ctx.d / (4 * lam_k)
    return small == large == ctx.d * (1 + ctx.b) / (4 * lam_k)


# ---------------------------------------------------------------------------
# S1..S7: definitions, closed forms (printed and corrected), bounds
# ---------------------------------------------------------------------------

def s_sums_direct(n: int) -> tuple[Fraction, ...]:
    """Direct summation of S1..S7 with 11/(7 alpha) instantiated at 22/7."""
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and >= 5")
    L1 = Fraction(lambda_(n + 1)) + Fraction(22, 7)
    r1 = range(2, (n - 3) // 2 + 1)
    r2 = range((n - 1) // 2, n + 1)
    S1 = sum(((L1 - lambda_(k)) * (2 * k + 5) for k in r1), Fraction(0))
    S2 = sum(((L1 - lambda_(k)) * (2 * k + 5) * lambda_(k) for k in r1), Fraction(0))
    S3 = sum(((L1 - lambda_(k)) * (2 * k + 5) * lambda_(k) ** 2 for k in r1), Fraction(0))
    S4 = sum(((L1 - lambda_(k)) * (2 * k + 5) for k in r2), Fraction(0))
    S5 = sum((Fraction(2 * k + 5, lambda_(k)) for k in r2), Fraction(0))
    S6 = sum((Fraction(2 * k + 5) for k in r2), Fraction(0))
    S7 = sum((Fraction(2 * k + 5, lambda_(k) ** 2) for k in r2), Fraction(0))
    return S1, S2, S3, S4, S5, S6, S7


_S1_COEFFS = (Fraction(-20075, 224), Fraction(-4265, 56), Fraction(-115, 112),
              Fraction(23, 8), Fraction(7, 32))
# printed S2/S3 tails are a copy-paste of each other and S3's n^2 sign is
# flipped; the corrected vectors below are fixed exactly by matching the
# defining sums on > deg+1 lattice points (a polynomial identity in n)
_S2_COEFFS = (Fraction(-3795, 64), Fraction(-9437, 28), Fraction(-100207, 1344),
              Fraction(-9, 28), Fraction(3611, 1344), Fraction(1, 2), Fraction(5, 192))
_S2_PRINTED = (Fraction(-1040985, 1024), Fraction(-1393237, 896), Fraction(-100207, 5376),
               Fraction(-9, 28), Fraction(3611, 1344), Fraction(1, 2), Fraction(5, 192))
_S3_COEFFS = (Fraction(-1040985, 1024), Fraction(-1393237, 896), Fraction(-1000525, 5376),
              Fraction(-14917, 384), Fraction(-48697, 3584), Fraction(3011, 2688),
              Fraction(1525, 1792), Fraction(41, 384), Fraction(13, 3072))
_S3_PRINTED = (Fraction(-1040985, 1024), Fraction(-1393237, 896), Fraction(1000525, 5376),
               Fraction(-14917, 384), Fraction(-48697, 3584), Fraction(3011, 2688),
               Fraction(1525, 1792), Fraction(41, 384), Fraction(13, 3072))
_S4_COEFFS = (Fraction(15147, 224), Fraction(3753, 56), Fraction(2763, 112),
              Fraction(33, 8), Fraction(9, 32))
_S6_COEFFS = (Fraction(27, 4), Fraction(9, 2), Fraction(3, 4))


def _poly_at(coeffs: Sequence[Fraction], n: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def s7_closed(n: int) -> Fraction:
    """Telescoped ten-term exact form of S7."""
    n = Fraction(n)
    return (Fraction(4) / (n - 1) ** 2 + 3 / (n + 1) ** 2 - 1 / (n + 2) ** 2
            + 3 / (n + 3) ** 2 - 1 / (n + 4) ** 2 + 3 / (n + 5) ** 2
            + 4 / (n + 7) ** 2) / 5


_HARMONIC_LIMIT = 10010
_HARMONIC_PAD = Fraction(1, 10 ** 10)  # >= 2 (j+1) u H_j for j <= 10010


def _harmonic_prefix() -> np.ndarray:
    h = np.zeros(_HARMONIC_LIMIT + 1)
    h[1:] = np.cumsum(1.0 / np.arange(1, _HARMONIC_LIMIT + 1))
    return h


_HARMONIC = _harmonic_prefix()


def s5_interval(n: int) -> Interval:
    """Tight rational-interval enclosure of S5 = sum (1/k + 1/(k+5)) over
    k = (n-1)/2 .. n, via padded float64 harmonic prefix sums."""
    K = (n - 1) // 2
    val = (Fraction(_HARMONIC[n]) - Fraction(_HARMONIC[K - 1])
           + Fraction(_HARMONIC[n + 5]) - Fraction(_HARMONIC[K + 4]))
    return Interval(val - 4 * _HARMONIC_PAD, val + 4 * _HARMONIC_PAD)


def closed_form_sums(n: int) -> tuple[Fraction, Fraction, Fraction, Fraction,
                                      Fraction, Fraction, Fraction]:
    """S1..S7 for odd n >= 5: polynomial closed forms for S1..S4 and S6
    (corrected where the printed ones are typo'd), the telescoped exact S7,
    and the exact harmonic-difference S5."""
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and >= 5")
    S1 = _poly_at(_S1_COEFFS, n)
    S2 = _poly_at(_S2_COEFFS, n)
    S3 = _poly_at(_S3_COEFFS, n)
    S4 = _poly_at(_S4_COEFFS, n)
    S6 = _poly_at(_S6_COEFFS, n)
    S7 = s7_closed(n)
    K = (n - 1) // 2
    S5 = sum((Fraction(1, k) + Fraction(1, k + 5) for k in range(K, n + 1)), Fraction(0))
    return S1, S2, S3, S4, S5, S6, S7


def sum_identity_certificates(n_values: Iterable[int], mode: str = "exact"
                              ) -> list[Certificate]:
    """S1..S7 closed forms vs direct summation, exact equality, plus the
    S5 >= 1.3863 and S7 <= 3/n^2 bounds and the printed-S2/S3 records."""
    out = []
    for n in n_values:
        direct = s_sums_direct(n)
        closed = closed_form_sums(n)
        for i, (d, c) in enumerate(zip(direct, closed), start=1):
            note = ""
            if i == 2:
                note = ("closed form corrected: printed display's n^2..n^0 "
                        "coefficients are a copy-paste of the S3 tail")
            if i == 3:
                note = "closed form corrected: printed display flips the n^2 sign"
            out.append(_cert_bool(f"sums/S{i}/n={n}", {"n": n}, d == c,
                                  "closed form == direct summation (exact)",
                                  mode, note))
        out.append(_cert_lower(f"sums/S5-bound/n={n}", {"n": n},
                               Interval.from_rational(direct[4]),
                               Fraction(13863, 10000), False, mode))
        out.append(_cert_upper(f"sums/S7-bound/n={n}", {"n": n},
                               Interval.from_rational(direct[6]),
                               Fraction(3, n * n), False, mode))
    ns = [c.params["n"] for c in out if c.check_id.startswith("sums/S1/")]
    if ns:
        dev2 = {n: _poly_at(_S2_PRINTED, n) - s_sums_direct(n)[1] for n in ns}
        dev3 = {n: _poly_at(_S3_PRINTED, n) - s_sums_direct(n)[2] for n in ns}
        out.append(_cert_bool(
            "sums/S2-printed-display", {"n_checked": ns},
            all(v == 0 for v in dev2.values()),
            "printed S2 display == direct summation for every checked n", mode,
            "the printed display's n^2..n^0 coefficients are a copy-paste of "
            f"the S3 tail (deviation at n={ns[0]}: {float(dev2[ns[0]]):.6g}); "
            "the corrected closed form is used downstream"))
        out.append(_cert_bool(
            "sums/S3-printed-display", {"n_checked": ns},
            all(v == 0 for v in dev3.values()),
            "printed S3 display == direct summation for every checked n", mode,
            "the printed display flips the sign of the n^2 coefficient "
            f"(deviation at n={ns[0]}: {float(dev3[ns[0]]):.6g}); the "
            "corrected closed form is used downstream"))
    out.append(_cert_bool(
        "sums/orthogonality-weight-note", {},
        all(orthopoly.weighted_inner_product(k, k) == orthopoly.orthogonality_constant(k)
            for k in (0, 1, 2, 3)),
        "norm constant 128/((2k+5)(lam+4)(lam+6)) matches weight (1-x^2)^2",
        mode,
        "the orthogonality display is written with weight (1-x^2) but its "
        "constant belongs to (1-x^2)^2; the artifact implements (1-x^2)^2"))
    return out


# ---------------------------------------------------------------------------
# quotient of consecutive B_k weights and its regime bounds
# ---------------------------------------------------------------------------

def b_quotient(n: int, k: int, alpha: Interval | None = None) -> Interval:
    """Enclosure of (B_{k+1} - B_k)/(B_{k+1} + B_k) over the alpha range.

    The quotient is a Mobius function of c = 11/(7 alpha), hence monotone
    in alpha; the hull of the two alpha-endpoint values encloses it.
    """
    if not (2 <= k <= n):
        raise ValueError("need 2 <= k <= n")
    alpha = alpha if alpha is not None else DEFAULT_CONTEXT.alpha
    vals = []
    for a in (alpha.lo, alpha.hi):
        c = Fraction(11, 7) / a
        num = Fraction(n * n + 7 * n - 3 * k * k - 18 * k - 15) + c
        den = (k + 3) * (Fraction(2 * n * n + 14 * n - 2 * k * k - 12 * k + 5) + 2 * c)
        vals.append(num / den)
    return Interval(min(vals), max(vals))


def quotient_regime_certificates(n_samples: Iterable[int], mode: str = "interval",
                                 c_upper: dict[int, Fraction] | None = None
                                 ) -> list[Certificate]:
    """Per-n records of the printed quotient bounds and their robust
    aggregates.  The printed 0.054 (case 1, k = 6) holds only up to
    n = 72 -- the k = 6 quotient increases to 1/18 = 0.0555... -- and the
    printed 0.008 (case 2, k near n/sqrt(2)) needs n >= 89; both are
    recorded verbatim with honest verdicts, alongside the aggregate
    0.191 - c_k - quotient > 0 which is what the argument consumes.
    """
    n_samples = list(n_samples)
    out = []
    for n in n_samples:
        q6 = b_quotient(n, 6)
        out.append(_cert_upper(
            f"prop-grid/quotient-bd1/n={n}", {"n": n, "k": 6}, q6,
            Fraction(54, 1000), True, mode,
            "printed bound; the k=6 quotient increases in n with limit 1/18 "
            "= 0.0556 > 0.054, so the display holds only for n <= 72"))
        # robust case-1 aggregate: 0.191 - c_bound(k) - quotient(n, k) > 0
        worst = None
        kmax = _case1_k_max(n)
        for k in range(6, kmax + 1):
            q = b_quotient(n, k)
            cb = Fraction(12, 100) if k <= 29 else Fraction(26, 1000)
            margin = Fraction(191, 1000) - cb - q.hi
            if worst is None or margin < worst:
                worst = margin
        if worst is not None:
            out.append(_cert_lower(
                f"prop-grid/case1-aggregate/n={n}", {"n": n, "k_range": [6, kmax]},
                Interval.from_rational(worst), Fraction(0), True, mode,
                "0.191 - c_k - quotient over the case-1 k range, with the "
                "certified uniform c_k bounds (0.12 below 30, 0.026 above)"))
        # case-2 max quotient < 1/3 (with the corrected numerator, which
        # carries a factor n missing from the printed display)
        qmax = max((-b_quotient(n, k)).hi for k in range(max(3, n // 2 - 2), n))
        out.append(_cert_upper(
            f"prop-grid/quotient-max/n={n}", {"n": n}, Interval.from_rational(qmax),
            Fraction(1, 3), True, mode,
            "printed numerator '7a(2n+5)-11' is missing a factor n; the "
            "bound < 1/3 holds for the quotient itself"))
        # printed case-2a bound 0.008 at the top of its k-range
    for n in n_samples:
        k2a = _case2a_k_max(n)
        if k2a is not None:
            q = (-b_quotient(n, k2a))
            out.append(_cert_upper(
                f"prop-grid/quotient-bd2a/n={n}", {"n": n, "k": k2a}, q,
                Fraction(8, 1000), True, mode,
                "printed bound; fails for n <= 88 (worst value ~0.013 at "
                "n = 65) -- the robust case-2a aggregate below is what the "
                "argument needs"))
            cb = _c_bound_lookup(k2a, c_upper)
            agg = Fraction(2746, 100000) - cb - 2 * M0_CONST * q.hi
            out.append(_cert_lower(
                f"prop-grid/case2a-aggregate/n={n}", {"n": n, "k": k2a},
                Interval.from_rational(agg), Fraction(0), True, mode,
                "0.02746 - c_k - 2 m0 * quotient with certified c_k"))
    return out


def _case1_k_max(n: int) -> int:
    k = 6
    while lambda_(k + 1) * 4 <= lambda_(n) and k + 1 <= n:
        k += 1
    return k


def _case2a_k_max(n: int) -> int | None:
    """Largest k with lam_{k+1} <= lam_{n+4}/2 but lam_{k+1} > lam_n/4."""
    best = None
    for k in range(max(3, n // 2 - 2), n):
        if 4 * lambda_(k + 1) > lambda_(n) and 2 * lambda_(k + 1) <= lambda_(n + 4):
            best = k
    return best


def _c_bound_lookup(k: int, c_upper: dict[int, Fraction] | None) -> Fraction:
    if c_upper and k in c_upper:
        return c_upper[k]
    if 6 <= k <= 29:
        return Fraction(12, 100)
    if k >= 30:
        return Fraction(26, 1000)
    raise ValueError(f"no c bound available for k = {k}")


# ---------------------------------------------------------------------------
# base bounds: beta lower bound, alpha upper root, a upper bound
# ---------------------------------------------------------------------------

def _alpha_root_polynomial(a: Fraction) -> Fraction:
    """315 a^2 [ (256/35)(74/(9a)-29)(7-1/a) + (512/7)(13/(9a)+2)/a ]."""
    return -467712 * a * a + 245504 * a + 14336


def base_bounds(alpha: Interval | None = None, tol: Fraction = Fraction(1, 10 ** 9)
                ) -> tuple[Interval, Interval, Interval]:
    """(beta_lower, alpha_upper, a_upper).

    beta_lower: the bound (9/440)(29 - 74/(9 alpha))(7 - 1/alpha) minimized
    over the alpha range; equals 113/88 exactly at alpha = 1/2.
    alpha_upper: enclosure of the positive root of the associated
    quadratic (exact bisection).
    a_upper: (6/7)(1 - alpha_upper * 113/88), reproducing the published
    0.221 combination (largest alpha with smallest beta); note that the
    supremum of (6/7)(1 - alpha beta(alpha)) over the admissible range is
    attained at alpha = 1/2 and equals 27/88 = 0.30682, still below the
    16/lam_5 = 0.32 the base case needs.
    """
    alpha = alpha if alpha is not None else DEFAULT_CONTEXT.alpha

    def beta_lb(a: Fraction) -> Fraction:
        return Fraction(9, 440) * (29 - Fraction(74, 9) / a) * (7 - Fraction(1) / a)

    blo = min(beta_lb(alpha.lo), beta_lb(alpha.hi))
    beta_lower = Interval.from_rational(blo)

    lo, hi = Fraction(1, 2), Fraction(1)
    flo = _alpha_root_polynomial(lo)
    if flo <= 0:
        raise ValueError("bisection bracket invalid at alpha = 1/2")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _alpha_root_polynomial(mid) > 0:
            lo = mid
        else:
            hi = mid
    alpha_upper = Interval(lo, hi)
    a_upper = (Interval(1, 1) - alpha_upper * Fraction(113, 88)) * Fraction(6, 7)
    return beta_lower, alpha_upper, a_upper


def base_bound_certificates(mode: str = "exact") -> list[Certificate]:
    beta_lower, alpha_upper, a_upper = base_bounds()
    out = [
        _cert_bool("base/beta-at-half", {}, beta_lower.lo == Fraction(113, 88),
                   "beta bound at alpha = 1/2 equals 113/88 exactly", mode),
        _cert_upper("base/alpha-upper", {}, alpha_upper, Fraction(578, 1000),
                    True, mode,
                    "positive root of -467712 a^2 + 245504 a + 14336"),
        _cert_lower("base/alpha-upper-above", {}, alpha_upper, Fraction(577, 1000),
                    False, mode, "root localized inside [0.577, 0.578]"),
        _cert_upper("base/a-upper", {}, a_upper, Fraction(222, 1000), False, mode,
                    "published combination (sup alpha, inf beta); the joint "
                    "supremum over admissible (alpha, beta) is 27/88 = 0.30682 "
                    "at alpha = 1/2, still <= 16/lam_5 = 0.32"),
        _cert_upper("base/base-case", {},
                    Interval.from_rational(Fraction(27, 88)),
                    Fraction(16, 50), False, mode,
                    "induction base: a <= 27/88 (honest sup) <= 16/lam_5"),
    ]
    return out


# ---------------------------------------------------------------------------
# g components, the induction quartic, and the sweep
# ---------------------------------------------------------------------------

def _g_quartic(n: int, ctx: VerificationContext, include_ck: bool = False,
               c_upper: dict[int, Fraction] | None = None
               ) -> tuple[Interval, Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (k0, k1, k2, k3, k4) of g(a); k0 is an interval
    (it carries the harmonic S5), the rest are exact rationals."""
    b, d = ctx.b, ctx.d
    inv_alpha_hi = ctx.inv_alpha.hi
    L1 = Fraction(lambda_(n + 1))
    L1t = L1 + Fraction(22, 7)
    S1, S2, S3, S4, _, S6, S7 = closed_form_sums(n)
    S5 = s5_interval(n)
    u = (1 - b) / d
    c189 = Fraction(128, 9)
    k0 = 512 + c189 * (1 - b) ** 2 * d * d / 16 * (S7 * L1t - S5)
    k1 = (Fraction(512, 7) * (L1 + Fraction(51, 7)) * Fraction(7, 6)
          - Fraction(512, 7) * (L1 + Fraction(100, 7)) * Fraction(7, 3)
          + c189 * 2 * b * (1 - b) * d / 4 * (S5 * L1t - S6))
    k2 = (Fraction(512, 7) * (L1 + Fraction(100, 7)) * Fraction(49, 36)
          + Fraction(22528, 63) * inv_alpha_hi + c189 * (S1 + b * b * S4))
    if include_ck:
        if c_upper is None:
            raise ValueError("c_k upper bounds required for the chi-corrected variant")
        extra = Fraction(0)
        ks = list(range(2, (n - 3) // 2 + 1)) + list(range((n - 1) // 2, n + 1))
        for k in ks:
            extra += (L1t - lambda_(k)) * (2 * k + 5) * Fraction(1, 2) * c_upper[k]
        k2 = k2 + c189 * extra
    k3 = -c189 * 2 * u * S2
    k4 = c189 * u * u * S3
    return _as_iv(k0), k1, k2, k3, k4


def _quartic_value(coeffs, a: Fraction) -> Interval:
    k0, k1, k2, k3, k4 = coeffs
    val = k0 + _as_iv(k1) * a + _as_iv(k2) * a ** 2 + _as_iv(k3) * a ** 3 + _as_iv(k4) * a ** 4
    return val


def _as_iv(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.from_rational(x)


def g_tilde(n: int, a, ctx: VerificationContext = DEFAULT_CONTEXT,
            include_ck: bool = False,
            c_upper: dict[int, Fraction] | None = None) -> Interval:
    """Enclosure of the induction target g(a) (quartic in a; the printed
    'parabola' remark undercounts the degree -- the bracket
    (1 - (1-b) lam_k a / d)^2 multiplies a^2)."""
    a = as_fraction(a)
    return _quartic_value(_g_quartic(n, ctx, include_ck, c_upper), a)


def g_components(n: int, a, ctx: VerificationContext = DEFAULT_CONTEXT
                 ) -> tuple[Interval, Interval, Interval]:
    """(g1, g2, g3) at a: the first-line quadratic, the low-k sum, and the
    high-k sum, each as rational intervals (alpha hulled in g1)."""
    a = as_fraction(a)
    b, d = ctx.b, ctx.d
    L1 = Fraction(lambda_(n + 1))
    L1t = L1 + Fraction(22, 7)
    t = 1 - Fraction(7, 6) * a
    g1_core = (-Fraction(512, 7) * (L1 + Fraction(51, 7)) * t
               + Fraction(512, 7) * (L1 + Fraction(100, 7)) * t ** 2)
    g1 = Interval.from_rational(g1_core) + ctx.inv_alpha * Fraction(22528, 63) * a ** 2
    S1, S2, S3, S4, _, S6, S7 = closed_form_sums(n)
    S5 = s5_interval(n)
    u = (1 - b) / d
    g2 = Interval.from_rational(
        Fraction(128, 9) * (S1 - 2 * u * S2 * a + u * u * S3 * a * a) * a * a)
    g3 = (Interval.from_rational(Fraction(128, 9))
          * (Interval.from_rational(b * b * S4 * a * a)
             + S5 * (2 * b * (1 - b) * d / 4 * L1t * a)
             - Interval.from_rational(2 * b * (1 - b) * d / 4 * S6 * a)
             + Interval.from_rational((1 - b) ** 2 * d * d / 16 * L1t * s7_closed(n))
             - S5 * ((1 - b) ** 2 * d * d / 16)))
    return g1, g2, g3


def g_components_interval(n: int, a: Interval,
                          ctx: VerificationContext = DEFAULT_CONTEXT
                          ) -> tuple[Interval, Interval, Interval]:
    """(g1, g2, g3) with a ranging over an interval (see `g_components`)."""
    b, d = ctx.b, ctx.d
    L1 = Fraction(lambda_(n + 1))
    L1t = L1 + Fraction(22, 7)
    t = Interval(1, 1) - a * Fraction(7, 6)
    g1 = (t * Fraction(-512, 7) * (L1 + Fraction(51, 7))
          + t * t * Fraction(512, 7) * (L1 + Fraction(100, 7))
          + ctx.inv_alpha * Fraction(22528, 63) * a * a)
    S1, S2, S3, S4, _, S6, S7 = closed_form_sums(n)
    S5 = s5_interval(n)
    u = (1 - b) / d
    bracket = (Interval.from_rational(S1) - a * (2 * u * S2)
               + a * a * (u * u * S3))
    g2 = bracket * a * a * Fraction(128, 9)
    g3 = (Interval.from_rational(b * b * S4) * a * a
          + S5 * a * (2 * b * (1 - b) * d / 4 * L1t)
          - a * (2 * b * (1 - b) * d / 4 * S6)
          + Interval.from_rational((1 - b) ** 2 * d * d / 16 * L1t * S7)
          - S5 * ((1 - b) ** 2 * d * d / 16)) * Fraction(128, 9)
    return g1, g2, g3


def _component_window_ranges(n: int, ctx: VerificationContext
                             ) -> tuple[list[Interval], Interval]:
    """Enclosures of the suprema of g1, g2, g3 and of their sum over the
    induction window: each component's derivative keeps a fixed sign there
    (certified by interval evaluation), so its sup sits at a known endpoint;
    the sum's sup follows from certified convexity of the assembled quartic
    (sup at an endpoint)."""
    a_lo, a_hi = ctx.a_range(n)
    a_iv = Interval(a_lo, a_hi)
    b, d = ctx.b, ctx.d
    L1 = Fraction(lambda_(n + 1))
    L1t = L1 + Fraction(22, 7)
    S1, S2, S3, S4, _, S6, S7 = closed_form_sums(n)
    S5 = s5_interval(n)
    u = (1 - b) / d
    # derivative enclosures over the window
    t_iv = Interval(1, 1) - a_iv * Fraction(7, 6)
    d_g1 = (Interval.from_rational(Fraction(512, 7) * (L1 + Fraction(51, 7)) * Fraction(7, 6))
            - t_iv * Fraction(512, 7) * (L1 + Fraction(100, 7)) * Fraction(7, 3)
            + ctx.inv_alpha * Fraction(45056, 63) * a_iv)
    d_g2 = (Interval.from_rational(2 * S1) - a_iv * (6 * u * S2)
            + a_iv * a_iv * (4 * u * u * S3)) * a_iv * Fraction(128, 9)
    d_g3 = (Interval.from_rational(2 * b * b * S4) * a_iv
            + S5 * (2 * b * (1 - b) * d / 4 * L1t)
            - Interval.from_rational(2 * b * (1 - b) * d / 4 * S6)) * Fraction(128, 9)
    at_lo = g_components(n, a_lo, ctx)
    at_hi = g_components(n, a_hi, ctx)
    sups = []
    for idx, deriv in enumerate((d_g1, d_g2, d_g3)):
        if deriv.hi < 0:      # decreasing: the sup over the window is at a_lo
            sups.append(at_lo[idx])
        elif deriv.lo > 0:    # increasing: sup at a_hi
            sups.append(at_hi[idx])
        else:                 # ambiguous slope: conservative range enclosure
            sups.append(g_components_interval(n, a_iv, ctx)[idx])
    coeffs = _g_quartic(n, ctx)
    v_lo = _quartic_value(coeffs, a_lo)
    v_hi = _quartic_value(coeffs, a_hi)
    k0, k1, k2, k3, k4 = coeffs
    qpp = (Interval.from_rational(2 * k2) + a_iv * (6 * k3)
           + a_iv * a_iv * (12 * k4))
    if qpp.lo > 0:  # convex: the sup over the window is at an endpoint
        total = v_lo if v_lo.hi >= v_hi.hi else v_hi
    else:
        total = sups[0] + sups[1] + sups[2]
    return sups, total


def s4_aggregate_certificates(mode: str = "interval", n: int = 10001
                              ) -> list[Certificate]:
    """The four large-n aggregates at n = 10001, as range enclosures of
    each component (and of the total) over the whole induction window."""
    ctx = DEFAULT_CONTEXT
    hull, total = _component_window_ranges(n, ctx)
    notes_g1 = ("sup over the window is at a = d0/lam_{n+4}, approx -852.5; "
                "-853.33 = -2560/3 is the n -> infinity limit of the printed "
                "chain and is approached from above, so the printed bound "
                "fails at every finite n; the total stays below -1.257")
    return [
        _cert_upper(f"ledger/s4-aggregate-g1/n={n}", {"n": n}, hull[0],
                    Fraction(-85333, 100), False, mode, notes_g1),
        _cert_upper(f"ledger/s4-aggregate-g2/n={n}", {"n": n}, hull[1],
                    Fraction(571123, 1000), False, mode),
        _cert_upper(f"ledger/s4-aggregate-g3/n={n}", {"n": n}, hull[2],
                    Fraction(28095, 100), False, mode),
        _cert_upper(f"ledger/s4-aggregate-total/n={n}", {"n": n}, total,
                    Fraction(-1257, 1000), False, mode),
    ]


def induction_step_certificate(n: int, ctx: VerificationContext = DEFAULT_CONTEXT,
                               mode: str = "interval",
                               c_upper: dict[int, Fraction] | None = None
                               ) -> Certificate:
    """Per-n sweep certificate: both endpoint values negative, the a^2
    coefficient positive, and convexity of the quartic on the window
    (which upgrades the endpoint check to the whole window)."""
    coeffs = _g_quartic(n, ctx)
    a_lo, a_hi = ctx.a_range(n)
    v_lo = _quartic_value(coeffs, a_lo)
    v_hi = _quartic_value(coeffs, a_hi)
    k0, k1, k2, k3, k4 = coeffs

    def qpp(a: Fraction) -> Fraction:
        return 2 * k2 + 6 * k3 * a + 12 * k4 * a * a

    qpp_min = min(qpp(a_lo), qpp(a_hi))
    if k4 > 0:
        vertex = -k3 / (4 * k4)
        if a_lo <= vertex <= a_hi:
            qpp_min = min(qpp_min, qpp(vertex))
    ok = (v_lo.hi < 0 and v_hi.hi < 0 and k2 > 0 and qpp_min > 0)
    notes = (f"g(d0/lam_(n+4)) in [{float(v_lo.lo):.6g}, {float(v_lo.hi):.6g}]; "
             f"g(d0/lam_n) in [{float(v_hi.lo):.6g}, {float(v_hi.hi):.6g}]; "
             f"a^2 coeff = {float(k2):.6g} > 0; min g'' on window = "
             f"{float(qpp_min):.6g} > 0 (convexity closes the endpoint argument)")
    if n <= 61 and c_upper is not None:
        cc = _g_quartic(n, ctx, include_ck=True, c_upper=c_upper)
        w_lo = _quartic_value(cc, a_lo)
        w_hi = _quartic_value(cc, a_hi)
        notes += (f"; c_k-corrected variant endpoints "
                  f"[{float(w_lo.hi):.6g}, {float(w_hi.hi):.6g}] recorded "
                  "(positive for 41 <= n <= 61: the sweep relies on the "
                  "n >= 41 case of the lambda-split proposition, matching "
                  "the published figures)")
    verdict = PASS if ok else (FAIL if (v_lo.lo >= 0 or v_hi.lo >= 0 or k2 <= 0)
                               else INCONCLUSIVE)
    params = {"n": n, "d0": str(ctx.d0),
              "g_at_lower_endpoint": float(v_lo.hi),
              "g_at_upper_endpoint": float(v_hi.hi),
              "a2_coeff_positive": bool(k2 > 0),
              "convex_on_window": bool(qpp_min > 0)}
    return Certificate(f"induction/n={n}", params,
                       "g < 0 at both endpoints, a^2 coeff > 0, g'' > 0",
                       Interval.hull([v_lo, v_hi]), _screen(verdict, mode),
                       mode, DEFAULT_PRECISION, 0, notes)


def induction_sweep(n_from: int, n_to: int,
                    ctx: VerificationContext = DEFAULT_CONTEXT,
                    mode: str = "interval",
                    c_upper: dict[int, Fraction] | None = None
                    ) -> list[Certificate]:
    if n_from % 4 != 1 or n_to % 4 != 1:
        raise ValueError("sweep indices must be = 1 (mod 4)")
    out = []
    for n in range(max(5, n_from), n_to + 1, 4):
        out.append(induction_step_certificate(n, ctx, mode, c_upper))
    return out


# ---------------------------------------------------------------------------
# f_{k,a}(lambda) assembly and the lambda-grid sanity checks
# ---------------------------------------------------------------------------

def _B_weight(n: int, k: int, alpha: Interval) -> Interval:
    vals = []
    for a in (alpha.lo, alpha.hi):
        vals.append(Fraction(9, 32) * a * a
                    * (lambda_(n + 1) - lambda_(k) + Fraction(11, 7) / a)
                    * (2 * k + 5))
    return Interval(min(vals), max(vals))


def f_k_a(n: int, k: int, a, lam_split, c_k: Fraction,
          ctx: VerificationContext = DEFAULT_CONTEXT,
          alpha: Interval | None = None) -> Interval:
    """Enclosure of the paired-sum bound f_{k,a}(lambda): envelope squares,
    the cancellation term 2 (B_k + B_{k+1}) c_k lambda (1-lambda) a^2, and
    the sign-split third term.  `alpha` narrows the context range (the
    worst-split comparison f(lambda) <= f(1) is a per-alpha statement, so
    the grid check pins alpha at each endpoint in turn)."""
    if k % 2 != 0 or not (2 <= k <= n):
        raise ValueError("k must be even with 2 <= k <= n")
    a = as_fraction(a)
    lam_split = as_fraction(lam_split)
    if not (Fraction(1, 2) <= lam_split <= 1):
        raise ValueError("lambda split must lie in [1/2, 1]")
    alpha = alpha if alpha is not None else ctx.alpha
    a_plus = lam_split * a
    a_minus = (1 - lam_split) * a
    lam_n = lambda_(n)
    Bk = _B_weight(n, k, alpha)
    Bk1 = _B_weight(n, k + 1, alpha)
    total = Interval(0, 0)
    for kk, B in ((k, Bk), (k + 1, Bk1)):
        ap = _envelope_best(a_plus, lambda_(kk), ctx, chi=True)
        am = _envelope_best(a_minus, lambda_(kk), ctx, chi=(lam_split != 1))
        total = total + B * Fraction(ap * ap + am * am)
    r2 = (Bk + Bk1) * Fraction(2 * c_k * lam_split * (1 - lam_split) * a * a)
    total = total + r2
    diff = Bk1 - Bk
    branches = []
    if diff.hi > 0:
        branches.append(Interval(0, diff.hi) * Fraction(2 * lam_split * (1 - lam_split) * a * a))
    if diff.lo < 0:
        branches.append(Interval(0, -diff.lo) * Fraction(2 * ctx.m0 * (1 - lam_split) * a * a))
    if branches:
        total = total + Interval.hull(branches + [Interval(0, 0)])
    return total


def lambda_grid_certificate(n: int, k: int, c_k: Fraction,
                            mode: str = "interval") -> Certificate:
    """Sanity check of the worst-split claim: f_{k,a}(lambda) <= f_{k,a}(1)
    on the lambda grid {0.5, 0.51, ..., 1}, at a = d0/lam_n, verified at
    both alpha endpoints separately (the claim is per-alpha)."""
    ctx = DEFAULT_CONTEXT
    a = ctx.d0 / lambda_(n)
    worst = None
    for av in (ctx.alpha.lo, ctx.alpha.hi):
        alpha_pt = Interval(av, av)
        f1 = f_k_a(n, k, a, 1, c_k, ctx, alpha_pt)
        for i in range(50, 101):
            lam = Fraction(i, 100)
            f = f_k_a(n, k, a, lam, c_k, ctx, alpha_pt)
            margin = f1.lo - f.hi
            if worst is None or margin < worst:
                worst = margin
    ok = worst is not None and worst >= 0
    return _cert_bool(f"prop-grid/lambda-grid/n={n}/k={k}",
                      {"n": n, "k": k, "a": str(a)}, ok,
                      "f_{k,a}(lambda) <= f_{k,a}(1) on the 0.01 grid", mode,
                      f"worst margin f(1).lo - f(lam).hi = {float(worst):.3g}")


# ---------------------------------------------------------------------------
# scalar inequality ledger
# ---------------------------------------------------------------------------

def scalar_ledger(c_upper: dict[int, Fraction] | None = None,
                  mode: str = "exact") -> list[Certificate]:
    """One certificate per standalone numeric inequality used by the
    case analysis, with c_k ranges substituted by certified bounds."""
    b, m0 = B_CONST, M0_CONST
    out = []
    q = (7 * b * b + 10 * b - 1) / 16
    out.append(_cert_lower("ledger/b-quadratic-value", {"b": str(b)},
                           Interval.from_rational(q), Fraction(191, 1000), False,
                           mode, f"(7b^2+10b-1)/16 = {q} = 0.19139375 exactly"))
    out.append(_cert_lower("ledger/case1-margin", {},
                           Interval.from_rational(Fraction(191, 1000) - Fraction(12, 100)
                                                  - Fraction(54, 1000)),
                           Fraction(0), True, mode, "0.191 - 0.12 - 0.054 = 0.017"))
    out.append(_cert_lower("ledger/case1-margin-robust", {},
                           Interval.from_rational(Fraction(191, 1000) - Fraction(12, 100)
                                                  - Fraction(1, 18)),
                           Fraction(0), True, mode,
                           "against the true k=6 quotient supremum 1/18"))
    # exact identity: min of 1 - 3w + (7/4) w^2 on [0, (1-b)/2]
    w_hi = (1 - b) / 2
    min_val = 1 - 3 * w_hi + Fraction(7, 4) * w_hi * w_hi
    vertex = Fraction(6, 7)
    out.append(_cert_bool("ledger/w-quadratic-identity", {},
                          min_val == q and vertex > w_hi,
                          "min over [0,(1-b)/2] of 1-3w+(7/4)w^2 equals "
                          "(7b^2+10b-1)/16 (vertex 6/7 lies right of the range)",
                          mode))
    out.append(_cert_upper("ledger/w-range", {}, Interval.from_rational(w_hi),
                           Fraction(6, 7), True, mode, "(1-b)/2 = 0.335 < 6/7"))
    phi_const = b * b + (b + 1) * (3 * b - 1) / 4
    out.append(_cert_lower("ledger/phi-prime-const", {},
                           Interval.from_rational(phi_const), Fraction(105, 1000),
                           False, mode,
                           f"b^2 + (b+1)(3b-1)/4 = {phi_const} = 0.105575"))
    out.append(_cert_lower("ledger/phi-prime-margin", {},
                           Interval.from_rational(Fraction(105, 1000) - 2 * Fraction(26, 1000)),
                           Fraction(0), True, mode, "0.105 - 2 c_k with c_k <= 0.026"))
    out.append(_cert_lower("ledger/case2a-margin", {},
                           Interval.from_rational(Fraction(2746, 100000) - Fraction(26, 1000)
                                                  - Fraction(16, 1000) * m0),
                           Fraction(0), True, mode,
                           "0.02746 - c_k - 0.016 m0 with c_k <= 0.026 (0.00082)"))
    # case-2b needs per-k certified c_k: the uniform 0.026 bound fails
    ck_max = None
    k_top = None
    if c_upper:
        ks = [k for k in c_upper if k >= 43]
        if ks:
            ck_max = max(c_upper[k] for k in ks)
            k_top = max(ks)
    if ck_max is not None and k_top is not None and k_top >= 478:
        # beyond the certified table, c_k <= 11.1/(k-1) <= 11.1/k_top
        ck_used = max(ck_max, Fraction(111, 10) / k_top)
        src = f"certified table up to k = {k_top} plus the 11.1/(k-1) tail"
    else:
        ck_used = Fraction(26, 1000)
        src = "uniform published bound (no certified table supplied)"
    margin = Fraction(5, 100) - ck_used - Fraction(2, 3) * m0
    out.append(_cert_lower(
        "ledger/case2b-margin", {"c_k_bound": f"{float(ck_used):.6g}"},
        Interval.from_rational(margin), Fraction(0), True, mode,
        f"0.05 - c_k - (2/3) m0 over the case-2b range k >= 43 ({src}); "
        "with the uniform substitution c_k = 0.026 the margin is "
        "-0.00267 < 0, so per-k certified bounds are required (and suffice)"))
    out.append(_cert_lower("ledger/case3-margin", {},
                           Interval.from_rational(Fraction(4, 100) - Fraction(35, 1000)),
                           Fraction(0), True, mode, "0.04 - 0.035 = 0.005"))
    out.append(_cert_bool("ledger/case3-constant", {},
                          4 * (1 - b) ** 2 == Fraction(17956, 10000),
                          "4 (1-b)^2 == 1.7956 exactly", mode))
    out.append(_cert_upper("ledger/case3-coefficient", {},
                           Interval.from_rational(Fraction(17956, 10000) / 256),
                           Fraction(71, 10000), False, mode,
                           "1.7956/256 = 0.00701... <= 0.0071"))
    out.append(_cert_upper("ledger/remainder-constant", {},
                           Interval.from_rational(abs(asymptotics.t_coeff(4))),
                           Fraction(3, 2), True, mode,
                           "|t_4| = 45045/32768 = 1.3746 < 1.5"))
    out.append(_cert_upper("ledger/tail-constant", {},
                           Interval.from_rational(Fraction(919, 100) / 437
                                                  + Fraction(1102, 100)),
                           Fraction(111, 10), False, mode,
                           "9.19/437 + 11.02 <= 11.1, which drives "
                           "c_n <= 11.1/(n-1) for n > 428"))
    out.extend(s4_aggregate_certificates(
        mode="float64" if mode == "float64" else "interval"))
    return out


# ---------------------------------------------------------------------------
# (1 - x^2) F bounds and the tail certificate
# ---------------------------------------------------------------------------

def c_tilde(nu: HalfInteger, precision: int = DEFAULT_PRECISION) -> Interval:
    """The (nu < 5) constant: (4 nu + 2) * sum_{k=0}^4 (-1)^k
    (6-k)_k (6+nu)_k / (k! (nu+1/2)_k) * ((nu - sqrt(nu) + 1/2) /
    ((11/2)(nu + 11/2)))^k, with sqrt(nu) enclosed."""
    if nu.value >= 5:
        raise NotImplementedError("only the nu < 5 branch is used here")
    nu_v = nu.value
    root = enclose_elementary("sqrt", Interval.from_rational(nu_v), precision)
    x = (Interval.from_rational(nu_v + Fraction(1, 2)) - root) / (
        Fraction(11, 2) * (nu_v + Fraction(11, 2)))
    total = Interval(0, 0)
    for k in range(5):
        num = Fraction(1)
        for i in range(k):
            num *= (6 - k + i) * (Fraction(6) + nu_v + i)
        den = Fraction(math.factorial(k))
        poch = Fraction(1)
        for i in range(k):
            poch *= nu_v + Fraction(1, 2) + i
        coeff = Fraction((-1) ** k) * num / (den * poch)
        total = total + Interval.from_rational(coeff) * x ** k
    return (total * (4 * nu_v + 2)).round_outward(precision + 16)


def check_one_minus_x2_bound(n: int, nu: HalfInteger,
                             mode: str = "interval",
                             precision: int = DEFAULT_PRECISION,
                             include_ctilde: bool = True) -> list[Certificate]:
    """C-tilde value checks plus the grid-verified pointwise bound
    |(1-x^2) F(n, nu)| <= C_tilde / (n (n + 2 nu)) for the given (n, nu).
    `include_ctilde=False` suppresses the per-order constant certificate
    (which does not depend on n) so suites keep check ids unique."""
    if n < max(nu.twice_value + 2, 12):
        raise ValueError("n below the lemma's range")
    ct = c_tilde(nu, precision)
    out = []
    cap = {7: Fraction(919, 100), 9: Fraction(1102, 100)}.get(nu.twice_value)
    if cap is not None and include_ctilde:
        out.append(_cert_upper(f"one-minus-x2/c-tilde/nu={nu}", {"nu": str(nu)},
                               ct, cap, False, mode, precision=precision))
    ext = orthopoly.one_minus_x2_f_max(n, nu)
    bound = ct.hi / (n * (n + nu.twice_value))
    out.append(_cert_upper(
        f"one-minus-x2/pointwise/n={n}/nu={nu}", {"n": n, "nu": str(nu)},
        ext.value_enclosure, bound, False, mode,
        f"grid max of |(1-x^2) F| with second-order slack; bound "
        f"C~/(n(n+2nu)) = {float(bound):.6g}", precision))
    return out


def tail_bound_certificate(n: int = 429, mode: str = "interval",
                           precision: int = DEFAULT_PRECISION) -> Certificate:
    """(1/n)(C~_{7/2}/(n+8) + C~_{9/2}) < 0.026 at n = 429, with the
    certified C-tilde enclosures."""
    c72 = c_tilde(NU_72, precision)
    c92 = c_tilde(NU_92, precision)
    val = (c72 / (n + 8) + c92) / n
    return _cert_upper(f"one-minus-x2/tail/n={n}", {"n": n}, val,
                       Fraction(26, 1000), True, mode,
                       "drives c_m < 0.026 for every m > 428", precision)


# ---------------------------------------------------------------------------
# suite builders: c_n, lemma-min (exact and asymptotic paths), pointwise
# ---------------------------------------------------------------------------

def cn_certificates(n_from: int = 6, n_to: int = 428, mode: str = "interval",
                    m_half: int | None = None) -> list[Certificate]:
    """Certified c_n <= 0.12 (6 <= n <= 29) and c_n < 0.026 (30 <= n <= 428),
    one shared recurrence sweep; enclosure widths come out near the
    second-order grid slack, comfortably below 1e-3."""
    kwargs = {} if m_half is None else {"m_half": m_half}
    table = orthopoly.certified_cn_range(n_from, n_to, **kwargs)
    out = []
    for n in range(n_from, n_to + 1):
        enc = table[n].value_enclosure
        if n <= 29:
            out.append(_cert_upper(f"cn/n={n}", {"n": n}, enc, Fraction(12, 100),
                                   False, mode))
        else:
            out.append(_cert_upper(f"cn/n={n}", {"n": n}, enc, Fraction(26, 1000),
                                   True, mode))
    return out


def c_upper_table(k_from: int = 2, k_to: int = 600,
                  m_half: int | None = None) -> dict[int, Fraction]:
    """Certified upper bounds for c_k (used by the chi-corrected sweep
    variant and the per-k ledger items)."""
    kwargs = {} if m_half is None else {"m_half": m_half}
    table = orthopoly.certified_cn_range(k_from, k_to, **kwargs)
    return {k: e.value_enclosure.hi for k, e in table.items()}


def lemma_min_certificates(k_from: int = 8, k_to: int = 200,
                           asymptotic_ks: Sequence[int] = (201, 500, 1000, 10000),
                           mode: str = "interval") -> list[Certificate]:
    """min over [0,1] of ft_prime(k) >= -1/25: exact-polynomial grid path
    for k_from..k_to, asymptotic path for the sampled large k."""
    out = []
    table = orthopoly.certified_min_range(k_from, k_to)
    for k in range(k_from, k_to + 1):
        enc = table[k].value_enclosure
        notes = ""
        if enc.hi < -M0_CONST:
            notes = ("certified violation: the true minimum lies strictly "
                     "below -1/25 (the published constant does not cover "
                     "this k; first valid k for the -0.04 bound is 9)")
        out.append(_cert_lower(f"lemma-min/k={k}", {"k": k}, enc, -M0_CONST,
                               False, mode, notes))
    for k in asymptotic_ks:
        ok, worst, profile = asymptotics.check_lower_bound_large_k(k)
        out.append(_cert_lower(
            f"lemma-min/asymptotic/k={k}", {"k": k, "pieces": len(profile)},
            Interval(worst, Fraction(1)), -M0_CONST, False, mode,
            "four-term expansion plus remainder over a geometric l-subdivision; "
            f"worst certified lower bound {float(worst):.6g}"))
    return out


def zero_bound_certificates(mode: str = "interval") -> list[Certificate]:
    """Largest-zero bound checks: the k = 201 minimum-location bound
    x_{k-2,1}(9/2) < 1 - 12.5/k^2, the (2, 9/2) formula example, and the
    exact largest zero of F(2, 5/2) against its bound."""
    out = []
    k = 201
    bound = orthopoly.largest_zero_upper_bound(k - 2, NU_92)
    out.append(_cert_upper(
        f"lemma-min/zero-bound/k={k}", {"k": k, "nu": "9/2"}, bound,
        1 - Fraction(125, 10) / (k * k), True, mode,
        "minimum location bound feeding the l >= 5 parameterization"))
    b2 = orthopoly.largest_zero_upper_bound(2, NU_92)
    expect = enclose_elementary(
        "sqrt", Interval.from_rational(Fraction(9) / (Fraction(9, 2) * Fraction(11, 2))),
        DEFAULT_PRECISION) * Fraction(1, 2)
    out.append(_cert_bool(
        "lemma-min/zero-bound/n=2-nu=9/2", {"n": 2, "nu": "9/2"},
        bound_overlap := b2.overlaps(expect),
        "bound encloses sqrt(9/(9/2 * 11/2)) cos(pi/3)", mode))
    # exact largest zero of F(2, 5/2) = (7x^2-1)/6 is 1/sqrt(7)
    b25 = orthopoly.largest_zero_upper_bound(2, HalfInteger(5))
    root = enclose_elementary("sqrt", Interval.from_rational(Fraction(1, 7)),
                              DEFAULT_PRECISION)
    out.append(_cert_bool(
        "lemma-min/zero-bound/n=2-nu=5/2", {"n": 2, "nu": "5/2"},
        root.hi <= b25.lo and orthopoly.no_sign_change_right_of(2, HalfInteger(5), b25.hi),
        "largest zero 1/sqrt(7) of F(2,5/2) lies below the bound; no sign "
        "change to its right", mode))
    return out


def oracle_overlap_certificates(ks: Sequence[int] = (150, 201, 250, 300, 428),
                                zetas_per_k: int = 20, seed: int = 20240901,
                                mode: str = "interval") -> list[Certificate]:
    """Asymptotic enclosures must intersect exact-recurrence enclosures at
    random zeta in (pi/8, 3 pi/8); with N = 4 the asymptotic width at
    l >= 5 stays below 1e-3 of the leading-term magnitude."""
    import random
    rng = random.Random(seed)
    out = []
    pi_iv = enclose_elementary("pi", None, 96)
    for k in ks:
        worst_rel = Fraction(0)
        all_overlap = True
        for _ in range(zetas_per_k):
            frac = Fraction(rng.randint(1001, 2999), 8000)  # (pi/8, 3pi/8)
            zeta = (pi_iv * frac).round_outward(160)
            asym = asymptotics.f_tilde_prime_asymptotic(k, zeta, 4, 96)
            x_iv = enclose_elementary("cos", zeta, 96)
            exact = orthopoly.f_tilde_prime_value(k, x_iv)
            if not asym.overlaps(exact):
                all_overlap = False
            lead = max(asym.mag, Fraction(1, 10 ** 9))
            worst_rel = max(worst_rel, asym.width / lead)
        out.append(_cert_bool(
            f"lemma-min/oracle-overlap/k={k}", {"k": k, "samples": zetas_per_k},
            all_overlap and worst_rel < Fraction(1, 1000),
            "asymptotic enclosure intersects the exact value; relative "
            "width below 1e-3", mode,
            f"worst relative width {float(worst_rel):.3g}"))
    return out


def e_minima_certificates(mode: str = "interval") -> list[Certificate]:
    """The published E-term minima over l, for the printed displays,
    checked by subdivided interval evaluation at k = 201."""
    k = 201
    bounds_low = [Fraction(-2, 10 ** 4), Fraction(-25, 10 ** 5),
                  Fraction(-15, 10 ** 6), Fraction(-1, 10 ** 7), Fraction(0)]
    bounds_high = [Fraction(-77, 10 ** 5), Fraction(-2, 10 ** 4),
                   Fraction(-1, 10 ** 5), Fraction(-1, 10 ** 7), Fraction(-1, 10 ** 9)]
    out = []
    for label, lo, hi, bounds in (("l-5-to-6.5", Fraction(5), Fraction(13, 2), bounds_low),
                                  ("l-above-6.5", Fraction(13, 2), Fraction(4000), bounds_high)):
        mins = [Fraction(10)] * 5
        cur = lo
        while cur < hi:
            nxt = min(cur * Fraction(103, 100) if cur > 8 else cur + Fraction(1, 8), hi)
            es = asymptotics.e_terms(Interval(cur, nxt), k)
            for i, e in enumerate(es):
                mins[i] = min(mins[i], e.lo)
            cur = nxt
        ok = all(m >= b for m, b in zip(mins, bounds))
        out.append(_cert_bool(
            f"lemma-min/e-minima/{label}", {"k": k},
            ok, "printed E_i lower bounds hold for the printed displays", mode,
            "certified minima " + ", ".join(f"E{i}>={float(m):.3g}" for i, m in enumerate(mins))
            + "; note the printed displays carry the order-5/2 coefficient "
            "family and are reproduced verbatim, not consumed by the "
            "lower-bound certificate"))
    return out


def theta_window_certificates(samples: Sequence[tuple[int, int]] = ((13, 7), (20, 9)),
                              mode: str = "interval") -> list[Certificate]:
    """Sampled sign conditions v'(theta_bar) < 0 < v'(0.999 theta_low)."""
    out = []
    for n, tv in samples:
        nu = HalfInteger(tv)
        v_bar, v_low = asymptotics.theta_window_signs(n, nu)
        ok = v_bar.hi < 0 and v_low.lo > 0
        out.append(_cert_bool(
            f"lemma-min/theta-window/n={n}-nu={tv}div2", {"n": n, "nu": str(nu)},
            ok, "v'(theta_bar) < 0 and v'(0.999 theta_low) > 0", mode,
            f"v'(theta_bar) <= {float(v_bar.hi):.3g}, "
            f"v'(0.999 theta_low) >= {float(v_low.lo):.3g}"))
    dl = asymptotics.delta_window(NU_72)
    out.append(_cert_bool(
        "lemma-min/delta-window/nu=7/2", {},
        dl.width < Fraction(1, 10 ** 20) and Fraction(4, 10) < dl.lo < Fraction(6, 10),
        "delta(7/2) = (7/2 - sqrt(7/2) + 1/2)/4 enclosed", mode,
        f"delta in [{float(dl.lo):.12f}, {float(dl.hi):.12f}]"))
    return out


def pointwise_certificates(k_from: int = 6, k_to: int = 100, mode: str = "exact"
                           ) -> list[Certificate]:
    """Eq.-style point values: 3/10 <= ft_prime(k)(1 - 8/lam_k) <= 33/100,
    exact rational evaluation, strict rational comparison (tolerance zero).
    The upper bound genuinely fails for k = 6..9 (values 0.3395, 0.3357,
    0.3331, 0.3312); verdicts are honest."""
    out = []
    for k in range(k_from, k_to + 1):
        lam = lambda_(k)
        x = 1 - Fraction(8, lam)
        val = orthopoly.f_tilde_prime_value(k, x)
        ok = Fraction(3, 10) <= val <= Fraction(33, 100)
        notes = ""
        if not ok:
            notes = (f"exact value {float(val):.9f}; the published upper "
                     "constant 0.33 first holds at k = 10")
        out.append(Certificate(
            f"pointwise/k={k}", {"k": k, "x": f"{x.numerator}/{x.denominator}"},
            "3/10 <= value <= 33/100 (exact)",
            Interval.from_rational(val), _screen(PASS if ok else FAIL, mode),
            mode, DEFAULT_PRECISION, 0, notes))
    return out


def hyper_sandwich_certificates(ks: Sequence[int] = (101, 102), mode: str = "exact"
                                ) -> list[Certificate]:
    """Terminating-series sandwich at j1 = 5, j2 = 6 brackets the point
    value inside [3/10, 33/100] for the sampled large k."""
    out = []
    for k in ks:
        lam = lambda_(k)
        x = 1 - Fraction(8, lam)
        t = Fraction(8, lam) * (2 - Fraction(8, lam))
        low, high = orthopoly.hypergeometric_partial_sums(k, t, 5, 6)
        if k % 2 == 0:
            low, high = low * x, high * x
        ok = Fraction(3, 10) <= low and high <= Fraction(33, 100)
        exact = orthopoly.f_tilde_prime_value(k, x)
        out.append(_cert_bool(
            f"pointwise/hyper/k={k}", {"k": k, "j1": 5, "j2": 6},
            ok and low <= exact <= high,
            "partial sums bracket the point value inside [3/10, 33/100]",
            mode,
            f"bracket [{float(low):.9f}, {float(high):.9f}], exact {float(exact):.9f}"))
    return out


__all__ = [
    "ALPHA_HI",
    "ALPHA_LO",
    "B_CONST",
    "BoundEnvelope",
    "Certificate",
    "D0_CONST",
    "DEFAULT_CONTEXT",
    "D_CONST",
    "FAIL",
    "INCONCLUSIVE",
    "M0_CONST",
    "PASS",
    "VerificationContext",
    "b_quotient",
    "base_bound_certificates",
    "base_bounds",
    "c_tilde",
    "c_upper_table",
    "cn_certificates",
    "e_minima_certificates",
    "hyper_sandwich_certificates",
    "lemma_min_certificates",
    "oracle_overlap_certificates",
    "pointwise_certificates",
    "theta_window_certificates",
    "zero_bound_certificates",
    "check_one_minus_x2_bound",
    "closed_form_sums",
    "envelope_A",
    "envelope_crossover_identity",
    "f_k_a",
    "g_components",
    "g_tilde",
    "induction_step_certificate",
    "induction_sweep",
    "lambda_grid_certificate",
    "quotient_regime_certificates",
    "s4_aggregate_certificates",
    "s5_interval",
    "s7_closed",
    "s_sums_direct",
    "scalar_ledger",
    "sum_identity_certificates",
    "tail_bound_certificate",
]
