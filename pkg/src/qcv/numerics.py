"""Exact rationals, outward-rounded intervals, and enclosure-producing
elementary functions.

Two rigorous scalar backends live here:

* exact rational arithmetic (`fractions.Fraction`), used whenever every
  input is rational -- polynomial identities, closed-form sums, strict
  rational comparisons;
* `Interval`, a closed interval with `Fraction` endpoints.  Interval
  arithmetic on rational endpoints is *exact* (no rounding step is ever
  needed), so containment proofs reduce to elementary monotonicity
  arguments.  Irrational quantities (pi, square roots, trig values,
  Gamma ratios) enter only through `enclose_elementary`, which delegates
  to mpmath's outward-rounded interval context and converts the dyadic
  endpoints back to exact rationals.

A third float64 mode exists for fast screening; it never produces a
Pass verdict on its own (see `qcv.verifier`).

There is also a small vectorised interval layer over numpy
(`GridIntervals`) used by the polynomial grid sweeps in `qcv.orthopoly`.
Outward rounding there is done with `numpy.nextafter` after every
operation.

All values are immutable after construction and all operations are pure
functions, so everything in this module is safe to share across threads
without coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np
from mpmath import iv


def _lru_cache_typed(fn):
    return lru_cache(maxsize=4096)(fn)

ExactRational = Fraction

RationalLike = Union[int, Fraction]

#: default working precision (fractional bits) for elementary enclosures
DEFAULT_PRECISION = 128
#: retry ladder for checks that come back Inconclusive
PRECISION_LADDER = (128, 256, 512)


def as_fraction(x) -> Fraction:
    """Exact conversion to Fraction (floats are dyadic, so lossless)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"cannot represent {x!r} as a rational")
        return Fraction(x)
    raise TypeError(f"not a rational-like value: {x!r}")


@dataclass(frozen=True)
class HalfInteger:
    """nu = twice_value / 2 with twice_value >= 1; Gegenbauer orders 5/2, 7/2, ..."""

    twice_value: int

    def __post_init__(self):
        if self.twice_value < 1:
            raise ValueError("half-integer order must be >= 1/2")

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __add__(self, other: int) -> "HalfInteger":
        return HalfInteger(self.twice_value + 2 * other)

    def __str__(self) -> str:
        return str(self.value)


NU_52 = HalfInteger(5)
NU_72 = HalfInteger(7)
NU_92 = HalfInteger(9)


class Interval:
    """Closed interval [lo, hi] with exact rational endpoints.

    Arithmetic is exact: the result's endpoints are the exact rational
    images of the input endpoints, so the containment invariant
    (result contains the pointwise image) holds with no rounding error.
    `round_outward` coarsens endpoints to dyadics when denominators grow
    too large in long chains.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = as_fraction(lo)
        hi = as_fraction(hi)
        if lo > hi:
            raise ValueError(f"invalid interval: lo={lo} > hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(q) -> "Interval":
        q = as_fraction(q)
        return Interval(q, q)

    @staticmethod
    def hull(items: Iterable["Interval"]) -> "Interval":
        items = list(items)
        if not items:
            raise ValueError("hull of nothing")
        return Interval(min(i.lo for i in items), max(i.hi for i in items))

    # -- predicates ----------------------------------------------------
    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = as_fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise ValueError(f"empty intersection of {self} and {other}")
        return Interval(lo, hi)

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    @property
    def mig(self) -> Fraction:
        """Distance of the interval from zero (min of |x| over the interval)."""
        if self.lo > 0:
            return self.lo
        if self.hi < 0:
            return -self.hi
        return Fraction(0)

    @property
    def mag(self) -> Fraction:
        """Max of |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        other = _coerce(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        cands = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return Interval(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError(f"division by interval containing 0: {other}")
        inv = Interval(Fraction(1) / other.hi, Fraction(1) / other.lo)
        return self * inv

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        if n == 0:
            return Interval(1, 1)
        if n % 2 == 1 or self.lo >= 0:
            return Interval(self.lo ** n, self.hi ** n)
        if self.hi <= 0:
            return Interval(self.hi ** n, self.lo ** n)
        return Interval(Fraction(0), max(self.lo ** n, self.hi ** n))

    def abs(self) -> "Interval":
        return Interval(self.mig, self.mag)

    def round_outward(self, bits: int = 192) -> "Interval":
        """Coarsen endpoints to dyadics with denominator 2**bits (outward)."""
        scale = 1 << bits
        lo = Fraction(math.floor(self.lo * scale), scale)
        hi = Fraction(math.ceil(self.hi * scale), scale)
        return Interval(lo, hi)

    # -- order against rationals ----------------------------------------
    def strictly_below(self, q) -> bool:
        return self.hi < as_fraction(q)

    def below(self, q) -> bool:
        return self.hi <= as_fraction(q)

    def strictly_above(self, q) -> bool:
        return self.lo > as_fraction(q)

    def above(self, q) -> bool:
        return self.lo >= as_fraction(q)

    def __repr__(self):
        return f"Interval({float(self.lo)!r}, {float(self.hi)!r})"

    def __eq__(self, other):
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.from_rational(x)


def interval_from_rational(q) -> Interval:
    """Width-0 enclosure of a rational (rational endpoints are exact here)."""
    return Interval.from_rational(q)


# ---------------------------------------------------------------------------
# elementary enclosures via mpmath's interval context
# ---------------------------------------------------------------------------

def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _bc = t
    if man == 0 and exp != 0:
        raise ValueError("non-finite mpmath endpoint")
    f = Fraction(int(man)) * Fraction(2) ** exp
    return -f if sign else f


def _from_iv(v) -> Interval:
    lo, hi = v._mpi_
    return Interval(_mpf_tuple_to_fraction(lo), _mpf_tuple_to_fraction(hi))


def _to_iv(x: Interval):
    # route through exact integer strings so no precision is lost on entry
    lo, hi = x.lo, x.hi
    a = iv.mpf(str(lo.numerator)) / lo.denominator
    b = iv.mpf(str(hi.numerator)) / hi.denominator
    return iv.mpf([a.a, b.b])


def pi_enclosure(precision: int = DEFAULT_PRECISION) -> Interval:
    with _iv_prec(precision):
        return _from_iv(+iv.pi)


class _iv_prec:
    def __init__(self, prec: int):
        self.prec = prec

    def __enter__(self):
        self._old = iv.prec
        iv.prec = self.prec

    def __exit__(self, *exc):
        iv.prec = self._old


def _arcsin_iv(x: Interval, precision: int) -> Interval:
    """Enclosure of arcsin over x (subset of [-1, 1]) by monotone bisection
    against a rigorous interval sine.  mpmath's iv context has no asin."""
    if x.lo < -1 or x.hi > 1:
        raise ValueError("arcsin argument outside [-1, 1]")

    iters = min(precision, 48) + 8

    def bound(q: Fraction, want_upper: bool) -> Fraction:
        # find t with sin(t) <= q (lower bracket) or sin(t) >= q (upper)
        half_pi = pi_enclosure(precision) / 2
        lo, hi = -half_pi.hi, half_pi.hi
        lo, hi = Fraction(lo), Fraction(hi)
        for _ in range(iters):
            mid = ((lo + hi) / 2).limit_denominator(1 << (iters + 16))
            if not lo < mid < hi:
                mid = (lo + hi) / 2
            s = enclose_elementary("sin", Interval(mid, mid), precision)
            if want_upper:
                if s.lo >= q:
                    hi = mid
                else:
                    lo = mid
            else:
                if s.hi <= q:
                    lo = mid
                else:
                    hi = mid
        return lo if not want_upper else hi

    lo = bound(x.lo, want_upper=False)
    hi = bound(x.hi, want_upper=True)
    return Interval(lo, hi)


_IV_FUNCS = {
    "sin": lambda v: iv.sin(v),
    "cos": lambda v: iv.cos(v),
    "sqrt": lambda v: iv.sqrt(v),
    "ln": lambda v: iv.log(v),
    "exp": lambda v: iv.exp(v),
}


def _enclose_raw(f: str, x: Interval, precision: int) -> Interval:
    if f == "pi":
        return pi_enclosure(precision)
    if f == "arcsin":
        return _arcsin_iv(x, precision)
    if f == "sqrt" and x.lo < 0:
        raise ValueError(f"sqrt of interval with negative part: {x}")
    if f == "ln" and x.lo <= 0:
        raise ValueError(f"ln of interval touching (-inf, 0]: {x}")
    try:
        fn = _IV_FUNCS[f]
    except KeyError:
        raise ValueError(f"unsupported elementary function {f!r}") from None
    with _iv_prec(precision):
        return _from_iv(fn(_to_iv(x)))


def enclose_elementary(f: str, x: Interval | None, precision: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of f over x with outward rounding.

    Supported: sin, cos, sqrt, arcsin, ln, exp, pi (x ignored for pi).
    Gamma ratios have their own entry point `gamma_ratio` because they take
    two arguments.  Results at precision 2p are intersected with the result
    at precision p, so doubling the precision never widens an enclosure.
    """
    if x is None:
        x = Interval(0, 0)
    base = min(64, precision)
    result = _enclose_raw(f, x, base)
    p = base
    while p < precision:
        p = min(precision, p * 2)
        result = result.intersect(_enclose_raw(f, x, p))
    return result


def sqrt_enclosure(q, precision: int = DEFAULT_PRECISION) -> Interval:
    return enclose_elementary("sqrt", _coerce(q), precision)


@_lru_cache_typed
def gamma_ratio(k: int, s: HalfInteger, precision: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of Gamma(k) / Gamma(k + s) for integer k >= 1 and
    half-integer s > 0, via the telescoping Pochhammer product

        Gamma(k)/Gamma(k+s) = 1 / (k)_s          (s integer)
        Gamma(k)/Gamma(k+j+1/2)
            = [prod_{i=0}^{j-1} 1/(k+1/2+i)] * Gamma(k)/Gamma(k+1/2)

    with Gamma(k)/Gamma(k+1/2) = [prod_{m=1}^{k-1} m/(m+1/2)] * 2/sqrt(pi).
    No free-standing Gamma value is ever formed, so nothing overflows and
    the only irrational factor is one sqrt(pi).  The long product is
    accumulated with outward re-dyadification so it stays cheap at
    k = 10^4 (the exact rational would carry tens of thousands of digits).
    """
    if k < 1:
        raise ValueError("gamma_ratio needs k >= 1")
    if s.twice_value <= 0:
        raise ValueError("gamma_ratio needs s > 0")
    if s.is_integer:
        denom = Fraction(1)
        for i in range(s.twice_value // 2):
            denom *= (k + i)
        return Interval.from_rational(Fraction(1) / denom)
    j = (s.twice_value - 1) // 2  # s = j + 1/2
    rat = Interval(1, 1)
    for i in range(j):
        rat = rat / Interval.from_rational(Fraction(2 * k + 1 + 2 * i, 2))
    rat = rat * _half_shift_product(k, precision)
    sqrt_pi = enclose_elementary("sqrt", enclose_elementary("pi", None, precision), precision)
    return (rat * 2 / sqrt_pi).round_outward(precision + 16)


@lru_cache(maxsize=64)
def _half_shift_product(k: int, precision: int) -> Interval:
    """prod_{m=1}^{k-1} m/(m+1/2) with outward dyadic accumulation."""
    out = Interval(1, 1)
    for m in range(1, k):
        out = out * Interval.from_rational(Fraction(2 * m, 2 * m + 1))
        if m % 32 == 0:
            out = out.round_outward(precision + 48)
    return out.round_outward(precision + 48)


# ---------------------------------------------------------------------------
# polynomial evaluation (shared by orthopoly's Polynomial)
# ---------------------------------------------------------------------------

def eval_polynomial(coeffs: Sequence[Fraction], x):
    """Horner evaluation of ascending-degree rational coefficients.

    Exact for rational x; an enclosure for Interval x.  For high-degree
    interval evaluation the endpoints are re-dyadified every few steps so
    denominators stay bounded (still outward, still rigorous).
    """
    if isinstance(x, Interval):
        acc = Interval(0, 0)
        step = 0
        for c in reversed(coeffs):
            acc = acc * x + Interval.from_rational(c)
            step += 1
            if step % 16 == 0:
                acc = acc.round_outward(320)
        return acc
    x = as_fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# vectorised interval layer over numpy (used by the grid sweeps)
# ---------------------------------------------------------------------------

_INF = np.inf


def _down(a: np.ndarray) -> np.ndarray:
    return np.nextafter(a, -_INF)


def _up(a: np.ndarray) -> np.ndarray:
    return np.nextafter(a, _INF)


class GridIntervals:
    """Arrays of intervals [lo_i, hi_i] in float64 with outward rounding.

    Only the handful of operations the Gegenbauer recurrence needs are
    implemented.  Every arithmetic result is padded by one ulp in each
    direction, which dominates the true rounding error of the underlying
    IEEE-754 operation.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: np.ndarray, hi: np.ndarray, _checked: bool = False):
        if not _checked and np.any(lo > hi):
            raise ValueError("GridIntervals: lo > hi somewhere")
        self.lo = lo
        self.hi = hi

    @staticmethod
    def constant(value: float, n: int) -> "GridIntervals":
        a = np.full(n, value)
        return GridIntervals(a.copy(), a.copy(), _checked=True)

    def __add__(self, other: "GridIntervals") -> "GridIntervals":
        return GridIntervals(_down(self.lo + other.lo), _up(self.hi + other.hi), _checked=True)

    def __sub__(self, other: "GridIntervals") -> "GridIntervals":
        return GridIntervals(_down(self.lo - other.hi), _up(self.hi - other.lo), _checked=True)

    def __mul__(self, other: "GridIntervals") -> "GridIntervals":
        combos = (self.lo * other.lo, self.lo * other.hi,
                  self.hi * other.lo, self.hi * other.hi)
        lo = np.minimum(np.minimum(combos[0], combos[1]),
                        np.minimum(combos[2], combos[3]))
        hi = np.maximum(np.maximum(combos[0], combos[1]),
                        np.maximum(combos[2], combos[3]))
        return GridIntervals(_down(lo), _up(hi), _checked=True)

    def scale(self, lo_c: float, hi_c: float) -> "GridIntervals":
        """Multiply by a scalar interval [lo_c, hi_c] with 0 <= lo_c <= hi_c."""
        if lo_c < 0:
            raise ValueError("scale expects a nonnegative scalar interval")
        lo = np.where(self.lo >= 0, self.lo * lo_c, self.lo * hi_c)
        hi = np.where(self.hi >= 0, self.hi * hi_c, self.hi * lo_c)
        return GridIntervals(_down(lo), _up(hi), _checked=True)

    # -- reductions ----------------------------------------------------
    def abs_max_bounds(self) -> tuple[float, float]:
        """(lower, upper) bounds for max_i |v_i| over the true values."""
        mig = np.maximum(0.0, np.maximum(self.lo, -self.hi))
        mag = np.maximum(np.abs(self.lo), np.abs(self.hi))
        return float(mig.max()), float(mag.max())

    def min_bounds(self) -> tuple[float, float]:
        """(lower, upper) bounds for min_i v_i over the true values."""
        return float(self.lo.min()), float(self.hi.min())

    def max_width(self) -> float:
        return float((self.hi - self.lo).max())


def float_to_fraction_up(x: float) -> Fraction:
    return Fraction(x)


__all__ = [
    "DEFAULT_PRECISION",
    "PRECISION_LADDER",
    "ExactRational",
    "GridIntervals",
    "HalfInteger",
    "Interval",
    "NU_52",
    "NU_72",
    "NU_92",
    "as_fraction",
    "enclose_elementary",
    "eval_polynomial",
    "gamma_ratio",
    "interval_from_rational",
    "pi_enclosure",
    "sqrt_enclosure",
]
