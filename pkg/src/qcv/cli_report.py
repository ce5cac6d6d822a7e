"""Command-line driver: run check suites, persist certificates, resume
interrupted sweeps, and emit CSV plus standalone SVG scatter plots.

Two console entry points:

    verify <suite> --from N --to M --mode <m> --precision <bits>
           --out DIR [--resume] [--jobs K] [--d0 17]
    report plot --input FILE --x COL --y COL --output FILE.svg

Suites: cn, lemma-min, pointwise, one-minus-x2, sums, ledger, induction,
prop-grid, all.  The env var QCV_OUT overrides --out.

Exit status: 0 if every certificate passes, 1 if any fails, 2 if any is
inconclusive and none fails, 64 on usage errors, 65 on a resume
config-hash mismatch.

Determinism contract: two runs with the same config produce byte-identical
certificates.json (and SVG).  To honor it, the serialized runtime_ms is
always 0 and the meta timestamp is a fixed epoch string; wall-clock
timings go to stderr only.  Exact rationals serialize as "p/q" strings;
enclosures as {"lo", "hi"} decimal strings rounded outward to 30
significant digits (so the serialized interval still contains the
computed one).

Checkpointing: an append-only JSONL file (checkpoint.log) of completed
certificates, fsynced every 100 records; resuming with a matching config
hash skips completed check_ids and reproduces the uninterrupted output
byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, getcontext
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .numerics import Interval
from . import verifier
from .verifier import Certificate, FAIL, INCONCLUSIVE, PASS

__version__ = "0.1.0"

SUITES = ("cn", "lemma-min", "pointwise", "one-minus-x2", "sums", "ledger",
          "induction", "prop-grid", "all")
MODES = ("float64", "interval", "exact")
PRECISIONS = (64, 128, 256, 512)

EX_OK, EX_FAIL, EX_INCONCLUSIVE, EX_USAGE, EX_RESUME = 0, 1, 2, 64, 65
_FIXED_TIMESTAMP = "1970-01-01T00:00:00Z"


@dataclass(frozen=True)
class RunConfig:
    suite: str
    range_from: int | None = None
    range_to: int | None = None
    mode: str = "interval"
    precision_bits: int = 128
    out_dir: Path = Path(".")
    resume: bool = False
    jobs: int = 1
    d0_override: int | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.precision_bits not in PRECISIONS:
            raise ValueError(f"precision must be one of {PRECISIONS}")
        if (self.range_from is not None and self.range_to is not None
                and self.range_from > self.range_to):
            raise ValueError("--from must not exceed --to")

    def hash(self) -> str:
        payload = json.dumps({
            "suite": self.suite, "from": self.range_from, "to": self.range_to,
            "mode": self.mode, "precision": self.precision_bits,
            "d0": self.d0_override, "version": __version__,
        }, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class CertificateSet:
    meta: dict
    certificates: list[Certificate] = field(default_factory=list)

    def verdict_counts(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for c in self.certificates:
            counts[c.verdict] = counts.get(c.verdict, 0) + 1
        return counts

    def exit_status(self) -> int:
        counts = self.verdict_counts()
        if counts.get(FAIL, 0):
            return EX_FAIL
        if counts.get(INCONCLUSIVE, 0):
            return EX_INCONCLUSIVE
        return EX_OK


# ---------------------------------------------------------------------------
# serialization: rationals as p/q, enclosures as outward decimal strings
# ---------------------------------------------------------------------------

def _decimal_outward(q: Fraction, direction: str) -> str:
    getcontext().prec = 30
    d = Decimal(q.numerator) / Decimal(q.denominator)
    rounding = ROUND_FLOOR if direction == "down" else ROUND_CEILING
    getcontext().rounding = rounding
    d = +d
    return format(d, "f") if -1e30 < d < 1e30 else str(d)


def _serialize_value(v) -> object:
    if v is None:
        return None
    if isinstance(v, Interval):
        return {"lo": _decimal_outward(v.lo, "down"),
                "hi": _decimal_outward(v.hi, "up")}
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def certificate_to_dict(c: Certificate) -> dict:
    return {
        "check_id": c.check_id,
        "params": {k: (str(v) if isinstance(v, Fraction) else v)
                   for k, v in sorted(c.params.items())},
        "claimed": c.claimed,
        "computed": _serialize_value(c.computed),
        "verdict": c.verdict,
        "mode": c.mode,
        "precision_bits": c.precision_bits,
        "runtime_ms": 0,
        "notes": c.notes,
    }


def write_certificates_json(path: Path, cert_set: CertificateSet) -> None:
    payload = {
        "meta": cert_set.meta,
        "certificates": [certificate_to_dict(c) for c in cert_set.certificates],
    }
    text = json.dumps(payload, sort_keys=True, indent=1, separators=(",", ": "))
    path.write_text(text + "\n", encoding="utf-8")


def write_suite_csv(path: Path, suite: str, certs: Sequence[Certificate]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if suite == "cn":
        writer.writerow(["n", "c_n_lo", "c_n_hi", "claimed", "verdict"])
        for c in certs:
            if not c.check_id.startswith("cn/"):
                continue
            writer.writerow([c.params["n"],
                             _decimal_outward(c.computed.lo, "down"),
                             _decimal_outward(c.computed.hi, "up"),
                             c.claimed, c.verdict])
    elif suite == "induction":
        writer.writerow(["n", "g_at_lower_endpoint", "g_at_upper_endpoint",
                         "a2_coeff_positive", "verdict"])
        for c in certs:
            if not c.check_id.startswith("induction/n="):
                continue
            writer.writerow([c.params["n"], repr(c.params["g_at_lower_endpoint"]),
                             repr(c.params["g_at_upper_endpoint"]),
                             c.params["a2_coeff_positive"], c.verdict])
    else:
        writer.writerow(["check_id", "computed_lo", "computed_hi", "claimed", "verdict"])
        for c in certs:
            if isinstance(c.computed, Interval):
                lo = _decimal_outward(c.computed.lo, "down")
                hi = _decimal_outward(c.computed.hi, "up")
            else:
                lo = hi = "" if c.computed is None else str(c.computed)
            writer.writerow([c.check_id, lo, hi, c.claimed, c.verdict])
    path.write_text(buf.getvalue(), encoding="utf-8")


# ---------------------------------------------------------------------------
# suite assembly: each suite is an ordered list of (check_id, thunk)
# ---------------------------------------------------------------------------

def _rng(config: RunConfig, lo: int, hi: int) -> tuple[int, int]:
    a = config.range_from if config.range_from is not None else lo
    b = config.range_to if config.range_to is not None else hi
    return a, b


_C_UPPER_CACHE: dict[int, dict[int, Fraction]] = {}


def _c_upper(k_to: int = 600) -> dict[int, Fraction]:
    if k_to not in _C_UPPER_CACHE:
        _C_UPPER_CACHE[k_to] = verifier.c_upper_table(2, k_to)
    return _C_UPPER_CACHE[k_to]


def _escalate(builder, start_bits: int):
    """Run a precision-taking certificate builder up the retry ladder while
    any of its certificates is Inconclusive (128 -> 256 -> 512).  Screening
    mode pins verdicts at Inconclusive, so no ladder applies there."""
    ladder = [p for p in (start_bits, 128, 256, 512) if p >= start_bits]
    ladder = sorted(set(ladder))
    certs = builder(ladder[0])
    single = isinstance(certs, Certificate)
    for bits in ladder[1:]:
        group = [certs] if single else certs
        if all(c.verdict != INCONCLUSIVE or c.mode == "float64" for c in group):
            break
        certs = builder(bits)
        single = isinstance(certs, Certificate)
    return certs


def _suite_certificates(suite: str, config: RunConfig) -> list[Certificate]:
    # float64 screening overrides every builder's natural mode (and caps
    # verdicts at Inconclusive); otherwise each builder keeps the label of
    # the arithmetic it actually uses (exact rational vs interval), so
    # requesting --mode exact never mislabels an enclosure-based check
    mode = config.mode
    kw = {"mode": "float64"} if mode == "float64" else {}
    if suite == "cn":
        a, b = _rng(config, 6, 428)
        return verifier.cn_certificates(a, b, **kw)
    if suite == "lemma-min":
        a, b = _rng(config, 8, 200)
        certs = verifier.lemma_min_certificates(a, b, **kw)
        certs += verifier.zero_bound_certificates(**kw)
        certs += verifier.oracle_overlap_certificates(**kw)
        certs += verifier.e_minima_certificates(**kw)
        certs += verifier.theta_window_certificates(**kw)
        return certs
    if suite == "pointwise":
        a, b = _rng(config, 6, 100)
        return (verifier.pointwise_certificates(a, b, **kw)
                + verifier.hyper_sandwich_certificates(**kw))
    if suite == "one-minus-x2":
        certs = []
        from .numerics import NU_72, NU_92
        seen_nu = set()
        for n, nu in ((12, NU_72), (40, NU_72), (12, NU_92), (40, NU_92)):
            first = nu.twice_value not in seen_nu
            seen_nu.add(nu.twice_value)
            certs += _escalate(
                lambda bits, n=n, nu=nu, first=first: verifier.check_one_minus_x2_bound(
                    n, nu, precision=bits, include_ctilde=first, **kw),
                config.precision_bits)
        certs.append(_escalate(
            lambda bits: verifier.tail_bound_certificate(precision=bits, **kw),
            config.precision_bits))
        return certs
    if suite == "sums":
        a, b = _rng(config, 5, 101)
        ns = [n for n in range(a, b + 1) if n % 2 == 1]
        return verifier.sum_identity_certificates(ns, **kw)
    if suite == "ledger":
        return verifier.scalar_ledger(c_upper=_c_upper(), **kw)
    if suite == "induction":
        a, b = _rng(config, 41, 9997)
        a += (1 - a) % 4
        ctx = verifier.DEFAULT_CONTEXT
        if config.d0_override is not None:
            ctx = verifier.VerificationContext(d0=Fraction(config.d0_override))
        certs = verifier.base_bound_certificates(**kw)
        certs += verifier.induction_sweep(a, b, ctx=ctx,
                                          c_upper=_c_upper(max(61, 64)), **kw)
        certs += verifier.s4_aggregate_certificates(
            mode="float64" if mode == "float64" else "interval")
        return certs
    if suite == "prop-grid":
        certs = verifier.quotient_regime_certificates(
            (65, 72, 73, 100, 1001, 9997), c_upper=_c_upper(64), **kw)
        cu = _c_upper(64)
        certs.append(verifier.lambda_grid_certificate(65, 6, cu[6], **kw))
        certs.append(verifier.lambda_grid_certificate(101, 30, cu[30], **kw))
        certs.append(verifier._cert_bool(
            "prop-grid/envelope-crossover", {},
            all(verifier.envelope_crossover_identity(lam) for lam in (14, 150, 4550)),
            "envelope branches agree exactly at the crossover mass d/(2 lam_k)",
            "float64" if mode == "float64" else "exact"))
        return certs
    raise ValueError(f"unknown suite {suite!r}")


def build_suite(config: RunConfig) -> list[Certificate]:
    if config.suite == "all":
        subs = [RunConfig(suite=s, mode=config.mode,
                          precision_bits=config.precision_bits,
                          out_dir=config.out_dir, jobs=config.jobs,
                          d0_override=config.d0_override)
                for s in SUITES[:-1]]
        if config.jobs > 1:
            # bounded worker pool; assembly order stays by suite, not by
            # completion time, so the output is scheduling-independent
            _c_upper()  # warm the shared cache once, outside the pool
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                results = list(pool.map(lambda s: _suite_certificates(s.suite, s), subs))
        else:
            results = [_suite_certificates(s.suite, s) for s in subs]
        certs: list[Certificate] = []
        for r in results:
            certs.extend(r)
        return certs
    return _suite_certificates(config.suite, config)


# ---------------------------------------------------------------------------
# checkpointed execution and resume
# ---------------------------------------------------------------------------

def _checkpoint_path(config: RunConfig) -> Path:
    return config.out_dir / "checkpoint.log"


def _load_checkpoint(config: RunConfig) -> dict[str, dict] | None:
    path = _checkpoint_path(config)
    if not path.exists():
        return {}
    done: dict[str, dict] = {}
    header_ok = False
    with path.open() as fh:
        for i, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if i == 0:
                if rec.get("config_hash") != config.hash():
                    return None
                header_ok = True
                continue
            done[rec["check_id"]] = rec["certificate"]
    if not header_ok and done:
        return None
    return done


def _dict_to_certificate(d: dict) -> Certificate:
    computed = d["computed"]
    if isinstance(computed, dict):
        computed = Interval(Fraction(Decimal(computed["lo"])),
                            Fraction(Decimal(computed["hi"])))
    elif isinstance(computed, str):
        num, den = computed.split("/")
        computed = Fraction(int(num), int(den))
    return Certificate(d["check_id"], d["params"], d["claimed"], computed,
                       d["verdict"], d["mode"], d["precision_bits"],
                       0, d["notes"])


def run_suite(config: RunConfig) -> CertificateSet:
    """Execute the configured suite with checkpointing; returns the set."""
    config.out_dir.mkdir(parents=True, exist_ok=True)
    done = {} if not config.resume else _load_checkpoint(config)
    if done is None:
        raise ResumeMismatch("checkpoint config hash does not match")
    certs = _run_with_checkpoint(config, done)
    meta = {"tool_version": __version__, "config_hash": config.hash(),
            "timestamp": _FIXED_TIMESTAMP}
    cert_set = CertificateSet(meta=meta, certificates=certs)
    write_certificates_json(config.out_dir / "certificates.json", cert_set)
    write_suite_csv(config.out_dir / f"{config.suite}.csv", config.suite, certs)
    return cert_set


class ResumeMismatch(RuntimeError):
    pass


def _run_with_checkpoint(config: RunConfig, done: dict[str, dict]
                         ) -> list[Certificate]:
    t0 = time.time()
    fresh = build_suite(config)
    out: list[Certificate] = []
    path = _checkpoint_path(config)
    new_file = not (config.resume and done)
    with path.open("w" if new_file else "a") as fh:
        if new_file:
            fh.write(json.dumps({"config_hash": config.hash()}) + "\n")
        pending = 0
        for cert in fresh:
            if cert.check_id in done:
                out.append(_dict_to_certificate(done[cert.check_id]))
                continue
            out.append(cert)
            fh.write(json.dumps({"check_id": cert.check_id,
                                 "certificate": certificate_to_dict(cert)},
                                sort_keys=True) + "\n")
            pending += 1
            if pending % 100 == 0:
                fh.flush()
                os.fsync(fh.fileno())
        fh.flush()
        os.fsync(fh.fileno())
    print(f"[qcv] {config.suite}: {len(out)} certificates in "
          f"{time.time() - t0:.1f}s", file=sys.stderr)
    return out


def resume(config: RunConfig) -> CertificateSet:
    """Resume a prior run; refuses (exit 65) on config-hash mismatch."""
    return run_suite(RunConfig(**{**config.__dict__, "resume": True}))


# ---------------------------------------------------------------------------
# SVG scatter plots
# ---------------------------------------------------------------------------

def _nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    import math as _math
    raw = span / target
    mag = 10 ** _math.floor(_math.log10(raw))
    for mult in (1, 2, 2.5, 5, 10):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = _math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * span:
        ticks.append(round(t, 12))
        t += step
    return ticks


def plot_scatter(csv_path: Path, x_column: str, y_column: str,
                 out_svg: Path) -> None:
    """Standalone deterministic SVG scatter plot of two CSV columns."""
    with open(csv_path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or x_column not in reader.fieldnames \
                or y_column not in reader.fieldnames:
            raise KeyError(
                f"columns {x_column!r}, {y_column!r} not both present in "
                f"{csv_path} (have {reader.fieldnames})")
        xs, ys = [], []
        for row in reader:
            xs.append(float(row[x_column]))
            ys.append(float(row[y_column]))
    if not xs:
        raise ValueError("no data rows to plot")

    def esc(s: str) -> str:
        return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")

    x_column, y_column = esc(x_column), esc(y_column)
    w, h = 960, 540
    ml, mr, mt, mb = 75, 20, 20, 45
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1, x_hi + 1
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1, y_hi + 1
    padx = 0.04 * (x_hi - x_lo)
    pady = 0.06 * (y_hi - y_lo)
    x_lo, x_hi = x_lo - padx, x_hi + padx
    y_lo, y_hi = y_lo - pady, y_hi + pady

    def sx(x):
        return ml + (x - x_lo) / (x_hi - x_lo) * (w - ml - mr)

    def sy(y):
        return h - mb - (y - y_lo) / (y_hi - y_lo) * (h - mt - mb)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
        f'<rect x="{ml}" y="{mt}" width="{w - ml - mr}" height="{h - mt - mb}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for t in _nice_ticks(x_lo + padx, x_hi - padx):
        if not (x_lo <= t <= x_hi):
            continue
        px = sx(t)
        parts.append(f'<line x1="{px:.2f}" y1="{h - mb}" x2="{px:.2f}" '
                     f'y2="{h - mb + 5}" stroke="black"/>')
        parts.append(f'<text x="{px:.2f}" y="{h - mb + 18}" font-size="12" '
                     f'text-anchor="middle">{t:g}</text>')
    for t in _nice_ticks(y_lo + pady, y_hi - pady):
        if not (y_lo <= t <= y_hi):
            continue
        py = sy(t)
        parts.append(f'<line x1="{ml - 5}" y1="{py:.2f}" x2="{ml}" '
                     f'y2="{py:.2f}" stroke="black"/>')
        parts.append(f'<text x="{ml - 8}" y="{py + 4:.2f}" font-size="12" '
                     f'text-anchor="end">{t:g}</text>')
    if y_lo < 0 < y_hi:
        py = sy(0.0)
        parts.append(f'<line x1="{ml}" y1="{py:.2f}" x2="{w - mr}" '
                     f'y2="{py:.2f}" stroke="#999" stroke-dasharray="4 3"/>')
    parts.append(f'<text x="{(ml + w - mr) / 2:.1f}" y="{h - 8}" font-size="13" '
                 f'text-anchor="middle">{x_column}</text>')
    parts.append(f'<text x="16" y="{(mt + h - mb) / 2:.1f}" font-size="13" '
                 f'text-anchor="middle" transform="rotate(-90 16 '
                 f'{(mt + h - mb) / 2:.1f})">{y_column}</text>')
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2.2" '
                     'fill="#1a56a0"/>')
    parts.append("</svg>")
    Path(out_svg).write_text("\n".join(parts) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def _verify_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="verify",
        description="Run certificate suites for the six-sphere bound checks.")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--from", dest="range_from", type=int, default=None)
    p.add_argument("--to", dest="range_to", type=int, default=None)
    p.add_argument("--mode", choices=MODES, default="interval")
    p.add_argument("--precision", type=int, choices=PRECISIONS, default=128)
    p.add_argument("--out", type=Path, default=Path("qcv-out"))
    p.add_argument("--resume", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--d0", dest="d0_override", type=int, default=None)
    return p


def verify_main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _verify_parser().parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0,) else 0
    out_dir = Path(os.environ.get("QCV_OUT", str(args.out)))
    try:
        config = RunConfig(suite=args.suite, range_from=args.range_from,
                           range_to=args.range_to, mode=args.mode,
                           precision_bits=args.precision, out_dir=out_dir,
                           resume=args.resume, jobs=max(1, args.jobs),
                           d0_override=args.d0_override)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        cert_set = run_suite(config)
    except ResumeMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_RESUME
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    counts = cert_set.verdict_counts()
    print(f"[qcv] Pass={counts.get(PASS, 0)} Fail={counts.get(FAIL, 0)} "
          f"Inconclusive={counts.get(INCONCLUSIVE, 0)}", file=sys.stderr)
    for c in cert_set.certificates:
        if c.verdict != PASS:
            print(f"[qcv]   {c.verdict}: {c.check_id}", file=sys.stderr)
    return cert_set.exit_status()


def report_main(argv: Sequence[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="report", description="Render CSV data.")
    sub = p.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="scatter plot a CSV into an SVG")
    plot.add_argument("--input", type=Path, required=True)
    plot.add_argument("--x", required=True)
    plot.add_argument("--y", required=True)
    plot.add_argument("--output", type=Path, required=True)
    try:
        args = p.parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0,) else 0
    try:
        plot_scatter(args.input, args.x, args.y, args.output)
    except (KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    return EX_OK


if __name__ == "__main__":
    sys.exit(verify_main())
