"""Command-line front end.

Exit codes: 0 success, 2 negative verdict on a well-posed question (for
example a wavelet that fails admissibility), 1 any error (bad input file,
malformed arguments, I/O failure).  All stdout output is deterministic for
fixed arguments, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import io as cio
from .circle import DEFAULT_N_SAMPLES, CircleGrid, CircleSignal
from .cwt import (
    DEFAULT_N_MAX,
    DEFAULT_SCALE_COUNT,
    DEFAULT_SCALE_MAX,
    DEFAULT_SCALE_MIN,
    ScaleGrid,
    analyze,
    frame_bounds,
    lambda_sequence,
    make_dog,
    synthesize,
)
from .errors import CircletError
from .euclid import ContractionParams, euclidean_limit_error, smooth_bump
from .laguerre import (
    LaguerreBasisSpec,
    gauss_laguerre_gram,
    halfplane_basis,
    laguerre_function,
    laplace_transform,
)
from .line import (
    LineGrid,
    LineScaleGrid,
    LineSignal,
    LogGrid,
    line_admissibility,
    line_analyze,
    line_synthesize,
    mexican_hat,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; that code is reserved for negative
    # verdicts here, so remap to the generic error code.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit_(EXIT_ERROR, f"{self.prog}: error: {message}")


class SystemExit_(Exception):
    def __init__(self, code, message=None):
        self.code = code
        self.message = message


def _thread_cap() -> int:
    raw = os.environ.get("CIRCLET_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit_(EXIT_ERROR, f"circlet: CIRCLET_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise SystemExit_(EXIT_ERROR, f"circlet: CIRCLET_THREADS must be >= 1, got {cap}")
    return cap


def _circle_builtin(name: str, n_samples: int) -> CircleSignal:
    parts = name.split(":")
    if parts[0] == "dog":
        if len(parts) < 2:
            raise SystemExit_(EXIT_ERROR, "circlet: builtin dog needs a ratio, e.g. dog:2 or dog:2:balanced")
        try:
            alpha = float(parts[1])
        except ValueError:
            raise SystemExit_(EXIT_ERROR, f"circlet: bad dog ratio {parts[1]!r}")
        balanced = True
        if len(parts) > 2:
            if parts[2] not in ("balanced", "unbalanced"):
                raise SystemExit_(EXIT_ERROR, f"circlet: dog variant must be balanced or unbalanced, got {parts[2]!r}")
            balanced = parts[2] == "balanced"
        return make_dog(alpha, balanced=balanced, grid=CircleGrid(n_samples))
    if parts[0] == "gauss":
        grid = CircleGrid(n_samples)
        ev = lambda t: np.exp(-np.tan(t) ** 2)
        return CircleSignal(grid, ev(grid.nodes).astype(complex), evaluator=ev)
    if parts[0] == "constant":
        grid = CircleGrid(n_samples)
        return CircleSignal(grid, np.ones(n_samples, dtype=complex), evaluator=lambda t: np.ones_like(t))
    raise SystemExit_(EXIT_ERROR, f"circlet: unknown circle builtin {parts[0]!r}")


def _line_builtin(name: str, n_samples: int) -> LineSignal:
    if name == "mexican-hat":
        return mexican_hat(LineGrid(-16.0, 16.0, n_samples))
    if name == "gauss":
        grid = LineGrid(-16.0, 16.0, n_samples)
        ev = lambda x: np.exp(-x * x / 2.0)
        return LineSignal(grid, ev(grid.nodes).astype(complex), evaluator=ev)
    raise SystemExit_(EXIT_ERROR, f"circlet: unknown line builtin {name!r}")


def _load_circle_wavelet(args) -> CircleSignal:
    if args.wavelet is not None:
        sig = cio.read_signal(args.wavelet)
        if not isinstance(sig, CircleSignal):
            raise SystemExit_(EXIT_ERROR, f"circlet: {args.wavelet} holds a line signal, need a circle signal")
        return sig
    return _circle_builtin(args.builtin, args.n_samples)


def _load_line_wavelet(args) -> LineSignal:
    if args.wavelet is not None:
        sig = cio.read_signal(args.wavelet)
        if not isinstance(sig, LineSignal):
            raise SystemExit_(EXIT_ERROR, f"circlet: {args.wavelet} holds a circle signal, need a line signal")
        return sig
    return _line_builtin(args.builtin, args.n_samples)


def _scale_grid(args) -> ScaleGrid:
    return ScaleGrid(args.scale_min, args.scale_max, args.scale_count)


def _wavelet_flags(sub, line=False):
    sub.add_argument("--wavelet", help="signal CSV holding the wavelet samples")
    default = "mexican-hat" if line else "dog:2:balanced"
    sub.add_argument("--builtin", default=default,
                     help=f"built-in wavelet (default {default})")
    sub.add_argument("--n-samples", type=int, default=2048 if line else DEFAULT_N_SAMPLES,
                     help="sample count when building a built-in wavelet")


def _scale_flags(sub):
    sub.add_argument("--scale-min", type=float, default=DEFAULT_SCALE_MIN)
    sub.add_argument("--scale-max", type=float, default=DEFAULT_SCALE_MAX)
    sub.add_argument("--scale-count", type=int, default=DEFAULT_SCALE_COUNT)


def cmd_admissibility(args) -> int:
    gamma = _load_circle_wavelet(args)
    report = lambda_sequence(gamma, scales=_scale_grid(args), n_max=args.n_max)
    if args.out:
        cio.write_report(args.out, report)
    print(f"weak integral: {float(report.weak_integral.real)!r}")
    print(f"lambda inf: {report.inf_lambda!r}")
    print(f"lambda sup: {report.sup_lambda!r}")
    print(f"admissible: {'yes' if report.admissible else 'no'}")
    return EXIT_OK if report.admissible else EXIT_NEGATIVE


def cmd_frame(args) -> int:
    gamma = _load_circle_wavelet(args)
    report = lambda_sequence(gamma, scales=_scale_grid(args), n_max=args.n_max)
    lo, hi = frame_bounds(report)
    print(f"frame lower: {lo!r}")
    print(f"frame upper: {hi!r}")
    # end-to-end check: transform energy of a two-mode probe against the
    # diagonal sum pi * sum_n lambda_n |psi^n|^2
    grid = gamma.grid
    probe = CircleSignal(grid, (np.cos(2 * grid.nodes) + 0.5 * np.sin(4 * grid.nodes)).astype(complex))
    from .cwt import fourier_coeffs

    n_probe = min(report.n_max, grid.n_samples // 4)
    coeffs = fourier_coeffs(probe, n_probe)
    predicted = float(np.pi * np.sum(
        report.lambdas[report.n_max - n_probe: report.n_max + n_probe + 1]
        * np.abs(coeffs.values) ** 2
    ))
    scal = analyze(probe, gamma, scales=report.scales, n_max=n_probe)
    measured = scal.energy()
    rel = abs(measured - predicted) / predicted
    print(f"diagonal energy: {predicted!r}")
    print(f"transform energy: {measured!r}")
    print(f"relative deviation: {rel!r}")
    return EXIT_OK if report.admissible else EXIT_NEGATIVE


def cmd_cwt(args) -> int:
    gamma = _load_circle_wavelet(args)
    sig = cio.read_signal(args.signal)
    if not isinstance(sig, CircleSignal):
        raise SystemExit_(EXIT_ERROR, f"circlet: {args.signal} holds a line signal, need a circle signal")
    n_max = args.n_max if args.n_max is not None else min(DEFAULT_N_MAX, sig.grid.n_samples // 4)
    scal = analyze(sig, gamma, scales=_scale_grid(args), n_max=n_max)
    cio.write_scalogram(args.out, scal)
    print(f"wrote {args.out}.json ({scal.values.shape[0]} scales x {scal.values.shape[1]} angles)")
    return EXIT_OK


def cmd_icwt(args) -> int:
    gamma = _load_circle_wavelet(args)
    scal = cio.read_scalogram(args.scalogram)
    report = cio.read_report(args.report)
    rec = synthesize(scal, gamma, report)
    if args.out:
        cio.write_signal(args.out, rec)
    # deterministic self check: re-transform the reconstruction and compare
    re_scal = analyze(rec, gamma, scales=scal.scales, n_max=scal.n_max)
    num = float(np.sqrt(np.sum(np.abs(re_scal.values - scal.values) ** 2)))
    den = float(np.sqrt(np.sum(np.abs(scal.values) ** 2)))
    print(f"reanalysis relative error: {num / den!r}")
    return EXIT_OK


def cmd_line_cwt(args) -> int:
    gamma = _load_line_wavelet(args)
    adm = line_admissibility(gamma)
    if not adm.admissible:
        print("wavelet fails the line admissibility integral")
        return EXIT_NEGATIVE
    sig = cio.read_signal(args.signal)
    if not isinstance(sig, LineSignal):
        raise SystemExit_(EXIT_ERROR, f"circlet: {args.signal} holds a circle signal, need a line signal")
    scales = LineScaleGrid(args.scale_min, args.scale_max, args.scale_count)
    scal = line_analyze(sig, gamma, scales=scales)
    if args.out:
        cio.write_scalogram(args.out, scal)
        print(f"wrote {args.out}.json ({scal.values.shape[0]} scales x {scal.values.shape[1]} positions)")
    if args.roundtrip:
        rec = line_synthesize(scal, gamma, adm)
        err = float(np.sqrt(sig.grid.spacing * np.sum(np.abs(rec.values - sig.values) ** 2)))
        ref = float(np.sqrt(sig.grid.spacing * np.sum(np.abs(sig.values) ** 2)))
        print(f"round trip relative error: {err / ref!r}")
    return EXIT_OK


def cmd_euclid(args) -> int:
    radii = []
    for tok in args.R_list.split(","):
        try:
            radii.append(float(tok))
        except ValueError:
            raise SystemExit_(EXIT_ERROR, f"circlet: bad radius {tok!r}")
    pairs = []
    for tok in args.pairs.split(","):
        bits = tok.split(":")
        if len(bits) != 2:
            raise SystemExit_(EXIT_ERROR, f"circlet: pairs must be b:a, got {tok!r}")
        try:
            pairs.append((float(bits[0]), float(bits[1])))
        except ValueError:
            raise SystemExit_(EXIT_ERROR, f"circlet: bad pair {tok!r}")
    grid = LineGrid(-16.0, 16.0, args.n_samples)
    f = LineSignal.from_evaluator(grid, smooth_bump(1.0))
    for b, a in pairs:
        errs = []
        for r in radii:
            err = euclidean_limit_error(f, b, a, ContractionParams(radius=r))
            errs.append(err)
            print(f"b={b!r} a={a!r} R={r!r} error={err!r}")
        if len(errs) >= 2 and errs[-1] > 0:
            print(f"b={b!r} a={a!r} shrink factor={errs[0] / errs[-1]!r}")
    return EXIT_OK


def cmd_laguerre(args) -> int:
    spec = LaguerreBasisSpec(k=args.k)
    gram = gauss_laguerre_gram(spec, args.n_max)
    off = gram - np.eye(args.n_max + 1)
    print(f"gram deviation from identity: {float(np.max(np.abs(off)))!r}")
    return EXIT_OK


def cmd_laplace(args) -> int:
    spec = LaguerreBasisSpec(k=args.k)
    if not args.points.startswith("random:"):
        raise SystemExit_(EXIT_ERROR, f"circlet: --points must look like random:N, got {args.points!r}")
    try:
        n_points = int(args.points.split(":", 1)[1])
    except ValueError:
        raise SystemExit_(EXIT_ERROR, f"circlet: bad point count in {args.points!r}")
    rng = np.random.default_rng(args.seed)
    ws = rng.uniform(0.5, 2.0, n_points) + 1j * rng.uniform(-2.0, 2.0, n_points)
    grid = LogGrid(1e-4, 200.0, 4000)
    worst = 0.0
    for n in range(args.n_max + 1):
        f = laguerre_function(spec, n, grid)
        for w in ws:
            got = laplace_transform(f, spec, w)
            want = complex(halfplane_basis(spec, n, w))
            worst = max(worst, abs(got - want))
    print(f"checked modes 0..{args.n_max} at {n_points} points")
    print(f"max transform error: {worst!r}")
    return EXIT_OK


def build_parser() -> _Parser:
    p = _Parser(prog="circlet", description="wavelet analysis on the circle and the line")
    p.add_argument("--seed", type=int, default=0, help="seed for any randomized choices")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("admissibility", help="scale-integral admissibility report for a circle wavelet")
    _wavelet_flags(s)
    _scale_flags(s)
    s.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    s.add_argument("--out", help="write the report JSON here")
    s.set_defaults(func=cmd_admissibility)

    s = sub.add_parser("frame", help="frame bounds and an energy cross-check")
    _wavelet_flags(s)
    _scale_flags(s)
    s.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    s.set_defaults(func=cmd_frame)

    s = sub.add_parser("cwt", help="circle wavelet transform of a signal CSV")
    _wavelet_flags(s)
    _scale_flags(s)
    s.add_argument("--signal", required=True)
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--out", required=True, help="output stem: writes <out>.json/.re.csv/.im.csv")
    s.set_defaults(func=cmd_cwt)

    s = sub.add_parser("icwt", help="reconstruct a signal from a scalogram")
    _wavelet_flags(s)
    s.add_argument("--scalogram", required=True, help="stem written by cwt")
    s.add_argument("--report", required=True, help="report JSON from admissibility")
    s.add_argument("--out", help="write the reconstruction CSV here")
    s.set_defaults(func=cmd_icwt)

    s = sub.add_parser("line-cwt", help="wavelet transform on the real line")
    _wavelet_flags(s, line=True)
    _scale_flags(s)
    s.add_argument("--signal", required=True)
    s.add_argument("--out", help="output stem for the scalogram")
    s.add_argument("--roundtrip", action="store_true", help="also reconstruct and print the error")
    s.set_defaults(func=cmd_line_cwt)

    s = sub.add_parser("euclid", help="flat-limit contraction errors for given moves and radii")
    s.add_argument("--R-list", default="10,100,1000")
    s.add_argument("--pairs", default="0.7:2.0,-1.0:0.5", help="comma list of b:a moves")
    s.add_argument("--n-samples", type=int, default=2048)
    s.set_defaults(func=cmd_euclid)

    s = sub.add_parser("laguerre", help="orthonormality check for the radial ladder basis")
    s.add_argument("--k", type=float, default=1.0)
    s.add_argument("--n-max", type=int, default=8)
    s.set_defaults(func=cmd_laguerre)

    s = sub.add_parser("laplace", help="compare the integral transform with its closed form")
    s.add_argument("--k", type=float, default=1.0)
    s.add_argument("--n-max", type=int, default=4)
    s.add_argument("--points", default="random:5")
    s.set_defaults(func=cmd_laplace)

    return p


def main(argv=None) -> int:
    try:
        _thread_cap()
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except CircletError as exc:
        print(f"circlet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"circlet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
