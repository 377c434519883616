"""Command-line surface: darcais <command> [flags].

Commands
  triangle   emit the exact triangle A(2,n,k) (+ alpha) as CSV or JSON
  verify     run a named invariant suite; exit 3 on the first failure
  landscape  emit the cusp-landscape samples and the Farey overlay, and
             render the two-panel figure alongside the data
  report     tabular diagnostics (rho, liminf, convergence, logconcavity,
             ansatz), each carrying its frozen tolerance, with a figure

Conventions
  * exit codes: 0 success, 1 usage error, 2 resource limit, 3 verification
    failure (stable contract),
  * --format {csv,json}: CSV uses ',' separators, '\n' line endings, and a
    mandatory header row (reports prefix one '# tolerance: ...' comment
    line); JSON round-trips,
  * rationals serialize as "num/den" strings and big integers as decimal
    strings, never floats,
  * --config PATH points at a 'key = value' file; flags override it;
    unknown keys are rejected. The only environment variable honored is
    DARCAIS_OUT_DIR (default directory for output files),
  * deterministic throughout: no randomness, fixed grids, stable ordering.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction

from . import asymptotics, circle, numtheory, triangle
from .errors import ConvergenceError, DomainError, ResourceLimitError, VerificationError

__all__ = ["RunConfig", "main"]


# ======================================================================
# configuration
# ======================================================================


@dataclass(frozen=True)
class RunConfig:
    """Precision targets, resource caps, series config, and output options."""

    tol_convergence: float = 0.05
    tol_rho: float = 0.10
    max_rows: int = 400
    max_n: int = 10**6
    max_bits: int = 1_000_000
    terms: int = 25_000
    t_floor: float = 0.002
    format: str = "csv"
    out: str | None = None

    def __post_init__(self) -> None:
        for name in ("tol_convergence", "tol_rho", "max_rows", "max_n", "max_bits",
                     "terms", "t_floor"):
            if getattr(self, name) <= 0:
                raise DomainError(f"config {name} must be positive")
        if self.format not in ("csv", "json"):
            raise DomainError(f"config format must be csv or json, not {self.format!r}")

    def series(self) -> circle.SeriesConfig:
        return circle.SeriesConfig(terms=self.terms, t_floor=self.t_floor)


def _parse_config_file(path: str) -> dict:
    known = {f.name: f.type for f in fields(RunConfig)}
    raw: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise DomainError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in text.split("=", 1))
            if key not in known:
                raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
            if key in ("max_rows", "max_n", "max_bits", "terms"):
                raw[key] = int(value)
            elif key in ("tol_convergence", "tol_rho", "t_floor"):
                raw[key] = float(value)
            else:
                raw[key] = value
    return raw


def _load_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = replace(cfg, **_parse_config_file(args.config))
    if getattr(args, "format", None):
        cfg = replace(cfg, format=args.format)
    if getattr(args, "out", None):
        cfg = replace(cfg, out=args.out)
    return cfg


def _resolve_out(path: str) -> str:
    base = os.environ.get("DARCAIS_OUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


# ======================================================================
# serialization helpers
# ======================================================================


def _cell(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_cell(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        path = _resolve_out(out)
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}")


def _report_csv(tolerance: str, header: list[str], rows: list[list]) -> str:
    lines = [f"# tolerance: {tolerance}", ",".join(header)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _report_json(kind: str, params: dict, tolerance: str,
                 header: list[str], rows: list[list]) -> str:
    obj = {
        "kind": kind,
        "params": params,
        "tolerance": tolerance,
        "header": header,
        "rows": [[_json_cell(v) for v in row] for row in rows],
    }
    return json.dumps(obj, indent=1) + "\n"


# ======================================================================
# verification suites
# ======================================================================


def _check(condition: bool, label: str, counterexample: str = "") -> None:
    if condition:
        print(f"ok   {label}")
    else:
        raise VerificationError(f"FAIL {label}" + (f": {counterexample}" if counterexample else ""))


def _suite_bell_oracle(cfg: RunConfig) -> None:
    tri = triangle.darcais_triangle(60, max_rows=cfg.max_rows)
    _check(tri.A[3] == (0, 8, 9, 1), "row 3 equals (0, 8, 9, 1)", repr(tri.A[3]))
    for n in range(13):
        for k in range(n + 1):
            a, b = triangle.alpha(n, k), triangle.alpha_bruteforce(n, k)
            if a != b:
                _check(False, "alpha equals composition enumeration", f"(n,k)=({n},{k}): {a} != {b}")
    _check(True, "alpha equals composition enumeration for n <= 12")
    for n in range(1, 41):
        for k in range(1, n + 1):
            a, b = triangle.alpha(n, k), triangle.kfold_sigma_convolution(k, n)
            if a != b:
                _check(False, "alpha equals k-fold convolution", f"(n,k)=({n},{k})")
    _check(True, "alpha equals k-fold convolution for n <= 40")
    for n in range(61):
        if tri.row_sum(n) != math.factorial(n) * triangle.partition_count(n):
            _check(False, "row sums equal n! p(n)", f"n={n}")
    _check(True, "row sums equal n! p(n) for n <= 60")


def _suite_besge(cfg: RunConfig) -> None:
    sig = triangle.sigma_power_sieve(1, 2000)
    for n in range(1, 2001):
        lhs = sum(sig[k] * sig[n - k] for k in range(1, n))
        if lhs != triangle.besge_rhs(n):
            _check(False, "divisor convolution identity", f"n={n}")
    _check(True, "sum sigma_1(k) sigma_1(n-k) = (5 sigma_3 + (1-6n) sigma_1)/12, n <= 2000")
    for n in range(2, 301):
        if triangle.convolve(triangle.ConvolutionSpec(0, 0, 1, 1, n)) != triangle.besge_rhs(n):
            _check(False, "convolve matches the identity", f"n={n}")
    _check(True, "convolve(0,0,1,1,n) matches for n <= 300")


def _suite_ramanujan_identity(cfg: RunConfig) -> None:
    worst = 0.0
    for k in (2, 3):
        bound = asymptotics.ramanujan_tail_bound(k, 500)
        for n in range(1, 51):
            partial = asymptotics.ramanujan_series_partial(k, n, 500)
            target = asymptotics.exact_to_float(
                numtheory.sigma(-2 * k + 1, n)) / asymptotics.zeta(2 * k).value
            err = abs(partial - target)
            worst = max(worst, err / bound)
            if err > bound:
                _check(False, "Ramanujan series within tail bound", f"(k,n)=({k},{n}) err={err:.3e}")
    _check(True, f"sum c_q(n)/q^2k within tail bound, k in {{2,3}}, n <= 50 (worst {worst:.3f} of bound)")


def _suite_modular_defect(cfg: RunConfig) -> None:
    worst = 0.0
    for i in range(50):
        t = 0.05 * (10 / 0.05) ** (i / 49)
        worst = max(worst, circle.F_modular_defect(t))
    _check(worst <= 1e-8, f"transform defect <= 1e-8 on 50-point grid (max {worst:.3e})")
    tf = 1e-4 * circle.F_real(1e-4, cfg.series())
    rel = abs(tf / asymptotics.zeta(2).value - 1)
    _check(rel <= 0.01, f"t F(t) within 1% of zeta(2) at t = 1e-4 (rel {rel:.3e})")


def _suite_dedekind_reciprocity(cfg: RunConfig) -> None:
    for k in range(2, 61):
        for h in range(1, k):
            if math.gcd(h, k) != 1:
                continue
            lhs = numtheory.dedekind_sum(h, k) + numtheory.dedekind_sum(k, h)
            rhs = Fraction(-1, 4) + Fraction(1, 12) * (
                Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k))
            if lhs != rhs:
                _check(False, "Dedekind reciprocity", f"(h,k)=({h},{k})")
    _check(True, "s(h,k) + s(k,h) reciprocity exact for coprime h < k <= 60")
    import cmath
    worst = 0.0
    for q in range(1, 51):
        units = [p for p in range(1, q + 1) if math.gcd(p, q) == 1]
        for n in range(1, 51):
            direct = sum(cmath.exp(2j * math.pi * n * p / q) for p in units)
            closed = numtheory.ramanujan_sum(q, n)
            worst = max(worst, abs(direct - closed))
            if abs(direct - closed) > 1e-9:
                _check(False, "Ramanujan sum closed form", f"(q,n)=({q},{n})")
    _check(True, f"c_q(n) closed form vs direct exponential sum, q,n <= 50 (worst {worst:.2e})")


def _suite_convolution_asymptotics(cfg: RunConfig) -> None:
    for (a, b, r, s) in [(0, 0, 1, 1), (1, 0, 1, 1), (0, 0, 2, 2), (1, 1, 1, 2)]:
        rep = asymptotics.convergence_report(a, b, r, s, [1000, 100000])
        near, far = abs(rep.ratio[1] - 1), abs(rep.ratio[0] - 1)
        _check(near <= cfg.tol_convergence and near < far,
               f"S^({a},{b})_(-{r},-{s}) ratio {rep.ratio[1]:.6f} at 1e5 (vs {rep.ratio[0]:.6f} at 1e3)",
               f"|ratio-1|={near:.4f}")


def _suite_ratio_limits(cfg: RunConfig) -> None:
    _check(asymptotics.logconcavity_ratio_liminf(2) == 0, "liminf at k = 2 is exactly 0")
    for k in range(3, 101):
        lim = asymptotics.logconcavity_ratio_liminf(k)
        if not (lim > 1.0 and lim > asymptotics.calculus_lower_bound(k)):
            _check(False, "liminf exceeds 1 and the rational bound", f"k={k}: {lim}")
    _check(True, "liminf > max(1, rational bound) for 3 <= k <= 100")
    for k in range(3, 9):
        for n in range(1, 5001):
            asymptotics.divisor_ratio(n, k)  # raises if below the zeta bound
    _check(True, "divisor ratio above the zeta bound for n <= 5000, 3 <= k <= 8")


def _suite_primorial_trace(cfg: RunConfig) -> None:
    tr2 = asymptotics.primorial_liminf_trace(2, 20, 30)
    dec = all(tr2[i + 1][1] < tr2[i][1] for i in range(len(tr2) - 1))
    _check(dec, "k = 2 trace strictly decreasing in m (r = 30)")
    _check(tr2[-1][1] < 0.5, f"k = 2 trace below 0.5 at m = 20 ({tr2[-1][1]:.4f})")
    tr3 = asymptotics.primorial_liminf_trace(3, 20, 30)
    bound = asymptotics.zeta_ratio_bound(3)
    _check(all(v > bound for _, v in tr3), "k = 3 trace stays above the zeta bound")
    rel = tr3[-1][1] / bound - 1
    _check(0 <= rel <= 0.02, f"k = 3 trace within 2% of the bound at m = 20 (rel {rel:.2e})")


def _suite_calculus_bound(cfg: RunConfig) -> None:
    _check(asymptotics.calculus_lower_bound(3) == 1.0, "bound equals 1 at k = 3")
    _check(abs(asymptotics.calculus_lower_bound(4) - 16 / 15) < 1e-15, "bound equals 16/15 at k = 4")
    vals = [asymptotics.calculus_lower_bound(k) for k in range(5, 101)]
    _check(all(b > a for a, b in zip(vals[1:], vals)), "bound decreases toward 1 for k >= 5")
    _check(vals[-1] > 1.0 and vals[-1] - 1.0 < 0.01, "bound approaches 1 from above")


def _suite_residue_power_sum(cfg: RunConfig) -> None:
    for n in (10, 100, 1000):
        lhs, main, _ = asymptotics.residue_class_power_sum(1, 1, 1, 1, n)
        if not (lhs == float(n) and main == float(n)):
            _check(False, "constant summand case equals n", f"n={n}")
    _check(True, "a = b = 1, m = 1: both sides equal n")
    for n in (10, 100, 1000):
        lhs, _, _ = asymptotics.residue_class_power_sum(2, 1, 1, 1, n)
        if lhs != n * (n + 1) / 2:
            _check(False, "linear case sums to n(n+1)/2", f"n={n}")
    _check(True, "a = 2, b = 1, m = 1: left sum is n(n+1)/2 exactly")
    defects = [asymptotics.residue_class_power_sum(2, 2, 1, 3, n)[2] for n in (300, 3000, 30000)]
    _check(max(abs(x) for x in defects) < 1.0,
           f"a = b = 2, m = 3 scaled defect bounded ({['%.4f' % x for x in defects]})")


def _suite_gamma_integral(cfg: RunConfig) -> None:
    for k in range(2, 9):
        num, closed = circle.gamma_arc_integral(k)
        budget = circle.gamma_arc_error_budget(k, 20000.0, 0.02)
        if abs(num - closed) > budget:
            _check(False, "quadrature within analytic budget", f"k={k}: err {abs(num-closed):.2e}")
    _check(True, "quadrature vs closed form within budget for k in 2..8")
    num2, _ = circle.gamma_arc_integral(2)
    _check(abs(num2 - 4 * math.pi / math.e**2) < 1e-6,
           f"k = 2 integral equals 4 pi/e^2 ({num2:.8f})")


VERIFY_SUITES = {
    "bell-oracle": _suite_bell_oracle,
    "besge": _suite_besge,
    "ramanujan-identity": _suite_ramanujan_identity,
    "modular-defect": _suite_modular_defect,
    "dedekind-reciprocity": _suite_dedekind_reciprocity,
    "convolution-asymptotics": _suite_convolution_asymptotics,
    "ratio-limits": _suite_ratio_limits,
    "primorial-trace": _suite_primorial_trace,
    "calculus-bound": _suite_calculus_bound,
    "residue-power-sum": _suite_residue_power_sum,
    "gamma-integral": _suite_gamma_integral,
}


# ======================================================================
# commands
# ======================================================================


def _cmd_triangle(args: argparse.Namespace, cfg: RunConfig) -> int:
    tri = triangle.darcais_triangle(args.n, max_rows=cfg.max_rows)
    if cfg.format == "json":
        _emit(triangle.triangle_to_json(tri) + "\n", cfg.out)
    else:
        _emit(triangle.triangle_to_csv(tri), cfg.out)
    return 0


def _cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in VERIFY_SUITES:
            raise DomainError(
                f"unknown suite {name!r}; choose from {', '.join(VERIFY_SUITES)} or 'all'")
    for name in names:
        print(f"== suite {name} ==")
        VERIFY_SUITES[name](cfg)
    print(f"all checks passed ({len(names)} suite{'s' if len(names) != 1 else ''})")
    return 0


def _landscape_rows(samples):
    header = ["theta", "log_norm_sq", "cos_phi", "is_peak"]
    rows = [[s.theta, s.log_norm_sq, s.cos_phi, s.is_peak] for s in samples]
    return header, rows


def _overlay_rows(overlay):
    header = ["p", "q", "value", "height"]
    rows = [[f.p, f.q, f.p / f.q, h] for f, h in overlay]
    return header, rows


def _write_table(path: str, header: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        with open(path, "w", encoding="utf-8") as fh:
            for row in rows:
                fh.write(json.dumps(dict(zip(header, (_json_cell(v) for v in row)))) + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_cell(v) for v in row) + "\n")
    print(f"wrote {path}")


def _cmd_landscape(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.paper_exact:
        t = circle.PAPER_T
        theta_count = circle.PAPER_THETA_COUNT
        series = circle.PAPER_CONFIG
        q_overlay = 250
    else:
        t = args.t if args.t is not None else circle.DESK_T
        theta_count = args.theta_count if args.theta_count is not None else circle.DESK_THETA_COUNT
        series = circle.SeriesConfig(
            terms=args.terms if args.terms is not None else cfg.terms,
            t_floor=cfg.t_floor,
        )
        q_overlay = args.q_overlay if args.q_overlay is not None else circle.DESK_OVERLAY_Q
    samples = circle.landscape(t, theta_count, series)
    overlay = circle.farey_overlay(q_overlay)

    out_dir = _resolve_out(cfg.out if cfg.out is not None else ".")
    os.makedirs(out_dir, exist_ok=True)
    ext = "jsonl" if cfg.format == "json" else "csv"
    header, rows = _landscape_rows(samples)
    _write_table(os.path.join(out_dir, f"landscape.{ext}"), header, rows, cfg.format)
    oheader, orows = _overlay_rows(overlay)
    _write_table(os.path.join(out_dir, f"overlay.{ext}"), oheader, orows, cfg.format)
    if not args.no_plot:
        from . import plots

        refined = circle.refined_peaks(samples)
        figure_path = os.path.join(out_dir, "landscape.png")
        plots.save_landscape_figure(samples, refined, overlay, t, figure_path)
        print(f"wrote {figure_path}")
    return 0


def _parse_grid(text: str, cap: int) -> list[int]:
    try:
        grid = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DomainError(f"bad n-grid {text!r}: {exc}") from None
    if not grid or grid != sorted(set(grid)) or grid[0] < 1:
        raise DomainError("n-grid must be ascending positive integers")
    if grid[-1] > cap:
        raise ResourceLimitError(f"n-grid exceeds cap {cap}")
    return grid


def _report_rho(args, cfg: RunConfig):
    grid = _parse_grid(args.n_grid, cfg.max_n)
    k = args.k
    rows = []
    for n in grid:
        num = (asymptotics.exact_to_float(triangle.alpha(n, k))
               if n <= asymptotics.ALPHA_EXACT_LIMIT else triangle.alpha_float(n, k))
        b = asymptotics.beta(n, k)
        rows.append([n, num, b, num / b])
    tol = f"|rho - 1| <= {cfg.tol_rho} at n = 10^4 for k in {{2,3,4}} (frozen)"
    return {"k": k, "n_grid": grid}, tol, ["n", "alpha", "beta", "rho"], rows


def _report_liminf(args, cfg: RunConfig):
    trace = asymptotics.primorial_liminf_trace(args.k, args.m_max, args.r)
    bound = asymptotics.zeta_ratio_bound(args.k)
    rows = [[m, value, bound] for m, value in trace]
    tol = ("k = 2: strictly decreasing, < 0.5 by m = 20 at r = 30; "
           "k >= 3: above the bound, within 2% at m = 20 (frozen)")
    params = {"k": args.k, "m_max": args.m_max, "r": args.r}
    return params, tol, ["m", "ratio", "bound"], rows


def _report_convergence(args, cfg: RunConfig):
    grid = _parse_grid(args.n_grid, cfg.max_n)
    rep = asymptotics.convergence_report(args.a, args.b, args.r, args.s, grid)
    rows = [[n, e, p, q] for n, e, p, q in zip(rep.n_grid, rep.exact, rep.predicted, rep.ratio)]
    tol = f"|exact/predicted - 1| <= {cfg.tol_convergence} at n = 10^5, improving from 10^3 (frozen)"
    params = {"a": args.a, "b": args.b, "r": args.r, "s": args.s, "n_grid": grid}
    return params, tol, ["n", "exact", "predicted", "ratio"], rows


def _report_logconcavity(args, cfg: RunConfig):
    k_range = None
    if args.k_min is not None or args.k_max is not None:
        k_range = (args.k_min or 2, args.k_max or args.n_max)
    records = triangle.logconcavity_scan(args.n_max, k_range, max_rows=cfg.max_rows)
    rows = [[r.n, r.k, r.a_ratio, r.alpha_ratio, r.holds] for r in records]
    tol = "A-ratio >= 1 exactly for every 3 <= k <= n-1; A-ratio/alpha-ratio = (k+1)/k exactly"
    params = {"n_max": args.n_max, "k_min": args.k_min, "k_max": args.k_max}
    return params, tol, ["n", "k", "a_ratio", "alpha_ratio", "holds"], rows


def _report_ansatz(args, cfg: RunConfig):
    grid = _parse_grid(args.n_grid, cfg.max_n)
    rows = []
    for n in grid:
        a = (asymptotics.exact_to_float(triangle.alpha(n, args.k))
             if n <= asymptotics.ALPHA_EXACT_LIMIT else triangle.alpha_float(n, args.k))
        az = circle.ansatz_alpha(n, args.k, args.q_trunc)
        rows.append([n, az, a, az / a])
    tol = "ansatz/alpha in [0.5, 2] for n in [200, 400], k in {2,3} at Q = 2000 (heuristic corridor)"
    params = {"k": args.k, "n_grid": grid, "q_trunc": args.q_trunc}
    return params, tol, ["n", "ansatz", "alpha", "ansatz_over_alpha"], rows


REPORT_KINDS = {
    "rho": _report_rho,
    "liminf": _report_liminf,
    "convergence": _report_convergence,
    "logconcavity": _report_logconcavity,
    "ansatz": _report_ansatz,
}


def _cmd_report(args: argparse.Namespace, cfg: RunConfig) -> int:
    params, tol, header, rows = REPORT_KINDS[args.kind](args, cfg)
    if cfg.format == "json":
        text = _report_json(args.kind, params, tol, header, rows)
    else:
        text = _report_csv(tol, header, rows)
    _emit(text, cfg.out)
    if cfg.out is not None and not args.no_plot:
        from . import plots

        figure_path = os.path.splitext(_resolve_out(cfg.out))[0] + ".png"
        plots.save_report_figure(args.kind, header, rows, figure_path)
        print(f"wrote {figure_path}")
    return 0


# ======================================================================
# argument parsing
# ======================================================================


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="darcais", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), help="output format")
        p.add_argument("--out", help="output file (reports/triangle) or directory (landscape)")
        p.add_argument("--config", help="path to a 'key = value' config file")

    p_tri = sub.add_parser("triangle", help="emit the exact triangle A(2,n,k)")
    p_tri.add_argument("--n", type=int, required=True, help="largest row")
    common(p_tri)

    p_ver = sub.add_parser("verify", help="run an invariant suite")
    p_ver.add_argument("suite", help=f"one of: {', '.join(VERIFY_SUITES)}, or 'all'")
    common(p_ver)

    p_land = sub.add_parser("landscape", help="emit the cusp landscape and Farey overlay")
    p_land.add_argument("--t", type=float, help="contour parameter (default 1/5000)")
    p_land.add_argument("--theta-count", type=int, help="grid points on (0, pi]")
    p_land.add_argument("--q-overlay", type=int, help="Farey denominator bound (default 250)")
    p_land.add_argument("--terms", type=int, help="series truncation")
    p_land.add_argument("--paper-exact", action="store_true",
                        help="t = 1/50000, 250000 terms, 2e6 grid points, Q = 250")
    p_land.add_argument("--no-plot", action="store_true", help="skip the rendered figure")
    common(p_land)

    p_rep = sub.add_parser("report", help="tabular diagnostics with frozen tolerances")
    rep_sub = p_rep.add_subparsers(dest="kind", required=True)

    p_rho = rep_sub.add_parser("rho", help="alpha/beta convergence diagnostic")
    p_rho.add_argument("--k", type=int, required=True)
    p_rho.add_argument("--n-grid", required=True, help="comma-separated ascending n values")

    p_lim = rep_sub.add_parser("liminf", help="divisor ratio along primorial powers")
    p_lim.add_argument("--k", type=int, required=True)
    p_lim.add_argument("--m-max", type=int, default=20)
    p_lim.add_argument("--r", type=int, default=30)

    p_conv = rep_sub.add_parser("convergence", help="exact vs predicted convolutions")
    p_conv.add_argument("--a", type=int, required=True)
    p_conv.add_argument("--b", type=int, required=True)
    p_conv.add_argument("--r", type=int, required=True)
    p_conv.add_argument("--s", type=int, required=True)
    p_conv.add_argument("--n-grid", required=True)

    p_log = rep_sub.add_parser("logconcavity", help="exact interior ratio scan")
    p_log.add_argument("--n-max", type=int, default=120)
    p_log.add_argument("--k-min", type=int)
    p_log.add_argument("--k-max", type=int)

    p_ans = rep_sub.add_parser("ansatz", help="truncated major-arc ansatz vs alpha")
    p_ans.add_argument("--k", type=int, required=True)
    p_ans.add_argument("--n-grid", required=True)
    p_ans.add_argument("--q-trunc", type=int, default=2000)

    for p in (p_rho, p_lim, p_conv, p_log, p_ans):
        p.add_argument("--no-plot", action="store_true", help="skip the rendered figure")
        common(p)

    return parser


COMMANDS = {
    "triangle": _cmd_triangle,
    "verify": _cmd_verify,
    "landscape": _cmd_landscape,
    "report": _cmd_report,
}


def main(argv: list | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _load_config(args)
        return COMMANDS[args.command](args, cfg)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except (VerificationError, AssertionError, ConvergenceError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
