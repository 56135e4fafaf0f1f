"""
Command-line entry point.

    nchilbert hilbert a.json -o a_conj.json
    nchilbert verify --all --n 8 --trials 100 --seed 7 --out results/
    nchilbert constants --k-max 8 --p 1.25,2,4,8
    nchilbert kolmogorov --n 16 --trials 500
    nchilbert scan --n 8 --p 1.25,2,4,8
    nchilbert truncation-growth --n-list 2,8,64

Exit status: 0 when every check passes, 1 when a violation is found, 2 on a
configuration or parse error.  Every command that writes files also writes
``manifest.json`` listing the resolved configuration and all artifacts;
timestamps live only in the manifest, so CSV/JSON outputs are byte-identical
across reruns with the same arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .algebra import SubspaceTag, TracedAlgebra, membership
from .checks import CHECKS, Tolerance, check_kolmogorov, run_check
from .ensemble import EnsembleConfig
from .errors import NCHError, UnknownCheck
from .hardy import analytic_completion, decompose, hilbert, riesz
from .matrixio import read_matrix, write_matrix
from .norms import cp_growth_scan, k2k_constant, scan_to_csv, truncation_growth_witness
from .spectral import lp_norm

EXIT_OK, EXIT_VIOLATION, EXIT_CONFIG = 0, 1, 2


class Run:
    """Collects artifacts of one command and writes the manifest."""

    def __init__(self, command: str, out: Path, config: dict):
        self.command = command
        self.out = out
        self.config = config
        self.started = datetime.now(timezone.utc).isoformat()
        self.artifacts: list[str] = []
        out.mkdir(parents=True, exist_ok=True)

    def path(self, *parts: str) -> Path:
        p = self.out.joinpath(*parts)
        p.parent.mkdir(parents=True, exist_ok=True)
        return p

    def add(self, path) -> str:
        rel = os.path.relpath(path, self.out)
        self.artifacts.append(rel)
        return rel

    def write_text(self, rel: str, text: str) -> str:
        p = self.path(rel)
        p.write_text(text, encoding="utf-8")
        return self.add(p)

    def write_json(self, rel: str, doc) -> str:
        return self.write_text(rel, json.dumps(doc, indent=2, sort_keys=True) + "\n")

    def finish(self) -> Path:
        manifest = {
            "command": self.command,
            "config": self.config,
            "started": self.started,
            "finished": datetime.now(timezone.utc).isoformat(),
            "artifact_paths": sorted(self.artifacts),
        }
        p = self.out / "manifest.json"
        p.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        return p


def _g(x) -> str:
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_g(x) for x in row])
    return buf.getvalue()


def _float_list(text: str) -> list[float]:
    """Comma list, or ``start:stop:count`` for a logarithmic grid."""
    if ":" in text:
        lo, hi, num = text.split(":")
        return [float(x) for x in np.logspace(np.log10(float(lo)), np.log10(float(hi)), int(num))]
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _default_seed() -> int:
    env = os.environ.get("NCH_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise NCHError(f"NCH_SEED must be an integer, got {env!r}") from None


def _add_ensemble(p: argparse.ArgumentParser, n: int, trials: int):
    p.add_argument("--n", type=int, default=n, help="matrix dimension")
    p.add_argument("--partition", default="flag",
                   help="comma list of block sizes, or flag / halves / single (alias n)")
    p.add_argument("--trials", type=int, default=trials)
    p.add_argument("--seed", type=int, default=None, help="master seed (default $NCH_SEED or 0)")
    p.add_argument("--tol-abs", type=float, default=1e-9)
    p.add_argument("--tol-rel", type=float, default=1e-7)


def _add_out(p: argparse.ArgumentParser, default="nch_results"):
    p.add_argument("--out", default=default, help="output directory")
    p.add_argument("--no-figures", action="store_true", help="skip PNG figures")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nchilbert", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("hilbert", "conjugate of a matrix file"),
                           ("riesz", "Riesz projection of a matrix file"),
                           ("decompose", "Hardy decomposition a = a1 + a2* + d")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input")
        p.add_argument("--partition", default=None, help="override the stored partition")
        p.add_argument("-o", "--output", default=None,
                       help="output file (decompose: output directory)")

    p = sub.add_parser("verify", help="run inequality checks over a seeded ensemble")
    p.add_argument("checks", nargs="*", help=f"any of: {', '.join(CHECKS)}")
    p.add_argument("--all", action="store_true", help="run every check")
    _add_ensemble(p, n=8, trials=100)
    p.add_argument("--k", type=int, default=2, help="exponent index for even-p checks")
    p.add_argument("--exponents", default="8,8,4,2", help="Hoelder exponents")
    p.add_argument("--weak-p", type=float, default=0.5, help="exponent in (0,1) for weak_lp")
    p.add_argument("--s-grid", default="0.01:100:41")
    p.add_argument("--ceiling", type=float, default=40.0, help="weak-type ceiling")
    _add_out(p)

    p = sub.add_parser("constants", help="K_2k table and C_p growth scan")
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--p", default="1.25,2,4,8", help="exponents for the scan")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--partition", default="flag")
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--iterations", type=int, default=500)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--m-ceiling", type=float, default=1.0)
    _add_out(p)

    p = sub.add_parser("scan", help="C_p growth scan only")
    p.add_argument("--p", default="1.25,2,4,8")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--partition", default="flag")
    p.add_argument("--map", default="hilbert", choices=("hilbert", "riesz"))
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--iterations", type=int, default=500)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--m-ceiling", type=float, default=1.0)
    _add_out(p)

    p = sub.add_parser("kolmogorov", help="per-s worst s*lambda_s(|f|)/||u||_1")
    _add_ensemble(p, n=16, trials=500)
    p.add_argument("--s-grid", default="0.01:100:41")
    _add_out(p)

    p = sub.add_parser("truncation-growth", help="trace norm of the conjugate of the all-ones matrix")
    p.add_argument("--n-list", default="2,8,64")
    _add_out(p)
    return parser


# --------------------------------------------------------------------------
# commands


def _out_file(args, suffix: str) -> Path:
    if args.output:
        return Path(args.output)
    src = Path(args.input)
    return src.with_name(f"{src.stem}_{suffix}.json")


def cmd_hilbert(args) -> int:
    a = read_matrix(args.input, args.partition)
    ta = hilbert(a)
    dest = _out_file(args, "hilbert")
    write_matrix(ta, dest)
    analytic = membership(analytic_completion(a), SubspaceTag.HINF, 1e-12)
    print(f"||a||_2 = {_g(lp_norm(a, 2))}")
    print(f"||a~||_2 = {_g(lp_norm(ta, 2))}")
    print(f"a + i a~ in H^inf: {analytic}")
    print(f"wrote {dest}")
    return EXIT_OK


def cmd_riesz(args) -> int:
    a = read_matrix(args.input, args.partition)
    dest = _out_file(args, "riesz")
    write_matrix(riesz(a), dest)
    print(f"wrote {dest}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    a = read_matrix(args.input, args.partition)
    dec = decompose(a)
    src = Path(args.input)
    outdir = Path(args.output) if args.output else src.parent
    outdir.mkdir(parents=True, exist_ok=True)
    for label, op in (("a1", dec.a1), ("a2", dec.a2), ("d", dec.d)):
        dest = outdir / f"{src.stem}_{label}.json"
        write_matrix(op, dest)
        print(f"wrote {dest}")
    pieces = lp_norm(dec.a1, 2) ** 2 + lp_norm(dec.a2, 2) ** 2 + lp_norm(dec.d, 2) ** 2
    print(f"pythagoras residual = {_g(abs(lp_norm(a, 2) ** 2 - pieces))}")
    return EXIT_OK


def _ensemble(args) -> tuple[EnsembleConfig, Tolerance]:
    seed = args.seed if args.seed is not None else _default_seed()
    alg = TracedAlgebra.parse(args.n, args.partition)
    cfg = EnsembleConfig.for_algebra(alg, trials=args.trials, master_seed=seed)
    return cfg, Tolerance(args.tol_abs, args.tol_rel)


def _check_params(name: str, args) -> dict:
    if name in ("phi_power_identity", "even_p_bound"):
        return {"k": args.k}
    if name == "hoelder":
        return {"exponents": _float_list(args.exponents)}
    if name == "weak_lp":
        return {"p": args.weak_p}
    if name == "kolmogorov":
        return {"s_grid": _float_list(args.s_grid)}
    if name == "weak_type":
        return {"ceiling": args.ceiling}
    return {}


def _bound_fraction(rep) -> float:
    st = rep.conditions[rep.primary]
    if st.bound > 0 and math.isfinite(st.bound):
        return st.worst_ratio / st.bound
    return st.worst_ratio / rep.tolerances["abs"] if rep.tolerances["abs"] > 0 else 0.0


# plotting helpers are imported on demand so --no-figures never loads matplotlib


def cmd_verify(args) -> int:
    names = list(CHECKS) if args.all else args.checks
    if not names:
        raise NCHError("no checks selected; name some or pass --all")
    for name in names:
        if name not in CHECKS:
            raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    cfg, tol = _ensemble(args)
    config = {"checks": names, "ensemble": cfg.to_dict(), "tolerance": tol.to_dict(),
              "k": args.k, "exponents": args.exponents, "weak_p": args.weak_p,
              "s_grid": args.s_grid, "ceiling": args.ceiling}
    run = Run("verify", Path(args.out), config)
    summary = []
    failed = False
    for name in names:
        rep = run_check(name, cfg, tol, **_check_params(name, args))
        wfiles = []
        for i, w in enumerate(rep.witness):
            p = run.path("witnesses", f"{name}_w{i}.json")
            write_matrix(w, p)
            wfiles.append(run.add(p))
        run.write_json(f"reports/{name}.json", rep.to_dict(wfiles))
        summary.append((name, rep.trials, rep.violations, rep.worst_ratio,
                        rep.conditions[rep.primary].bound, _bound_fraction(rep)))
        print(rep.summary_line())
        failed |= not rep.passed
    run.write_text("verify_summary.csv", csv_text(
        ("check", "trials", "violations", "worst_ratio", "bound", "bound_fraction"), summary))
    if not args.no_figures:
        from .plotting import plot_verify
        run.add(plot_verify([s[0] for s in summary], [s[5] for s in summary],
                            run.path("verify_summary.png")))
    run.finish()
    return EXIT_VIOLATION if failed else EXIT_OK


def _scan(args, run: Run, alg: TracedAlgebra, which: str = "hilbert") -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    ps = _float_list(args.p)
    try:
        rows = cp_growth_scan(alg, ps, restarts=args.restarts, iterations=args.iterations,
                              seed=seed, m_ceiling=math.inf, which=which)
    except ValueError as exc:
        raise NCHError(str(exc)) from None
    run.write_text("scan.csv", scan_to_csv(rows))
    if not args.no_figures:
        from .plotting import plot_scan
        run.add(plot_scan([r.p for r in rows], [r.estimate for r in rows],
                          [r.pq_ratio for r in rows], run.path("scan.png")))
    for r in rows:
        print(f"p={_g(r.p)} estimate={r.estimate:.10g} pq_ratio={r.pq_ratio:.6g}")
    worst = max(r.pq_ratio for r in rows)
    if worst > args.m_ceiling:
        print(f"FAIL C_p/(pq) = {worst:.6g} exceeds ceiling {args.m_ceiling}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_constants(args) -> int:
    alg = TracedAlgebra.parse(args.n, args.partition)
    config = {k: v for k, v in vars(args).items() if k != "func"}
    run = Run("constants", Path(args.out), config)
    consts = [k2k_constant(k) for k in range(1, args.k_max + 1)]
    run.write_text("constants.csv", csv_text(
        ("k", "K_2k", "two_K_2k", "residual"),
        [(c.k, c.value, 2 * c.value, c.residual) for c in consts]))
    run.write_json("constants.json", [
        {"k": c.k, "value": c.value, "residual": c.residual,
         "sign_changes": c.sign_changes} for c in consts])
    for c in consts:
        print(f"k={c.k} K_2k={c.value:.12g} residual={c.residual:.3e}")
    if not args.no_figures:
        from .plotting import plot_constants
        run.add(plot_constants([c.k for c in consts], [c.value for c in consts],
                               run.path("constants.png")))
    status = _scan(args, run, alg)
    if any(c.residual > 1e-10 for c in consts):
        status = EXIT_VIOLATION
    run.finish()
    return status


def cmd_scan(args) -> int:
    alg = TracedAlgebra.parse(args.n, args.partition)
    config = {k: v for k, v in vars(args).items() if k != "func"}
    run = Run("scan", Path(args.out), config)
    status = _scan(args, run, alg, args.map)
    run.finish()
    return status


def cmd_kolmogorov(args) -> int:
    cfg, tol = _ensemble(args)
    s_grid = _float_list(args.s_grid)
    config = {"ensemble": cfg.to_dict(), "tolerance": tol.to_dict(), "s_grid": s_grid}
    run = Run("kolmogorov", Path(args.out), config)
    rep = check_kolmogorov(cfg, s_grid, tol=tol)
    ratios = rep.details["per_s_max_ratio"]
    run.write_text("kolmogorov.csv", csv_text(
        ("s", "max_ratio", "bound"), [(s, r, 4.0) for s, r in zip(s_grid, ratios)]))
    if not args.no_figures:
        from .plotting import plot_kolmogorov
        run.add(plot_kolmogorov(s_grid, ratios, run.path("kolmogorov.png")))
    print(rep.summary_line())
    run.finish()
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_truncation_growth(args) -> int:
    ns = _int_list(args.n_list)
    run = Run("truncation-growth", Path(args.out), {"n_list": ns})
    table = truncation_growth_witness(ns)
    run.write_text("truncation_growth.csv", csv_text(("n", "ratio"), table.rows))
    if not args.no_figures:
        from .plotting import plot_growth
        run.add(plot_growth([n for n, _ in table.rows], [r for _, r in table.rows],
                            run.path("truncation_growth.png")))
    for n, r in table.rows:
        print(f"n={n} ||u~||_1={r:.12g}")
    run.finish()
    if not table.strictly_increasing:
        print("FAIL ratios are not strictly increasing")
        return EXIT_VIOLATION
    return EXIT_OK


COMMANDS = {
    "hilbert": cmd_hilbert,
    "riesz": cmd_riesz,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "constants": cmd_constants,
    "scan": cmd_scan,
    "kolmogorov": cmd_kolmogorov,
    "truncation-growth": cmd_truncation_growth,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (NCHError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
