"""Command-line front end.

Loads or generates problem instances, runs the verification sweeps and the
demonstrations, and emits one report row per line as JSON (default) or CSV.
The exit code is 0 iff every reported slack is >= -1e-9 and no error occurred.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from . import bounds, channels, demos, ensembles, linalg
from .entropy import conjugate_order, tsallis_entropy

SLACK_TOL = -1e-9

ROW_FIELDS = [
    "check_name",
    "d",
    "alpha",
    "beta",
    "mu",
    "factor_kind",
    "lhs",
    "rhs",
    "slack",
    "factor",
    "seed",
    "wall_time_ms",
]


def matrix_to_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, complex)]


def matrix_from_json(data, name: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"invalid matrix {name!r}: {exc}") from None
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValueError(f"invalid matrix {name!r}: expected nested [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def load_instance(path: str) -> dict:
    with open(path) as fh:
        doc = json.load(fh)
    if "dim" not in doc:
        raise ValueError("instance file misses required field 'dim'")
    dim = int(doc["dim"])
    out = {"dim": dim, "seed": int(doc.get("seed", 0))}
    if "rho" in doc:
        out["rho"] = linalg.check_density(matrix_from_json(doc["rho"], "rho"))
    else:
        out["rho"] = np.eye(dim) / dim
    if "kraus" in doc:
        ops = [matrix_from_json(k, f"kraus[{i}]") for i, k in enumerate(doc["kraus"])]
        out["kraus"] = channels.Unraveling(tuple(ops))
    for key in ("povm_m", "povm_n"):
        if key in doc:
            elems = [matrix_from_json(m, f"{key}[{i}]") for i, m in enumerate(doc[key])]
            out[key] = bounds.Povm(tuple(elems))
    return out


class Reporter:
    def __init__(self, fmt: str, timing: bool, stream):
        self.fmt = fmt
        self.timing = timing
        self.stream = stream
        self.min_slack = np.inf
        self._writer = None
        self._t0 = time.perf_counter()

    def row(self, check_name: str, **fields):
        row = {k: None for k in ROW_FIELDS}
        row["check_name"] = check_name
        row.update(fields)
        if self.timing:
            row["wall_time_ms"] = round((time.perf_counter() - self._t0) * 1000.0, 3)
        else:
            row.pop("wall_time_ms")
        if row.get("slack") is not None:
            self.min_slack = min(self.min_slack, row["slack"])
        if self.fmt == "json":
            self.stream.write(json.dumps({k: v for k, v in row.items() if v is not None}) + "\n")
        else:
            if self._writer is None:
                self._writer = csv.DictWriter(self.stream, fieldnames=ROW_FIELDS)
                self._writer.writeheader()
            self._writer.writerow({k: row.get(k) for k in ROW_FIELDS})

    def obj(self, payload: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps(payload) + "\n")
        else:
            self.stream.write(json.dumps(payload) + "\n")

    @property
    def exit_code(self) -> int:
        return 0 if (self.min_slack is np.inf or self.min_slack >= SLACK_TOL) else 1


def _report_fields(report: bounds.BoundReport, **extra):
    return dict(
        alpha=report.orders.alpha,
        beta=report.orders.beta,
        mu=report.orders.mu,
        lhs=report.lhs,
        rhs=report.rhs,
        slack=report.slack,
        factor=report.factor,
        **extra,
    )


def _parse_grid(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def cmd_extremal(args, rep: Reporter) -> None:
    inst = load_instance(args.infile)
    if "kraus" not in inst:
        raise ValueError("extremal needs 'kraus' in the instance file")
    a, rho = inst["kraus"], inst["rho"]
    result = channels.extremal_unraveling(a, rho)
    rep.obj(
        {
            "check_name": "extremal_summary",
            "lambdas": [float(x) for x in result.lambdas],
            "extremal_kraus": [matrix_to_json(k) for k in result.extremal.kraus_ops],
        }
    )
    pi = channels.gram_matrix(a, rho)
    us = linalg.haar_random_unitaries(a.n_ops, args.remixings, inst["seed"])
    probs = channels.remixed_probabilities(pi, us)
    for alpha in _parse_grid(args.alpha_grid):
        h_ex = tsallis_entropy(result.lambdas, alpha)
        h_remix = min(tsallis_entropy(p, alpha) for p in probs)
        rep.row(
            "extremal_vs_remixings",
            d=a.dim_in,
            alpha=alpha,
            lhs=h_remix,
            rhs=h_ex,
            slack=h_remix - h_ex,
            seed=inst["seed"],
        )


def cmd_uncertainty(args, rep: Reporter) -> None:
    inst = load_instance(args.infile)
    if "povm_m" not in inst or "povm_n" not in inst:
        raise ValueError("uncertainty needs 'povm_m' and 'povm_n' in the instance file")
    orders = conjugate_order(args.alpha)
    check = (
        bounds.tsallis_uncertainty_check if args.kind == "tsallis" else bounds.renyi_uncertainty_check
    )
    report = check(inst["povm_m"], inst["povm_n"], inst["rho"], orders, args.factor)
    rep.row(
        f"{args.kind}_uncertainty",
        d=inst["dim"],
        factor_kind=args.factor,
        seed=inst["seed"],
        **_report_fields(report),
    )


def cmd_sweep(args, rep: Reporter) -> None:
    grid = _parse_grid(args.alpha_grid)
    for trial in range(args.trials):
        base = args.seed + 1000 * trial
        rho = linalg.random_density(args.dim, args.dim, base)
        a = channels.random_unraveling(args.dim, args.dim, base + 1)
        pi = channels.gram_matrix(a, rho)
        lambdas = channels.extremal_unraveling(a, rho).lambdas
        us = linalg.haar_random_unitaries(a.n_ops, args.remixings, base + 2)
        probs = channels.remixed_probabilities(pi, us)
        m = bounds.random_projective_povm(args.dim, base + 3)
        n = bounds.random_projective_povm(args.dim, base + 4)
        g = bounds.g_factor(m, n, rho)
        f = bounds.f_factor(m, n, rho)
        fb = bounds.f_bar(m, n)
        chain = min(f - g, fb - f, 1.0 + 1e-10 - fb)
        rep.row("factor_chain", d=args.dim, slack=chain, factor=g, seed=base)
        for alpha in grid:
            h_ex = tsallis_entropy(lambdas, alpha)
            h_remix = min(tsallis_entropy(p, alpha) for p in probs)
            rep.row(
                "theorem1_tsallis",
                d=args.dim,
                alpha=alpha,
                lhs=h_remix,
                rhs=h_ex,
                slack=h_remix - h_ex,
                seed=base,
            )
            if alpha <= 0.5:
                continue
            orders = conjugate_order(alpha)
            for kind, check in (
                ("tsallis", bounds.tsallis_uncertainty_check),
                ("renyi", bounds.renyi_uncertainty_check),
            ):
                report = check(m, n, rho, orders, "g")
                rep.row(
                    f"theorem2_{kind}" if kind == "tsallis" else "renyi_relation",
                    d=args.dim,
                    factor_kind="g",
                    seed=base,
                    **_report_fields(report),
                )


def cmd_demo(args, rep: Reporter) -> None:
    orders = conjugate_order(args.alpha)
    if args.which == "dft":
        basis = np.zeros(args.dim)
        basis[0] = 1.0
        report = demos.dft_uncertainty_demo(basis, orders)
        rep.row("dft_basis_state", d=args.dim, factor_kind="fbar", seed=args.seed, **_report_fields(report))
        if args.trials:
            rng = np.random.default_rng(args.seed)
            for trial in range(args.trials):
                psi = linalg.ginibre(rng, args.dim, 1).ravel()
                psi /= np.linalg.norm(psi)
                report = demos.dft_uncertainty_demo(psi, orders)
                rep.row(
                    "dft_random_state",
                    d=args.dim,
                    factor_kind="fbar",
                    seed=args.seed,
                    **_report_fields(report),
                )
    else:
        uniform = np.zeros(2 * args.truncation + 1)
        uniform[args.truncation] = 1.0
        state = demos.AngleState(uniform, args.nbins)
        report = demos.angle_momentum_demo(state, orders, args.quad_points)
        rep.row("angle_uniform", d=args.nbins, factor_kind="fbar", seed=args.seed, **_report_fields(report))
        packet = demos.gaussian_wavepacket(args.truncation, args.width, args.nbins)
        report = demos.angle_momentum_demo(packet, orders, args.quad_points)
        rep.row("angle_gaussian", d=args.nbins, factor_kind="fbar", seed=args.seed, **_report_fields(report))


def cmd_ensemble(args, rep: Reporter) -> None:
    for trial in range(args.trials):
        base = args.seed + 1000 * trial
        rho = linalg.random_density(args.dim, args.dim, base)
        pure = ensembles.ensemble_from_state(rho, args.members, base + 1)
        res = ensembles.pure_ensemble_bounds_check(pure, args.alpha, "tsallis")
        rep.row(
            "pure_ensemble_bound",
            d=args.dim,
            alpha=args.alpha,
            lhs=res.ensemble_entropy,
            rhs=res.state_entropy,
            slack=res.ensemble_entropy - res.state_entropy,
            seed=base,
        )
        rng = np.random.default_rng(base + 2)
        weights = rng.dirichlet(np.ones(args.members))
        members = tuple(
            linalg.random_density(args.dim, args.dim, base + 3 + k) for k in range(args.members)
        )
        mixed = ensembles.MixedEnsemble(weights, members)
        lower, mid, upper = ensembles.mixed_ensemble_bounds_check(mixed, args.alpha)
        rep.row(
            "mixed_ensemble_sandwich",
            d=args.dim,
            alpha=args.alpha,
            lhs=upper,
            rhs=lower,
            slack=min(mid - lower, upper - mid),
            seed=base,
        )


def cmd_phi_min(args, rep: Reporter) -> None:
    problem = bounds.PhiProblem(gamma=args.gamma, alpha=args.alpha)
    analytic, numeric = bounds.phi_min_verify(problem, args.grid)
    rep.row(
        "phi_min",
        alpha=args.alpha,
        lhs=numeric,
        rhs=analytic,
        slack=numeric - analytic,
        factor=args.gamma,
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unravel", description=__doc__)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--timing", action="store_true", help="include wall_time_ms in rows")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("extremal", help="Gram spectrum and extremal-vs-remixing sweep")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--alpha-grid", default="0.3,0.7,1.0,1.5,2,5")
    s.add_argument("--remixings", type=int, default=200)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("uncertainty", help="one uncertainty bound report")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--factor", choices=("g", "f", "fbar"), default="g")
    s.add_argument("--kind", choices=("tsallis", "renyi"), default="tsallis")
    s.set_defaults(func=cmd_uncertainty)

    s = sub.add_parser("sweep", help="randomized verification sweep")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--alpha-grid", default="1.5,2,3")
    s.add_argument("--remixings", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("demo", help="worked examples")
    s.add_argument("which", choices=("dft", "angle"))
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--trials", type=int, default=0)
    s.add_argument("--nbins", type=int, default=8)
    s.add_argument("--L", dest="truncation", type=int, default=50)
    s.add_argument("--width", type=float, default=3.0)
    s.add_argument("--quad-points", type=int, default=64)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_demo)

    s = sub.add_parser("ensemble", help="ensemble entropy bounds sweep")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--members", type=int, required=True)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_ensemble)

    s = sub.add_parser("phi-min", help="constrained-minimum verifier")
    s.add_argument("--gamma", type=float, required=True)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--grid", type=int, default=2000)
    s.set_defaults(func=cmd_phi_min)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buffer = io.StringIO()
    rep = Reporter(args.format, args.timing, buffer)
    try:
        args.func(args, rep)
    except ValueError as exc:
        sys.stdout.write(buffer.getvalue())
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2
    sys.stdout.write(buffer.getvalue())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
