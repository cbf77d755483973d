"""Command-line driver.

Three subcommands:

* ``scenario`` runs one of the built-in experiments, writes ``report.json``
  (plus a delimited checks table and rendered figures on request) and exits
  0 only if every check passed;
* ``invariants`` fuzzes the algebraic identities with a seeded generator and
  prints the worst error per invariant;
* ``boost-file`` boosts a spectrum CSV into a new frame.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
All outputs are deterministic for fixed seed and parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .epl import advance_time, decompose, epl_vector, transport
from .errors import RelamError
from .minkowski import Boost, FourVector, boost_four_vector, minkowski_dot, minkowski_norm
from .observables import ExpectationSet
from .scenarios import SCENARIOS, run_scenario
from .spectrum import boost_spectrum, load_spectrum_csv, save_spectrum_csv

__all__ = ["main", "run_invariants"]

INVARIANT_BOUND = 1e-12


def _rand_unit(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _random_expectation_set(rng) -> ExpectationSet:
    e = float(np.exp(rng.uniform(-0.5, 1.5)))
    p = e * rng.uniform(0.0, 0.95) * _rand_unit(rng)
    j = rng.normal(size=3)
    s = rng.normal(size=3)
    r_e = rng.normal(size=3)
    t = float(rng.uniform(-2.0, 2.0))
    return ExpectationSet(
        E=e, p=p, J=j, K=t * p - r_e * e, R_E=r_e, time=t, norm=1.0, S=s, L=j - s
    )


def run_invariants(seed: int, cases: int) -> dict:
    """Randomized checks of the algebraic identities.

    Per case: four-vector norm preservation under a boost, orthogonality of
    the mean-value spin four-vector to the mean four-momentum, the two-path
    intrinsic-AM identity, invariance of the spin four-vector norm under
    transport, and conservation of the intrinsic/extrinsic split under free
    time evolution.  Returns the worst scaled error per invariant.
    """
    rng = np.random.default_rng(seed)
    names = (
        "four_vector_norm",
        "epl_orthogonality",
        "intrinsic_two_path",
        "epl_norm_invariance",
        "time_conservation",
    )
    worst = dict.fromkeys(names, 0.0)

    def bump(name, err):
        worst[name] = max(worst[name], float(err))

    for _ in range(cases):
        b = Boost(rng.uniform(0.0, 0.95) * _rand_unit(rng))

        v = FourVector(rng.normal(scale=2.0), rng.normal(scale=2.0, size=3))
        n0, n1 = minkowski_norm(v), minkowski_norm(boost_four_vector(v, b))
        bump("four_vector_norm", abs(n1 - n0) / max(1.0, abs(n0)))

        exp = _random_expectation_set(rng)
        w = epl_vector(exp)
        scale = max(1.0, exp.E**2 + float(exp.p @ exp.p))
        bump("epl_orthogonality", abs(minkowski_dot(w.w, exp.four_momentum)) / scale)

        dec = decompose(exp)
        bump(
            "intrinsic_two_path",
            dec.two_path_residual / max(1.0, float(np.max(np.abs(exp.J)))),
        )

        moved = transport(exp, b)
        wn0, wn1 = w.norm, epl_vector(moved).norm
        bump("epl_norm_invariance", abs(wn1 - wn0) / max(1.0, abs(wn0)))

        later = advance_time(exp, float(rng.uniform(-3.0, 3.0)))
        dec_later = decompose(later)
        drift = max(
            float(np.max(np.abs(dec_later.j_int - dec.j_int))),
            float(np.max(np.abs(dec_later.j_ext - dec.j_ext))),
        )
        bump("time_conservation", drift / max(1.0, float(np.max(np.abs(exp.J)))))

    return worst


def _parse_overrides(pairs: list[str]) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise RelamError(f"--set expects key=value, got {item!r}")
        out[key] = value
    return out


def _write_checks_csv(report, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("name,mode,computed,expected,abs_err,rel_err,tolerance,pass,note\n")
        for c in report.checks:
            computed = ";".join(repr(v) for v in c.computed)
            expected = ";".join(repr(v) for v in c.expected)
            note = c.note.replace('"', "'")
            fh.write(
                f"{c.name},{c.mode},\"{computed}\",\"{expected}\","
                f"{c.abs_err!r},{c.rel_err!r},{c.tolerance!r},"
                f"{'pass' if c.passed else 'fail'},\"{note}\"\n"
            )


def _cmd_scenario(args) -> int:
    try:
        overrides = _parse_overrides(args.set or [])
        report = run_scenario(args.name, overrides)
    except (RelamError, KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    report_path = out_dir / "report.json"
    report_path.write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    if args.format == "csv":
        _write_checks_csv(report, out_dir / "checks.csv")

    if args.render:
        from .figures import render_field_png, render_spectrum_png
        from .scenarios import SCENARIO_DEFAULTS, render_field
        from .synthesis import emit_field

        params = dict(SCENARIO_DEFAULTS[args.name])
        params.update(report.params)
        f = render_field(args.name, params, n=args.render_n)
        emit_field(f, out_dir / "field.csv")
        emit_field(f, out_dir / "field.ppm")
        render_field_png(f, out_dir / "field.png", title=args.name)

    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        print(
            f"{status} {c.name}: computed={list(c.computed)} "
            f"expected={list(c.expected)} err={c.abs_err:.3e} tol={c.tolerance:.3e}"
        )
    n_pass = sum(c.passed for c in report.checks)
    print(f"{report.scenario}: {n_pass}/{len(report.checks)} checks passed")
    print(f"report written to {report_path}")
    return 0 if report.passed else 1


def _cmd_invariants(args) -> int:
    worst = run_invariants(args.seed, args.cases)
    all_ok = True
    for name, err in worst.items():
        ok = err <= INVARIANT_BOUND
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: max_err={err:.6e} bound={INVARIANT_BOUND:.0e}")
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        payload = {
            "seed": args.seed,
            "cases": args.cases,
            "bound": INVARIANT_BOUND,
            "invariants": {k: {"max_err": v, "pass": v <= INVARIANT_BOUND} for k, v in worst.items()},
            "passed": all_ok,
        }
        (out_dir / "invariants.json").write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    return 0 if all_ok else 1


def _cmd_boost_file(args) -> int:
    try:
        parts = [float(x) for x in args.velocity.split(",")]
        if len(parts) != 3:
            raise RelamError("--velocity expects ux,uy,uz")
        b = Boost(parts)
        cloud = load_spectrum_csv(args.input)
        save_spectrum_csv(boost_spectrum(cloud, b), args.output)
    except (RelamError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"boosted spectrum written to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relam",
        description="Angular momentum of relativistic wavepackets: scenarios, "
        "invariant fuzzing, spectrum boosts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sc = sub.add_parser("scenario", help="run a built-in experiment and write its report")
    sc.add_argument("name", choices=sorted(SCENARIOS), help="scenario to run")
    sc.add_argument("--set", action="append", metavar="KEY=VALUE",
                    help="override a scenario parameter (repeatable)")
    sc.add_argument("--out", default=".", help="output directory (default: .)")
    sc.add_argument("--format", choices=("json", "csv"), default="json",
                    help="also write a delimited checks table with 'csv'")
    sc.add_argument("--render", action="store_true",
                    help="write field.csv, field.ppm and field.png next to the report")
    sc.add_argument("--render-n", type=int, default=256,
                    help="grid points per axis for rendering (default 256)")
    sc.add_argument("--seed", type=int, default=0,
                    help="accepted for interface uniformity; scenarios are deterministic")
    sc.set_defaults(func=_cmd_scenario)

    inv = sub.add_parser("invariants", help="fuzz the algebraic identities")
    inv.add_argument("--seed", type=int, default=42)
    inv.add_argument("--cases", type=int, default=1000)
    inv.add_argument("--out", default=None, help="optional directory for invariants.json")
    inv.set_defaults(func=_cmd_invariants)

    bf = sub.add_parser("boost-file", help="boost a spectrum CSV into a new frame")
    bf.add_argument("input", help="input spectrum CSV")
    bf.add_argument("output", help="output spectrum CSV")
    bf.add_argument("--velocity", required=True, metavar="UX,UY,UZ",
                    help="frame velocity components, |u| < 1")
    bf.set_defaults(func=_cmd_boost_file)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariants" and args.cases < 1:
        parser.error("--cases must be at least 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
