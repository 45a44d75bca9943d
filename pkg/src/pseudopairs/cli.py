"""Command-line interface.

Subcommands::

    construct   --powers n m | --jets f.json g.json  -M <real>  [--out pair.json] [--report report.json]
    verify      --pair pair.json [--samples k] [--tol t]
    pseudogrid  --pair pair.json --window re0 re1 im0 im1 --nx NX --ny NY [--prefix out]
    chain-audit --powers n m | --jets f.json g.json
    check-star  --f d0 d1 d2 d3 d4 --g d0 d1 d2 d3 d4

Exit codes: 0 success; 1 verification failure; 2 bad input or precondition;
3 jets appear to satisfy the star condition; 4 internal certification failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import io, spectral
from .conditions import DerivJet, star_value
from .construct import ConstructionInput, _f_of_dense, build_pair, chain_audit, critical_samples
from .errors import CertificationError, PreconditionError, StarConditionSuspected
from .nilpotent import Jet, polynomial_jet, power_jet

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_STAR, EXIT_CERT = 0, 1, 2, 3, 4

log = logging.getLogger("pseudopairs")


def parse_scalar(text: str):
    """``"3"``, ``"-1/2"`` -> Fraction; ``"0.5"``, ``"1+2j"`` -> complex."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text.replace("i", "j") if "j" not in text else text)
    except ValueError as e:
        raise PreconditionError(f"cannot parse scalar {text!r}") from e


def load_jet(path: str) -> Jet:
    """Jet file: ``{"coeffs": [8 scalars]}`` or ``{"polynomial": [...], "center": c}``.

    Scalars may be numbers, rational strings, ``{"num", "den"}`` or ``[re, im]``.
    The polynomial form is re-expanded about ``center`` (default 0).
    """
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise PreconditionError(f"cannot read jet file {path}: {e}") from e
    dec = lambda v: parse_scalar(v) if isinstance(v, str) else io.decode_scalar(v)  # noqa: E731
    if "coeffs" in doc:
        return Jet(tuple(dec(v) for v in doc["coeffs"]))
    if "polynomial" in doc:
        return polynomial_jet([dec(v) for v in doc["polynomial"]], dec(doc.get("center", 0)))
    raise PreconditionError(f"jet file {path} needs 'coeffs' or 'polynomial'")


def _jets_from_args(args):
    if args.powers:
        n, m = args.powers
        return power_jet(n), power_jet(m), (n, m)
    return load_jet(args.jets[0]), load_jet(args.jets[1]), None


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def cmd_construct(args) -> int:
    if args.powers:
        n, m = args.powers
        inp = ConstructionInput("powers", args.M, n=n, m=m, backend=args.backend,
                                seed=args.seed, tol=args.tol, samples=args.samples)
    else:
        f, g, _ = _jets_from_args(args)
        inp = ConstructionInput("jets", args.M, f=f, g=g, backend=args.backend,
                                seed=args.seed, tol=args.tol, samples=args.samples)
    pair = build_pair(inp)
    _write(args.out, io.dump_pair(pair))
    if args.report:
        _write(args.report, io.dumps(pair.report))
    r = pair.report
    print(f"u={r['u']} t={r['t']} mu={pair.mu:.6g} "
          f"ratio_f={r['block_ratios']['f']:.6g} ratio_g={r['block_ratios']['g']:.6g} "
          f"passed={pair.passed}", file=sys.stderr)
    return EXIT_OK if pair.passed else EXIT_CERT


def _stored_jets(report: dict):
    inp = report.get("input", {})
    if "f" in inp and "g" in inp:
        return (Jet(tuple(io.decode_scalar(v) for v in inp["f"])),
                Jet(tuple(io.decode_scalar(v) for v in inp["g"])))
    if inp.get("mode") == "powers":
        return power_jet(inp["n"]), power_jet(inp["m"])
    return None


def cmd_verify(args) -> int:
    d = io.load_pair(Path(args.pair).read_text(encoding="utf-8"))
    inp = d["report"].get("input", {})
    seed = args.seed if args.seed is not None else int(inp.get("seed", 0))
    n_rand = args.samples if args.samples is not None else int(inp.get("samples", spectral.SAMPLE_RANDOM))
    center = io.decode_scalar(inp.get("sample_center", 0.0))
    samples = spectral.standard_samples(seed, n_rand, complex(center))
    try:
        samples = np.concatenate([samples, critical_samples(d["u"], d["c"], complex(center))])
    except (TypeError, ValueError):
        pass
    A, B = d["A"], d["B"]
    ps = spectral.pseudospectra_equal_sampled(A, B, samples, args.tol)
    nc = spectral.norm_comparison_check(A, B)
    out = {"seed": seed, "pseudospectra": ps, "norm_comparison": nc}
    jets = _stored_jets(d["report"])
    if jets is not None:
        shift = inp.get("mode") == "powers"
        f, g = jets
        fa, fb = (spectral.operator_norm(_f_of_dense(f, X, shift)) for X in (A, B))
        ga, gb = (spectral.operator_norm(_f_of_dense(g, X, shift)) for X in (A, B))
        out["ratios"] = {"f": fa / fb, "g": ga / gb}
    out["passed"] = bool(ps["passed"] and nc["passed"])
    _write(args.report, io.dumps(out))
    if not out["passed"]:
        print(f"verification failed; witness z = {ps['witness_z']}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_pseudogrid(args) -> int:
    d = io.load_pair(Path(args.pair).read_text(encoding="utf-8"))
    re0, re1, im0, im1 = args.window
    try:
        g = spectral.GridSpec(re0, re1, im0, im1, args.nx, args.ny)
    except ValueError as e:
        raise PreconditionError(str(e)) from e
    nodes = g.nodes()
    for name in ("A", "B"):
        smin = spectral.pseudospectrum_grid(d[name], g)
        _write(f"{args.prefix}_{name}.csv", io.grid_csv(nodes, smin))
    return EXIT_OK


def cmd_chain_audit(args) -> int:
    if args.backend != "exact":
        raise PreconditionError("chain-audit needs the exact backend")
    f, g, powers = _jets_from_args(args)
    if not (f.exact and g.exact):
        raise PreconditionError("chain-audit needs rational jets")
    _write(args.out, io.dumps(chain_audit(f, g, powers)))
    return EXIT_OK


def cmd_check_star(args) -> int:
    f = DerivJet(tuple(parse_scalar(x) for x in args.f))
    g = DerivJet(tuple(parse_scalar(x) for x in args.g))
    s = star_value(f, g)
    exact = isinstance(s, Fraction)
    if exact:
        is_zero, tol = s == 0, 0.0
    else:
        scale = max(max(abs(complex(x)) for x in f.d + g.d), 1.0) ** 6
        tol = 1e-10 * scale
        is_zero = abs(s) <= tol
    _write(args.out, io.dumps({"star": s, "is_zero": bool(is_zero), "tolerance": tol}))
    return EXIT_OK


def _source_args(p, required=True):
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--powers", nargs=2, type=int, metavar=("N", "M"))
    grp.add_argument("--jets", nargs=2, metavar=("F_JSON", "G_JSON"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pseudopairs", description=__doc__.split("\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a verified pair")
    _source_args(p)
    p.add_argument("-M", type=float, required=True, help="ratio both norms must exceed")
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    p.add_argument("--out", default="pair.json")
    p.add_argument("--report", default=None)
    p.add_argument("--samples", type=int, default=spectral.SAMPLE_RANDOM,
                   help="random points added to the 224 ring samples")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a stored pair")
    p.add_argument("--pair", required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--report", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pseudogrid", help="sigma_min grids for A and B as CSV")
    p.add_argument("--pair", required=True)
    p.add_argument("--window", nargs=4, type=float, required=True,
                   metavar=("RE0", "RE1", "IM0", "IM1"))
    p.add_argument("--nx", type=int, default=101)
    p.add_argument("--ny", type=int, default=101)
    p.add_argument("--prefix", default="grid")
    p.set_defaults(func=cmd_pseudogrid)

    p = sub.add_parser("chain-audit", help="degrees and leading terms of the cleared chain")
    _source_args(p)
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_chain_audit)

    p = sub.add_parser("check-star", help="evaluate the star bracket from raw derivatives")
    p.add_argument("--f", nargs=5, required=True, metavar="D")
    p.add_argument("--g", nargs=5, required=True, metavar="D")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_check_star)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except StarConditionSuspected as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STAR
    except (PreconditionError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CertificationError as e:
        print(f"certification failure: {e}", file=sys.stderr)
        return EXIT_CERT


if __name__ == "__main__":
    raise SystemExit(main())
