"""Command-line interface.

Subcommands: trace (CSV locus samples), classify (JSON verdict),
verify (run registered checks), table (verdict grid), envelope
(free-side envelope description), svg (deterministic drawing).

Exit codes: 0 success, 1 check failure, 2 usage error.  Output is
deterministic — JSON objects use sorted keys, CSV floats carry 17
significant digits, and no environment or network state is consulted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from . import claims as claims_mod
from .families import (
    FAMILY_KINDS,
    MINUS,
    PLUS,
    BicentricParams,
    ConfocalParams,
    FamilyConfig,
    TangentBranch,
    bic1_config,
    bic2_config,
    bic3_config,
    conf1_config,
    conf2_config,
    conf3_config,
    envelope_points,
)
from .geom import GeometryError
from .loci import (
    DEFAULT_TOLERANCES,
    InsufficientSamples,
    classify_locus,
    fit_curve,
    trace_locus,
)
from .svgplot import render_family

__all__ = ["main"]

_DEFAULT_N = 512


class _CliUsage(Exception):
    """Invalid flag combination discovered after parsing."""


def _add_family_flags(sp: argparse.ArgumentParser, multi_center: bool = False) -> None:
    sp.add_argument("--family", choices=sorted(FAMILY_KINDS))
    sp.add_argument("--R", type=float, default=None, help="outer circle radius")
    sp.add_argument("--r", type=float, default=None, help="caustic circle radius")
    sp.add_argument("--d", type=float, default=None, help="caustic center offset")
    sp.add_argument(
        "--u", type=float, default=None,
        help="pencil coordinate of the second caustic (three-caustic families)",
    )
    sp.add_argument("--a", type=float, default=None, help="outer ellipse major semi-axis")
    sp.add_argument("--b", type=float, default=None, help="outer ellipse minor semi-axis")
    sp.add_argument(
        "--lambda", dest="lam", type=float, default=None,
        help="confocal caustic parameter",
    )
    sp.add_argument(
        "--branch", default=None,
        help="tangent branch: plus|minus or a pair like plus,minus",
    )
    if multi_center:
        sp.add_argument(
            "--center", action="append", default=None,
            help="tracked point id (repeatable)",
        )
    else:
        sp.add_argument("--center", default=None, help="tracked point id")
    sp.add_argument("-n", type=int, default=None, help="number of samples")
    sp.add_argument(
        "--config", default=None,
        help="JSON file with default flag values (explicit flags win)",
    )


def _apply_config(args: argparse.Namespace) -> None:
    path = getattr(args, "config", None)
    if not path:
        return
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise _CliUsage("--config must contain a JSON object")
    key_to_dest = {"lambda": "lam"}
    for key, value in data.items():
        dest = key_to_dest.get(key, key)
        if not hasattr(args, dest):
            continue
        if getattr(args, dest) is None:
            if dest == "center" and isinstance(value, str) and _wants_center_list(args):
                value = [value]
            setattr(args, dest, value)


def _wants_center_list(args: argparse.Namespace) -> bool:
    return getattr(args, "command", "") == "svg"


def _parse_branch(text: Optional[str]) -> TangentBranch:
    if not text:
        return TangentBranch(PLUS, PLUS)
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2 or any(p not in (PLUS, MINUS) for p in parts):
        raise _CliUsage(
            f"--branch must be plus|minus or a pair like plus,minus (got {text!r})"
        )
    return TangentBranch(parts[0], parts[1])


def _require(args: argparse.Namespace, family: str, names: Sequence[str]) -> List[float]:
    values = []
    for name in names:
        dest = "lam" if name == "lambda" else name
        value = getattr(args, dest)
        if value is None:
            raise _CliUsage(f"family {family} requires --{name}")
        values.append(value)
    return values


def _build_family(args: argparse.Namespace) -> FamilyConfig:
    family = getattr(args, "family", None)
    if family is None:
        raise _CliUsage("--family is required")
    branch = _parse_branch(getattr(args, "branch", None))
    if family == "bic-I":
        R, r = _require(args, family, ("R", "r"))
        if args.d is not None:
            return FamilyConfig("bic-I", bic=BicentricParams(R, r, args.d))
        return bic1_config(R, r)
    if family == "bic-II":
        R, r, d = _require(args, family, ("R", "r", "d"))
        return bic2_config(R, r, d)
    if family == "bic-III":
        R, r, d, u = _require(args, family, ("R", "r", "d", "u"))
        return bic3_config(R, r, d, u=u, branch=branch)
    if family == "conf-I":
        a, b = _require(args, family, ("a", "b"))
        if args.lam is not None:
            return FamilyConfig("conf-I", conf=ConfocalParams(a, b, args.lam))
        return conf1_config(a, b)
    if family == "conf-II":
        a, b, lam = _require(args, family, ("a", "b", "lambda"))
        return conf2_config(a, b, lam, branch=branch)
    a, b, lam, u = _require(args, family, ("a", "b", "lambda", "u"))
    return conf3_config(a, b, lam, u, branch=branch)


def _g17(x: float) -> str:
    return f"{x:.17g}"


def cmd_trace(args: argparse.Namespace) -> int:
    cfg = _build_family(args)
    center = args.center or "X1"
    n = args.n or _DEFAULT_N
    locus = trace_locus(cfg, center, n, min_valid=1)
    lines = ["t,x,y,valid"]
    for s in locus.samples:
        lines.append(f"{_g17(s.t)},{_g17(s.p.x)},{_g17(s.p.y)},{int(s.valid)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    cfg = _build_family(args)
    center = args.center or "X1"
    n = args.n or _DEFAULT_N
    locus = trace_locus(cfg, center, n)
    fit = classify_locus(locus, DEFAULT_TOLERANCES)
    out: dict = {
        "family": cfg.kind,
        "tracked": center,
        "samples": n,
        "verdict": fit.verdict,
        "degree": fit.degree,
        "residual": fit.residual,
    }
    if fit.verdict == "point":
        pts = locus.valid_points()
        out["point"] = [
            math.fsum(p.x for p in pts) / len(pts),
            math.fsum(p.y for p in pts) / len(pts),
        ]
    conic = fit.conic
    if conic is not None and conic.center is not None:
        out["center"] = [conic.center.x, conic.center.y]
        axes = conic.semi_axes
        if fit.verdict == "circle" and axes is not None:
            out["radius"] = axes[0]
        elif axes is not None:
            out["semi_axes"] = [axes[0], axes[1]]
            out["axis_angle"] = conic.axis_angle
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def _claim_call_args(claim_id: str, args: argparse.Namespace) -> tuple:
    """Build positional arguments for a check from explicit flags.

    Flags missing from the command line fall back to each check's
    documented defaults.
    """
    bic = ("thm:bicII-x1", "cor:bicII-exc", "prop:bicII-x2", "prop:bicII-envelope")
    conf = ("thm:confII-exc", "prop:confII-envelope")
    ab = (
        "prop:confII-x1", "prop:confII-x2-n4", "cor:confII-n4",
        "cor:confII-n6", "prop:confII-x1-convex",
    )
    if claim_id in bic:
        if any(v is not None for v in (args.R, args.r, args.d)):
            base = claims_mod.DEFAULT_BIC2
            return (BicentricParams(
                args.R if args.R is not None else base.R,
                args.r if args.r is not None else base.r,
                args.d if args.d is not None else base.d,
            ),)
        return ()
    if claim_id == "conj:bicIII":
        if any(v is not None for v in (args.R, args.r, args.d, args.u)):
            base = claims_mod.DEFAULT_BIC3
            return (BicentricParams(
                args.R if args.R is not None else base.R,
                args.r if args.r is not None else base.r,
                args.d if args.d is not None else base.d,
                u=args.u if args.u is not None else base.u,
            ),)
        return ()
    if claim_id in conf:
        if any(v is not None for v in (args.a, args.b, args.lam)):
            base = claims_mod.DEFAULT_CONF2
            return (ConfocalParams(
                args.a if args.a is not None else base.a,
                args.b if args.b is not None else base.b,
                args.lam if args.lam is not None else base.lam,
            ),)
        return ()
    if claim_id in ab:
        if args.a is not None or args.b is not None:
            return (
                args.a if args.a is not None else 2.0,
                args.b if args.b is not None else 1.0,
            )
        return ()
    return ()


def _print_report(rep: "claims_mod.ClaimReport", verbose: bool) -> None:
    if rep.kind == "conjecture":
        head = "EVIDENCE" if rep.passed else "EVIDENCE?"
        label = "numerical evidence, not a proof"
    else:
        head = "PASS" if rep.passed else "FAIL"
        label = rep.kind
    sys.stdout.write(
        f"[{head}] {rep.claim_id} ({label})"
        f" metric={rep.metric:.3e} tolerance={rep.tolerance:.1e}\n"
    )
    sys.stdout.write(f"    params:   {rep.params}\n")
    sys.stdout.write(f"    expected: {rep.expected}\n")
    sys.stdout.write(f"    observed: {rep.observed}\n")
    for note in rep.notes:
        sys.stdout.write(f"    note: {note}\n")
    if verbose and rep.rows:
        widths = [max(len(row[k]) for row in rep.rows) for k in range(len(rep.rows[0]))]
        for row in rep.rows:
            cells = "  ".join(c.rjust(w) for c, w in zip(row, widths))
            sys.stdout.write(f"    | {cells}\n")


def cmd_verify(args: argparse.Namespace) -> int:
    registry = {c.claim_id: c for c in claims_mod.all_claims()}
    if args.claims and not args.all:
        unknown = [c for c in args.claims if c not in registry]
        if unknown:
            raise _CliUsage(
                f"unknown claim id(s): {', '.join(unknown)};"
                f" known: {', '.join(claims_mod.claim_ids())}"
            )
        selected = [registry[c] for c in args.claims]
    else:
        selected = list(claims_mod.all_claims())

    reports = []
    for claim in selected:
        call_args = _claim_call_args(claim.claim_id, args)
        reports.append(claim.run(*call_args) if call_args else claim.run())

    if args.json:
        sys.stdout.write(
            json.dumps([rep.to_dict() for rep in reports], sort_keys=True, indent=2)
            + "\n"
        )
    else:
        for rep in reports:
            _print_report(rep, verbose=True)
    gating = [rep for rep in reports if rep.gating]
    failed = [rep for rep in gating if not rep.passed]
    conjectures = [rep for rep in reports if not rep.gating]
    if not args.json:
        sys.stdout.write(
            f"checked claims: {len(gating) - len(failed)}/{len(gating)} passed"
        )
        if conjectures:
            consistent = sum(1 for rep in conjectures if rep.passed)
            sys.stdout.write(
                f"; conjecture evidence: {consistent}/{len(conjectures)} consistent"
                " (reported, never gating)"
            )
        sys.stdout.write("\n")
    return 1 if failed else 0


def cmd_table(args: argparse.Namespace) -> int:
    rep = claims_mod.summary_table()
    widths = [max(len(row[k]) for row in rep.rows) for k in range(len(rep.rows[0]))]
    for row in rep.rows:
        sys.stdout.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")
    if not rep.passed:
        sys.stdout.write("mismatched cells:\n")
        for note in rep.notes:
            sys.stdout.write(f"  {note}\n")
    return 0 if rep.passed else 1


def cmd_envelope(args: argparse.Namespace) -> int:
    cfg = _build_family(args)
    n = args.n or _DEFAULT_N
    env = cfg.closed_form_envelope()
    out: dict = {"family": cfg.kind}
    if env is not None:
        out["closed_form"] = True
        out["kind"] = env.kind
        if env.center is not None:
            out["center"] = [env.center.x, env.center.y]
        axes = env.semi_axes
        if axes is not None:
            if env.kind == "circle":
                out["radius"] = axes[0]
            else:
                out["semi_axes"] = [axes[0], axes[1]]
    else:
        ts = [2.0 * math.pi * k / n for k in range(n)]
        pts = envelope_points(cfg.free_side_at, ts)
        out["closed_form"] = False
        out["sampled_points"] = len(pts)
        if len(pts) >= 24:
            fit = fit_curve(pts, 2, DEFAULT_TOLERANCES)
            out["verdict"] = fit.verdict
            out["residual"] = fit.residual
            if fit.conic is not None and fit.conic.center is not None:
                out["center"] = [fit.conic.center.x, fit.conic.center.y]
                axes = fit.conic.semi_axes
                if axes is not None:
                    if fit.verdict == "circle":
                        out["radius"] = axes[0]
                    else:
                        out["semi_axes"] = [axes[0], axes[1]]
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def cmd_svg(args: argparse.Namespace) -> int:
    cfg = _build_family(args)
    centers = args.center or ["X1"]
    n = args.n or _DEFAULT_N
    doc = render_family(cfg, centers, n=n)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poncelet",
        description="Trace, classify, verify, and draw triangle-family loci.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("trace", help="print locus samples as CSV")
    _add_family_flags(sp)
    sp.set_defaults(handler=cmd_trace)

    sp = sub.add_parser("classify", help="classify a locus, print JSON")
    _add_family_flags(sp)
    sp.set_defaults(handler=cmd_classify)

    sp = sub.add_parser("verify", help="run registered numerical checks")
    sp.add_argument("claims", nargs="*", help="claim ids (default: all)")
    sp.add_argument("--all", action="store_true", help="run every registered check")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    _add_family_flags(sp)
    sp.set_defaults(handler=cmd_verify)

    sp = sub.add_parser("table", help="print the verdict grid for all six families")
    sp.add_argument(
        "--config", default=None,
        help="JSON file with default flag values (unused keys ignored)",
    )
    sp.set_defaults(handler=cmd_table)

    sp = sub.add_parser("envelope", help="describe the free-side envelope, print JSON")
    _add_family_flags(sp)
    sp.set_defaults(handler=cmd_envelope)

    sp = sub.add_parser("svg", help="render a family as a deterministic SVG document")
    _add_family_flags(sp, multi_center=True)
    sp.add_argument("--out", default=None, help="output file (default: stdout)")
    sp.set_defaults(handler=cmd_svg)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code) if exc.code is not None else 0
    try:
        _apply_config(args)
        return args.handler(args)
    except _CliUsage as exc:
        sys.stderr.write(f"poncelet {args.command}: error: {exc}\n")
        return 2
    except (GeometryError, InsufficientSamples, ValueError) as exc:
        sys.stderr.write(f"poncelet {args.command}: error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"poncelet {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
