"""Command-line interface.

Subcommands:
  ks reach  --from X,Y,Z --to X,Y,Z [--eps E] [--json] [-o FILE]
  ks shell  --point X,Y,Z --n N --svg FILE [--eps E]
  ks demo   first --pole X,Y,Z [-o DIR] [--eps E] [--json]
  ks demo   second [-o DIR] [--eps E] [--json]
  ks color  FILE --mode count|witness|prove-none [--json]
  ks verify FILE [--eps E] [--json]
  ks render circle|projection|step1 [params] --svg FILE

Vector components accept plain numbers or simple expressions over sin, cos,
tan, sqrt and pi, e.g. --pole 0,sin(0.3),cos(0.3). Unnormalized inputs are
canonicalized with a warning once the norm strays more than 1e-6 from 1.
Every library error maps to a fixed exit code (ksgeom.errors.EXIT_CODES);
verification rejects exit 22 and unmet coloring expectations exit 23.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .coloring import SolveMode, solve
from .demos import demo_first_proof, demo_second_proof
from .errors import (
    EXIT_EXPECTATION,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_REJECTED,
    KsError,
    ParseError,
)
from .plane import PlanePoint
from .reach import reach, verify_certificate
from .serialize import (
    load_certificate,
    report_to_doc,
    save_certificate,
    save_trace,
)
from .sphere import TOL, Ray, Tolerance, canonicalize, norm
from .svg import figure_circle, figure_projection, figure_shell, figure_step_one
from .system import load_system, save_system
from .trace import decision_core, extract_triad_system

_EXPR_NAMES = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "sqrt": math.sqrt,
    "pi": math.pi,
}
_EXPR_OK = re.compile(r"^[0-9a-z_+\-*/(). eE]*$")


def _eval_component(text: str) -> float:
    text = text.strip()
    if not _EXPR_OK.match(text):
        raise ParseError(f"unsupported characters in component {text!r}")
    names = set(re.findall(r"[A-Za-z_]+", text)) - {"e", "E"}
    unknown = names - set(_EXPR_NAMES)
    if unknown:
        raise ParseError(f"unknown names in component {text!r}: {sorted(unknown)}")
    try:
        return float(eval(text, {"__builtins__": {}}, dict(_EXPR_NAMES)))
    except Exception as exc:
        raise ParseError(f"cannot evaluate component {text!r}: {exc}") from exc


def _parse_vec3(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"expected three comma-separated components, got {text!r}")
    x, y, z = (_eval_component(p) for p in parts)
    return (x, y, z)


def _parse_vec2(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected two comma-separated components, got {text!r}")
    u, v = (_eval_component(p) for p in parts)
    return (u, v)


def _input_ray(text: str, tol: Tolerance, json_mode: bool) -> Ray:
    v = _parse_vec3(text)
    n = norm(v)
    if abs(n - 1.0) > 1e-6:
        _warn(f"input {text!r} has norm {n!r}; normalizing", json_mode)
    return canonicalize(v, tol)


def _warn(message: str, json_mode: bool) -> None:
    if json_mode:
        print(json.dumps({"warning": message}), file=sys.stderr)
    else:
        print(f"warning: {message}", file=sys.stderr)


@dataclass(frozen=True)
class CommandConfig:
    """Parsed per-command settings: tolerance, output, format, seed."""

    tol: Tolerance
    json_mode: bool
    out: str | None
    seed: int

    @staticmethod
    def from_args(args: argparse.Namespace) -> "CommandConfig":
        return CommandConfig(
            tol=Tolerance(args.eps),
            json_mode=bool(getattr(args, "json", False)),
            out=getattr(args, "out", None),
            seed=getattr(args, "seed", 0),
        )


def cmd_reach(args) -> int:
    cfg = CommandConfig.from_args(args)
    src = _input_ray(args.src, cfg.tol, cfg.json_mode)
    dst = _input_ray(args.dst, cfg.tol, cfg.json_mode)
    cert = reach(src, dst, cfg.tol)
    report = verify_certificate(cert, cfg.tol)
    text = save_certificate(cert, report.link_residuals)
    if cfg.out:
        Path(cfg.out).write_text(text)
    doc = {
        "points": len(cert.points),
        "shell_n": cert.shell_n,
        "max_residual": max(report.link_residuals),
        "accepted": report.accepted,
        "out": cfg.out,
    }
    if cfg.json_mode:
        payload = json.loads(text)
        payload["summary"] = doc
        print(json.dumps(payload, indent=1))
    else:
        if not cfg.out:
            sys.stdout.write(text)
        print(
            f"certificate: {doc['points']} points, shell_n={doc['shell_n']}, "
            f"max link residual {doc['max_residual']:.3e}"
        )
    return EXIT_OK


def cmd_shell(args) -> int:
    cfg = CommandConfig.from_args(args)
    point = _input_ray(args.point, cfg.tol, cfg.json_mode)
    svg = figure_shell(point, args.n, cfg.tol)
    Path(args.svg).write_text(svg)
    if not cfg.json_mode:
        print(f"wrote {args.svg}")
    return EXIT_OK


def _demo_summary(trace, system, core) -> dict:
    return {
        "rays": system.n_rays,
        "triads": len(system.triads),
        "pairs": len(system.pairs),
        "branches": len(trace.branches),
        "leaves": len(trace.leaves()),
        "facts": len(trace.facts),
        "decision_core": list(core),
    }


def cmd_demo(args) -> int:
    cfg = CommandConfig.from_args(args)
    if args.which == "first":
        pole = _input_ray(args.pole, cfg.tol, cfg.json_mode)
        trace = demo_first_proof(pole, cfg.tol)
    else:
        trace = demo_second_proof(cfg.tol)
    system = extract_triad_system(trace)
    core = decision_core(trace, system)
    if cfg.out:
        outdir = Path(cfg.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "trace.json").write_text(save_trace(trace))
        (outdir / "system.json").write_text(save_system(system))
    summary = _demo_summary(trace, system, core)
    pair = trace.contradiction
    summary["contradiction_witness"] = (
        list(trace.rays[trace.facts[pair[1]].ray].vec) if pair else None
    )
    if cfg.json_mode:
        print(json.dumps(summary, indent=1))
    else:
        print(
            f"demo {args.which}: {summary['facts']} facts in "
            f"{summary['branches']} branches, all {summary['leaves']} leaves closed"
        )
        print(
            f"extracted system: {summary['rays']} rays, {summary['triads']} triads, "
            f"{summary['pairs']} pairs; decision core {summary['decision_core']}"
        )
        if cfg.out:
            print(f"wrote {cfg.out}/trace.json and {cfg.out}/system.json")
    return EXIT_OK


_MODES = {
    "count": SolveMode.COUNT,
    "witness": SolveMode.FIRST_WITNESS,
    "prove-none": SolveMode.PROVE_NONE,
}


def cmd_color(args) -> int:
    system = load_system(Path(args.file).read_text())
    result = solve(system, _MODES[args.mode])
    doc = {
        "mode": args.mode,
        "count": result.count,
        "witness": list(result.witness) if result.witness is not None else None,
        "nodes_explored": result.nodes_explored,
        "exhaustive": result.exhaustive,
        "backend": result.backend,
    }
    if args.json:
        print(json.dumps(doc, indent=1))
    else:
        print(
            f"{args.mode}: count={result.count} nodes={result.nodes_explored} "
            f"exhaustive={result.exhaustive} backend={result.backend}"
        )
        if result.witness is not None and args.mode == "witness":
            print("witness:", "".join(str(v) for v in result.witness))
    if args.mode == "prove-none" and result.count != 0:
        return EXIT_EXPECTATION
    if args.mode == "witness" and result.witness is None:
        return EXIT_EXPECTATION
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = CommandConfig.from_args(args)
    cert = load_certificate(Path(args.file).read_text())
    report = verify_certificate(cert, cfg.tol)
    if args.json:
        print(json.dumps(report_to_doc(report), indent=1))
    else:
        if report.accepted:
            print(
                f"accepted: {len(cert.points)} points, "
                f"max link residual {max(report.link_residuals):.3e}"
            )
        else:
            print("rejected:")
            for f in report.failures:
                print(f"  {f}")
    return EXIT_OK if report.accepted else EXIT_REJECTED


def cmd_render(args) -> int:
    cfg = CommandConfig.from_args(args)
    if args.figure == "circle":
        svg = figure_circle(_input_ray(args.q, cfg.tol, cfg.json_mode), cfg.tol)
    elif args.figure == "projection":
        svg = figure_projection(_input_ray(args.q, cfg.tol, cfg.json_mode), cfg.tol)
    else:
        hq = PlanePoint(*_parse_vec2(args.hq))
        hp = PlanePoint(*_parse_vec2(args.hp))
        svg = figure_step_one(hq, hp, cfg.tol)
    Path(args.svg).write_text(svg)
    if not args.json:
        print(f"wrote {args.svg}")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--eps", type=float, default=TOL.eps, help="tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized batches")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ks",
        description="Reach certificates, derivation traces, and triad colorings on the unit sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reach", help="build and write a reach certificate")
    p.add_argument("--from", dest="src", required=True, metavar="X,Y,Z")
    p.add_argument("--to", dest="dst", required=True, metavar="X,Y,Z")
    p.add_argument("-o", "--out", help="certificate file (default: stdout)")
    _add_common(p)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("shell", help="render the spiral shell in the tangent plane")
    p.add_argument("--point", required=True, metavar="X,Y,Z")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--svg", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_shell)

    p = sub.add_parser("demo", help="run a contradiction demo")
    p.add_argument("which", choices=("first", "second"))
    p.add_argument("--pole", metavar="X,Y,Z", default="0,sin(0.3),cos(0.3)",
                   help="re-poling target for the first demo")
    p.add_argument("-o", "--out", help="directory for trace.json and system.json")
    _add_common(p)
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("color", help="search colorings of a triad-system file")
    p.add_argument("file")
    p.add_argument("--mode", choices=tuple(_MODES), default="count")
    _add_common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="render a construction figure")
    p.add_argument("figure", choices=("circle", "projection", "step1"))
    p.add_argument("--q", metavar="X,Y,Z", default="0,sin(0.6),cos(0.6)")
    p.add_argument("--hq", metavar="U,V", default="1,0", help="step1: plane image of q")
    p.add_argument("--hp", metavar="U,V", default="2,0", help="step1: plane image of p")
    p.add_argument("--svg", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KsError as exc:
        if getattr(args, "json", False):
            print(
                json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}),
                file=sys.stderr,
            )
        else:
            print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error [ValueError]: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
