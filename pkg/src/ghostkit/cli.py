"""Command-line interface.

Exit codes: 0 success, 1 domain or validation error, 2 verification failure.
All output is deterministic; ``--format json`` emits one JSON document on
stdout (exact rationals serialized as strings).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters, config, homalg, rigidity, verify
from .functors import conjugate, dual_restricted, dual_star, dual_tensor, flow
from .fusion import GuardExtensionError, fuse_detailed
from .grammar import ParseError, parse_module_expr, parse_single_module
from .modules import TOP, FormalSum, loewy, sequence_catalog, string_rows


def _sum_json(s: FormalSum):
    return [{"module": str(m), "mult": k} for m, k in s]


def _render_chain(word) -> str:
    labels = [f"V[{f}]" for f, _ in word]
    width = max(len(lab) for lab in labels) + 4
    top = [" " * width] * len(word)
    bot = [" " * width] * len(word)
    mid = [" "] * (width * len(word))
    for k, ((f, row), lab) in enumerate(zip(word, labels)):
        cell = lab.center(width)
        if row == TOP:
            top[k] = cell
        else:
            bot[k] = cell
    for k in range(1, len(word)):
        pos = k * width - width // 2
        mid[pos] = "\\" if word[k - 1][1] == TOP else "/"
    lines = ["".join(top).rstrip(), "".join(mid).rstrip(), "".join(bot).rstrip()]
    return "\n".join(line for line in lines if line)


def _render_diamond(m: int) -> str:
    top, left, right, bottom = f"V[{m}]", f"V[{m - 1}]", f"V[{m + 1}]", f"V[{m}]"
    width = max(len(left), len(right)) + 2
    pad = " " * width
    return "\n".join([
        pad + top,
        pad[:-2] + "/" + " " * (len(top) + 2) + "\\",
        left.ljust(width + len(top) + 2) + right,
        pad[:-2] + "\\" + " " * (len(top) + 2) + "/",
        pad + bottom,
    ])


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_fuse(args, cfg) -> int:
    a = parse_module_expr(args.left)
    b = parse_module_expr(args.right)
    strict = args.strict_guards or cfg.strict_guards
    res = fuse_detailed(a, b, strict_guards=strict)
    payload = {
        "input": [str(a), str(b)],
        "summands": _sum_json(res.total),
        "guard_extended": res.guard_extended,
        "projective_compact": sorted(res.compact),
    }
    text = str(res.total)
    if res.guard_extended:
        text += "\nguard-extended: true"
    _emit(args, payload, text)
    return 0


def _cmd_dim(args, cfg, op) -> int:
    src = parse_module_expr(args.source)
    tgt = parse_module_expr(args.target)
    dim = op(src, tgt)
    _emit(args, {"source": str(src), "target": str(tgt), "dim": dim}, str(dim))
    return 0


def _cmd_char(args, cfg) -> int:
    mods = parse_module_expr(args.expr)
    hmax = Fraction(args.hmax) if args.hmax is not None else cfg.hmax
    window = config.parse_jwindow(args.jwindow) if args.jwindow else cfg.jwindow
    ch = characters.character(mods, hmax, window)
    entries = [{"j": str(j), "h": str(h), "dim": d} for j, h, d in ch.entries()]
    payload = {
        "module": str(mods),
        "hmax": str(hmax),
        "jwindow": [str(window[0]), str(window[1])],
        "entries": entries,
    }
    if args.format == "csv":
        lines = ["j,h,dim"] + [f"{e['j']},{e['h']},{e['dim']}" for e in entries]
        print("\n".join(lines))
        return 0
    text = "\n".join(f"{e['j']:>8s} {e['h']:>8s} {e['dim']:>6d}" for e in entries)
    _emit(args, payload, text if text else "(empty)")
    return 0


def _cmd_loewy(args, cfg) -> int:
    mod = parse_single_module(args.expr)
    word = loewy(mod)
    payload = {
        "module": str(mod),
        "diamond": word.diamond,
        "entries": [{"flow": f, "row": r} for f, r in word.entries],
    }
    if word.diamond:
        text = _render_diamond(mod.m)
    else:
        text = _render_chain(list(string_rows(mod)))
    _emit(args, payload, text)
    return 0


_FUNCTORS = {
    "star": dual_star,
    "restricted": dual_restricted,
    "conjugate": conjugate,
    "tensor": dual_tensor,
}


def _cmd_dual(args, cfg) -> int:
    mods = parse_module_expr(args.expr)
    if args.functor == "flow":
        result = flow(mods, args.ell)
    else:
        result = _FUNCTORS[args.functor](mods)
    payload = {"input": str(mods), "functor": args.functor, "result": str(result)}
    _emit(args, payload, str(result))
    return 0


def _cmd_cover(args, cfg, op) -> int:
    mods = parse_module_expr(args.expr)
    result = op(mods)
    payload = {"input": str(mods), "result": str(result),
               "summands": _sum_json(result)}
    _emit(args, payload, str(result))
    return 0


def _cmd_rigidity(args, cfg) -> int:
    value = rigidity.rigidity_constant(args.j, args.w1, ell=args.ell)
    devs = rigidity.identity_report(args.j)
    identities_pass = max(devs.values()) < 1e-10
    payload = {
        "j": args.j,
        "w1": args.w1,
        "ell": args.ell,
        "I_abs": abs(value),
        "I_re": value.real,
        "I_im": value.imag,
        "identities_pass": identities_pass,
    }
    text = (f"j={args.j} w1={args.w1} |I|={abs(value):.12e} "
            f"identities={'pass' if identities_pass else 'FAIL'}")
    _emit(args, payload, text)
    return 0


def _cmd_catalog(args, cfg) -> int:
    bound = args.bound if args.bound is not None else cfg.catalog_bound
    catalog = sequence_catalog(bound)
    payload = {
        "bound": bound,
        "sequences": [{
            "name": seq.name,
            "tag": seq.tag,
            "sub": str(seq.sub),
            "middle": str(seq.middle),
            "quotient": str(seq.quotient),
        } for seq in catalog],
    }
    text = "\n".join(
        f"{seq.name}: 0 -> {seq.sub} -> {seq.middle} -> {seq.quotient} -> 0"
        for seq in catalog)
    _emit(args, payload, text)
    return 0


def _cmd_verify(args, cfg) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    if args.max_length is not None or args.max_flow is not None:
        from dataclasses import replace
        cfg = replace(
            cfg,
            pool_max_length=args.max_length or cfg.pool_max_length,
            pool_max_flow=args.max_flow or cfg.pool_max_flow,
        )
    results = verify.run_suites(names, cfg)
    all_passed = all(c.passed for checks in results.values() for c in checks)
    payload = {
        "passed": all_passed,
        "suites": {
            name: [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in checks]
            for name, checks in results.items()
        },
    }
    lines = []
    for name, checks in results.items():
        for c in checks:
            lines.append(f"[{name}] {c.line()}")
        status = "PASS" if all(c.passed for c in checks) else "FAIL"
        lines.append(f"suite {name}: {status}")
    _emit(args, payload, "\n".join(lines))
    return 0 if all_passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghostkit",
        description="Exact fusion, homological and character calculus for the "
                    "bosonic ghost module category.")
    parser.add_argument("--config", help="path to a key=value config file")
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format")
    # the global flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("fuse", help="fusion product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--strict-guards", action="store_true")

    p = sub.add_parser("hom", help="dimension of the Hom space")
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("ext", help="dimension of the first Ext group")
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("char", help="truncated graded character")
    p.add_argument("expr")
    p.add_argument("--hmax")
    p.add_argument("--jwindow", help="ghost window a:b (use --jwindow=-6:6 "
                                     "for negative bounds)")

    p = sub.add_parser("loewy", help="Loewy diagram of one module")
    p.add_argument("expr")

    p = sub.add_parser("dual", help="apply a duality or twist functor")
    p.add_argument("expr")
    p.add_argument("--functor", choices=("star", "restricted", "conjugate",
                                         "tensor", "flow"), default="star")
    p.add_argument("--ell", type=int, default=1, help="flow amount for --functor flow")

    p = sub.add_parser("cover", help="projective cover")
    p.add_argument("expr")

    p = sub.add_parser("hull", help="injective hull")
    p.add_argument("expr")

    p = sub.add_parser("rigidity", help="rigidity constant and identity checks")
    p.add_argument("--j", type=float, default=0.3)
    p.add_argument("--w1", type=float, default=1.0)
    p.add_argument("--ell", type=int, default=0)

    p = sub.add_parser("catalog", help="exact sequence catalog")
    p.add_argument("--bound", type=int)

    p = sub.add_parser("verify", help="run property verification suites")
    p.add_argument("--suite", choices=("all",) + tuple(verify.SUITES),
                   default="all")
    p.add_argument("--max-length", type=int)
    p.add_argument("--max-flow", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config.load(args.config)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1

    dispatch = {
        "fuse": lambda: _cmd_fuse(args, cfg),
        "hom": lambda: _cmd_dim(args, cfg, homalg.hom_dim),
        "ext": lambda: _cmd_dim(args, cfg, homalg.ext_dim),
        "char": lambda: _cmd_char(args, cfg),
        "loewy": lambda: _cmd_loewy(args, cfg),
        "dual": lambda: _cmd_dual(args, cfg),
        "cover": lambda: _cmd_cover(args, cfg, homalg.projective_cover),
        "hull": lambda: _cmd_cover(args, cfg, homalg.injective_hull),
        "rigidity": lambda: _cmd_rigidity(args, cfg),
        "catalog": lambda: _cmd_catalog(args, cfg),
        "verify": lambda: _cmd_verify(args, cfg),
    }
    try:
        return dispatch[args.command]()
    except (ParseError, GuardExtensionError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
