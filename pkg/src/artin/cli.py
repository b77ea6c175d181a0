"""``artin`` command line front end.

Exit codes: 0 success, 1 negative decision (words not equal, graphs not
isomorphic, no conjugacy witness), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import dihedral
from .centralisers import classify_centraliser, DihedralElliptic
from .deligne import DeligneError, build_ball, export_complex, fixed_slice
from .graph import GraphError, PresentationGraph, graph_to_dict, load_graph, parse_graph
from .isomorphism import (
    large_type_isomorphic,
    rigidity_report,
    theorem_a_gate,
    twist_class,
)
from .report import analyze

CORPUS_PREFIX = "corpus:"


class UsageError(Exception):
    pass


def corpus_names() -> list[str]:
    files = resources.files("artin").joinpath("data").iterdir()
    return sorted(f.name.removesuffix(".graph") for f in files if f.name.endswith(".graph"))


def read_graph(path: str) -> PresentationGraph:
    if path.startswith(CORPUS_PREFIX):
        name = path[len(CORPUS_PREFIX):]
        ref = resources.files("artin").joinpath("data", f"{name}.graph")
        if not ref.is_file():
            raise UsageError(f"no bundled graph {name!r}; available: {', '.join(corpus_names())}")
        return parse_graph(ref.read_text(encoding="utf-8"))
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return load_graph(text)


def _word(m: int, text: str) -> dihedral.DihedralWord:
    return dihedral.DihedralWord.parse(m, text)


def cmd_analyze(args) -> tuple[dict, int]:
    return analyze(read_graph(args.path)), 0


def cmd_dihedral(args) -> tuple[dict, int]:
    m = args.m
    words = [_word(m, w) for w in args.words]
    need = {"equal": 2}.get(args.op, 1)
    if len(words) != need:
        raise UsageError(f"'{args.op}' takes {need} word(s)")
    w = words[0]
    if args.op == "nf":
        nf = dihedral.garside_nf(w)
        return {
            "m": m,
            "word": str(w),
            "nf": str(nf),
            "deltaPower": nf.delta_power,
            "factors": ["".join("ab"[x - 1] for x in dihedral.simple_letters(s)) for s in nf.factors],
        }, 0
    if args.op == "equal":
        eq = dihedral.words_equal(words[0], words[1])
        return {"m": m, "equal": eq}, 0 if eq else 1
    if args.op == "central":
        if dihedral.is_trivial(w):
            return {"m": m, "central": True, "centralPowerOrder": 1}, 0
        return {"m": m, "central": dihedral.is_central(w), "centralPowerOrder": dihedral.has_central_power(w)}, 0
    if args.op == "classify":
        G = PresentationGraph(("a", "b"), (("a", "b", m),))
        return classify_centraliser(G, DihedralElliptic(("a", "b"), w)).to_dict() | {"m": m}, 0
    if args.op == "conjgen":
        wit = dihedral.is_conjugate_to_generator_power(w)
        if wit is None:
            return {"m": m, "conjugate": False}, 1
        return {
            "m": m,
            "conjugate": True,
            "generator": wit.generator,
            "power": wit.power,
            "conjugator": str(wit.conjugator),
        }, 0
    raise UsageError(f"unknown dihedral operation {args.op!r}")


def cmd_iso(args) -> tuple[dict, int]:
    res = large_type_isomorphic(read_graph(args.path), read_graph(args.other))
    return res.to_dict(), 0 if res.isomorphic else 1


def cmd_twist_orbit(args) -> tuple[dict, int]:
    tc = twist_class(read_graph(args.path))
    return {
        "twistClassSize": len(tc),
        "members": [graph_to_dict(tc.representatives[k]) for k in tc.keys],
    }, 0


def cmd_rigid(args) -> tuple[dict, int]:
    return rigidity_report(read_graph(args.path)), 0


def cmd_gate(args) -> tuple[dict, int]:
    return theorem_a_gate(read_graph(args.path)).to_dict(), 0


def cmd_deligne(args) -> tuple[str, int]:
    B = build_ball(args.m, args.len)
    hl = fixed_slice(B, args.fix) if args.fix else None
    return export_complex(B, args.export_format, hl), 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artin", description="Invariants of Artin groups given by labelled presentation graphs.")
    p.add_argument("--format", dest="output_format", choices=("json", "text"), default="json")
    p.add_argument("--quiet", action="store_true", help="print nothing; report through the exit code only")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="full invariant report for a graph file")
    s.add_argument("path", help=f"graph file (DSL or JSON) or {CORPUS_PREFIX}<name>")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("dihedral", help="word problems in the dihedral Artin group A(m)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("op", choices=("nf", "equal", "central", "classify", "conjgen"))
    s.add_argument("words", nargs="+")
    s.set_defaults(func=cmd_dihedral)

    s = sub.add_parser("iso", help="isomorphism of two large-type Artin groups")
    s.add_argument("path")
    s.add_argument("other")
    s.set_defaults(func=cmd_iso)

    for name, func, text in (
        ("twist-orbit", cmd_twist_orbit, "twist-equivalence class"),
        ("rigid", cmd_rigid, "rigidity criterion"),
        ("gate", cmd_gate, "large-type gate verdict"),
    ):
        s = sub.add_parser(name, help=text)
        s.add_argument("path")
        s.set_defaults(func=func)

    s = sub.add_parser("deligne", help="truncated Deligne complex of A(m)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--len", type=int, required=True)
    s.add_argument("--fix", choices=("a", "b"))
    s.add_argument("--format", dest="export_format", choices=("dot", "json"), default="dot")
    s.set_defaults(func=cmd_deligne)
    return p


def _as_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(
            f"{pad}-\n{_as_text(x, indent + 1)}" if isinstance(x, (dict, list)) else f"{pad}- {json.dumps(x)}"
            for x in data
        )
    return f"{pad}{json.dumps(data)}"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.func(args)
    except (UsageError, GraphError, dihedral.DihedralError, DeligneError) as exc:
        print(f"artin: error: {exc}", file=sys.stderr)
        return 2
    if not args.quiet:
        if isinstance(result, str):
            sys.stdout.write(result)
        elif args.output_format == "text":
            print(_as_text(result))
        else:
            print(json.dumps(result, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
