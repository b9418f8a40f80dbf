"""Command-line front end.

Exit codes: 0 yes/success, 1 no (not equivalent, invalid, counterexample),
2 input error, 3 vertex cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import ComponentCache, PairCache
from .congruence import decide, enumerate_classes, verify_quotient_inclusion
from .core import (QuasiCrystal, ext_to_json, load_json, standard_crystal_A, standard_crystal_C,
                   validate_seminormal)
from .errors import CapExceeded, QCKError
from .graphs import DEFAULT_CAP, ComponentGraph, component, export_dot, to_json_dict
from .products import Mode
from .transform import transform_graph
from .words import format_word, parse_word

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(QCKError):
    pass


@dataclass
class RunConfig:
    base: str
    mode: Mode = Mode.TENSOR
    max_len: int = 3
    cache_dir: Path | None = None
    output: str = "text"
    vertex_cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.max_len < 0:
            raise UsageError("--max-len must be non-negative")
        if self.vertex_cap < 1:
            raise UsageError("--vertex-cap must be positive")


def load_base(spec: str, validate: bool = True) -> QuasiCrystal:
    kind, _, arg = spec.partition(":")
    if kind in ("A", "C"):
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"bad base {spec!r}; expected A:n, C:n or file:path") from None
        return standard_crystal_A(n) if kind == "A" else standard_crystal_C(n)
    if kind == "file":
        with open(arg, encoding="utf-8") as fh:
            return load_json(json.load(fh), validate=validate)
    raise UsageError(f"bad base {spec!r}; expected A:n, C:n or file:path")


def _word(base, text):
    return parse_word(base, text)


def graph_text(g: ComponentGraph, base: QuasiCrystal) -> str:
    fw = lambda w: format_word(base, w) or '""'  # noqa: E731
    out = [f"mode {g.mode.value}: {len(g)} vertices, {len(g.edges)} edges, {len(g.loops)} loops"]
    for v in g.vertices:
        stats = " ".join(f"{i}:({ext_to_json(a)},{ext_to_json(b)})" for i, (a, b) in zip(g.indices, g.stats[v]))
        out.append(f"vertex {fw(v)} wt={g.wt[v]} {stats}")
    for a, b, i in g.sorted_edges():
        out.append(f"edge {fw(a)} -{i}-> {fw(b)}")
    for a, i in g.sorted_loops():
        out.append(f"loop {fw(a)} {i}")
    return "\n".join(out) + "\n"


def render_graph(g: ComponentGraph, base: QuasiCrystal, output: str) -> str:
    if output == "dot":
        return export_dot(g, base)
    if output == "json":
        return json.dumps(to_json_dict(g), ensure_ascii=False, indent=1) + "\n"
    return graph_text(g, base)


def _cache_root(args) -> Path | None:
    if args.no_cache:
        return None
    if os.environ.get("QCK_CACHE_DIR"):
        return Path(os.environ["QCK_CACHE_DIR"])
    if args.cache_dir:
        return Path(args.cache_dir)
    return Path.home() / ".cache" / "qck"


def cmd_validate(cfg: RunConfig, args) -> int:
    q = load_base(cfg.base, validate=False)
    report = validate_seminormal(q)
    if cfg.output == "json":
        print(json.dumps({"valid": report.ok, "violations": [
            {"element": q.name(v.element), "index": v.index, "condition": v.condition, "message": v.message}
            for v in report]}, ensure_ascii=False))
    else:
        print("valid" if report.ok else "invalid")
        for line in report.lines(q):
            print(line)
    return EXIT_YES if report.ok else EXIT_NO


def _component(cfg, base, w):
    cache = ComponentCache(cfg.cache_dir) if cfg.cache_dir else None
    g = cache.load(base, cfg.mode, w) if cache else None
    if g is None:
        g = component(cfg.mode, base, w, cfg.vertex_cap)
        if cache:
            cache.store(base, cfg.mode, g)
    return g


def cmd_component(cfg: RunConfig, args) -> int:
    base = load_base(cfg.base)
    g = _component(cfg, base, _word(base, args.word))
    sys.stdout.write(render_graph(g, base, cfg.output))
    return EXIT_YES


def cmd_decide(cfg: RunConfig, args) -> int:
    base = load_base(cfg.base)
    u, v = _word(base, args.u), _word(base, args.v)
    cache = PairCache(cfg.cache_dir) if cfg.cache_dir else None
    same = decide(cfg.mode, base, u, v, cache=cache, cap=cfg.vertex_cap)
    print("equivalent" if same else "not equivalent")
    return EXIT_YES if same else EXIT_NO


def cmd_enumerate(cfg: RunConfig, args) -> int:
    base = load_base(cfg.base)
    classes = enumerate_classes(base, cfg.mode, cfg.max_len, cfg.vertex_cap)
    if cfg.output == "json":
        print(json.dumps([{"representative": format_word(base, c.representative),
                           "members": [format_word(base, w) for w in c.members],
                           "mode": c.mode.value} for c in classes], ensure_ascii=False, indent=1))
    else:
        for c in classes:
            print(f"{format_word(base, c.representative)}\t{','.join(format_word(base, w) for w in c.members)}")
    return EXIT_YES


def cmd_transform(cfg: RunConfig, args) -> int:
    base = load_base(cfg.base)
    g = component(Mode.TENSOR, base, _word(base, args.word), cfg.vertex_cap)
    sys.stdout.write(render_graph(transform_graph(g, base), base, cfg.output))
    return EXIT_YES


def cmd_quotient(cfg: RunConfig, args) -> int:
    base = load_base(cfg.base)
    result = verify_quotient_inclusion(base, cfg.max_len, collect_all=args.all, cap=cfg.vertex_cap)
    if result.holds:
        print("HOLDS")
        return EXIT_YES
    for u, v in result.counterexamples:
        print(f"COUNTEREXAMPLE {json.dumps(format_word(base, u))} {json.dumps(format_word(base, v))}")
    return EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", required=True, help="A:n, C:n or file:path")
    common.add_argument("--mode", choices=[m.value for m in Mode], default="tensor")
    common.add_argument("--max-len", type=int, default=3)
    common.add_argument("--cache-dir", help="overridden by $QCK_CACHE_DIR")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--output", choices=["text", "json", "dot"], default="text")
    common.add_argument("--vertex-cap", type=int, default=DEFAULT_CAP)

    parser = argparse.ArgumentParser(prog="qck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the quasi-crystal axioms").set_defaults(run=cmd_validate)
    p = sub.add_parser("component", parents=[common], help="connected component of a word")
    p.add_argument("--word", required=True, help='signed letters, e.g. "1 2 -2"; "" is the empty word')
    p.set_defaults(run=cmd_component)
    p = sub.add_parser("decide", parents=[common], help="decide u ~ v (exit 0 yes, 1 no)")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(run=cmd_decide)
    sub.add_parser("enumerate", parents=[common], help="congruence classes up to --max-len").set_defaults(
        run=cmd_enumerate)
    p = sub.add_parser("transform", parents=[common], help="quasi-tensor graph from a tensor component")
    p.add_argument("--word", required=True)
    p.set_defaults(run=cmd_transform)
    p = sub.add_parser("quotient", parents=[common], help="check plactic-related pairs are hypoplactic-related")
    p.add_argument("--all", action="store_true", help="list every counterexample, not just the first")
    p.set_defaults(run=cmd_quotient)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.base, Mode(args.mode), args.max_len, _cache_root(args), args.output, args.vertex_cap)
        return args.run(cfg, args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (QCKError, OSError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
