"""Command-line interface: ``afk <command> [options]`` or ``python3 -m afk``.

Exit codes: 0 success, 1 usage or parse error, 2 input outside the scope of the
decomposition (Lambda a multiple of delta, or not dominant), 3 a failed check.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import natmod as nm
from .criteria import evaluate_natural
from .crystal import crystal_graph
from .filtration import NonDominantError, NotCoveredError, chain, chain_summands, decompose_json, decompose_quotient
from .rootdata import FIXTURE_TYPES, AffineWeight, FiniteWeight, RootDataError, embed, make_cartan
from .selftest import DEFAULT_SAMPLES, DEFAULT_SEED, corrupt, parse_corruption, run_selftest

EXIT_OK, EXIT_USAGE, EXIT_SCOPE, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for out-of-scope inputs here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    family: str | None
    rank: int | None
    weight: AffineWeight | None
    n: int
    window: tuple[int, int]
    fmt: str
    samples: int
    seed: int


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def build_config(args: argparse.Namespace) -> RunConfig:
    seed = args.seed
    env = os.environ.get("AFK_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"AFK_SEED must be an integer, got {env!r}") from None
    lo_hi = _int_list(args.window)
    if len(lo_hi) != 2 or lo_hi[1] - lo_hi[0] + 1 < 3:
        raise UsageError("--window needs lo,hi spanning at least 3 exponents")
    weight = None
    if args.weight is not None and args.varpi is not None:
        raise UsageError("give either --weight or --varpi, not both")
    if args.family is not None:
        try:
            cartan = make_cartan(args.family, args.rank)
        except (RootDataError, ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        if args.weight is not None:
            coords = _int_list(args.weight)
            if len(coords) != cartan.rank + 1:
                raise UsageError(f"--weight needs {cartan.rank + 1} coordinates n_0..n_{cartan.rank}")
            weight = AffineWeight(tuple(coords), args.delta)
        elif args.varpi is not None:
            coords = _int_list(args.varpi)
            if len(coords) != cartan.rank:
                raise UsageError(f"--varpi needs {cartan.rank} coordinates m_1..m_{cartan.rank}")
            weight = embed(cartan, FiniteWeight(tuple(coords))).shift_delta(args.delta)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    return RunConfig(args.family, args.rank, weight, args.n, (lo_hi[0], lo_hi[1]), args.format, args.samples, seed)


def _module(cfg: RunConfig) -> nm.NatModule:
    if cfg.family is None or cfg.rank is None:
        raise UsageError("--family and --rank are required")
    return nm.build_natural(make_cartan(cfg.family, cfg.rank))


def _weight(cfg: RunConfig) -> AffineWeight:
    if cfg.weight is None:
        raise UsageError("--weight (or --varpi) is required")
    return cfg.weight


def emit(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_decompose(cfg: RunConfig) -> tuple[int, str]:
    m, lam = _module(cfg), _weight(cfg)
    if cfg.fmt == "json":
        return EXIT_OK, emit(decompose_json(m, lam, cfg.n))
    rows = [[str(s.mu), str(s.n_mu), f"X({s.highest_weight})", str(s.multiplicity)]
            for s in decompose_quotient(m, lam, cfg.n)]
    head = f"Lambda = {lam}, n = {cfg.n}, {len(rows)} summand(s)\n"
    return EXIT_OK, head + _table(["mu", "n(mu)", "summand", "mult"], rows)


def cmd_chain(cfg: RunConfig, literal: bool = False) -> tuple[int, str]:
    m, lam = _module(cfg), _weight(cfg)
    ch = chain(m, lam, cfg.n, literal=literal)
    if cfg.fmt == "json":
        return EXIT_OK, emit({
            "lambda": lam.to_json(),
            "n": cfg.n,
            "chain": [s.to_json() for s in ch.steps],
            "summands": [s.to_json() for s in chain_summands(ch)],
        })
    rows = [[str(s.j), f"w_{s.generator[0]} t^{s.generator[1]}", " or ".join(s.collapse_labels()),
             "strict" if s.is_strict else "collapsed"] for s in ch.steps]
    return EXIT_OK, _table(["j", "generator", "collapses if", "status"], rows)


def cmd_criteria(cfg: RunConfig) -> tuple[int, str]:
    m, lam = _module(cfg), _weight(cfg)
    if not all(x >= 0 for x in lam.omega):
        raise NonDominantError(f"Lambda = {lam} is not dominant")
    out = evaluate_natural(m, lam)
    if cfg.fmt == "json":
        return EXIT_OK, emit(out)
    return EXIT_OK, f"thmB_trivial: {out['thmB_trivial']}\nthmC_reducible: {out['thmC_reducible']}\nverdict: {out['verdict']}\n"


def cmd_verify_relations(cfg: RunConfig, corruption=None) -> tuple[int, str]:
    m = _module(cfg)
    if corruption:
        m = corrupt(m, *corruption)
    rep = nm.verify_relations(m, cfg.window)
    code = EXIT_OK if rep.ok else EXIT_CHECK
    if cfg.fmt == "json":
        return code, emit(rep.to_json())
    tail = f"{len(rep.checks) - len(rep.failures)} passed, {len(rep.failures)} failed\n"
    return code, "\n".join(rep.lines()) + "\n" + tail


def cmd_crystal_graph(cfg: RunConfig) -> tuple[int, str]:
    g = crystal_graph(_module(cfg))
    if cfg.fmt == "json":
        return EXIT_OK, emit({"vertices": list(g.vertices),
                              "edges": [{"from": s, "to": t, "label": i} for s, t, i in g.edges]})
    return EXIT_OK, g.to_dot()


def cmd_selftest(cfg: RunConfig, corruption=None) -> tuple[int, str]:
    types = FIXTURE_TYPES
    if cfg.family is not None:
        types = ((cfg.family, cfg.rank),)
    ok, lines = run_selftest(cfg.seed, cfg.samples, cfg.window, types, corruption)
    if cfg.fmt == "json":
        body = emit({"ok": ok, "report": lines})
    else:
        body = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_CHECK), body


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", choices=["A", "B", "C", "D"])
    common.add_argument("--rank", type=int)
    common.add_argument("--weight", help="omega coordinates n_0,...,n_l")
    common.add_argument("--varpi", help="finite weight m_1,...,m_l (embedded)")
    common.add_argument("--delta", type=int, default=0)
    common.add_argument("--n", type=int, default=0)
    common.add_argument("--window", default="-3,3", help="t-exponent range lo,hi; write --window=-3,3 when lo is negative")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = _Parser(prog="afk", description="Natural loop modules over quantum affine algebras of classical type.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("decompose", parents=[common], help="summands of a filtration quotient")
    c = sub.add_parser("chain", parents=[common], help="chain of submodules with collapse conditions")
    c.add_argument("--literal", action="store_true", help="use the unmodified collapse table")
    sub.add_parser("criteria", parents=[common], help="irreducibility / reducibility predicates")
    v = sub.add_parser("verify-relations", parents=[common], help="check the defining relations on L(V)")
    v.add_argument("--corrupt", help="zero one generator first, e.g. F1 (negative control)")
    sub.add_parser("crystal-graph", parents=[common], help="crystal graph of V in DOT form")
    s = sub.add_parser("selftest", parents=[common], help="run every invariant check")
    s.add_argument("--corrupt", help="zero one generator in every module, e.g. F1 (negative control)")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        corruption = parse_corruption(args.corrupt) if getattr(args, "corrupt", None) else None
        if args.command == "decompose":
            code, out = cmd_decompose(cfg)
        elif args.command == "chain":
            code, out = cmd_chain(cfg, args.literal)
        elif args.command == "criteria":
            code, out = cmd_criteria(cfg)
        elif args.command == "verify-relations":
            code, out = cmd_verify_relations(cfg, corruption)
        elif args.command == "crystal-graph":
            code, out = cmd_crystal_graph(cfg)
        else:
            code, out = cmd_selftest(cfg, corruption)
    except UsageError as exc:
        print(f"afk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if isinstance(exc, NotCoveredError):
            print("afk: Λ is a multiple of δ; not covered by the decomposition", file=sys.stderr)
            return EXIT_SCOPE
        if isinstance(exc, NonDominantError):
            print(f"afk: {exc}", file=sys.stderr)
            return EXIT_SCOPE
        print(f"afk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
