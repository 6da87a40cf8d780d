"""Command-line front end.

Exit codes: 0 success, 1 certificate failed verification, 2 parse error,
3 precondition violated, 4 oracle budget refused.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import corpus, gadgets, oracles
from .bounds import lemma2_decompose, thm1_decompose
from .decomposition import PathDecomposition, validate
from .errors import BudgetError, ParseError, PreconditionError, ProofAssertionError, VerificationError
from .graph import Graph, vertex_connectivity
from .io import format_graph, parse_graph
from .packing import CyclePacking, bbr_bound, min_hitting_set, pipeline_params, thm2_pipeline
from .trees import MinorModel, extract_cbt_minor, rooted_pw_map

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3, 4

ORACLES = ("pathwidth", "treedepth", "circumference", "longest-path", "transversal",
           "packing", "hitting-set", "connectivity", "minor")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _read_graph(args) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _budget(args) -> oracles.OracleBudget | None:
    return None if args.budget is None else oracles.OracleBudget(time_limit=args.budget)


def _decomp_dot(d: PathDecomposition) -> str:
    lines = ["graph decomposition {", "  rankdir=LR;"]
    for i, bag in enumerate(d.bags):
        label = " ".join(map(str, sorted(bag)))
        lines.append(f'  b{i} [shape=box, label="{label}"];')
    for i in range(len(d.bags) - 1):
        lines.append(f"  b{i} -- b{i + 1};")
    lines.append("}")
    return "\n".join(lines)


def _emit_decomposition(args, g: Graph, d: PathDecomposition, meta: dict) -> None:
    report = validate(g, d)
    if not report.valid:
        raise VerificationError(report.summary())
    if args.out == "json":
        out = d.to_dict()
        out["meta"] = meta
        print(json.dumps(out))
    elif args.out == "dot":
        print(_decomp_dot(d))
    else:
        print(f"width {d.width}")
        for k, v in meta.items():
            print(f"{k} {v}")
        for bag in d.bags:
            print(" ".join(map(str, sorted(bag))))


def cmd_decompose_thm1(args) -> None:
    g = _read_graph(args)
    cert = thm1_decompose(g, args.t, _budget(args))
    _emit_decomposition(args, g, cert.decomposition,
                        {"t": cert.circumference, "bound": cert.bound, "dfsHeight": cert.dfs_height})


def cmd_compose_lemma2(args) -> None:
    g = _read_graph(args)
    res = lemma2_decompose(g, args.t, _budget(args))
    _emit_decomposition(args, g, res.decomposition, {"m": res.m, "n": res.n, "bound": res.bound})


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"--hitting-set expects comma-separated integers, got {text!r}") from None


def cmd_pipeline_thm2(args) -> None:
    g = _read_graph(args)
    if args.k is None or args.t is None:
        raise ParseError("pipeline-thm2 needs --k and --t")
    override = None if args.hitting_set is None else _parse_vertex_list(args.hitting_set)
    out = thm2_pipeline(g, args.k, args.t, override, _budget(args))
    out.verify(g)
    if args.out == "json":
        print(out.to_json())
    elif args.out == "dot" and out.decomposition is not None:
        print(_decomp_dot(out.decomposition))
    else:
        print(f"branch {out.branch}")
        print("H " + " ".join(map(str, out.hitting_set)))
        if out.params is not None:
            print(f"i {out.params.i} j {out.params.j} h {out.params.h}")
        if out.decomposition is not None:
            print(f"width {out.decomposition.width} budget {out.budget}")
        else:
            for c in out.packing.cycles:
                print(" ".join(map(str, c)))


def cmd_extract_cbt(args) -> None:
    t = _read_graph(args)
    pw = rooted_pw_map(t, args.root)
    q = pw[args.root] - 1 if args.q is None else args.q
    model = extract_cbt_minor(t, args.root, q, pw)
    issues = model.problems(t)
    if issues:
        raise VerificationError("; ".join(issues))
    if args.out == "json":
        print(model.to_json())
    else:
        print(f"R {pw[args.root]} height {q}")
        for x, s in sorted(model.branch_sets.items()):
            print(f"{x}: " + " ".join(map(str, sorted(s))))


def cmd_verify(args) -> None:
    g = _read_graph(args)
    given = [x for x in (args.decomposition, args.packing, args.minor) if x]
    if len(given) != 1:
        raise ParseError("verify needs exactly one of --decomposition, --packing, --minor")
    try:
        if args.decomposition:
            d = _read_json(args.decomposition)
            cert = PathDecomposition.from_dict(d.get("certificate", d))
        elif args.packing:
            d = _read_json(args.packing)
            cert = CyclePacking.from_dict(d.get("certificate", d))
        else:
            cert = MinorModel.from_dict(_read_json(args.minor))
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    try:
        if isinstance(cert, PathDecomposition):
            report = validate(g, cert)
            issues = [] if report.valid else report.summary().splitlines()[1:]
        else:
            issues = cert.problems(g)
    except ValueError as exc:
        issues = [str(exc)]
    if issues:
        raise VerificationError("; ".join(s.strip() for s in issues))
    print("valid")


def cmd_oracle(args) -> None:
    g = _read_graph(args)
    b = _budget(args)
    name = args.name
    witness = None
    if name == "pathwidth":
        res = oracles.solve_pathwidth(g, b)
        value, witness = res.width, list(res.ordering)
    elif name == "treedepth":
        res = oracles.solve_treedepth(g, b)
        value, witness = res.depth, list(res.forest.parent)
    elif name == "circumference":
        witness = oracles.longest_cycle(g, b)
        value = len(witness)
    elif name == "longest-path":
        witness = oracles.longest_path(g, b)
        value = max(len(witness) - 1, 0)
    elif name == "transversal":
        witness = list(oracles.minimum_transversal(g, b))
        value = len(witness)
    elif name in ("packing", "hitting-set"):
        if args.t is None:
            raise ParseError(f"oracle {name} needs --t")
        if name == "packing":
            p = oracles.max_long_cycle_packing(g, args.t, b)
            value, witness = len(p), [list(c) for c in p.cycles]
        else:
            hs = min_hitting_set(g, args.t, b)
            value, witness = len(hs), list(hs.vertices)
    elif name == "connectivity":
        value = vertex_connectivity(g)
    else:
        if args.pattern is None:
            raise ParseError("oracle minor needs --pattern NAME")
        model = oracles.minor_contains(g, gadgets.named(args.pattern), b)
        value = model is not None
        witness = None if model is None else model.to_dict()["branch_sets"]
    if args.out == "json":
        print(json.dumps({"oracle": name, "value": value, "witness": witness}))
    else:
        print(str(value).lower() if isinstance(value, bool) else value)


def cmd_gadget(args) -> None:
    if args.name == "random-2c":
        if len(args.params) != 1:
            raise ParseError("random-2c takes one parameter n")
        g = corpus.random_biconnected(args.params[0], random.Random(args.seed))
    else:
        try:
            g = gadgets.GadgetSpec(args.name, tuple(args.params)).build()
        except ValueError as exc:
            if isinstance(exc, PreconditionError):
                raise
            raise ParseError(str(exc)) from None
    print(format_graph(g, args.format if args.out != "dot" else "dot"), end="")


def cmd_params(args) -> None:
    if args.k is None or args.t is None:
        raise ParseError("params needs --k and --t")
    bound = bbr_bound(args.k, args.t, args.ep_bound, args.ep_constant)
    out = {"k": args.k, "t": args.t, "bbr_bound": bound}
    if args.k >= 2:
        h = args.h if args.h is not None else bound
        p = pipeline_params(args.k, args.t, h)
        out.update(h=p.h, i=p.i, j=p.j)
    if args.out == "json":
        print(json.dumps(out))
    else:
        for key, v in out.items():
            print(f"{key} {v}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist",
                        help="input graph format (gadget: output format)")
    common.add_argument("--out", choices=["json", "dot", "text"], default="json")
    common.add_argument("--k", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--hitting-set", dest="hitting_set")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=float, help="wall-clock limit in seconds for oracle searches")

    p = _Parser(prog="circpw", description="Certified pathwidth bounds from circumference "
                                           "and connectivity, with exact oracles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("input", help="graph file, or - for standard input")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("decompose-thm1", cmd_decompose_thm1, "DFS-tree decomposition of a 2-connected graph")
    graph_cmd("compose-lemma2", cmd_compose_lemma2, "block-cut composition")
    graph_cmd("pipeline-thm2", cmd_pipeline_thm2, "decomposition or k disjoint long cycles")
    sp = graph_cmd("extract-cbt", cmd_extract_cbt, "complete binary tree minor of a tree")
    sp.add_argument("--root", type=int, default=0)
    sp.add_argument("--q", type=int, help="target height (default R(root) - 1)")
    sp = graph_cmd("verify", cmd_verify, "check a certificate against a graph")
    sp.add_argument("--decomposition")
    sp.add_argument("--packing")
    sp.add_argument("--minor")

    sp = sub.add_parser("oracle", parents=[common], help="exact reference solvers")
    sp.add_argument("name", choices=ORACLES)
    sp.add_argument("input")
    sp.add_argument("--pattern", help="named pattern for the minor oracle")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gadget", parents=[common], help="generate an example graph")
    sp.add_argument("name", choices=list(gadgets.GADGET_NAMES) + ["random-2c"])
    sp.add_argument("params", nargs="*", type=int)
    sp.set_defaults(func=cmd_gadget)

    sp = sub.add_parser("params", parents=[common], help="hitting-set bound and i, j")
    sp.add_argument("--h", type=int, help="hitting set size (default: the bound itself)")
    sp.add_argument("--ep-bound", choices=["bbr", "fh"], default="bbr")
    sp.add_argument("--ep-constant", type=float)
    sp.set_defaults(func=cmd_params)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (VerificationError, ProofAssertionError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except BudgetError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PreconditionError, ValueError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
