"""Command-line front end.

Graph arguments are document files or one of the built-in names
``N``, ``A``, ``0``, ``1`` and ``omega``.  Exit codes: 0 success,
1 domain error, 2 usage error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .classifier import TruthValue, characteristic, omega
from .corpus import graphs_up_to_iso, labelled_graphs_up_to_iso
from .errors import SizeCapExceeded, ToposError
from .exponentials import exponential
from .graph import Subobject, arc_graph, count_subobjects, enumerate_subobjects, node_graph
from .homs import DEFAULT_HOM_CAP, count_homs
from .limits import coproduct, initial, product, terminal
from .slice import (automaton_to_lts, diagonal_fill_in, is_strong_mono, is_transition_system,
                    lts_to_automaton, ts_epis)
from .textformat import (Document, automaton_from_json, automaton_to_json, emit, parse_file,
                         subobject_line, to_dot)
from .topology import (closure, definitional_separation_oracle, describe, enumerate_topologies,
                       is_dense, is_separated, is_sheaf, minimum_dense, topology)

BUILTINS = {
    "N": node_graph,
    "A": arc_graph,
    "0": initial,
    "1": terminal,
    "omega": omega,
}

OMEGA_NAMES = {tv.value: tv.label for tv in TruthValue}


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {value!r}") from None


def load(ref: str) -> Document:
    path = Path(ref)
    if path.exists():
        return parse_file(path)
    if ref in BUILTINS:
        return Document(BUILTINS[ref](), ref)
    raise UsageError(f"no such file or built-in graph: {ref!r} (built-ins: {', '.join(BUILTINS)})")


def _render(doc: Document, args, names: dict[str, str] | None = None) -> str:
    if args.dot:
        return to_dot(doc, arc_names=names, node_names=names)
    return emit(doc, comments=names)


def _sub(doc: Document, args) -> Subobject:
    if not args.sub:
        raise UsageError("this command needs --sub NAME")
    return doc.subobject(args.sub)


def _probe_corpus(args):
    return graphs_up_to_iso(args.corpus_max_nodes, args.corpus_max_arcs)


def cmd_show_omega(args) -> str:
    return _render(Document(omega(), "omega"), args, OMEGA_NAMES)


def cmd_product(args) -> str:
    g, h = load(args.graphs[0]), load(args.graphs[1])
    return _render(Document(product(g.graph, h.graph).obj, f"{g.name}_x_{h.name}"), args)


def cmd_coproduct(args) -> str:
    g, h = load(args.graphs[0]), load(args.graphs[1])
    return _render(Document(coproduct(g.graph, h.graph).obj, f"{g.name}_plus_{h.name}"), args)


def cmd_exponential(args) -> str:
    g, h = load(args.graphs[0]), load(args.graphs[1])
    exp = exponential(g.graph, h.graph, args.cap_homs)
    return _render(Document(exp.underlying, f"{h.name}_pow_{g.name}"), args)


def cmd_classify(args) -> str:
    doc = load(args.graph)
    chi = characteristic(_sub(doc, args))
    rows = [f"node {x} {TruthValue(v).label}" for x, v in chi.node_map.items()]
    rows += [f"arc {a} {TruthValue(v).label}" for a, v in chi.arc_map.items()]
    return "\n".join(rows) + "\n"


def cmd_subobjects(args) -> str:
    doc = load(args.graph)
    subs = enumerate_subobjects(doc.graph)
    lines = [subobject_line(f"S{i}", s) for i, s in enumerate(subs)]
    lines.append(f"# {count_subobjects(doc.graph)} subobjects")
    return "\n".join(lines) + "\n"


def cmd_topologies(args) -> str:
    lines = []
    for j in enumerate_topologies():
        lines.append(f"{j.name}: {describe(j)}")
    return "\n".join(lines) + "\n"


def cmd_closure(args) -> str:
    doc = load(args.graph)
    j = topology(args.topology)
    return subobject_line(f"{args.sub}_closure", closure(_sub(doc, args), j)) + "\n"


def cmd_dense(args) -> str:
    doc = load(args.graph)
    j = topology(args.topology)
    if args.sub:
        return ("dense" if is_dense(doc.subobject(args.sub), j) else "not dense") + "\n"
    return subobject_line("minimum_dense", minimum_dense(doc.graph, j)) + "\n"


def _separation(args, sheaf: bool) -> str:
    doc = load(args.graph)
    j = topology(args.topology)
    verdict = is_sheaf(doc.graph, j) if sheaf else is_separated(doc.graph, j)
    word = "sheaf" if sheaf else "separated"
    lines = [word if verdict else f"not {word}"]
    if args.oracle:
        report = definitional_separation_oracle(doc.graph, j, _probe_corpus(args), args.cap_homs)
        lines.append(f"oracle: separated={report.separated} complete={report.complete} "
                     f"probes={report.probes} corpus={report.corpus_size} graphs "
                     f"(<= {args.corpus_max_nodes} nodes, <= {args.corpus_max_arcs} arcs)")
    return "\n".join(lines) + "\n"


def cmd_separated(args) -> str:
    return _separation(args, sheaf=False)


def cmd_sheaf(args) -> str:
    return _separation(args, sheaf=True)


def cmd_hom_count(args) -> str:
    g, h = load(args.graphs[0]), load(args.graphs[1])
    return f"{count_homs(g.graph, h.graph, cap=args.cap_homs)}\n"


def _labelled(doc: Document):
    lg = doc.labelled
    if lg is None:
        raise ToposError(f"{doc.name} has no arc labels")
    return lg


def cmd_lts_check(args) -> str:
    lg = _labelled(load(args.graph))
    if is_transition_system(lg):
        return "transition system\n"
    dup = sorted(t for t, n in lg.transitions().items() if n > 1)
    return "not a transition system: " + ", ".join(f"{x}-{a}->{y}" for x, a, y in dup) + "\n"


def cmd_strong_mono(args) -> str:
    doc = load(args.graph)
    lg = _labelled(doc)
    sub = _sub(doc, args)
    m = sub.inclusion()
    dom = lg.restrict(sub)
    strong = is_strong_mono(m, dom, lg)
    lines = ["strong" if strong else "not strong"]
    if args.oracle:
        corpus = labelled_graphs_up_to_iso(args.corpus_max_nodes, args.corpus_max_arcs, lg.alphabet.symbols)
        report = diagonal_fill_in(m, dom, lg, ts_epis(corpus, args.cap_homs), args.cap_homs)
        lines.append(f"oracle: strong={report.strong} squares={report.squares}")
    return "\n".join(lines) + "\n"


def cmd_aut2lts(args) -> str:
    path = Path(args.graph)
    if not path.exists():
        raise UsageError(f"no such file: {args.graph!r}")
    aut = automaton_from_json(path.read_text(encoding="utf-8"), str(path))
    return _render(Document.of(automaton_to_lts(aut), path.stem), args)


def cmd_lts2aut(args) -> str:
    return automaton_to_json(lts_to_automaton(_labelled(load(args.graph))))


COMMANDS = {
    "show-omega": (cmd_show_omega, 0, "print the subobject classifier"),
    "product": (cmd_product, 2, "product of two graphs"),
    "coproduct": (cmd_coproduct, 2, "disjoint union of two graphs"),
    "exponential": (cmd_exponential, 2, "exponential H^G of 'exponential G H'"),
    "classify": (cmd_classify, 1, "characteristic map of a named subobject"),
    "subobjects": (cmd_subobjects, 1, "list every subobject"),
    "topologies": (cmd_topologies, 0, "the topologies on the classifier"),
    "closure": (cmd_closure, 1, "closure of a named subobject"),
    "dense": (cmd_dense, 1, "density test, or the minimum dense subobject"),
    "separated": (cmd_separated, 1, "is the graph separated"),
    "sheaf": (cmd_sheaf, 1, "is the graph a sheaf"),
    "hom-count": (cmd_hom_count, 2, "number of morphisms G -> H"),
    "lts-check": (cmd_lts_check, 1, "is a labelled graph a transition system"),
    "strong-mono": (cmd_strong_mono, 1, "is a named labelled subobject a strong mono"),
    "aut2lts": (cmd_aut2lts, 1, "automaton JSON to labelled graph"),
    "lts2aut": (cmd_lts2aut, 1, "labelled graph to automaton JSON"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of the text format")
    common.add_argument("--topology", default="nn", choices=["nn", "closed", "id", "top"],
                        help="topology for closure/dense/separated/sheaf (default: nn)")
    common.add_argument("--sub", help="name of a subobject declared in the document")
    common.add_argument("--oracle", action="store_true",
                        help="also run the definitional check over a corpus of small graphs")
    common.add_argument("--cap-homs", type=int, default=None,
                        help=f"candidate bound for hom enumeration (env GRAPHTOPOS_CAP_HOMS, "
                             f"default {DEFAULT_HOM_CAP})")
    common.add_argument("--corpus-max-nodes", type=int, default=None,
                        help="oracle corpus size (env GRAPHTOPOS_CORPUS_MAX_NODES, default 2)")
    common.add_argument("--corpus-max-arcs", type=int, default=None,
                        help="oracle corpus size (env GRAPHTOPOS_CORPUS_MAX_ARCS, default 2)")

    parser = argparse.ArgumentParser(prog="graphtopos", description="Constructions in the topos of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, arity, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if arity == 1:
            p.add_argument("graph")
        elif arity == 2:
            p.add_argument("graphs", nargs=2, metavar="GRAPH")
    return parser


def run_command(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cap_homs is None:
            args.cap_homs = _env_int("GRAPHTOPOS_CAP_HOMS", DEFAULT_HOM_CAP)
        if args.corpus_max_nodes is None:
            args.corpus_max_nodes = _env_int("GRAPHTOPOS_CORPUS_MAX_NODES", 2)
        if args.corpus_max_arcs is None:
            args.corpus_max_arcs = _env_int("GRAPHTOPOS_CORPUS_MAX_ARCS", 2)
        out.write(COMMANDS[args.command][0](args))
    except UsageError as exc:
        err.write(f"graphtopos: error: {exc}\n")
        return 2
    except SizeCapExceeded as exc:
        err.write(f"graphtopos: size cap exceeded: {exc}\n")
        return 3
    except (ToposError, ValueError, LookupError) as exc:
        err.write(f"graphtopos: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
