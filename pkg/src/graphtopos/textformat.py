"""Reading and writing graph documents, automata files and DOT.

Graph documents hold one declaration per line; ``#`` starts a comment::

    graph example
    alphabet a b            # optional; restricts the labels
    node x
    node y
    arc f x y a             # the label column is optional
    sub S { x y }           # braces are separate tokens

Either every arc carries a label or none does.  Subobject blocks list node
and arc identifiers; they must already be closed under endpoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import GraphError
from .graph import Graph, Subobject
from .slice import Alphabet, Automaton, LabelledGraph


class ParseError(GraphError):
    def __init__(self, message: str, source: str = "<string>", line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass
class Document:
    graph: Graph
    name: str = "G"
    labels: Mapping[str, str] | None = None
    alphabet: Alphabet | None = None
    subobjects: dict[str, Subobject] = field(default_factory=dict)

    @property
    def labelled(self) -> LabelledGraph | None:
        if self.labels is None:
            return None
        return LabelledGraph(self.graph, self.labels, self.alphabet)

    @classmethod
    def of(cls, obj: Graph | LabelledGraph, name: str = "G", subobjects: Mapping[str, Subobject] | None = None):
        if isinstance(obj, LabelledGraph):
            return cls(obj.graph, name, dict(obj.labels), obj.alphabet, dict(subobjects or {}))
        return cls(obj, name, None, None, dict(subobjects or {}))

    def subobject(self, name: str) -> Subobject:
        try:
            return self.subobjects[name]
        except KeyError:
            known = ", ".join(sorted(self.subobjects)) or "none"
            raise GraphError(f"no subobject named {name!r} (declared: {known})") from None


def parse(text: str, source: str = "<string>") -> Document:
    name = None
    alphabet_syms: list[str] | None = None
    nodes: dict[str, int] = {}
    arcs: dict[str, tuple[str, str, str | None, int]] = {}
    subs: dict[str, tuple[list[str], int]] = {}

    def fail(msg: str, line: int | None) -> None:
        raise ParseError(msg, source, line)

    def declare(ident: str, lineno: int) -> None:
        if ident in nodes or ident in arcs:
            fail(f"duplicate identifier {ident!r}", lineno)

    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        kind, args = tokens[0], tokens[1:]
        if kind == "graph":
            if len(args) != 1:
                fail("expected: graph <name>", lineno)
            if name is not None:
                fail("only one graph per document", lineno)
            name = args[0]
        elif kind == "alphabet":
            if not args:
                fail("expected: alphabet <symbol> ...", lineno)
            if alphabet_syms is not None:
                fail("alphabet declared twice", lineno)
            alphabet_syms = args
        elif kind == "node":
            if len(args) != 1:
                fail("expected: node <id>", lineno)
            declare(args[0], lineno)
            nodes[args[0]] = lineno
        elif kind == "arc":
            if len(args) not in (3, 4):
                fail("expected: arc <id> <src> <tgt> [<label>]", lineno)
            declare(args[0], lineno)
            arcs[args[0]] = (args[1], args[2], args[3] if len(args) == 4 else None, lineno)
        elif kind == "sub":
            if len(args) < 3 or args[1] != "{" or args[-1] != "}":
                fail("expected: sub <name> { <id> ... }", lineno)
            if args[0] in subs:
                fail(f"duplicate subobject name {args[0]!r}", lineno)
            subs[args[0]] = (args[2:-1], lineno)
        else:
            fail(f"unknown declaration {kind!r}", lineno)

    for a, (s, t, _, lineno) in arcs.items():
        for end in (s, t):
            if end not in nodes:
                fail(f"arc {a!r} refers to undeclared node {end!r}", lineno)
    labelled = [a for a, spec in arcs.items() if spec[2] is not None]
    if labelled and len(labelled) != len(arcs):
        a = next(a for a, spec in arcs.items() if spec[2] is None)
        fail(f"arc {a!r} has no label but other arcs do", arcs[a][3])
    alphabet = None
    if alphabet_syms is not None:
        try:
            alphabet = Alphabet(alphabet_syms)
        except GraphError as exc:
            fail(str(exc), None)
        for a, (_, _, label, lineno) in arcs.items():
            if label is not None and label not in alphabet:
                fail(f"arc {a!r} has unknown label {label!r}", lineno)
    try:
        graph = Graph(nodes, arcs, {a: v[0] for a, v in arcs.items()}, {a: v[1] for a, v in arcs.items()})
    except GraphError as exc:
        fail(str(exc), None)
    labels = None
    if labelled:
        labels = {a: v[2] for a, v in arcs.items()}
        if alphabet is None:
            alphabet = Alphabet(labels.values())
    subobjects = {}
    for sname, (members, lineno) in subs.items():
        unknown = [m for m in members if m not in nodes and m not in arcs]
        if unknown:
            fail(f"subobject {sname!r} names undeclared identifier(s) {', '.join(unknown)}", lineno)
        try:
            subobjects[sname] = Subobject(graph, [m for m in members if m in nodes], [m for m in members if m in arcs])
        except GraphError as exc:
            fail(f"subobject {sname!r}: {exc}", lineno)
    return Document(graph, name or "G", labels, alphabet, subobjects)


def parse_file(path: str | Path) -> Document:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), str(path))


def subobject_line(name: str, sub: Subobject) -> str:
    return f"sub {name} {{ {' '.join(sub.sorted_members())} }}".replace("{  }", "{ }")


def emit(doc: Document, comments: Mapping[str, str] | None = None) -> str:
    """Serialise a document; ``comments`` attaches a trailing comment to identifiers."""
    comments = comments or {}

    def note(ident: str) -> str:
        return f"  # {comments[ident]}" if ident in comments else ""

    g = doc.graph
    lines = [f"graph {doc.name}"]
    if doc.alphabet is not None:
        lines.append("alphabet " + " ".join(doc.alphabet.symbols))
    lines.extend(f"node {x}{note(x)}" for x in g.nodes)
    for a in g.arcs:
        label = f" {doc.labels[a]}" if doc.labels is not None else ""
        lines.append(f"arc {a} {g.src[a]} {g.tgt[a]}{label}{note(a)}")
    lines.extend(subobject_line(n, s) for n, s in sorted(doc.subobjects.items()))
    return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(doc: Document, arc_names: Mapping[str, str] | None = None,
           node_names: Mapping[str, str] | None = None) -> str:
    g = doc.graph
    lines = [f"digraph {_quote(doc.name)} {{"]
    for x in g.nodes:
        label = f" [label={_quote(node_names[x])}]" if node_names and x in node_names else ""
        lines.append(f"  {_quote(x)}{label};")
    for a in g.arcs:
        text = arc_names[a] if arc_names and a in arc_names else a
        if doc.labels is not None:
            text = f"{text}: {doc.labels[a]}"
        lines.append(f"  {_quote(g.src[a])} -> {_quote(g.tgt[a])} [label={_quote(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# Automata are exchanged as JSON:
#   {"states": [...], "alphabet": [...], "delta": {symbol: {state: [targets]}}}
# Missing entries of delta mean the empty set.

def automaton_from_json(text: str, source: str = "<string>") -> Automaton:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", source, exc.lineno) from None
    if not isinstance(data, dict) or not {"states", "alphabet"} <= set(data):
        raise ParseError("expected an object with 'states', 'alphabet' and 'delta'", source)
    delta = {}
    for symbol, row in (data.get("delta") or {}).items():
        if not isinstance(row, dict):
            raise ParseError(f"delta[{symbol!r}] must map states to lists of states", source)
        for state, targets in row.items():
            delta[symbol, state] = list(targets)
    try:
        return Automaton(data["states"], data["alphabet"], delta)
    except GraphError as exc:
        raise ParseError(str(exc), source) from None


def automaton_to_json(aut: Automaton) -> str:
    delta = {}
    for (symbol, state), targets in sorted(aut.delta.items()):
        if targets:
            delta.setdefault(symbol, {})[state] = sorted(targets)
    payload = {"states": list(aut.states), "alphabet": list(aut.alphabet.symbols), "delta": delta}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
