"""Finite limits and colimits, computed separately on nodes and on arcs."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import GraphError, MorphismError
from .graph import (Graph, Morphism, Subobject, empty_graph, loop_graph, pair_id,
                    tag_id)


class Cone(NamedTuple):
    """A limiting object with its two projections."""
    obj: Graph
    first: Morphism
    second: Morphism


class Cocone(NamedTuple):
    """A colimiting object with its two injections."""
    obj: Graph
    first: Morphism
    second: Morphism


class Quotient(NamedTuple):
    obj: Graph
    quotient: Morphism


def initial() -> Graph:
    return empty_graph()


def terminal() -> Graph:
    return loop_graph()


def initial_map(g: Graph) -> Morphism:
    return Morphism(initial(), g, {}, {})


def terminal_map(g: Graph) -> Morphism:
    one = terminal()
    return Morphism(g, one, {x: "*" for x in g.nodes}, {a: "loop" for a in g.arcs})


@lru_cache(maxsize=1024)
def product(g: Graph, h: Graph) -> Cone:
    nodes = {pair_id(x, y): (x, y) for x in g.nodes for y in h.nodes}
    arcs = {pair_id(a, b): (a, b) for a in g.arcs for b in h.arcs}
    if len(nodes) != len(g.nodes) * len(h.nodes) or len(arcs) != len(g.arcs) * len(h.arcs):
        raise GraphError("product: pair identifiers collide; avoid ',', '<' and '>' in identifiers")
    obj = Graph(nodes, arcs,
                {p: pair_id(g.src[a], h.src[b]) for p, (a, b) in arcs.items()},
                {p: pair_id(g.tgt[a], h.tgt[b]) for p, (a, b) in arcs.items()})
    first = Morphism(obj, g, {p: x for p, (x, _) in nodes.items()}, {p: a for p, (a, _) in arcs.items()})
    second = Morphism(obj, h, {p: y for p, (_, y) in nodes.items()}, {p: b for p, (_, b) in arcs.items()})
    return Cone(obj, first, second)


def pairing(f: Morphism, g: Morphism, target: Cone | None = None) -> Morphism:
    """The map <f, g>: X -> F x G induced by f: X -> F and g: X -> G."""
    if f.dom != g.dom:
        raise MorphismError("pairing needs morphisms with a common domain")
    prod = target or product(f.cod, g.cod)
    return Morphism(f.dom, prod.obj,
                    {x: pair_id(f.node_map[x], g.node_map[x]) for x in f.dom.nodes},
                    {a: pair_id(f.arc_map[a], g.arc_map[a]) for a in f.dom.arcs})


def product_map(f: Morphism, g: Morphism) -> Morphism:
    """f x g: dom f x dom g -> cod f x cod g."""
    src = product(f.dom, g.dom)
    tgt = product(f.cod, g.cod)
    return pairing(src.first.then(f), src.second.then(g), tgt)


def coproduct(g: Graph, h: Graph) -> Cocone:
    nodes = {tag_id(1, x): x for x in g.nodes}
    nodes.update({tag_id(2, y): y for y in h.nodes})
    left_arcs = {tag_id(1, a): a for a in g.arcs}
    right_arcs = {tag_id(2, b): b for b in h.arcs}
    src = {p: tag_id(1, g.src[a]) for p, a in left_arcs.items()}
    src.update({p: tag_id(2, h.src[b]) for p, b in right_arcs.items()})
    tgt = {p: tag_id(1, g.tgt[a]) for p, a in left_arcs.items()}
    tgt.update({p: tag_id(2, h.tgt[b]) for p, b in right_arcs.items()})
    obj = Graph(nodes, list(left_arcs) + list(right_arcs), src, tgt)
    first = Morphism(g, obj, {x: tag_id(1, x) for x in g.nodes}, {a: tag_id(1, a) for a in g.arcs})
    second = Morphism(h, obj, {y: tag_id(2, y) for y in h.nodes}, {b: tag_id(2, b) for b in h.arcs})
    return Cocone(obj, first, second)


def copairing(f: Morphism, g: Morphism, source: Cocone | None = None) -> Morphism:
    """The map [f, g]: F + G -> X induced by f: F -> X and g: G -> X."""
    if f.cod != g.cod:
        raise MorphismError("copairing needs morphisms with a common codomain")
    co = source or coproduct(f.dom, g.dom)
    node_map = {co.first.node_map[x]: y for x, y in f.node_map.items()}
    node_map.update({co.second.node_map[x]: y for x, y in g.node_map.items()})
    arc_map = {co.first.arc_map[a]: b for a, b in f.arc_map.items()}
    arc_map.update({co.second.arc_map[a]: b for a, b in g.arc_map.items()})
    return Morphism(co.obj, f.cod, node_map, arc_map)


def _parallel(f: Morphism, g: Morphism) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise MorphismError("expected parallel morphisms")


def equalizer(f: Morphism, g: Morphism) -> Subobject:
    _parallel(f, g)
    return Subobject(f.dom,
                     [x for x in f.dom.nodes if f.node_map[x] == g.node_map[x]],
                     [a for a in f.dom.arcs if f.arc_map[a] == g.arc_map[a]])


class _Classes:
    """Union-find whose representative is the smallest identifier of each class."""

    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            lo, hi = min(rx, ry), max(rx, ry)
            self.parent[hi] = lo


def coequalizer(f: Morphism, g: Morphism) -> Quotient:
    """Quotient of the codomain by the equivalence generated by f(x) ~ g(x)."""
    _parallel(f, g)
    h = f.cod
    nodes = _Classes(h.nodes)
    arcs = _Classes(h.arcs)
    for x in f.dom.nodes:
        nodes.union(f.node_map[x], g.node_map[x])
    for a in f.dom.arcs:
        arcs.union(f.arc_map[a], g.arc_map[a])
    node_cls = {x: nodes.find(x) for x in h.nodes}
    arc_cls = {a: arcs.find(a) for a in h.arcs}
    reps = sorted(set(arc_cls.values()))
    obj = Graph(sorted(set(node_cls.values())), reps,
                {r: node_cls[h.src[r]] for r in reps}, {r: node_cls[h.tgt[r]] for r in reps})
    return Quotient(obj, Morphism(h, obj, node_cls, arc_cls))


def pullback(f: Morphism, g: Morphism) -> Cone:
    """Pullback of f: X -> Z and g: Y -> Z, as an equalizer inside X x Y."""
    if f.cod != g.cod:
        raise MorphismError("pullback needs morphisms with a common codomain")
    prod = product(f.dom, g.dom)
    sub = equalizer(prod.first.then(f), prod.second.then(g))
    inc = sub.inclusion()
    return Cone(sub.as_graph(), inc.then(prod.first), inc.then(prod.second))


def pushout(f: Morphism, g: Morphism) -> Cocone:
    """Pushout of f: Z -> X and g: Z -> Y, as a coequalizer of X + Y."""
    if f.dom != g.dom:
        raise MorphismError("pushout needs morphisms with a common domain")
    co = coproduct(f.cod, g.cod)
    q = coequalizer(f.then(co.first), g.then(co.second))
    return Cocone(q.obj, co.first.then(q.quotient), co.second.then(q.quotient))
