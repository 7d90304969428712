"""Cartesian closed structure.

The nodes of H^G are the functions G(N) -> H(N); its arcs are the
morphisms A x G -> H, where A x G is G with its node set doubled and every
arc moved to run from the first copy to the second.  An arc's source and
target are read off the two copies.

Identifiers: a function is written ``{x:h,y:k}`` (G's nodes in sorted
order), and an arc ``({..};{..};{a:b,..})`` lists its source function,
target function and arc assignment.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .errors import GraphError, MorphismError, SizeCapExceeded
from .graph import Graph, Morphism, compose, identity, pair_id, validate_morphism
from .homs import DEFAULT_HOM_CAP, iter_homs
from .limits import Cone, product, product_map


def first_copy(x: str) -> str:
    return pair_id("s", x)


def second_copy(x: str) -> str:
    return pair_id("t", x)


class TwistedProduct(NamedTuple):
    graph: Graph
    first: Mapping[str, str]
    second: Mapping[str, str]


def twisted_product_with_A(g: Graph) -> TwistedProduct:
    """A x G built directly: two copies of G(N), each arc from copy one to copy two.

    Copies are named like the nodes of ``product(arc_graph(), g)``; arcs keep
    their names from G.
    """
    first = {x: first_copy(x) for x in g.nodes}
    second = {x: second_copy(x) for x in g.nodes}
    graph = Graph(list(first.values()) + list(second.values()), g.arcs,
                  {a: first[g.src[a]] for a in g.arcs}, {a: second[g.tgt[a]] for a in g.arcs})
    return TwistedProduct(graph, MappingProxyType(first), MappingProxyType(second))


def function_id(assignment: Mapping[str, str]) -> str:
    return "{" + ",".join(f"{x}:{assignment[x]}" for x in sorted(assignment)) + "}"


def _arc_id(src_fn: Mapping[str, str], tgt_fn: Mapping[str, str], arcs: Mapping[str, str]) -> str:
    return f"({function_id(src_fn)};{function_id(tgt_fn)};{function_id(arcs)})"


class ExponentialGraph(NamedTuple):
    """H^G together with what each node and arc stands for."""
    underlying: Graph
    base: Graph
    target: Graph
    node_meaning: Mapping[str, Mapping[str, str]]
    arc_meaning: Mapping[str, Morphism]

    def node_for(self, function: Mapping[str, str]) -> str:
        return function_id(function)

    def arc_for(self, phi: Morphism) -> str:
        """The arc of H^G standing for ``phi``: A x G -> H (on the twisted product)."""
        g = self.base
        return _arc_id({x: phi.node_map[first_copy(x)] for x in g.nodes},
                       {x: phi.node_map[second_copy(x)] for x in g.nodes},
                       dict(phi.arc_map))


@lru_cache(maxsize=256)
def exponential(g: Graph, h: Graph, cap: int | None = DEFAULT_HOM_CAP) -> ExponentialGraph:
    """The exponential H^G."""
    n_functions = len(h.nodes) ** len(g.nodes)
    if cap is not None and n_functions > cap:
        raise SizeCapExceeded("nodes of H^G", n_functions, cap)
    node_meaning = {}
    for images in cartesian(h.nodes, repeat=len(g.nodes)):
        fn = MappingProxyType(dict(zip(g.nodes, images)))
        node_meaning[function_id(fn)] = fn
    if len(node_meaning) != n_functions:
        raise GraphError("function identifiers collide; avoid ',', ':' and braces in identifiers")
    twisted = twisted_product_with_A(g).graph
    arc_meaning = {}
    src = {}
    tgt = {}
    for phi in iter_homs(twisted, h, cap=cap):
        src_fn = {x: phi.node_map[first_copy(x)] for x in g.nodes}
        tgt_fn = {x: phi.node_map[second_copy(x)] for x in g.nodes}
        a = _arc_id(src_fn, tgt_fn, phi.arc_map)
        arc_meaning[a] = phi
        src[a] = function_id(src_fn)
        tgt[a] = function_id(tgt_fn)
    underlying = Graph(node_meaning, arc_meaning, src, tgt)
    return ExponentialGraph(underlying, g, h, MappingProxyType(node_meaning), MappingProxyType(arc_meaning))


def evaluation(g: Graph, h: Graph, cap: int | None = DEFAULT_HOM_CAP) -> Morphism:
    """eval: H^G x G -> H, (f, x) -> f(x) and (phi, a) -> phi(a)."""
    exp = exponential(g, h, cap)
    prod = product(exp.underlying, g)
    node_map = {pair_id(f, x): exp.node_meaning[f][x] for f in exp.underlying.nodes for x in g.nodes}
    arc_map = {pair_id(p, a): exp.arc_meaning[p].arc_map[a] for p in exp.underlying.arcs for a in g.arcs}
    return Morphism(prod.obj, h, node_map, arc_map)


def _factors(f: Morphism, left: Graph, right: Graph) -> Cone:
    prod = product(left, right)
    if f.dom != prod.obj:
        raise MorphismError("domain is not the product of the given factors")
    return prod


def curry(f: Morphism, left: Graph, right: Graph, cap: int | None = DEFAULT_HOM_CAP) -> Morphism:
    """Transpose f: F x G -> H into F -> H^G (``left`` = F, ``right`` = G)."""
    _factors(f, left, right)
    if not validate_morphism(f):
        raise MorphismError("curry needs a valid morphism")
    exp = exponential(right, f.cod, cap)
    node_map = {x: function_id({y: f.node_map[pair_id(x, y)] for y in right.nodes}) for x in left.nodes}
    arc_map = {}
    for e in left.arcs:
        arc_map[e] = _arc_id({y: f.node_map[pair_id(left.src[e], y)] for y in right.nodes},
                             {y: f.node_map[pair_id(left.tgt[e], y)] for y in right.nodes},
                             {a: f.arc_map[pair_id(e, a)] for a in right.arcs})
    return Morphism(left, exp.underlying, node_map, arc_map)


def uncurry(f: Morphism, right: Graph, target: Graph, cap: int | None = DEFAULT_HOM_CAP) -> Morphism:
    """Transpose f: F -> H^G back into F x G -> H (``right`` = G, ``target`` = H)."""
    exp = exponential(right, target, cap)
    if f.cod != exp.underlying:
        raise MorphismError("codomain is not the exponential of the given graphs")
    left = f.dom
    prod = product(left, right)
    node_map = {pair_id(x, y): exp.node_meaning[f.node_map[x]][y] for x in left.nodes for y in right.nodes}
    arc_map = {pair_id(e, a): exp.arc_meaning[f.arc_map[e]].arc_map[a] for e in left.arcs for a in right.arcs}
    return Morphism(prod.obj, target, node_map, arc_map)


def transpose_check(f: Morphism, left: Graph, right: Graph, cap: int | None = DEFAULT_HOM_CAP) -> bool:
    """eval ∘ (curry(f) x id_G) == f."""
    g = curry(f, left, right, cap)
    return compose(product_map(g, identity(right)), evaluation(right, f.cod, cap)) == f
