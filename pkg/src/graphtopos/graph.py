"""Finite directed multigraphs, graph morphisms and canonical subobjects.

A graph is a presheaf on the category with two parallel arrows: a set of
nodes, a set of arcs and two functions giving every arc a source and a
target.  Parallel arcs and self-loops are allowed.

Identifiers are opaque strings.  Constructions that build new graphs out
of old ones derive identifiers deterministically:

* pairs (products, pullbacks) are written ``<x,y>``;
* injections into a sum are written ``1:x`` and ``2:x``.

Every container is stored sorted, so equal inputs always give identical
outputs regardless of hash seeds.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import chain
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import GraphError, MorphismError


def pair_id(x: str, y: str) -> str:
    return f"<{x},{y}>"


def tag_id(i: int, x: str) -> str:
    return f"{i}:{x}"


class Graph:
    """An immutable finite graph.

    ``nodes`` and ``arcs`` are sorted tuples; ``src`` and ``tgt`` are
    read-only mappings from arcs to nodes.
    """

    __slots__ = ("nodes", "arcs", "src", "tgt", "_node_set", "_arc_set", "_hash")

    def __init__(self, nodes: Iterable[str], arcs: Iterable[str],
                 src: Mapping[str, str], tgt: Mapping[str, str]):
        nodes = list(nodes)
        arcs = list(arcs)
        node_set = frozenset(nodes)
        arc_set = frozenset(arcs)
        if len(node_set) != len(nodes):
            dup = [x for x, n in Counter(nodes).items() if n > 1]
            raise GraphError(f"duplicate node identifier(s): {', '.join(sorted(dup))}")
        if len(arc_set) != len(arcs):
            dup = [x for x, n in Counter(arcs).items() if n > 1]
            raise GraphError(f"duplicate arc identifier(s): {', '.join(sorted(dup))}")
        for x in chain(nodes, arcs):
            if not isinstance(x, str):
                raise GraphError(f"identifier {x!r} is not a string")
        clash = node_set & arc_set
        if clash:
            raise GraphError(f"identifier(s) used both as node and arc: {', '.join(sorted(clash))}")
        for name, ends in (("source", src), ("target", tgt)):
            extra = set(ends) - arc_set
            if extra:
                raise GraphError(f"{name} given for unknown arc(s): {', '.join(sorted(extra))}")
            for a in arcs:
                if a not in ends:
                    raise GraphError(f"arc {a!r} has no {name}")
                if ends[a] not in node_set:
                    raise GraphError(f"arc {a!r} has dangling {name} {ends[a]!r}")
        self.nodes = tuple(sorted(nodes))
        self.arcs = tuple(sorted(arcs))
        self.src = MappingProxyType({a: src[a] for a in self.arcs})
        self.tgt = MappingProxyType({a: tgt[a] for a in self.arcs})
        self._node_set = node_set
        self._arc_set = arc_set
        self._hash = hash((self.nodes, self.arcs, tuple(self.src.values()), tuple(self.tgt.values())))

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._hash == other._hash and self.nodes == other.nodes and self.arcs == other.arcs
                and self.src == other.src and self.tgt == other.tgt)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        arcs = ", ".join(f"{a}:{self.src[a]}->{self.tgt[a]}" for a in self.arcs)
        return f"Graph(nodes=[{', '.join(self.nodes)}], arcs=[{arcs}])"

    @property
    def node_set(self) -> frozenset:
        return self._node_set

    @property
    def arc_set(self) -> frozenset:
        return self._arc_set

    def has_node(self, x: str) -> bool:
        return x in self._node_set

    def has_arc(self, a: str) -> bool:
        return a in self._arc_set

    def ends(self, a: str) -> tuple[str, str]:
        return self.src[a], self.tgt[a]

    def arcs_between(self, x: str, y: str) -> list[str]:
        return [a for a in self.arcs if self.src[a] == x and self.tgt[a] == y]

    def arc_multiplicity(self) -> Counter:
        """Number of arcs for every ordered (source, target) pair that has one."""
        return Counter((self.src[a], self.tgt[a]) for a in self.arcs)


def make_graph(nodes: Iterable[str], arcs: Iterable[str],
               src: Mapping[str, str], tgt: Mapping[str, str]) -> Graph:
    return Graph(nodes, arcs, src, tgt)


def graph_from_arcs(nodes: Iterable[str], arcs: Mapping[str, tuple[str, str]]) -> Graph:
    """Build a graph from ``{arc: (source, target)}``."""
    return Graph(nodes, arcs, {a: e[0] for a, e in arcs.items()}, {a: e[1] for a, e in arcs.items()})


# The two representables, the initial and the terminal graph.

def node_graph() -> Graph:
    """The representable N: a single node."""
    return Graph(["N"], [], {}, {})


def arc_graph() -> Graph:
    """The representable A: nodes ``s``, ``t`` and one arc ``A`` from s to t."""
    return Graph(["s", "t"], ["A"], {"A": "s"}, {"A": "t"})


def empty_graph() -> Graph:
    return Graph([], [], {}, {})


def loop_graph() -> Graph:
    """One node ``*`` carrying one self-loop ``loop``."""
    return Graph(["*"], ["loop"], {"loop": "*"}, {"loop": "*"})


class Morphism:
    """A pair of maps (nodes, arcs) between two graphs.

    Construction only checks that both maps are total and land in the
    codomain; whether sources and targets are preserved is reported by
    :func:`validate_morphism`.
    """

    __slots__ = ("dom", "cod", "node_map", "arc_map", "_hash")

    def __init__(self, dom: Graph, cod: Graph, node_map: Mapping[str, str], arc_map: Mapping[str, str]):
        if set(node_map) != dom.node_set:
            raise MorphismError("node map must be defined exactly on the domain's nodes")
        if set(arc_map) != dom.arc_set:
            raise MorphismError("arc map must be defined exactly on the domain's arcs")
        bad = [x for x in dom.nodes if not cod.has_node(node_map[x])]
        if bad:
            raise MorphismError(f"node(s) {', '.join(bad)} mapped outside the codomain")
        bad = [a for a in dom.arcs if not cod.has_arc(arc_map[a])]
        if bad:
            raise MorphismError(f"arc(s) {', '.join(bad)} mapped outside the codomain")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "node_map", MappingProxyType({x: node_map[x] for x in dom.nodes}))
        object.__setattr__(self, "arc_map", MappingProxyType({a: arc_map[a] for a in dom.arcs}))
        object.__setattr__(self, "_hash", hash((dom, cod, tuple(self.node_map.values()),
                                                tuple(self.arc_map.values()))))

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self._hash == other._hash and self.dom == other.dom and self.cod == other.cod
                and self.node_map == other.node_map and self.arc_map == other.arc_map)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        nodes = ", ".join(f"{x}->{y}" for x, y in self.node_map.items())
        arcs = ", ".join(f"{x}->{y}" for x, y in self.arc_map.items())
        return f"Morphism(nodes={{{nodes}}}, arcs={{{arcs}}})"

    def __call__(self, x: str) -> str:
        """Apply to a node or an arc identifier."""
        if x in self.node_map:
            return self.node_map[x]
        return self.arc_map[x]

    def then(self, other: Morphism) -> Morphism:
        return compose(self, other)


def naturality_violations(f: Morphism) -> list[str]:
    """Arcs whose source or target is not preserved, with a description each."""
    out = []
    for a in f.dom.arcs:
        b = f.arc_map[a]
        if f.node_map[f.dom.src[a]] != f.cod.src[b]:
            out.append(f"arc {a}: source {f.dom.src[a]} -> {f.node_map[f.dom.src[a]]}, "
                       f"but source of {b} is {f.cod.src[b]}")
        if f.node_map[f.dom.tgt[a]] != f.cod.tgt[b]:
            out.append(f"arc {a}: target {f.dom.tgt[a]} -> {f.node_map[f.dom.tgt[a]]}, "
                       f"but target of {b} is {f.cod.tgt[b]}")
    return out


def validate_morphism(f: Morphism) -> bool:
    return not naturality_violations(f)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f`` followed by ``g``, i.e. g ∘ f."""
    if f.cod != g.dom:
        raise MorphismError("cannot compose: codomain of the first map is not the domain of the second")
    return Morphism(f.dom, g.cod,
                    {x: g.node_map[y] for x, y in f.node_map.items()},
                    {a: g.arc_map[b] for a, b in f.arc_map.items()})


def identity(g: Graph) -> Morphism:
    return Morphism(g, g, {x: x for x in g.nodes}, {a: a for a in g.arcs})


def is_mono(f: Morphism) -> bool:
    return (len(set(f.node_map.values())) == len(f.node_map)
            and len(set(f.arc_map.values())) == len(f.arc_map))


def is_epi(f: Morphism) -> bool:
    return set(f.node_map.values()) == f.cod.node_set and set(f.arc_map.values()) == f.cod.arc_set


def is_iso(f: Morphism) -> bool:
    return is_mono(f) and is_epi(f) and validate_morphism(f)


def inverse(f: Morphism) -> Morphism:
    if not is_iso(f):
        raise MorphismError("morphism is not an isomorphism")
    return Morphism(f.cod, f.dom, {y: x for x, y in f.node_map.items()},
                    {b: a for a, b in f.arc_map.items()})


class Subobject:
    """A subgraph of ``ambient``: a node subset and an arc subset closed under endpoints."""

    __slots__ = ("ambient", "nodes", "arcs", "_hash")

    def __init__(self, ambient: Graph, nodes: Iterable[str], arcs: Iterable[str]):
        nodes = frozenset(nodes)
        arcs = frozenset(arcs)
        if not nodes <= ambient.node_set:
            raise GraphError(f"not nodes of the ambient graph: {', '.join(sorted(nodes - ambient.node_set))}")
        if not arcs <= ambient.arc_set:
            raise GraphError(f"not arcs of the ambient graph: {', '.join(sorted(arcs - ambient.arc_set))}")
        for a in sorted(arcs):
            for end in ambient.ends(a):
                if end not in nodes:
                    raise GraphError(f"arc {a!r} has endpoint {end!r} outside the subobject")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_hash", hash((ambient, nodes, arcs)))

    def __setattr__(self, name, value):
        raise AttributeError("Subobject is immutable")

    def __eq__(self, other):
        if not isinstance(other, Subobject):
            return NotImplemented
        return self.ambient == other.ambient and self.nodes == other.nodes and self.arcs == other.arcs

    def __hash__(self):
        return self._hash

    def __le__(self, other: Subobject) -> bool:
        return self.ambient == other.ambient and self.nodes <= other.nodes and self.arcs <= other.arcs

    def __lt__(self, other: Subobject) -> bool:
        return self <= other and self != other

    def __and__(self, other: Subobject) -> Subobject:
        return Subobject(self.ambient, self.nodes & other.nodes, self.arcs & other.arcs)

    def __repr__(self):
        return f"Subobject(nodes={sorted(self.nodes)}, arcs={sorted(self.arcs)})"

    @classmethod
    def full(cls, g: Graph) -> Subobject:
        return cls(g, g.nodes, g.arcs)

    @classmethod
    def empty(cls, g: Graph) -> Subobject:
        return cls(g, (), ())

    def is_full(self) -> bool:
        return len(self.nodes) == len(self.ambient.nodes) and len(self.arcs) == len(self.ambient.arcs)

    def sorted_members(self) -> list[str]:
        return sorted(self.nodes) + sorted(self.arcs)

    def as_graph(self) -> Graph:
        g = self.ambient
        return Graph(self.nodes, self.arcs, {a: g.src[a] for a in self.arcs}, {a: g.tgt[a] for a in self.arcs})

    def inclusion(self) -> Morphism:
        return Morphism(self.as_graph(), self.ambient, {x: x for x in self.nodes}, {a: a for a in self.arcs})


def canonical_subobject(m: Morphism) -> Subobject:
    """The image of a mono, as a subobject of its codomain."""
    if not is_mono(m):
        raise MorphismError("canonical_subobject needs a monomorphism")
    return Subobject(m.cod, m.node_map.values(), m.arc_map.values())


def enumerate_subobjects(g: Graph) -> list[Subobject]:
    """All subobjects of ``g``: node subsets in binary order, then arc subsets among the arcs they span."""
    out = []
    n = len(g.nodes)
    for mask in range(1 << n):
        nodes = {g.nodes[i] for i in range(n) if mask >> i & 1}
        inside = [a for a in g.arcs if g.src[a] in nodes and g.tgt[a] in nodes]
        for amask in range(1 << len(inside)):
            out.append(Subobject(g, nodes, [inside[i] for i in range(len(inside)) if amask >> i & 1]))
    return out


def count_subobjects(g: Graph) -> int:
    total = 0
    n = len(g.nodes)
    for mask in range(1 << n):
        nodes = {g.nodes[i] for i in range(n) if mask >> i & 1}
        total += 1 << sum(1 for a in g.arcs if g.src[a] in nodes and g.tgt[a] in nodes)
    return total


def _degree_signature(g: Graph) -> dict[str, tuple[int, int, int]]:
    out_deg = Counter(g.src[a] for a in g.arcs)
    in_deg = Counter(g.tgt[a] for a in g.arcs)
    loops = Counter(g.src[a] for a in g.arcs if g.src[a] == g.tgt[a])
    return {x: (out_deg[x], in_deg[x], loops[x]) for x in g.nodes}


def find_isomorphism(g: Graph, h: Graph) -> Morphism | None:
    """An isomorphism g -> h, or None.

    Backtracks over node bijections that respect (out, in, loop) degrees and
    arc multiplicities; arcs are then matched within each (source, target)
    class.
    """
    if len(g.nodes) != len(h.nodes) or len(g.arcs) != len(h.arcs):
        return None
    sig_g = _degree_signature(g)
    sig_h = _degree_signature(h)
    if sorted(sig_g.values()) != sorted(sig_h.values()):
        return None
    mult_g = g.arc_multiplicity()
    mult_h = h.arc_multiplicity()
    candidates = {x: [y for y in h.nodes if sig_h[y] == sig_g[x]] for x in g.nodes}
    order = sorted(g.nodes, key=lambda x: (len(candidates[x]), x))
    phi: dict[str, str] = {}
    used: set[str] = set()

    def consistent(x: str) -> bool:
        for z, w in phi.items():
            if mult_g.get((x, z), 0) != mult_h.get((phi[x], w), 0):
                return False
            if mult_g.get((z, x), 0) != mult_h.get((w, phi[x]), 0):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in candidates[x]:
            if y in used:
                continue
            phi[x] = y
            used.add(y)
            if consistent(x) and search(i + 1):
                return True
            del phi[x]
            used.discard(y)
        return False

    if not search(0):
        return None
    by_ends = defaultdict(list)
    for b in h.arcs:
        by_ends[h.src[b], h.tgt[b]].append(b)
    arc_map = {}
    for a in g.arcs:
        arc_map[a] = by_ends[phi[g.src[a]], phi[g.tgt[a]]].pop(0)
    return Morphism(g, h, phi, arc_map)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
