"""Arc-labelled graphs, transition systems and nondeterministic automata.

A graph labelled on an alphabet Σ is a graph with a morphism into the
one-node graph whose arcs are the symbols of Σ; label-preserving graph
morphisms are the maps of the slice category.  Transition systems are the
labelled graphs with at most one arc per (source, label, target).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .classifier import characteristic, omega, true_arrow
from .errors import GraphError, MorphismError
from .graph import (Graph, Morphism, Subobject, canonical_subobject, compose, enumerate_subobjects,
                    identity, is_mono, validate_morphism)
from .homs import DEFAULT_HOM_CAP, iter_homs
from .limits import pairing, product, product_map, pullback, terminal_map
from .topology import SeparationReport, double_negation

SIGMA_NODE = "*"


class Alphabet:
    __slots__ = ("symbols",)

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(sorted(set(symbols)))
        if not symbols:
            raise GraphError("an alphabet needs at least one symbol")
        if SIGMA_NODE in symbols:
            raise GraphError(f"{SIGMA_NODE!r} is reserved and cannot be a symbol")
        object.__setattr__(self, "symbols", symbols)

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, x):
        return x in self.symbols

    def __repr__(self):
        return f"Alphabet({list(self.symbols)!r})"


@lru_cache(maxsize=64)
def sigma_graph(alphabet: Alphabet) -> Graph:
    """One node ``*`` and one loop per symbol."""
    return Graph([SIGMA_NODE], alphabet.symbols, {x: SIGMA_NODE for x in alphabet},
                 {x: SIGMA_NODE for x in alphabet})


class LabelledGraph:
    __slots__ = ("graph", "labels", "alphabet", "_hash")

    def __init__(self, graph: Graph, labels: Mapping[str, str], alphabet: Alphabet | Iterable[str] | None = None):
        if set(labels) != graph.arc_set:
            missing = sorted(graph.arc_set - set(labels))
            if missing:
                raise GraphError(f"unlabelled arc(s): {', '.join(missing)}")
            raise GraphError(f"labels given for unknown arc(s): {', '.join(sorted(set(labels) - graph.arc_set))}")
        if alphabet is None:
            alphabet = Alphabet(labels.values())
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        for a in graph.arcs:
            if labels[a] not in alphabet:
                raise GraphError(f"arc {a!r} has unknown label {labels[a]!r}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "labels", MappingProxyType({a: labels[a] for a in graph.arcs}))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "_hash", hash((graph, tuple(self.labels.values()), alphabet)))

    def __setattr__(self, name, value):
        raise AttributeError("LabelledGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, LabelledGraph):
            return NotImplemented
        return self.graph == other.graph and self.labels == other.labels and self.alphabet == other.alphabet

    def __hash__(self):
        return self._hash

    def __repr__(self):
        g = self.graph
        arcs = ", ".join(f"{a}:{g.src[a]}-{self.labels[a]}->{g.tgt[a]}" for a in g.arcs)
        return f"LabelledGraph(nodes=[{', '.join(g.nodes)}], arcs=[{arcs}])"

    def transitions(self) -> Counter:
        """Multiset of (source, label, target) triples."""
        g = self.graph
        return Counter((g.src[a], self.labels[a], g.tgt[a]) for a in g.arcs)

    def labelling(self) -> Morphism:
        """The structure map into the alphabet graph."""
        return Morphism(self.graph, sigma_graph(self.alphabet), {x: SIGMA_NODE for x in self.graph.nodes},
                        dict(self.labels))

    def restrict(self, sub: Subobject) -> LabelledGraph:
        if sub.ambient != self.graph:
            raise GraphError("subobject of a different graph")
        return LabelledGraph(sub.as_graph(), {a: self.labels[a] for a in sub.arcs}, self.alphabet)


def from_labelling(structure: Morphism) -> LabelledGraph:
    """The labelled graph given by a morphism into an alphabet graph."""
    alphabet = Alphabet(structure.cod.arcs)
    if structure.cod != sigma_graph(alphabet):
        raise MorphismError("codomain is not an alphabet graph")
    return LabelledGraph(structure.dom, dict(structure.arc_map), alphabet)


def terminal_slice(alphabet: Alphabet) -> LabelledGraph:
    """Σ labelled by itself: the terminal labelled graph."""
    return LabelledGraph(sigma_graph(alphabet), {x: x for x in alphabet}, alphabet)


def _label_filter(dom: LabelledGraph, cod: LabelledGraph):
    return lambda a, b: dom.labels[a] == cod.labels[b]


def iter_slice_homs(dom: LabelledGraph, cod: LabelledGraph, cap: int | None = DEFAULT_HOM_CAP):
    return iter_homs(dom.graph, cod.graph, _label_filter(dom, cod), cap)


def enumerate_slice_homs(dom: LabelledGraph, cod: LabelledGraph, cap: int | None = DEFAULT_HOM_CAP) -> list[Morphism]:
    return list(iter_slice_homs(dom, cod, cap))


def validate_slice_morphism(f: Morphism, dom: LabelledGraph, cod: LabelledGraph) -> bool:
    if f.dom != dom.graph or f.cod != cod.graph:
        raise MorphismError("morphism does not match the labelled graphs")
    return validate_morphism(f) and all(dom.labels[a] == cod.labels[f.arc_map[a]] for a in f.dom.arcs)


def is_transition_system(lg: LabelledGraph) -> bool:
    return all(n == 1 for n in lg.transitions().values())


def is_separated_ts(lg: LabelledGraph) -> bool:
    """Double-negation separatedness in the slice: no parallel arcs with equal labels."""
    return is_transition_system(lg)


# The slice classifier Σ x Ω and labelwise double negation.

def slice_classifier(alphabet: Alphabet) -> LabelledGraph:
    prod = product(sigma_graph(alphabet), omega())
    return LabelledGraph(prod.obj, dict(prod.first.arc_map), alphabet)


@lru_cache(maxsize=64)
def slice_true(alphabet: Alphabet) -> Morphism:
    """⊤ in the slice: Σ -> Σ x Ω, paired from the identity and ⊤ ∘ !."""
    sigma = sigma_graph(alphabet)
    return pairing(identity(sigma), compose(terminal_map(sigma), true_arrow()),
                   product(sigma, omega()))


def slice_characteristic(sub: Subobject, lg: LabelledGraph) -> Morphism:
    return pairing(lg.labelling(), characteristic(sub), product(sigma_graph(lg.alphabet), omega()))


def slice_subobject_from_characteristic(chi: Morphism, alphabet: Alphabet) -> Subobject:
    """Pull slice ⊤ back along chi."""
    truth = canonical_subobject(slice_true(alphabet))
    return Subobject(chi.dom, [x for x in chi.dom.nodes if chi.node_map[x] in truth.nodes],
                     [a for a in chi.dom.arcs if chi.arc_map[a] in truth.arcs])


@lru_cache(maxsize=64)
def slice_double_negation(alphabet: Alphabet) -> Morphism:
    """id x ¬¬ on Σ x Ω: double negation acting labelwise."""
    return product_map(identity(sigma_graph(alphabet)), double_negation().endo)


def slice_closure(sub: Subobject, lg: LabelledGraph) -> Subobject:
    chi = compose(slice_characteristic(sub, lg), slice_double_negation(lg.alphabet))
    return slice_subobject_from_characteristic(chi, lg.alphabet)


@lru_cache(maxsize=4096)
def slice_dense_subobjects(lg: LabelledGraph) -> tuple[Subobject, ...]:
    return tuple(s for s in enumerate_subobjects(lg.graph) if slice_closure(s, lg).is_full())


def slice_separation_oracle(x: LabelledGraph, corpus: Iterable[LabelledGraph],
                            cap: int | None = DEFAULT_HOM_CAP) -> SeparationReport:
    """The definitional ¬¬-separation test, run with label-preserving maps only."""
    separated = True
    complete = True
    probes = 0
    size = 0
    separation_witness = completeness_witness = None
    for y in corpus:
        if y.alphabet != x.alphabet:
            raise GraphError("probe corpus uses a different alphabet")
        size += 1
        extensions = list(iter_slice_homs(y, x, cap))
        for s in slice_dense_subobjects(y):
            ls = y.restrict(s)
            sg = ls.graph
            counts = Counter((tuple(g.node_map[v] for v in sg.nodes), tuple(g.arc_map[a] for a in sg.arcs))
                             for g in extensions)
            for f in iter_slice_homs(ls, x, cap):
                probes += 1
                n = counts.get((tuple(f.node_map.values()), tuple(f.arc_map.values())), 0)
                if n > 1 and separated:
                    separated = False
                    separation_witness = f"{n} extensions from {s!r} in {y!r}"
                if n == 0 and complete:
                    complete = False
                    completeness_witness = f"no extension from {s!r} in {y!r}"
    return SeparationReport(separated, complete, probes, size, separation_witness, completeness_witness)


def slice_product(left: LabelledGraph, right: LabelledGraph) -> LabelledGraph:
    """Product over Σ: pairs of nodes, and pairs of equally labelled arcs."""
    if left.alphabet != right.alphabet:
        raise GraphError("slice product needs a common alphabet")
    cone = pullback(left.labelling(), right.labelling())
    return LabelledGraph(cone.obj, {p: left.labels[cone.first.arc_map[p]] for p in cone.obj.arcs}, left.alphabet)


# Strong monomorphisms of transition systems.

def is_slice_mono(m: Morphism, dom: LabelledGraph, cod: LabelledGraph) -> bool:
    return validate_slice_morphism(m, dom, cod) and is_mono(m)


def is_ts_epi(e: Morphism) -> bool:
    """Epimorphism between transition systems: surjective on nodes.

    Arcs need not be hit: maps into a transition system are determined by
    their node component.
    """
    return set(e.node_map.values()) == e.cod.node_set


def is_strong_mono(m: Morphism, dom: LabelledGraph, cod: LabelledGraph) -> bool:
    """True iff the image of m is an induced labelled subgraph of ``cod``."""
    if not is_slice_mono(m, dom, cod):
        raise MorphismError("is_strong_mono needs a label-preserving monomorphism")
    image = canonical_subobject(m)
    g = cod.graph
    return all(a in image.arcs for a in g.arcs if g.src[a] in image.nodes and g.tgt[a] in image.nodes)


@dataclass(frozen=True)
class Square:
    epi: Morphism
    top: LabelledGraph
    bottom: LabelledGraph


@dataclass(frozen=True)
class DiagonalReport:
    strong: bool
    squares: int
    witness: tuple | None = None


def ts_epis(corpus: Sequence[LabelledGraph], cap: int | None = DEFAULT_HOM_CAP) -> list[Square]:
    """Every node-surjective label-preserving map between transition systems of the corpus."""
    systems = [lg for lg in corpus if is_transition_system(lg)]
    out = []
    for x in systems:
        for y in systems:
            if len(y.graph.nodes) > len(x.graph.nodes):
                continue
            for e in iter_slice_homs(x, y, cap):
                if is_ts_epi(e):
                    out.append(Square(e, x, y))
    return out


def diagonal_fill_in(m: Morphism, dom: LabelledGraph, cod: LabelledGraph, epis: Iterable[Square],
                     cap: int | None = DEFAULT_HOM_CAP) -> DiagonalReport:
    """Check that every commuting square with an epi on top and m at the bottom has a diagonal.

    For each epi e: X' -> Y', each f: X' -> dom and g: Y' -> cod with
    m ∘ f = g ∘ e, look for d: Y' -> dom with d ∘ e = f and m ∘ d = g.
    """
    if not is_slice_mono(m, dom, cod):
        raise MorphismError("diagonal_fill_in needs a label-preserving monomorphism")
    squares = 0
    for sq in epis:
        fs = list(iter_slice_homs(sq.top, dom, cap))
        if not fs:
            continue
        gs = list(iter_slice_homs(sq.bottom, cod, cap))
        ds = list(iter_slice_homs(sq.bottom, dom, cap))
        for f in fs:
            mf = compose(f, m)
            for g in gs:
                if compose(sq.epi, g) != mf:
                    continue
                squares += 1
                if not any(compose(sq.epi, d) == f and compose(d, m) == g for d in ds):
                    return DiagonalReport(False, squares, (sq.epi, f, g))
    return DiagonalReport(True, squares)


# Automata.

class Automaton:
    """A transition function δ: Σ x X -> 2^X, stored as explicit target sets."""

    __slots__ = ("states", "alphabet", "delta")

    def __init__(self, states: Iterable[str], alphabet: Alphabet | Iterable[str],
                 delta: Mapping[tuple[str, str], Iterable[str]]):
        states = tuple(sorted(set(states)))
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        state_set = set(states)
        full = {}
        for key in delta:
            symbol, x = key
            if symbol not in alphabet or x not in state_set:
                raise GraphError(f"transition function defined outside Σ x X at {key!r}")
        for symbol in alphabet:
            for x in states:
                targets = frozenset(delta.get((symbol, x), ()))
                if not targets <= state_set:
                    raise GraphError(f"δ({symbol}, {x}) leaves the state set: {sorted(targets - state_set)}")
                full[symbol, x] = targets
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", MappingProxyType(full))

    def __setattr__(self, name, value):
        raise AttributeError("Automaton is immutable")

    def __eq__(self, other):
        return (isinstance(other, Automaton) and self.states == other.states
                and self.alphabet == other.alphabet and self.delta == other.delta)

    def __hash__(self):
        return hash((self.states, self.alphabet, tuple(sorted((k, tuple(sorted(v))) for k, v in self.delta.items()))))

    def __repr__(self):
        moves = {f"{a},{x}": sorted(v) for (a, x), v in self.delta.items() if v}
        return f"Automaton(states={list(self.states)}, alphabet={list(self.alphabet)}, delta={moves})"


def transition_id(x: str, symbol: str, y: str) -> str:
    return f"<{x},{symbol},{y}>"


def automaton_to_lts(aut: Automaton) -> LabelledGraph:
    arcs = {}
    for (symbol, x), targets in aut.delta.items():
        for y in targets:
            arcs[transition_id(x, symbol, y)] = (x, symbol, y)
    g = Graph(aut.states, arcs, {a: t[0] for a, t in arcs.items()}, {a: t[2] for a, t in arcs.items()})
    return LabelledGraph(g, {a: t[1] for a, t in arcs.items()}, aut.alphabet)


def lts_to_automaton(lg: LabelledGraph) -> Automaton:
    if not is_transition_system(lg):
        dup = sorted(t for t, n in lg.transitions().items() if n > 1)
        raise GraphError(f"not a transition system: parallel equally labelled arcs {dup}")
    delta: dict[tuple[str, str], set[str]] = {}
    for x, symbol, y in lg.transitions():
        delta.setdefault((symbol, x), set()).add(y)
    return Automaton(lg.graph.nodes, lg.alphabet, delta)


def automaton_morphism_ok(node_map: Mapping[str, str], source: Automaton, target: Automaton) -> bool:
    """f(δ(α, x)) ⊆ δ'(α, f(x)) for every symbol α and state x."""
    if source.alphabet != target.alphabet:
        raise GraphError("automata over different alphabets")
    return all({node_map[y] for y in source.delta[a, x]} <= target.delta[a, node_map[x]]
               for a in source.alphabet for x in source.states)


def extend_node_map(node_map: Mapping[str, str], dom: LabelledGraph, cod: LabelledGraph) -> Morphism | None:
    """The labelled graph morphism with the given node part, if any.

    When ``cod`` is a transition system the extension is unique.
    """
    g, h = dom.graph, cod.graph
    arc_map = {}
    for a in g.arcs:
        match = [b for b in h.arcs if h.src[b] == node_map[g.src[a]] and h.tgt[b] == node_map[g.tgt[a]]
                 and cod.labels[b] == dom.labels[a]]
        if not match:
            return None
        arc_map[a] = match[0]
    return Morphism(g, h, node_map, arc_map)
