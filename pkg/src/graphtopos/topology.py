"""Lawvere–Tierney topologies on Ω, closure, density, separated objects and sheaves.

There are exactly four topologies on graphs.  Each is recognised by its
table on Ω, so enumeration names what it finds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .classifier import (TruthValue, characteristic, conjunction, negation, omega,
                         subobject_from_characteristic, true_arrow, truth_le)
from .errors import MorphismError
from .graph import (Graph, Morphism, Subobject, compose, enumerate_subobjects,
                    validate_morphism)
from .homs import DEFAULT_HOM_CAP, count_homs, enumerate_homs, iter_homs
from .limits import product_map

_T = TruthValue

TABLES: dict[str, dict[str, str]] = {
    "identity": {v.value: v.value for v in TruthValue},
    "top": {**{v.value: _T.TRUE_N.value for v in (_T.FALSE_N, _T.TRUE_N)},
            **{v.value: _T.TRUE_A.value for v in (_T.FALSE_A, _T.SOURCE, _T.TARGET, _T.ENDPOINTS, _T.TRUE_A)}},
    "double_negation": {**{v.value: v.value for v in TruthValue}, _T.ENDPOINTS.value: _T.TRUE_A.value},
    "closed": {
        _T.FALSE_N.value: _T.TRUE_N.value, _T.TRUE_N.value: _T.TRUE_N.value,
        _T.FALSE_A.value: _T.ENDPOINTS.value, _T.SOURCE.value: _T.ENDPOINTS.value,
        _T.TARGET.value: _T.ENDPOINTS.value, _T.ENDPOINTS.value: _T.ENDPOINTS.value,
        _T.TRUE_A.value: _T.TRUE_A.value,
    },
}

ALIASES = {
    "id": "identity", "identity": "identity",
    "top": "top",
    "nn": "double_negation", "double_negation": "double_negation", "notnot": "double_negation",
    "closed": "closed",
}


def table_of(j: Morphism) -> dict[str, str]:
    return {**j.node_map, **j.arc_map}


def name_of(j: Morphism) -> str | None:
    table = table_of(j)
    for name, known in TABLES.items():
        if table == known:
            return name
    return None


def is_topology(j: Morphism) -> bool:
    """j ∘ ⊤ = ⊤, j ∘ j = j and j ∘ ∧ = ∧ ∘ (j x j)."""
    om = omega()
    if j.dom != om or j.cod != om:
        raise MorphismError("a topology is an endomorphism of Ω")
    if not validate_morphism(j):
        return False
    top = true_arrow()
    if compose(top, j) != top:
        return False
    if compose(j, j) != j:
        return False
    conj = conjunction()
    return compose(conj, j) == compose(product_map(j, j), conj)


@dataclass(frozen=True)
class Topology:
    endo: Morphism
    name: str | None = None

    def __post_init__(self):
        if not is_topology(self.endo):
            raise MorphismError("not a topology on Ω")
        if self.name is None:
            object.__setattr__(self, "name", name_of(self.endo))

    def __call__(self, value: str | TruthValue) -> TruthValue:
        return TruthValue(self.endo(TruthValue(value).value))

    def table(self) -> dict[str, str]:
        return table_of(self.endo)


@lru_cache(maxsize=1)
def enumerate_topologies() -> tuple[Topology, ...]:
    """Every endomorphism of Ω that is a topology, in enumeration order."""
    return tuple(Topology(j) for j in iter_homs(omega(), omega()) if is_topology(j))


def topology(name: str) -> Topology:
    """Look up one of the four topologies by name (``id``, ``top``, ``nn``, ``closed`` or full names)."""
    try:
        canonical = ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown topology {name!r}; expected one of {sorted(ALIASES)}") from None
    for t in enumerate_topologies():
        if t.name == canonical:
            return t
    raise LookupError(f"topology {canonical!r} not found among the enumerated topologies")


def identity_topology() -> Topology:
    return topology("identity")


def top_topology() -> Topology:
    return topology("top")


@lru_cache(maxsize=1)
def double_negation() -> Topology:
    """¬ ∘ ¬, checked against the axioms."""
    neg = negation()
    return Topology(compose(neg, neg))


def closed_topology() -> Topology:
    return topology("closed")


def topology_le(j: Topology, k: Topology) -> bool:
    """Pointwise order: j(v) ≤ k(v) for every truth value v."""
    return all(truth_le(j(v), k(v)) for v in TruthValue)


def closure(sub: Subobject, j: Topology) -> Subobject:
    return subobject_from_characteristic(compose(characteristic(sub), j.endo))


def is_dense(sub: Subobject, j: Topology) -> bool:
    return closure(sub, j).is_full()


@lru_cache(maxsize=4096)
def dense_subobjects(g: Graph, j: Topology) -> tuple[Subobject, ...]:
    return tuple(s for s in enumerate_subobjects(g) if is_dense(s, j))


def minimum_dense(g: Graph, j: Topology) -> Subobject:
    """The least dense subobject of g.

    Dense subobjects are closed under intersection, so the least one is the
    intersection of all of them.  The named topologies take a direct route.
    """
    if j.name == "double_negation":
        return Subobject(g, g.nodes, ())
    if j.name == "closed":
        return Subobject(g, [x for a in g.arcs for x in g.ends(a)], g.arcs)
    if j.name == "identity":
        return Subobject.full(g)
    if j.name == "top":
        return Subobject.empty(g)
    result = Subobject.full(g)
    for s in dense_subobjects(g, j):
        result = result & s
    return result


# Direct graph-theoretic closures, matched by the two nontrivial topologies.

def spanning_closure(sub: Subobject) -> Subobject:
    """Add every node of the ambient graph and no arcs."""
    return Subobject(sub.ambient, sub.ambient.nodes, sub.arcs)


def induced_closure(sub: Subobject) -> Subobject:
    """Add every ambient arc whose endpoints both lie in the subobject."""
    g = sub.ambient
    return Subobject(g, sub.nodes, [a for a in g.arcs if g.src[a] in sub.nodes and g.tgt[a] in sub.nodes])


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of the definitional check, relative to the probe corpus used."""
    separated: bool
    complete: bool
    probes: int
    corpus_size: int
    separation_witness: str | None = None
    completeness_witness: str | None = None

    @property
    def sheaf(self) -> bool:
        return self.separated and self.complete

    @property
    def witness(self) -> str | None:
        return self.separation_witness or self.completeness_witness


def definitional_separation_oracle(x: Graph, j: Topology, corpus: Iterable[Graph],
                                   cap: int | None = DEFAULT_HOM_CAP) -> SeparationReport:
    """Count, for every Y in the corpus, every j-dense S ↪ Y and every f: S -> X,
    the maps g: Y -> X restricting to f.

    X is separated (complete) relative to the corpus iff every count is at
    most (at least) one.
    """
    separated = True
    complete = True
    probes = 0
    size = 0
    separation_witness = completeness_witness = None
    for y in corpus:
        size += 1
        extensions = enumerate_homs(y, x, cap=cap)
        for s in dense_subobjects(y, j):
            restrictions = Counter(
                (tuple(g.node_map[v] for v in sorted(s.nodes)), tuple(g.arc_map[a] for a in sorted(s.arcs)))
                for g in extensions)
            sg = s.as_graph()
            for f in iter_homs(sg, x, cap=cap):
                probes += 1
                n = restrictions.get((tuple(f.node_map[v] for v in sg.nodes),
                                      tuple(f.arc_map[a] for a in sg.arcs)), 0)
                if n > 1 and separated:
                    separated = False
                    separation_witness = f"{n} extensions from {s!r} in {y!r}"
                if n == 0 and complete:
                    complete = False
                    completeness_witness = f"no extension from {s!r} in {y!r}"
    return SeparationReport(separated, complete, probes, size, separation_witness, completeness_witness)


def _has_parallel_arcs(g: Graph) -> bool:
    return any(n > 1 for n in g.arc_multiplicity().values())


def _is_complete_with_loops(g: Graph) -> bool:
    mult = g.arc_multiplicity()
    return all(mult.get((x, y), 0) == 1 for x in g.nodes for y in g.nodes) and len(g.arcs) == len(g.nodes) ** 2


def _default_corpus() -> list[Graph]:
    from .corpus import graphs_up_to_iso

    return graphs_up_to_iso(2, 2)


def is_separated(g: Graph, j: Topology, corpus: Sequence[Graph] | None = None) -> bool:
    if j.name == "double_negation":
        return not _has_parallel_arcs(g)
    if j.name == "closed":
        return len(g.nodes) <= 1
    if j.name == "identity":
        return True
    if j.name == "top":
        # subterminal: at most one map from every graph
        return len(g.nodes) <= 1 and len(g.arcs) <= 1
    return definitional_separation_oracle(g, j, corpus or _default_corpus()).separated


def is_sheaf(g: Graph, j: Topology, corpus: Sequence[Graph] | None = None) -> bool:
    if j.name == "double_negation":
        return _is_complete_with_loops(g)
    if j.name == "closed":
        return len(g.nodes) == 1
    if j.name == "identity":
        return True
    if j.name == "top":
        return len(g.nodes) == 1 and len(g.arcs) == 1
    return definitional_separation_oracle(g, j, corpus or _default_corpus()).sheaf


def sheaf_category_equivalence_check(g: Graph, h: Graph, cap: int | None = DEFAULT_HOM_CAP) -> bool:
    """|Hom(G, H)| = |H(N)|^|G(N)| for two ¬¬-sheaves."""
    nn = double_negation()
    if not (is_sheaf(g, nn) and is_sheaf(h, nn)):
        raise ValueError("both graphs must be double-negation sheaves")
    return count_homs(g, h, cap=cap) == len(h.nodes) ** len(g.nodes)


def describe(j: Topology) -> str:
    return ", ".join(f"{v.label}->{j(v).label}" for v in TruthValue)
