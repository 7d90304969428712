"""The subobject classifier Ω, characteristic maps, and the connectives ∧ and ¬.

Ω is built from its definition: its nodes are the subobjects of the
representable N, its arcs the subobjects of the representable A, and an
arc's source (target) is the restriction of the subobject along s (t).
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .errors import MorphismError
from .graph import (Graph, Morphism, Subobject, arc_graph, canonical_subobject, compose,
                    enumerate_subobjects, node_graph, pair_id)
from .limits import pairing, product, terminal, terminal_map


class TruthValue(Enum):
    """The seven elements of Ω; the value is the identifier used in Ω."""

    FALSE_N = "0N"
    TRUE_N = "N"
    FALSE_A = "0A"
    SOURCE = "s"
    TARGET = "t"
    ENDPOINTS = "st"
    TRUE_A = "A"

    @property
    def stage(self) -> str:
        return "node" if self in (TruthValue.FALSE_N, TruthValue.TRUE_N) else "arc"

    @property
    def label(self) -> str:
        """Conventional display name."""
        return _LABELS[self]

    @classmethod
    def from_label(cls, text: str) -> TruthValue:
        for tv, label in _LABELS.items():
            if text in (label, tv.value):
                return tv
        raise ValueError(f"unknown truth value {text!r}")


_LABELS = {
    TruthValue.FALSE_N: "0_N",
    TruthValue.TRUE_N: "N",
    TruthValue.FALSE_A: "0_A",
    TruthValue.SOURCE: "s",
    TruthValue.TARGET: "t",
    TruthValue.ENDPOINTS: "(s t)",
    TruthValue.TRUE_A: "A",
}

NODE_VALUES = (TruthValue.FALSE_N, TruthValue.TRUE_N)
ARC_VALUES = (TruthValue.FALSE_A, TruthValue.SOURCE, TruthValue.TARGET, TruthValue.ENDPOINTS, TruthValue.TRUE_A)

# strict order on arc values; s and t are incomparable
_ARC_BELOW = {
    TruthValue.FALSE_A: set(),
    TruthValue.SOURCE: {TruthValue.FALSE_A},
    TruthValue.TARGET: {TruthValue.FALSE_A},
    TruthValue.ENDPOINTS: {TruthValue.FALSE_A, TruthValue.SOURCE, TruthValue.TARGET},
    TruthValue.TRUE_A: {TruthValue.FALSE_A, TruthValue.SOURCE, TruthValue.TARGET, TruthValue.ENDPOINTS},
}


def truth_le(x: str | TruthValue, y: str | TruthValue) -> bool:
    """Pointwise order on Ω: 0_N < N, and 0_A < s, t < (s t) < A."""
    x, y = TruthValue(x), TruthValue(y)
    if x.stage != y.stage:
        raise ValueError("cannot compare a node value with an arc value")
    if x == y:
        return True
    if x.stage == "node":
        return x == TruthValue.FALSE_N
    return x in _ARC_BELOW[y]


def _name_node_subobject(sub: Subobject) -> TruthValue:
    return TruthValue.TRUE_N if sub.nodes else TruthValue.FALSE_N


def _name_arc_subobject(sub: Subobject) -> TruthValue:
    if sub.arcs:
        return TruthValue.TRUE_A
    return {
        frozenset(): TruthValue.FALSE_A,
        frozenset({"s"}): TruthValue.SOURCE,
        frozenset({"t"}): TruthValue.TARGET,
        frozenset({"s", "t"}): TruthValue.ENDPOINTS,
    }[sub.nodes]


@lru_cache(maxsize=1)
def omega() -> Graph:
    n = node_graph()
    a = arc_graph()
    nodes = [_name_node_subobject(sub).value for sub in enumerate_subobjects(n)]
    src = {}
    tgt = {}
    arcs = []
    for sub in enumerate_subobjects(a):
        name = _name_arc_subobject(sub).value
        arcs.append(name)
        # restriction along s: N -> A keeps N iff the node s belongs to the subobject
        src[name] = (TruthValue.TRUE_N if "s" in sub.nodes else TruthValue.FALSE_N).value
        tgt[name] = (TruthValue.TRUE_N if "t" in sub.nodes else TruthValue.FALSE_N).value
    return Graph(nodes, arcs, src, tgt)


def true_arrow() -> Morphism:
    return Morphism(terminal(), omega(), {"*": TruthValue.TRUE_N.value}, {"loop": TruthValue.TRUE_A.value})


def characteristic(sub: Subobject) -> Morphism:
    """The map ambient -> Ω classifying ``sub``."""
    g = sub.ambient
    node_map = {x: (TruthValue.TRUE_N if x in sub.nodes else TruthValue.FALSE_N).value for x in g.nodes}
    arc_map = {}
    for a in g.arcs:
        if a in sub.arcs:
            value = TruthValue.TRUE_A
        else:
            src_in = g.src[a] in sub.nodes
            tgt_in = g.tgt[a] in sub.nodes
            if src_in and tgt_in:
                value = TruthValue.ENDPOINTS
            elif src_in:
                value = TruthValue.SOURCE
            elif tgt_in:
                value = TruthValue.TARGET
            else:
                value = TruthValue.FALSE_A
        arc_map[a] = value.value
    return Morphism(g, omega(), node_map, arc_map)


def false_arrow() -> Morphism:
    """Classifier of the empty subobject of 1."""
    return characteristic(Subobject.empty(terminal()))


def subobject_from_characteristic(chi: Morphism) -> Subobject:
    if chi.cod != omega():
        raise MorphismError("characteristic maps must land in Ω")
    return Subobject(chi.dom,
                     [x for x in chi.dom.nodes if chi.node_map[x] == TruthValue.TRUE_N.value],
                     [a for a in chi.dom.arcs if chi.arc_map[a] == TruthValue.TRUE_A.value])


def constant(g: Graph, value: Morphism) -> Morphism:
    """``value`` ∘ !: g -> 1 -> Ω."""
    return compose(terminal_map(g), value)


@lru_cache(maxsize=1)
def conjunction() -> Morphism:
    """∧: Ω x Ω -> Ω, the characteristic map of <⊤, ⊤>: 1 -> Ω x Ω."""
    top = true_arrow()
    square = product(omega(), omega())
    return characteristic(canonical_subobject(pairing(top, top, square)))


@lru_cache(maxsize=1)
def negation() -> Morphism:
    """¬: Ω -> Ω, the characteristic map of ⊥: 1 -> Ω."""
    return characteristic(canonical_subobject(false_arrow()))


def conj(x: str | TruthValue, y: str | TruthValue) -> TruthValue:
    x, y = TruthValue(x), TruthValue(y)
    if x.stage != y.stage:
        raise ValueError("∧ applies to two node values or two arc values")
    return TruthValue(conjunction()(pair_id(x.value, y.value)))


def neg(x: str | TruthValue) -> TruthValue:
    return TruthValue(negation()(TruthValue(x).value))
