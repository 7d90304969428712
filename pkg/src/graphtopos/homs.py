"""Exhaustive enumeration of graph morphisms.

Morphisms G -> H are produced in lexicographic order of their node
assignment (G's nodes in sorted order, each ranging over H's sorted nodes),
then of their arc assignment.  Node choices are pruned as soon as an arc
with both endpoints assigned has nowhere to go.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Callable, Iterator

from .errors import MorphismError, SizeCapExceeded
from .graph import Graph, Morphism, arc_graph, compose, node_graph

DEFAULT_HOM_CAP = 10**7

ArcFilter = Callable[[str, str], bool]


def candidate_bound(g: Graph, h: Graph) -> int:
    """|H(N)|^|G(N)| * |H(A)|^|G(A)|: the number of unpruned candidate assignments."""
    return len(h.nodes) ** len(g.nodes) * len(h.arcs) ** len(g.arcs)


def check_cap(g: Graph, h: Graph, cap: int | None) -> None:
    if cap is None:
        return
    bound = candidate_bound(g, h)
    if bound > cap:
        raise SizeCapExceeded(
            f"Hom(G, H) with |G|=({len(g.nodes)},{len(g.arcs)}), |H|=({len(h.nodes)},{len(h.arcs)})", bound, cap)


def iter_assignments(g: Graph, h: Graph, arc_filter: ArcFilter | None = None,
                     cap: int | None = DEFAULT_HOM_CAP) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Yield (node images, arc images) aligned with ``g.nodes`` and ``g.arcs``.

    ``arc_filter(a, b)`` may veto sending arc ``a`` to arc ``b``; it is how
    label-preserving (slice) morphisms are enumerated.
    """
    check_cap(g, h, cap)
    gn = g.nodes
    index = {x: i for i, x in enumerate(gn)}
    # each arc is checked once both its endpoints have been assigned
    due = [[] for _ in gn]
    for a in g.arcs:
        due[max(index[g.src[a]], index[g.tgt[a]])].append(a)
    between = defaultdict(list)
    for b in h.arcs:
        between[h.src[b], h.tgt[b]].append(b)

    def options(a: str, phi: list[str]) -> list[str]:
        bs = between.get((phi[index[g.src[a]]], phi[index[g.tgt[a]]]), ())
        if arc_filter is None:
            return list(bs)
        return [b for b in bs if arc_filter(a, b)]

    phi: list[str] = []

    def extend(i: int) -> Iterator[tuple[tuple[str, ...], tuple[str, ...]]]:
        if i == len(gn):
            choices = [options(a, phi) for a in g.arcs]
            node_images = tuple(phi)
            for arc_images in product(*choices):
                yield node_images, arc_images
            return
        for y in h.nodes:
            phi.append(y)
            if all(options(a, phi) for a in due[i]):
                yield from extend(i + 1)
            phi.pop()

    yield from extend(0)


def iter_homs(g: Graph, h: Graph, arc_filter: ArcFilter | None = None,
              cap: int | None = DEFAULT_HOM_CAP) -> Iterator[Morphism]:
    for node_images, arc_images in iter_assignments(g, h, arc_filter, cap):
        yield Morphism(g, h, dict(zip(g.nodes, node_images)), dict(zip(g.arcs, arc_images)))


def enumerate_homs(g: Graph, h: Graph, arc_filter: ArcFilter | None = None,
                   cap: int | None = DEFAULT_HOM_CAP) -> list[Morphism]:
    """Every morphism g -> h, duplicate-free, in deterministic order.

    Raises :class:`SizeCapExceeded` before searching when the unpruned
    candidate count exceeds ``cap`` (``None`` disables the check).
    """
    return list(iter_homs(g, h, arc_filter, cap))


def count_homs(g: Graph, h: Graph, arc_filter: ArcFilter | None = None,
               cap: int | None = DEFAULT_HOM_CAP) -> int:
    return sum(1 for _ in iter_assignments(g, h, arc_filter, cap))


def generators_check(f: Morphism, g: Morphism) -> bool:
    """True iff f and g agree after precomposition with every map from N and from A."""
    if f.dom != g.dom or f.cod != g.cod:
        raise MorphismError("generators_check needs parallel morphisms")
    for probe in (node_graph(), arc_graph()):
        for h in iter_homs(probe, f.dom, cap=None):
            if compose(h, f) != compose(h, g):
                return False
    return True
