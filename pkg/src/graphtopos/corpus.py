"""Exhaustive corpora of small graphs, up to isomorphism.

Corpus graphs name their nodes ``v0, v1, ...`` and their arcs
``e0, e1, ...``.  Duplicates under isomorphism are removed by taking the
lexicographically least arc list over all node relabellings, which is
cheap at corpus sizes (at most a handful of nodes).
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, permutations
from typing import Sequence

from .graph import Graph


def _build(n: int, arcs: Sequence[tuple[int, int]]) -> Graph:
    nodes = [f"v{i}" for i in range(n)]
    names = [f"e{k}" for k in range(len(arcs))]
    return Graph(nodes, names, {e: f"v{s}" for e, (s, _) in zip(names, arcs)},
                 {e: f"v{t}" for e, (_, t) in zip(names, arcs)})


def _canonical(n: int, arcs: Sequence[tuple]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[s], perm[t], *rest) for s, t, *rest in arcs))
        if best is None or key < best:
            best = key
    return best


def graphs_up_to_iso(max_nodes: int, max_arcs: int) -> list[Graph]:
    """Every graph with at most ``max_nodes`` nodes and ``max_arcs`` arcs, one per isomorphism class.

    Ordered by node count, then arc count, then canonical arc list.
    """
    out = []
    for n in range(max_nodes + 1):
        pairs = [(s, t) for s in range(n) for t in range(n)]
        for m in range(max_arcs + 1):
            if m and not pairs:
                break
            seen = set()
            for arcs in combinations_with_replacement(pairs, m):
                seen.add(_canonical(n, arcs))
            out.extend(_build(n, key) for key in sorted(seen))
    return out


def labelled_graphs_up_to_iso(max_nodes: int, max_arcs: int, alphabet: Sequence[str]):
    """Like :func:`graphs_up_to_iso`, for arc-labelled graphs over ``alphabet``."""
    from .slice import Alphabet, LabelledGraph

    sigma = Alphabet(alphabet)
    out = []
    for n in range(max_nodes + 1):
        triples = [(s, t, x) for s in range(n) for t in range(n) for x in sigma.symbols]
        for m in range(max_arcs + 1):
            if m and not triples:
                break
            seen = set()
            for arcs in combinations_with_replacement(triples, m):
                seen.add(_canonical(n, arcs))
            for key in sorted(seen):
                g = _build(n, [(s, t) for s, t, _ in key])
                out.append(LabelledGraph(g, {f"e{k}": x for k, (_, _, x) in enumerate(key)}, sigma))
    return out


def random_transition_system(rng: random.Random, alphabet: Sequence[str], max_states: int = 5,
                             density: float = 0.3):
    """A random transition system with shuffled arc names, for round-trip testing."""
    from .slice import Alphabet, LabelledGraph

    sigma = Alphabet(alphabet)
    n = rng.randint(0, max_states)
    states = [f"q{i}" for i in range(n)]
    transitions = [(x, a, y) for x in states for a in sigma.symbols for y in states if rng.random() < density]
    rng.shuffle(transitions)
    names = [f"t{k}" for k in range(len(transitions))]
    g = Graph(states, names, {e: x for e, (x, _, _) in zip(names, transitions)},
              {e: y for e, (_, _, y) in zip(names, transitions)})
    return LabelledGraph(g, {e: a for e, (_, a, _) in zip(names, transitions)}, sigma)
