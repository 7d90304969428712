"""Brute-force reference computations, independent of the library's algorithms.

These only read the fields of a graph; they never call into graphtopos
constructions.
"""

from itertools import chain, combinations, permutations, product


def brute_force_homs(g, h):
    """All (node images, arc images) pairs that preserve sources and targets, by filtering every assignment."""
    out = []
    for nodes in product(h.nodes, repeat=len(g.nodes)):
        phi = dict(zip(g.nodes, nodes))
        for arcs in product(h.arcs, repeat=len(g.arcs)):
            psi = dict(zip(g.arcs, arcs))
            if all(phi[g.src[a]] == h.src[psi[a]] and phi[g.tgt[a]] == h.tgt[psi[a]] for a in g.arcs):
                out.append((nodes, arcs))
    return out


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def brute_force_subobjects(g):
    """(nodes, arcs) pairs of frozensets closed under endpoints, from all subsets of nodes ∪ arcs."""
    out = []
    for members in powerset(list(g.nodes) + list(g.arcs)):
        members = set(members)
        nodes = frozenset(m for m in members if m in g.node_set)
        arcs = frozenset(m for m in members if m in g.arc_set)
        if all(g.src[a] in nodes and g.tgt[a] in nodes for a in arcs):
            out.append((nodes, arcs))
    return out


def brute_force_isomorphic(g, h):
    if len(g.nodes) != len(h.nodes) or len(g.arcs) != len(h.arcs):
        return False
    for nodes in permutations(h.nodes):
        phi = dict(zip(g.nodes, nodes))
        for arcs in permutations(h.arcs):
            psi = dict(zip(g.arcs, arcs))
            if all(phi[g.src[a]] == h.src[psi[a]] and phi[g.tgt[a]] == h.tgt[psi[a]] for a in g.arcs):
                return True
    return False


def classify_by_rules(g, nodes_in, arcs_in):
    """Truth value names given to every node and arc of g by the five classifying rules."""
    table = {x: ("N" if x in nodes_in else "0N") for x in g.nodes}
    for a in g.arcs:
        s_in, t_in = g.src[a] in nodes_in, g.tgt[a] in nodes_in
        if a in arcs_in:
            table[a] = "A"
        elif s_in and t_in:
            table[a] = "st"
        elif s_in:
            table[a] = "s"
        elif t_in:
            table[a] = "t"
        else:
            table[a] = "0A"
    return table


def spanning(g, nodes, arcs):
    return frozenset(g.nodes), frozenset(arcs)


def induced(g, nodes, arcs):
    return frozenset(nodes), frozenset(a for a in g.arcs if g.src[a] in nodes and g.tgt[a] in nodes)


def brute_force_separation(x, probes, is_dense):
    """(separated, complete) of x by counting extensions along every dense subgraph of every probe.

    ``is_dense(y, nodes, arcs)`` decides density of a subgraph of y.
    """
    separated = complete = True
    for y in probes:
        extensions = brute_force_homs(y, x)
        for nodes, arcs in brute_force_subobjects(y):
            if not is_dense(y, nodes, arcs):
                continue
            sub_nodes, sub_arcs = sorted(nodes), sorted(arcs)
            counts = {}
            for ns, as_ in extensions:
                phi, psi = dict(zip(y.nodes, ns)), dict(zip(y.arcs, as_))
                key = (tuple(phi[v] for v in sub_nodes), tuple(psi[a] for a in sub_arcs))
                counts[key] = counts.get(key, 0) + 1
            for ns in product(x.nodes, repeat=len(sub_nodes)):
                phi = dict(zip(sub_nodes, ns))
                for as_ in product(x.arcs, repeat=len(sub_arcs)):
                    psi = dict(zip(sub_arcs, as_))
                    if not all(phi[y.src[a]] == x.src[psi[a]] and phi[y.tgt[a]] == x.tgt[psi[a]] for a in sub_arcs):
                        continue
                    n = counts.get((ns, as_), 0)
                    separated &= n <= 1
                    complete &= n >= 1
    return separated, complete


def parallel_free(g):
    pairs = [(g.src[a], g.tgt[a]) for a in g.arcs]
    return len(pairs) == len(set(pairs))


def complete_with_loops(g):
    pairs = sorted((g.src[a], g.tgt[a]) for a in g.arcs)
    return pairs == sorted((x, y) for x in g.nodes for y in g.nodes)


def recursive_hom_count(g, h):
    """Count homs by recursion: choose a node image, then every arc whose endpoints are both placed."""
    nodes = list(g.nodes)

    def go(i, phi):
        if i == len(nodes):
            return _arc_choices(g, h, phi)
        return sum(go(i + 1, {**phi, nodes[i]: y}) for y in h.nodes)

    return go(0, {})


def _arc_choices(g, h, phi):
    total = 1
    for a in g.arcs:
        total *= sum(1 for b in h.arcs if h.src[b] == phi[g.src[a]] and h.tgt[b] == phi[g.tgt[a]])
    return total
