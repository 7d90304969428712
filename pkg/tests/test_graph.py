from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from graphtopos.errors import GraphError, MorphismError
from graphtopos.graph import (Graph, Morphism, Subobject, are_isomorphic, arc_graph, canonical_subobject,
                              compose, count_subobjects, enumerate_subobjects, find_isomorphism,
                              graph_from_arcs, identity, inverse, is_epi, is_iso, is_mono, make_graph,
                              naturality_violations, node_graph, validate_morphism)
from graphtopos.homs import enumerate_homs
from graphtopos.limits import coproduct, copairing, initial_map, terminal, terminal_map

from oracles import brute_force_isomorphic, brute_force_subobjects
from strategies import small_graphs


def relabel(g, rng):
    nodes = list(g.nodes)
    arcs = list(g.arcs)
    new_nodes = [f"x{i}" for i in range(len(nodes))]
    new_arcs = [f"y{i}" for i in range(len(arcs))]
    rng.shuffle(new_nodes)
    rng.shuffle(new_arcs)
    nm = dict(zip(nodes, new_nodes))
    am = dict(zip(arcs, new_arcs))
    return Graph(new_nodes, new_arcs, {am[a]: nm[g.src[a]] for a in arcs}, {am[a]: nm[g.tgt[a]] for a in arcs})


def endpoint_inclusion():
    """(s t): N + N -> A."""
    n = node_graph()
    a = arc_graph()
    s = Morphism(n, a, {"N": "s"}, {})
    t = Morphism(n, a, {"N": "t"}, {})
    return copairing(s, t, coproduct(n, n))


class TestMakeGraph:
    def test_empty(self):
        g = make_graph([], [], {}, {})
        assert g.nodes == () and g.arcs == ()

    def test_single_loop(self):
        g = make_graph({"*"}, {"l"}, {"l": "*"}, {"l": "*"})
        assert g.nodes == ("*",) and g.ends("l") == ("*", "*")
        assert are_isomorphic(g, terminal())

    def test_one_arrow(self):
        g = make_graph({"s", "t"}, {"A"}, {"A": "s"}, {"A": "t"})
        assert g == arc_graph()

    def test_dangling_endpoint_names_arc(self):
        with pytest.raises(GraphError, match="'bad'"):
            make_graph({"x"}, {"bad"}, {"bad": "x"}, {"bad": "y"})

    def test_missing_source(self):
        with pytest.raises(GraphError, match="no source"):
            make_graph({"x"}, {"a"}, {}, {"a": "x"})

    def test_duplicates_and_clashes(self):
        with pytest.raises(GraphError, match="duplicate node"):
            make_graph(["x", "x"], [], {}, {})
        with pytest.raises(GraphError, match="both as node and arc"):
            make_graph(["x"], ["x"], {"x": "x"}, {"x": "x"})

    def test_immutable_and_hashable(self):
        g = arc_graph()
        with pytest.raises(AttributeError):
            g.nodes = ()
        assert hash(g) == hash(arc_graph())
        assert len({g, arc_graph(), node_graph()}) == 2

    def test_order_independent(self):
        g1 = graph_from_arcs(["b", "a"], {"q": ("a", "b"), "p": ("b", "a")})
        g2 = graph_from_arcs(["a", "b"], {"p": ("b", "a"), "q": ("a", "b")})
        assert g1 == g2 and repr(g1) == repr(g2)


class TestMorphisms:
    def test_identity_valid(self):
        assert validate_morphism(identity(arc_graph()))

    def test_collapse_to_terminal_valid(self):
        assert validate_morphism(terminal_map(arc_graph()))

    def test_swapped_endpoints_invalid(self):
        a = arc_graph()
        f = Morphism(a, a, {"s": "t", "t": "s"}, {"A": "A"})
        assert not validate_morphism(f)
        problems = naturality_violations(f)
        assert len(problems) == 2 and all(p.startswith("arc A") for p in problems)

    def test_partial_map_rejected(self):
        with pytest.raises(MorphismError):
            Morphism(arc_graph(), arc_graph(), {"s": "s"}, {"A": "A"})
        with pytest.raises(MorphismError):
            Morphism(arc_graph(), node_graph(), {"s": "N", "t": "N"}, {"A": "A"})

    def test_identity_laws(self):
        f = terminal_map(arc_graph())
        assert compose(identity(f.dom), f) == f
        assert compose(f, identity(f.cod)) == f

    def test_compose_source_then_collapse(self):
        s = Morphism(node_graph(), arc_graph(), {"N": "s"}, {})
        h = compose(s, terminal_map(arc_graph()))
        assert dict(h.node_map) == {"N": "*"} and h.cod == terminal()

    def test_compose_mismatch(self):
        with pytest.raises(MorphismError):
            compose(identity(node_graph()), identity(arc_graph()))

    def test_category_laws_on_corpus(self, tiny_corpus):
        graphs = tiny_corpus
        homs = {(g, h): enumerate_homs(g, h) for g in graphs for h in graphs}
        checked = 0
        for g in graphs:
            for h in graphs:
                for f in homs[g, h]:
                    assert validate_morphism(f)
                    assert compose(identity(g), f) == f == compose(f, identity(h))
                    for k in graphs:
                        for gg in homs[h, k]:
                            fg = compose(f, gg)
                            assert validate_morphism(fg)
                            for l in graphs[:4]:
                                for hh in homs[k, l]:
                                    assert compose(fg, hh) == compose(f, compose(gg, hh))
                                    checked += 1
        assert checked > 100


class TestMonoEpi:
    def test_identity(self):
        f = identity(arc_graph())
        assert is_mono(f) and is_epi(f) and is_iso(f)

    def test_endpoint_inclusion(self):
        f = endpoint_inclusion()
        assert validate_morphism(f)
        assert is_mono(f) and not is_epi(f)

    def test_collapse(self):
        f = terminal_map(arc_graph())
        assert is_epi(f) and not is_mono(f)

    def test_inverse(self):
        g = graph_from_arcs(["x", "y"], {"a": ("x", "y")})
        f = find_isomorphism(g, arc_graph())
        assert compose(f, inverse(f)) == identity(g)
        with pytest.raises(MorphismError):
            inverse(terminal_map(g))

    def test_agree_with_cancellation(self, tiny_corpus, small_corpus):
        probes = small_corpus
        for g in tiny_corpus:
            for h in small_corpus:
                for f in enumerate_homs(g, h):
                    left_cancel = all(len({compose(x, f) for x in enumerate_homs(p, g)})
                                      == len(enumerate_homs(p, g)) for p in probes)
                    assert is_mono(f) == left_cancel, f
                    right_cancel = all(len({compose(f, y) for y in enumerate_homs(h, p)})
                                       == len(enumerate_homs(h, p)) for p in probes)
                    assert is_epi(f) == right_cancel, f


class TestSubobjects:
    def test_endpoint_closure_enforced(self):
        with pytest.raises(GraphError, match="endpoint"):
            Subobject(arc_graph(), {"s"}, {"A"})

    def test_canonical_of_identity_is_full(self):
        assert canonical_subobject(identity(arc_graph())).is_full()

    def test_canonical_of_initial_is_empty(self):
        sub = canonical_subobject(initial_map(arc_graph()))
        assert sub == Subobject.empty(arc_graph())

    def test_canonical_of_source(self):
        s = Morphism(node_graph(), arc_graph(), {"N": "s"}, {})
        sub = canonical_subobject(s)
        assert sub.nodes == {"s"} and sub.arcs == frozenset()

    def test_canonical_needs_mono(self):
        with pytest.raises(MorphismError):
            canonical_subobject(terminal_map(arc_graph()))

    def test_canonical_reproduces_mono(self, small_corpus):
        for g in small_corpus:
            for h in small_corpus:
                for m in enumerate_homs(g, h):
                    if not is_mono(m):
                        continue
                    sub = canonical_subobject(m)
                    iso = Morphism(g, sub.as_graph(), dict(m.node_map), dict(m.arc_map))
                    assert is_iso(iso)
                    assert compose(iso, sub.inclusion()) == m

    def test_enumeration_matches_brute_force(self, corpus):
        for g in corpus:
            ours = {(s.nodes, s.arcs) for s in enumerate_subobjects(g)}
            theirs = set(brute_force_subobjects(g))
            assert ours == theirs
            assert count_subobjects(g) == len(theirs) == len(enumerate_subobjects(g))

    def test_order_and_meet(self):
        g = arc_graph()
        full = Subobject.full(g)
        ends = Subobject(g, {"s", "t"}, ())
        src = Subobject(g, {"s"}, ())
        assert src <= ends <= full and src < full and not full <= ends
        assert (ends & Subobject(g, {"t"}, ())) == Subobject(g, {"t"}, ())


class TestIsomorphism:
    def test_self(self, corpus):
        for g in corpus:
            f = find_isomorphism(g, g)
            assert f is not None and is_iso(f)

    def test_arc_vs_two_nodes(self):
        two = coproduct(node_graph(), node_graph()).obj
        assert not are_isomorphic(arc_graph(), two)

    def test_corpus_pairwise_distinct(self, corpus):
        for i, g in enumerate(corpus):
            for h in corpus[i + 1:]:
                assert not are_isomorphic(g, h)

    def test_agrees_with_brute_force(self, small_corpus):
        for g in small_corpus:
            for h in small_corpus:
                assert are_isomorphic(g, h) == brute_force_isomorphic(g, h)

    def test_corpus_is_complete(self, corpus):
        # every raw graph with <= 3 nodes and <= 3 arcs is isomorphic to exactly one corpus member
        for n in range(4):
            pairs = [(s, t) for s in range(n) for t in range(n)]
            for m in range(4):
                if m and not pairs:
                    continue
                for arcs in combinations_with_replacement(pairs, m):
                    g = graph_from_arcs([f"w{i}" for i in range(n)],
                                        {f"b{k}": (f"w{s}", f"w{t}") for k, (s, t) in enumerate(arcs)})
                    assert sum(are_isomorphic(g, c) for c in corpus) == 1

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.randoms(use_true_random=False))
    def test_relabelled_copy(self, g, rng):
        h = relabel(g, rng)
        f = find_isomorphism(g, h)
        assert f is not None and is_iso(f)

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_nodes=3, max_arcs=3), small_graphs(max_nodes=3, max_arcs=3))
    def test_random_pairs(self, g, h):
        assert are_isomorphic(g, h) == brute_force_isomorphic(g, h)


@st.composite
def composable_triples(draw):
    graphs = [draw(small_graphs(max_nodes=3, max_arcs=4)) for _ in range(4)]
    maps = []
    for a, b in zip(graphs, graphs[1:]):
        homs = enumerate_homs(a, b, cap=None)
        if not homs:
            return None
        maps.append(draw(st.sampled_from(homs)))
    return maps


@settings(max_examples=80, deadline=None)
@given(composable_triples())
def test_category_laws_on_random_graphs(maps):
    if maps is None:
        return
    f, g, h = maps
    assert validate_morphism(compose(f, g))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(identity(f.dom), f) == f == compose(f, identity(f.cod))
