import pytest

from graphtopos.errors import MorphismError, SizeCapExceeded
from graphtopos.graph import Morphism, arc_graph, graph_from_arcs, identity, node_graph
from graphtopos.homs import candidate_bound, count_homs, enumerate_homs, generators_check
from graphtopos.limits import terminal

from oracles import brute_force_homs, recursive_hom_count

# three nodes, two arcs (one a self-loop)
G32 = graph_from_arcs(["x", "y", "z"], {"f": ("x", "y"), "g": ("z", "z")})


def as_pairs(homs):
    return [(tuple(h.node_map.values()), tuple(h.arc_map.values())) for h in homs]


def test_maps_from_node_pick_nodes():
    assert len(brute_force_homs(node_graph(), G32)) == 3
    homs = enumerate_homs(node_graph(), G32)
    assert len(homs) == 3
    assert [h.node_map["N"] for h in homs] == ["x", "y", "z"]


def test_maps_from_arc_pick_arcs():
    assert len(brute_force_homs(arc_graph(), G32)) == 2
    homs = enumerate_homs(arc_graph(), G32)
    assert sorted(h.arc_map["A"] for h in homs) == ["f", "g"]


def test_unique_map_to_terminal(corpus):
    for g in corpus:
        assert len(enumerate_homs(g, terminal())) == 1


def test_matches_brute_force(small_corpus):
    for g in small_corpus:
        for h in small_corpus:
            ours = as_pairs(enumerate_homs(g, h))
            assert sorted(ours) == sorted(brute_force_homs(g, h))
            assert len(set(ours)) == len(ours)
            assert count_homs(g, h) == len(ours)


def test_deterministic_lexicographic_order(corpus):
    for g in corpus[:25]:
        for h in corpus[::7]:
            pairs = as_pairs(enumerate_homs(g, h))
            assert pairs == sorted(pairs)
            assert pairs == as_pairs(enumerate_homs(g, h))


def test_cap_is_explicit():
    big = graph_from_arcs([f"n{i}" for i in range(5)], {f"a{i}": ("n0", "n1") for i in range(5)})
    assert candidate_bound(big, big) == 5**5 * 5**5
    with pytest.raises(SizeCapExceeded) as info:
        enumerate_homs(big, big, cap=1000)
    assert info.value.bound == 5**10 and info.value.cap == 1000
    # isolated nodes go anywhere; the parallel arcs stay on n0 -> n1
    assert count_homs(big, big, cap=None) == 5**3 * 5**5


def test_arc_filter_vetoes_choices():
    two = graph_from_arcs(["x", "y"], {"p": ("x", "y"), "q": ("x", "y")})
    homs = enumerate_homs(arc_graph(), two, arc_filter=lambda a, b: b == "q")
    assert [h.arc_map["A"] for h in homs] == ["q"]


class TestGenerators:
    def test_equal(self):
        f = identity(G32)
        assert generators_check(f, f)

    def test_parallel_arcs_distinguished(self):
        two = graph_from_arcs(["x", "y"], {"p": ("x", "y"), "q": ("x", "y")})
        f, g = enumerate_homs(arc_graph(), two)
        assert f != g and f.node_map == g.node_map
        assert not generators_check(f, g)

    def test_isolated_node_distinguished(self):
        h = graph_from_arcs(["u", "v", "w"], {"e": ("u", "v")})
        g = graph_from_arcs(["x", "y", "z"], {"f": ("x", "y")})
        f1 = Morphism(g, h, {"x": "u", "y": "v", "z": "u"}, {"f": "e"})
        f2 = Morphism(g, h, {"x": "u", "y": "v", "z": "w"}, {"f": "e"})
        assert not generators_check(f1, f2)

    def test_non_parallel(self):
        with pytest.raises(MorphismError):
            generators_check(identity(G32), identity(arc_graph()))

    def test_iff_equal_on_corpus(self, small_corpus):
        for g in small_corpus:
            for h in small_corpus:
                homs = enumerate_homs(g, h)
                for f1 in homs:
                    for f2 in homs:
                        assert generators_check(f1, f2) == (f1 == f2)


def test_matches_recursive_count(corpus):
    for g in corpus:
        for h in corpus:
            assert count_homs(g, h) == recursive_hom_count(g, h)
