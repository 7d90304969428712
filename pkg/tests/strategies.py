"""Hypothesis strategies for random small graphs."""

from hypothesis import strategies as st

from graphtopos.graph import Graph, graph_from_arcs


@st.composite
def small_graphs(draw, max_nodes=4, max_arcs=5):
    n = draw(st.integers(0, max_nodes))
    nodes = [f"n{i}" for i in range(n)]
    if not nodes:
        return Graph([], [], {}, {})
    m = draw(st.integers(0, max_arcs))
    arcs = {f"a{k}": (draw(st.sampled_from(nodes)), draw(st.sampled_from(nodes))) for k in range(m)}
    return graph_from_arcs(nodes, arcs)
