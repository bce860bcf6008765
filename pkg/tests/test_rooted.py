import networkx as nx
from hypothesis import given, strategies as st

from admissible.graph_core import Graph, complete_graph, cycle_graph, path_graph
from admissible.rooted import (
    NEG_INF,
    RootedGraph,
    delta,
    feasible_blocks,
    is_two_connected_plus_edge,
    is_two_connected_rooted,
    v_end_block,
)

from conftest import brute_cut_vertices, graphs


def test_rooted_examples():
    # x - a - y with x=0, a=1, y=2
    assert is_two_connected_rooted(RootedGraph(path_graph(3), 0, 2))
    # x - y - a
    assert not is_two_connected_rooted(RootedGraph(path_graph(3), 0, 1))
    k4 = complete_graph(4)
    assert all(is_two_connected_rooted(RootedGraph(k4, x, y)) for x in range(4) for y in range(4) if x != y)


@given(graphs(n_min=2, n_max=7), st.data())
def test_rooted_equals_plus_edge_criterion(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    r = RootedGraph(g, x, y)
    assert is_two_connected_rooted(r) == is_two_connected_plus_edge(r)


def test_delta_examples():
    assert delta(RootedGraph(complete_graph(4), 0, 1, 2)) == 3
    assert delta(RootedGraph(complete_graph(3), 0, 1, 2)) == NEG_INF
    assert delta(RootedGraph(cycle_graph(5), 0, 2)) == 2


def test_v_end_block_examples():
    # z - b - c - d as 0 - 1 - 2 - 3
    assert v_end_block(path_graph(4), 0) == (0, 1, 2)
    assert v_end_block(complete_graph(3), 0) is None
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert v_end_block(star, 1) == (1, 0, 0)


def test_feasible_blocks_two_connected_component():
    c = cycle_graph(5)
    out = feasible_blocks(c, 0, 2)
    assert len(out) == 1
    fb = out[0]
    assert fb.block == frozenset(range(5)) and fb.b == 0 and fb.z_prime == 2 and fb.case == "B1"


def test_feasible_blocks_chain_cases():
    # triangle {0,1,2} - cut 2 - triangle {2,3,4} - cut 4 - triangle {4,5,6}, y = 0
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
    out = {fb.block: fb for fb in feasible_blocks(g, 0, None)}
    first = out[frozenset({0, 1, 2})]
    assert (first.b, first.z_prime, first.case) == (0, 2, "B2i")
    mid = out[frozenset({2, 3, 4})]
    assert (mid.b, mid.z_prime, mid.case) == (2, 4, "B3")
    last = out[frozenset({4, 5, 6})]
    assert (last.b, last.case) == (4, "B2ii")


@given(graphs(n_min=3, n_max=7), st.data())
def test_feasible_blocks_match_definition(g, data):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    if not nx.is_connected(h):
        return
    y = data.draw(st.integers(0, g.n - 1))
    z = data.draw(st.one_of(st.none(), st.integers(0, g.n - 1).filter(lambda v: v != y)))
    cuts = brute_cut_vertices(g)
    special = cuts | {y} | ({z} if z is not None else set())
    blocks = [frozenset(c) for c in nx.biconnected_components(h)] or [frozenset(range(g.n))]
    expected = {b for b in blocks if len(b & special) <= 2 and b - special}
    got = feasible_blocks(g, y, z)
    assert {fb.block for fb in got} == expected
    for fb in got:
        assert fb.b in fb.block
        if fb.case in ("B2ii", "B3"):
            assert fb.b in cuts
