import networkx as nx
import pytest
from hypothesis import given

from admissible.graph_core import Graph, GraphError, complete_graph, petersen_graph
from admissible.graph_io import (
    format_edgelist,
    from_graph6,
    load_graph,
    read_edgelist,
    read_graph6_lines,
    to_graph6,
)

from conftest import graphs


def test_known_graph6_strings():
    # reference strings produced by networkx's encoder
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(petersen_graph()) == nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode().strip()
    assert to_graph6(Graph.from_edges(0, [])) == "?"
    assert from_graph6(">>graph6<<C~") == complete_graph(4)


@given(graphs(n_min=0, n_max=12, p=0.5))
def test_graph6_bit_exact_against_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert to_graph6(g) == ref
    assert from_graph6(ref) == g


def test_graph6_large_order_size_field():
    g = Graph.from_edges(70, [(0, 69), (5, 6)])
    s = to_graph6(g)
    assert s[0] == "~"
    assert from_graph6(s) == g


def test_graph6_rejects_bad_strings():
    with pytest.raises(GraphError):
        from_graph6("C~~")
    with pytest.raises(GraphError):
        from_graph6("C\x01")


def test_corpus_error_reports_line_number():
    lines = ["C~", "# comment", "D?{", "not graph6!"]
    with pytest.raises(GraphError, match="line 4"):
        list(read_graph6_lines(lines))


def test_edgelist_round_trip(tmp_path):
    g = Graph.from_edges(6, [(0, 1), (2, 3)])
    text = format_edgelist(g)
    assert read_edgelist(text) == g  # isolated 4, 5 survive via the header
    path = tmp_path / "g.txt"
    path.write_text("# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert load_graph(path) == complete_graph(4)
    path.write_text("C~\n")
    assert load_graph(path, "graph6") == complete_graph(4)


def test_edgelist_errors():
    with pytest.raises(GraphError, match="line 2"):
        read_edgelist("0 1\n1 x\n")
    with pytest.raises(GraphError):
        read_edgelist("2\n0 5\n")
    with pytest.raises(GraphError):
        read_edgelist("0 0\n")
