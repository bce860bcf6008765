import pytest
from hypothesis import given, strategies as st

from admissible.cores import (
    CoreError,
    all_cores,
    apply_condition_T,
    find_core,
    is_valid_core,
    paths_x_to_S,
    paths_x_to_T,
)
from admissible.graph_core import Graph, build_join, complete_graph
from admissible.oracle import path_length_spectrum

from conftest import core_shape, graphs


def _rank(c):
    if c.core_type == 3:
        return (3, -len(c.s_set), -len(c.t_set), c.key())
    return (c.core_type, -len(c.t_set), c.key())


def test_find_core_examples():
    c = find_core(complete_graph(4), 0, 1)
    assert (c.core_type, c.ell, c.t_set) == (1, 1, {2, 3})
    star = Graph.from_edges(4, [(0, 1), (0, 2), (3, 1)])
    c = find_core(star, 0, 3)
    assert (c.core_type, c.ell, c.t_set, c.s_set) == (3, 0, {1, 2}, frozenset())


@given(graphs(n_min=3, n_max=7), st.data())
def test_find_core_is_optimal_among_all_cores(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    found = find_core(g, x, y)
    every = all_cores(g, x, y)
    if not every:
        assert found is None
        return
    assert found is not None and is_valid_core(g, found, y)
    assert _rank(found) == min(map(_rank, every))


@given(graphs(n_min=3, n_max=7), st.data())
def test_core_exists_when_x_has_two_neighbors_off_y(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    if len(g.adj[x]) >= 2 and not g.has_edge(x, y):
        assert find_core(g, x, y) is not None


def _fig3(t_size):
    # x=0, T independent, S independent of size 2, y joined to T, pendant d0 on one T vertex
    T = list(range(1, 1 + t_size))
    S = [1 + t_size, 2 + t_size]
    y, d0 = 3 + t_size, 4 + t_size
    g = build_join([{0}, T, S], ["independent"] * 3, n=d0 + 1)
    g = g.with_edges([(y, t) for t in T] + [(d0, T[1])])
    return g, y, T, S


def test_condition_T_M1():
    g, y, T, S = _fig3(3)
    core = find_core(g, 0, y)
    assert (core.core_type, core.ell) == (3, 2)
    flat = apply_condition_T(g, core, y, None)
    assert flat.flat and flat.rule == "M1"
    assert flat.ell == 1 and flat.t0 == T[1] and flat.s0 == S[0]
    assert flat.t_set == set(T) - {T[1]} and flat.s_set == {S[1]}
    assert is_valid_core(g, flat, y)


def test_condition_T_M2():
    g, y, T, S = _fig3(4)
    core = find_core(g, 0, y)
    flat = apply_condition_T(g, core, y, None)
    assert flat.rule == "M2" and flat.ell == 2 and flat.s0 is None
    assert flat.t_set == set(T) - {T[1]}
    assert is_valid_core(g, flat, y)


def test_condition_T_identity_cases():
    g, y, T, S = _fig3(3)
    bigger = g.with_edges([(y, g.n - 1)])  # y now shares a component with the pendant
    core = find_core(bigger, 0, y)
    assert not apply_condition_T(bigger, core, y, None).flat
    # the only outside component is the exempt vertex itself
    core = find_core(g, 0, y)
    assert not apply_condition_T(g, core, y, g.n - 1).flat
    with pytest.raises(CoreError):
        apply_condition_T(complete_graph(4), find_core(complete_graph(4), 0, 1), 1, None)


@given(graphs(n_min=4, n_max=8, p=0.5), st.data())
def test_condition_T_keeps_a_valid_type3_core(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    core = find_core(g, x, y)
    if core is None or core.core_type != 3:
        return
    z = data.draw(st.one_of(st.none(), st.integers(0, g.n - 1)))
    out = apply_condition_T(g, core, y, z)
    assert out.core_type == 3 and is_valid_core(g, out, y)


def test_paths_to_S_examples():
    g, core = core_shape(2, 2)
    assert [p.length for p in paths_x_to_S(core, 1)] == [3, 4]
    g, core = core_shape(3, 1)
    for t in core.T:
        (p,) = paths_x_to_S(core, core.S[0], forbidden_t=t)
        assert p.length == 2 and t not in p and p.is_valid_in(g)
    g, core = core_shape(3, 3)
    spec = path_length_spectrum(g, 0, core.S[0])
    paths = paths_x_to_S(core, core.S[0])
    assert [p.length for p in paths] == [2, 4, 6]
    assert all(p.is_valid_in(g) and p.length in spec for p in paths)


def test_paths_to_T_examples():
    g, core = core_shape(1, 2)
    assert paths_x_to_T(core, 1).lengths == [1, 2, 3]
    g, core = core_shape(3, 0)
    assert paths_x_to_T(core, 1).lengths == [1]
    g, core = core_shape(3, 2, t_size=4)
    fam = paths_x_to_T(core, 1, forbidden_t=4)
    assert fam.lengths == [1, 3, 5]
    assert all(4 not in p and p.is_valid_in(g) for p in fam)


def test_builder_errors():
    g, core = core_shape(1, 2)
    with pytest.raises(CoreError):
        paths_x_to_S(core, 1)
    g, core = core_shape(2, 2)
    with pytest.raises(CoreError):
        paths_x_to_S(core, 3)
    with pytest.raises(CoreError):
        paths_x_to_T(core, 1)
    g, core = core_shape(3, 2)  # |T| = 3 < ℓ + 2
    with pytest.raises(CoreError):
        paths_x_to_T(core, 1, forbidden_t=2)
