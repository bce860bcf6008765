import random

import pytest
from hypothesis import settings, strategies as st

from admissible.graph_core import Graph

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, n_min=1, n_max=7, p=None):
    n = draw(st.integers(n_min, n_max))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if p is None:
        bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        seed = draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        bits = [rng.random() < p for _ in pairs]
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def brute_cut_vertices(g):
    from admissible.graph_core import components

    base = len(components(g))
    return {v for v in range(g.n) if len(components(g, [v])) > base}


@pytest.fixture
def rng():
    return random.Random(20261014)


def core_shape(core_type, ell, t_size=None):
    """The bare core graph of a type with vertex 0 as apex, plus its Core record."""
    from admissible.cores import Core
    from admissible.graph_core import build_join

    if core_type == 1:
        T = list(range(1, ell + 2))
        return build_join([{0}, T], ["independent", "clique"]), Core(1, ell, 0, frozenset(), frozenset(T))
    if core_type == 2:
        S = [1, 2]
        T = list(range(3, 3 + ell))
        g = build_join([{0}, S, T], ["independent", "independent", "clique"])
        return g, Core(2, ell, 0, frozenset(S), frozenset(T))
    t_size = t_size if t_size is not None else max(ell + 1, 2)
    T = list(range(1, 1 + t_size))
    S = list(range(1 + t_size, 1 + t_size + ell))
    g = build_join([{0}, T, S], ["independent", "independent", "independent"])
    return g, Core(3, ell, 0, frozenset(S), frozenset(T))


def fact1_instance(rng, s, t):
    """Random inputs meeting the path-combination preconditions.

    Returns ``(g, x, y, U, P, Q)``: ``P[i]`` a ``(u_i, y)``-path, semi-admissible
    lengths; ``Q[i]`` the ``t`` ``(x, u_i)``-paths avoiding ``P[i] - u_i``, with
    per-column lengths shared by all rows.  Internal vertices are drawn from a
    shared pool, so different rows and paths overlap wherever allowed.
    """
    from admissible.graph_core import Graph

    p_gap, q_gap = rng.choice((1, 2)), rng.choice((1, 2))
    p_first, q_first = rng.randint(1, 3), rng.randint(1, 3)
    p_len = [p_first + p_gap * i for i in range(s)]
    q_len = [q_first + q_gap * j for j in range(t)]
    x, y = 0, 1
    U = list(range(2, 2 + s))
    extra = max(p_len) + max(q_len) - 2 + rng.randint(0, 4)
    pool = list(range(2 + s, 2 + s + extra))
    edges = set()

    def add(path):
        for a, b in zip(path, path[1:]):
            edges.add((min(a, b), max(a, b)))

    P = []
    for i, L in enumerate(p_len):
        mid = rng.sample(pool, L - 1)
        P.append([U[i]] + mid + [y])
        add(P[-1])
    Q = []
    for i in range(s):
        free = [v for v in pool if v not in P[i]]
        row = []
        for L in q_len:
            mid = rng.sample(free, L - 1)
            row.append([x] + mid + [U[i]])
            add(row[-1])
        Q.append(row)
    return Graph.from_edges(2 + s + extra, edges), x, y, U, P, Q


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
