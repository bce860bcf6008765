import random
from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from admissible import extractor
from admissible.extractor import (
    CycleCertificate,
    ExtractionFailure,
    Fact1Error,
    HypothesisError,
    PathCertificate,
    combine_fact1,
    find_admissible_cycles,
    find_admissible_paths,
    format_certificate,
    parse_certificate,
    validate,
)
from admissible.graph_core import Graph, OrientedPath, build_join, complete_graph, cycle_graph, is_connected
from admissible.graph_io import from_graph6
from admissible.oracle import LengthSpectrum, cycle_length_spectrum, path_length_spectrum, select_admissible_run
from admissible.rooted import RootedGraph, delta, is_two_connected_rooted

from conftest import fact1_instance, graphs, random_graph


def test_validate_examples():
    k4 = complete_graph(4)
    good = PathCertificate(k4, 0, 1, (OrientedPath([0, 2, 1]), OrientedPath([0, 2, 3, 1])), 2)
    assert validate(good)
    repeated = PathCertificate(k4, 0, 1, (OrientedPath([0, 2, 0, 1]), OrientedPath([0, 2, 3, 1])), 2)
    v = validate(repeated)
    assert not v and any("not a simple path" in p for p in v.problems)
    k6 = complete_graph(6)
    mixed = PathCertificate(k6, 0, 1, tuple(OrientedPath(p) for p in ([0, 2, 1], [0, 2, 3, 1], [0, 2, 3, 4, 5, 1])), 3)
    assert any("not admissible" in p for p in validate(mixed).problems)
    cyc = CycleCertificate(k4, ((0, 1, 2), (0, 1, 2, 3)), 2)
    assert validate(cyc)
    assert not validate(CycleCertificate(cycle_graph(5), ((0, 1, 3),), 1))


def _lengths_case(p_len, q_len):
    # deterministic layout with the requested lengths, all internals fresh
    s, t = len(p_len), len(q_len)
    x, y = 0, 1
    nxt = [2 + s]
    edges = []
    P, Q = [], []

    def fresh(k):
        out = list(range(nxt[0], nxt[0] + k))
        nxt[0] += k
        return out

    for i, L in enumerate(p_len):
        P.append([2 + i] + fresh(L - 1) + [y])
    for i in range(s):
        Q.append([[x] + fresh(L - 1) + [2 + i] for L in q_len])
    for path in P + [q for row in Q for q in row]:
        edges += list(zip(path, path[1:]))
    return Graph.from_edges(nxt[0], edges), x, y, list(range(2, 2 + s)), P, Q


def test_combine_fact1_examples():
    g, x, y, U, P, Q = _lengths_case([2], [1])
    cert = combine_fact1(g, x, y, U, P, Q)
    assert cert.k == 1 and cert.lengths == [3]

    g, x, y, U, P, Q = _lengths_case([3, 4], [1, 2, 3])
    cert = combine_fact1(g, x, y, U, P, Q)
    assert cert.lengths == [4, 5, 6, 7] and validate(cert)

    g, x, y, U, P, Q = _lengths_case([2, 4, 6], [1, 3])
    cert = combine_fact1(g, x, y, U, P, Q)
    assert cert.lengths == [3, 5, 7, 9] and validate(cert)


def test_combine_fact1_errors():
    g, x, y, U, P, Q = _lengths_case([3, 4], [1, 2, 3])
    bad = [Q[0], [Q[1][1], Q[1][0], Q[1][2]]]
    with pytest.raises(Fact1Error):
        combine_fact1(g, x, y, U, P, bad)
    short = [Q[0], Q[1][:2]]
    with pytest.raises(Fact1Error):
        combine_fact1(g, x, y, U, P, short)
    # a Q path running through P_0's interior makes the glued walk repeat a vertex
    k = complete_graph(6)
    with pytest.raises(Fact1Error, match="repeats a vertex"):
        combine_fact1(k, 0, 1, [2], [[2, 3, 1]], [[[0, 3, 2]]])


@pytest.mark.parametrize("seed", range(40))
def test_combine_fact1_random_matches_brute_force(seed):
    rng = random.Random(seed)
    s, t = rng.randint(1, 5), rng.randint(1, 5)
    g, x, y, U, P, Q = fact1_instance(rng, s, t)
    cert = combine_fact1(g, x, y, U, P, Q)
    assert validate(cert) and cert.k == s + t - 1
    # brute-force schedule existence over all (i, j)
    sums = {len(Q[i][j]) - 1 + len(P[i]) - 1 for i, j in product(range(s), range(t))}
    assert select_admissible_run(sums, s + t - 1, 2) is not None


def test_find_paths_examples():
    cert = find_admissible_paths(RootedGraph(complete_graph(4), 0, 1, 2), 2)
    assert cert.lengths == [2, 3]
    # x v T v S, T = {1, 2}, S = {3}, y = 4 joined to T; s = 3 has degree 2 so it is the exempt z
    g = build_join([{0}, {1, 2}, {3}], ["independent"] * 3, n=5).with_edges([(4, 1), (4, 2)])
    cert = find_admissible_paths(RootedGraph(g, 0, 4, 3), 2)
    assert cert.lengths == [2, 4]
    # k = 1 with xy an edge still needs a path of length >= 2
    (p,) = find_admissible_paths(RootedGraph(cycle_graph(6), 0, 1), 1).paths
    assert p.length == 5


def test_find_paths_hypothesis_errors():
    with pytest.raises(HypothesisError):
        find_admissible_paths(RootedGraph(Graph.from_edges(3, [(0, 1), (1, 2)]), 0, 1), 1)
    with pytest.raises(HypothesisError):
        find_admissible_paths(RootedGraph(complete_graph(4), 0, 1), 3)
    with pytest.raises(HypothesisError):
        find_admissible_paths(RootedGraph(complete_graph(3), 0, 1, 2), 1)  # δ = -inf


def test_internal_failure_carries_instance(monkeypatch):
    monkeypatch.setattr(extractor, "path_length_spectrum", lambda g, x, y: LengthSpectrum((), "path", {}))
    with pytest.raises(ExtractionFailure) as info:
        find_admissible_paths(RootedGraph(complete_graph(5), 0, 1), 2)
    inst = info.value.instance
    assert from_graph6(inst["graph6"]) == complete_graph(5)
    assert (inst["x"], inst["y"], inst["k"]) == (0, 1, 2)


def test_root_strip_reduction():
    # x, y both see exactly {a, b}; the rest is a K7 containing a, b
    g = complete_graph(7)
    g = Graph.from_edges(9, list(g.edges()) + [(7, 0), (7, 1), (8, 0), (8, 1)])
    cert = find_admissible_paths(RootedGraph(g, 7, 8), 3, threshold=3)
    assert validate(cert)
    assert any("root-strip" in t for t in cert.trace)


def _stress(seed, count, threshold):
    rng = random.Random(seed)
    used = Counter()
    checked = 0
    while checked < count:
        n = rng.randint(6, 11)
        # chains of dense blobs give cut vertices and feasible blocks
        g = random_graph(rng, n, rng.uniform(0.45, 0.9))
        if rng.random() < 0.5:
            a = random_graph(rng, rng.randint(3, 6), 0.85)
            off = g.n
            edges = list(g.edges()) + [(u + off, v + off) for u, v in a.edges()]
            edges += [(rng.randrange(off), off + rng.randrange(a.n)) for _ in range(rng.randint(1, 2))]
            g = Graph.from_edges(off + a.n, set(edges))
        x, y = rng.sample(range(g.n), 2)
        z = rng.choice([None] + [v for v in range(g.n) if v not in (x, y)])
        r = RootedGraph(g, x, y, z)
        if not is_two_connected_rooted(r) or delta(r) < 2:
            continue
        k = rng.randint(1, min(5, int(delta(r)) - 1))
        cert = find_admissible_paths(r, k, threshold)
        assert validate(cert), cert
        if g.n <= 16:
            assert set(cert.lengths) <= set(path_length_spectrum(g, x, y).lengths)
        for step in cert.trace:
            words = step.split()
            used[" ".join(words[:2]) if words[0].startswith("core") else words[0]] += 1
        checked += 1
    return used


def test_reductions_are_sound_and_exercised():
    used = _stress(7, 600, threshold=3)
    kinds = set(used)
    for needed in ("cut-split", "edge-delete", "k1-path"):
        assert needed in kinds, used
    assert any(k.endswith("direct") for k in kinds), used
    assert any(k.endswith("contract") for k in kinds), used


@given(graphs(n_min=3, n_max=7, p=0.6), st.data())
def test_find_paths_sound_with_default_threshold(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    z = data.draw(st.one_of(st.none(), st.integers(0, g.n - 1)))
    r = RootedGraph(g, x, y, z)
    if not is_two_connected_rooted(r) or delta(r) < 2:
        return
    for k in range(1, int(delta(r))):
        assert validate(find_admissible_paths(r, k))


def test_cycles_examples():
    assert find_admissible_cycles(complete_graph(4), 2).lengths == [3, 4]
    assert find_admissible_cycles(complete_graph(5), 3).lengths == [3, 4, 5]
    with pytest.raises(HypothesisError):
        find_admissible_cycles(cycle_graph(5), 2)
    with pytest.raises(HypothesisError):
        find_admissible_cycles(complete_graph(4), 1)


def test_cycles_two_k5_blocks():
    edges = list(complete_graph(5).edges()) + [(u + 4, v + 4) for u, v in complete_graph(5).edges()]
    g = Graph.from_edges(9, edges)  # vertex 4 is the shared cut vertex
    cert = find_admissible_cycles(g, 3, threshold=3)
    assert validate(cert) and len(cert.cycles) == 3
    sides = [set(range(5)), set(range(4, 9))]
    assert any(all(set(c) <= side for c in cert.cycles) for side in sides)


@pytest.mark.parametrize("seed", range(3))
def test_cycles_construction_is_sound(seed):
    rng = random.Random(seed)
    done = 0
    while done < 150:
        g = random_graph(rng, rng.randint(4, 11), rng.uniform(0.3, 0.9))
        if not is_connected(g):
            continue
        for k in (2, 3, 4):
            if sum(len(a) < k + 1 for a in g.adj) > 2:
                continue
            cert = find_admissible_cycles(g, k, threshold=3)
            assert validate(cert)
            assert set(cert.lengths) <= set(cycle_length_spectrum(g).lengths)
            done += 1


def test_certificate_text_round_trip():
    k4 = complete_graph(4)
    cert = find_admissible_paths(RootedGraph(k4, 0, 1, 2), 2)
    text = format_certificate(cert)
    assert text.splitlines()[0] == "2 0 1"
    back = parse_certificate(text, k4)
    assert back == cert and validate(back)
    cyc = find_admissible_cycles(k4, 2)
    text = format_certificate(cyc)
    assert text.splitlines()[0] == "2" and len(text.splitlines()[1].split()) == 3
    assert parse_certificate(text, k4) == cyc
    with pytest.raises(ValueError):
        parse_certificate("1 2\n0 1\n", k4)
