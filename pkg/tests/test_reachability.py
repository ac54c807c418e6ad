import numpy as np
import pytest

from kdom import (ReachabilityParams, WeightedRoadNetwork, bounded_sssp,
                  build_reachability, reverse)

from helpers import floyd_warshall


def path_network():
    return WeightedRoadNetwork.from_arcs(3, [(0, 1, 1.0), (1, 2, 1.0)])


def random_network(rng, n):
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < 0.15:
                arcs.append((u, v, float(rng.integers(1, 6))))
    return arcs, WeightedRoadNetwork.from_arcs(n, arcs)


# ---- bounded shortest paths ---------------------------------------------------

def test_path_within_radius():
    assert bounded_sssp(path_network(), 0, 1.5) == [(1, 1.0)]


def test_path_radius_covers_both():
    assert bounded_sssp(path_network(), 0, 2.0) == [(1, 1.0), (2, 2.0)]


def test_tiny_radius_reaches_nothing():
    assert bounded_sssp(path_network(), 0, 0.5) == []


def test_boundary_distance_included():
    # d == r counts as reachable
    assert (2, 2.0) in bounded_sssp(path_network(), 0, 2.0)


def test_sssp_validation():
    net = path_network()
    with pytest.raises(ValueError):
        bounded_sssp(net, 5, 1.0)
    with pytest.raises(ValueError):
        bounded_sssp(net, 0, 0.0)


def test_sssp_matches_floyd_warshall():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        arcs, net = random_network(rng, n)
        dist = floyd_warshall(n, arcs)
        for source in range(0, n, 3):
            for radius in (1.0, 3.0, 7.5):
                got = dict(bounded_sssp(net, source, radius))
                want = {v: dist[source, v] for v in range(n)
                        if v != source and dist[source, v] <= radius}
                assert got == want


# ---- reachability digraph builder ----------------------------------------------

def test_build_path_example():
    d = build_reachability(path_network(), ReachabilityParams(1.5))
    assert sorted(d.arcs()) == [(0, 1), (1, 2)]


def test_build_with_reversal():
    d = build_reachability(path_network(),
                           ReachabilityParams(1.5, reverse_for_destinations=True))
    assert sorted(d.arcs()) == [(1, 0), (2, 1)]


def test_two_way_street_unchanged_by_reversal():
    net = WeightedRoadNetwork.from_arcs(2, [(0, 1, 1.0), (1, 0, 1.0)])
    plain = build_reachability(net, ReachabilityParams(1.5))
    flipped = build_reachability(net, ReachabilityParams(1.5, reverse_for_destinations=True))
    assert sorted(plain.arcs()) == sorted(flipped.arcs()) == [(0, 1), (1, 0)]


def test_no_transitive_closure():
    net = path_network()
    d = build_reachability(net, ReachabilityParams(1.2))
    assert d.has_arc(0, 1) and d.has_arc(1, 2)
    assert not d.has_arc(0, 2)  # 0 -> 2 costs 2.0 > 1.2


def test_monotone_in_radius():
    rng = np.random.default_rng(11)
    for _ in range(10):
        n = int(rng.integers(2, 25))
        _, net = random_network(rng, n)
        small = build_reachability(net, ReachabilityParams(2.0))
        large = build_reachability(net, ReachabilityParams(5.0))
        assert set(small.arcs()) <= set(large.arcs())


def test_matches_floyd_warshall_reference():
    rng = np.random.default_rng(23)
    for _ in range(15):
        n = int(rng.integers(2, 40))
        arcs, net = random_network(rng, n)
        dist = floyd_warshall(n, arcs)
        for radius in (2.0, 4.0, 6.0):
            built = set(build_reachability(net, ReachabilityParams(radius)).arcs())
            want = {(u, v) for u in range(n) for v in range(n)
                    if u != v and dist[u, v] <= radius}
            assert built == want


def test_thread_count_does_not_change_result():
    rng = np.random.default_rng(31)
    _, net = random_network(rng, 30)
    params = ReachabilityParams(4.0)
    assert build_reachability(net, params, threads=1) == \
        build_reachability(net, params, threads=4)


def test_reversal_is_reverse_of_plain():
    rng = np.random.default_rng(37)
    _, net = random_network(rng, 20)
    plain = build_reachability(net, ReachabilityParams(3.0))
    flipped = build_reachability(net, ReachabilityParams(3.0, reverse_for_destinations=True))
    assert flipped == reverse(plain)


# ---- network construction -------------------------------------------------------

def test_negative_weight_rejected_naming_arc():
    with pytest.raises(ValueError, match=r"\(0, 1\)"):
        WeightedRoadNetwork.from_arcs(2, [(0, 1, -0.5)])


def test_zero_weight_accepted():
    net = WeightedRoadNetwork.from_arcs(2, [(0, 1, 0.0)])
    assert bounded_sssp(net, 0, 1.0) == [(1, 0.0)]


def test_duplicate_arcs_keep_minimum_weight():
    net = WeightedRoadNetwork.from_arcs(2, [(0, 1, 5.0), (0, 1, 2.0), (0, 1, 9.0)])
    assert net.digraph.m == 1
    assert net.weights.tolist() == [2.0]


def test_params_validation():
    with pytest.raises(ValueError):
        ReachabilityParams(0.0)
