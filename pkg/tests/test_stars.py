import random

import pytest

from pebblekit import (
    Configuration,
    Graph,
    Part,
    StarPartition,
    build_star_partition,
    complete,
    complete_bipartite,
    cycle,
    is_solvable,
    random_connected_min_degree,
    star_sufficient_solvable,
    verify_star_partition,
)
from pebblekit.thresholds import sample_uniform_config, trial_rng


def two_cliques_joined(bridge):
    """Two K_5s (0-4 and 5-9) plus one bridge edge."""
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(u, v) for u in range(5, 10) for v in range(u + 1, 10)]
    edges.append(bridge)
    return Graph(10, edges)


class TestBuild:
    def test_clique_single_part(self):
        p = build_star_partition(complete(5))
        assert p.num_parts == 1
        assert p.parts[0] == Part(0, frozenset(range(5)))
        assert p.leftover == frozenset()

    def test_star_hub_first(self):
        p = build_star_partition(complete_bipartite(1, 4))
        assert p.num_parts == 1
        assert p.parts[0].center == 0
        assert p.leftover == frozenset()

    def test_star_hub_last(self):
        # leaves numbered first: the first part is {leaf 0, hub}, the other
        # leaves land in W but all touch the hub
        g = Graph(5, [(i, 4) for i in range(4)])
        p = build_star_partition(g)
        assert p.parts == (Part(0, frozenset({0, 4})),)
        assert p.leftover == frozenset({1, 2, 3})
        assert verify_star_partition(g, p, 2)

    def test_two_cliques_far_bridge(self):
        p = build_star_partition(two_cliques_joined((4, 5)))
        assert p.parts == (
            Part(0, frozenset({0, 1, 2, 3, 4})),
            Part(6, frozenset({5, 6, 7, 8, 9})),
        )
        assert p.leftover == frozenset()
        assert p.num_parts <= 10 / 5

    def test_two_cliques_near_bridge(self):
        p = build_star_partition(two_cliques_joined((0, 5)))
        assert p.parts == (Part(0, frozenset({0, 1, 2, 3, 4, 5})),)
        assert p.leftover == frozenset({6, 7, 8, 9})
        assert verify_star_partition(two_cliques_joined((0, 5)), p, 5)

    def test_deterministic(self):
        g = random_connected_min_degree(20, 4, seed=77)
        assert build_star_partition(g) == build_star_partition(g)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            build_star_partition(Graph(4, [(0, 1), (2, 3)]))

    def test_guarantees_on_random_graphs(self):
        rng = random.Random(321)
        for _ in range(30):
            n = rng.randint(8, 40)
            delta = rng.randint(3, max(3, n // 3))
            g = random_connected_min_degree(n, delta, seed=rng.randrange(2**32))
            d = g.min_degree()
            p = build_star_partition(g)
            assert verify_star_partition(g, p, d + 1)
            assert p.num_parts <= g.n / (d + 1)


class TestVerify:
    def test_uncovered_leftover(self):
        g = cycle(5)
        p = StarPartition((Part(0, frozenset({0, 1, 4})),), frozenset({2, 3}))
        assert verify_star_partition(g, p, 3)
        # on C_6 the same shape leaves vertex 3 without an assigned neighbor
        bad = StarPartition((Part(0, frozenset({0, 1, 5})),), frozenset({2, 3, 4}))
        assert not verify_star_partition(cycle(6), bad, 3)

    def test_overlapping_parts(self):
        g = complete(4)
        p = StarPartition(
            (Part(0, frozenset({0, 1})), Part(1, frozenset({1, 2, 3}))),
            frozenset(),
        )
        assert not verify_star_partition(g, p, 2)

    def test_not_a_cover(self):
        g = complete(4)
        p = StarPartition((Part(0, frozenset({0, 1})),), frozenset({2}))
        assert not verify_star_partition(g, p, 2)

    def test_center_outside_members(self):
        g = complete(4)
        p = StarPartition((Part(0, frozenset({1, 2, 3})),), frozenset({0}))
        assert not verify_star_partition(g, p, 2)

    def test_star_size_threshold(self):
        g = cycle(6)
        p = build_star_partition(g)
        assert verify_star_partition(g, p, 3)
        assert not verify_star_partition(g, p, 4)


class TestSufficiency:
    def test_four_on_every_center(self):
        g = complete(6)
        p = build_star_partition(g)
        counts = [0] * 6
        counts[p.parts[0].center] = 4
        assert star_sufficient_solvable(g, p, counts)

    def test_all_zero(self):
        g = complete(6)
        p = build_star_partition(g)
        assert not star_sufficient_solvable(g, p, [0] * 6)

    def test_doubles_on_leaves(self):
        # eight leaves with two pebbles each forward 8 to the center
        g = complete_bipartite(8, 8)
        p = build_star_partition(g)
        assert p.num_parts == 1
        center = p.parts[0].center
        counts = [0] * 16
        placed = 0
        for v in sorted(p.parts[0].members):
            if v != center and placed < 8:
                counts[v] = 2
                placed += 1
        assert placed == 8
        assert star_sufficient_solvable(g, p, counts)
        assert is_solvable(g, counts)

    def test_unverified_partition_raises(self):
        g = complete(4)
        bogus = StarPartition((Part(0, frozenset({0, 1})),), frozenset({2}))
        with pytest.raises(ValueError, match="verify"):
            star_sufficient_solvable(g, bogus, [4, 0, 0, 0])

    def test_soundness_sample(self):
        rng = random.Random(333)
        fired = 0
        for i in range(150):
            n = rng.randint(4, 10)
            delta = rng.randint(1, max(1, n // 2))
            g = random_connected_min_degree(n, delta, seed=rng.randrange(2**32))
            p = build_star_partition(g)
            t = rng.randint(0, 10)
            cfg = sample_uniform_config(n, t, trial_rng(777, n, t, i))
            if star_sufficient_solvable(g, p, cfg):
                fired += 1
                assert is_solvable(g, cfg)
        assert fired > 0

    def test_nonadjacent_members_do_not_contribute(self):
        # path 0-1-2: part {0,1,2} centered at 1 is a valid star, but a pile
        # on 2 feeds the center only via the 1-2 edge; a pile on an
        # artificial non-neighbor member must be ignored
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        p = StarPartition(
            (Part(1, frozenset({0, 1, 2, 3})),),
            frozenset(),
        )
        assert verify_star_partition(g, p, 3)
        # vertex 3 is not adjacent to center 1: its 8 pebbles do not count
        assert not star_sufficient_solvable(g, p, [0, 0, 0, 8])
        # but 8 on vertex 2 (adjacent) forwards 4
        assert star_sufficient_solvable(g, p, [0, 0, 8, 0])
