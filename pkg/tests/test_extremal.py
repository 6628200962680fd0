import io
import random

import pytest

from pebblekit import (
    bipartite_extremal,
    bipartite_extremal_config,
    general_extremal,
    general_extremal_config,
    is_r_solvable,
    read_roles,
    write_roles,
)
from helpers import floyd_warshall_diameter


class TestBipartiteStructure:
    def test_block_sizes(self):
        for m in (7, 8):
            lg = bipartite_extremal(m)
            assert len(lg.role_set("L")) == len(lg.role_set("R")) == m
            assert len(lg.role_set("L1")) == len(lg.role_set("R1")) == (m + 1) // 2
            assert len(lg.role_set("L2")) == len(lg.role_set("R2")) == m // 2

    def test_special_vertices_in_their_blocks(self):
        lg = bipartite_extremal(9)
        assert lg.role_vertex("x") in lg.role_set("L1")
        assert lg.role_vertex("y") in lg.role_set("R1")
        assert lg.role_vertex("w") in lg.role_set("L2")
        assert lg.role_vertex("z") in lg.role_set("R2")

    def test_missing_and_cross_edges(self):
        lg = bipartite_extremal(8)
        g = lg.graph
        x, y = lg.role_vertex("x"), lg.role_vertex("y")
        w, z = lg.role_vertex("w"), lg.role_vertex("z")
        assert not g.has_edge(x, y)
        assert not g.has_edge(w, z)
        assert g.has_edge(w, y)
        assert g.has_edge(x, z)
        # the blocks are otherwise complete bipartite
        for u in lg.role_set("L1"):
            for v in lg.role_set("R1"):
                assert g.has_edge(u, v) == ((u, v) != (x, y))

    def test_bipartite_no_side_edges(self):
        lg = bipartite_extremal(7)
        left = lg.role_set("L")
        for u, v in lg.graph.edges():
            assert (u in left) != (v in left)

    def test_edge_count_closed_form(self):
        # ceil(m/2)^2 - 1 + floor(m/2)^2 - 1 + 2
        for m in range(4, 13):
            g = bipartite_extremal(m).graph
            h = (m + 1) // 2
            assert g.num_edges == h * h + (m - h) * (m - h)
        assert bipartite_extremal(8).graph.num_edges == 2 * (4 * 4 - 1) + 2

    def test_degree_spectrum_closed_form(self):
        for m in range(4, 41):
            g = bipartite_extremal(m).graph
            h = (m + 1) // 2
            degrees = sorted(g.degree(v) for v in range(g.n))
            expected = sorted([m // 2] * (2 * (m - h)) + [h] * (2 * h))
            assert degrees == expected
            assert g.min_degree() == m // 2

    def test_regular_when_even(self):
        g = bipartite_extremal(8).graph
        assert {g.degree(v) for v in range(g.n)} == {4}

    def test_connected_and_diameter(self):
        # the two cross edges are the only bridges between the blocks, which
        # forces same-side block-to-block distances up to 4
        for m in (7, 8):
            g = bipartite_extremal(m).graph
            assert g.is_connected()
            assert g.diameter() == 4
            assert g.diameter() == floyd_warshall_diameter(g)

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            bipartite_extremal(1)


class TestBipartiteConfig:
    def test_size_is_vertex_count(self):
        cfg, _ = bipartite_extremal_config(7)
        assert cfg.size == 14

    def test_exactly_five_zeros(self):
        cfg, root = bipartite_extremal_config(7)
        zeros = [v for v in range(len(cfg)) if cfg[v] == 0]
        assert len(zeros) == 5
        lg = bipartite_extremal(7)
        assert set(zeros) == {
            root,
            lg.role_vertex("w"),
            lg.role_vertex("x"),
            lg.role_vertex("y"),
            lg.role_vertex("z"),
        }

    def test_pile_layout(self):
        cfg, _ = bipartite_extremal_config(8)
        counts = sorted(cfg.counts, reverse=True)
        assert counts[:3] == [3, 3, 2]
        assert all(c in (0, 1) for c in counts[3:])

    def test_root_in_l2(self):
        lg = bipartite_extremal(9)
        _, root = bipartite_extremal_config(9)
        assert root in lg.role_set("L2") and root != lg.role_vertex("w")

    def test_requires_m_at_least_7(self):
        with pytest.raises(ValueError, match="m >= 7"):
            bipartite_extremal_config(6)

    def test_unsolvable_m8(self):
        cfg, root = bipartite_extremal_config(8)
        ok, _ = is_r_solvable(bipartite_extremal(8).graph, cfg, root)
        assert not ok

    def test_unsolvable_any_admissible_choice(self):
        # the canonical choice is lowest-index; the property holds for all
        rng = random.Random(424)
        lg = bipartite_extremal(7)
        g = lg.graph
        pool = sorted(lg.role_set("L1") - {lg.role_vertex("x")})
        roots = sorted(lg.role_set("L2") - {lg.role_vertex("w")})
        for _ in range(5):
            piles = rng.sample(pool, 3)
            root = rng.choice(roots)
            cfg, r = bipartite_extremal_config(7, piles=piles, root=root)
            assert r == root
            ok, _ = is_r_solvable(g, cfg, r)
            assert not ok

    def test_rejects_inadmissible_choices(self):
        lg = bipartite_extremal(8)
        x = lg.role_vertex("x")
        with pytest.raises(ValueError, match="admissible"):
            bipartite_extremal_config(8, piles=[x, 2, 3])
        with pytest.raises(ValueError, match="admissible"):
            bipartite_extremal_config(8, root=lg.role_vertex("w"))
        with pytest.raises(ValueError, match="distinct"):
            bipartite_extremal_config(8, piles=[1, 1, 2])


class TestGeneralStructure:
    def test_block_sizes(self):
        for n in (9, 10):
            lg = general_extremal(n)
            assert len(lg.role_set("L")) == (n + 1) // 2
            assert len(lg.role_set("R")) == n // 2

    def test_missing_and_cross_edges(self):
        lg = general_extremal(10)
        g = lg.graph
        x, y = lg.role_vertex("x"), lg.role_vertex("y")
        w, z = lg.role_vertex("w"), lg.role_vertex("z")
        assert not g.has_edge(x, y)
        assert not g.has_edge(w, z)
        assert g.has_edge(w, y)
        assert g.has_edge(x, z)

    def test_blocks_are_near_cliques(self):
        lg = general_extremal(9)
        g = lg.graph
        left = sorted(lg.role_set("L"))
        x, y = lg.role_vertex("x"), lg.role_vertex("y")
        for i, u in enumerate(left):
            for v in left[i + 1 :]:
                assert g.has_edge(u, v) == ({u, v} != {x, y})

    def test_edge_count_closed_form(self):
        from math import comb

        for n in range(4, 41):
            g = general_extremal(n).graph
            half = (n + 1) // 2
            assert g.num_edges == comb(half, 2) + comb(n - half, 2)

    def test_degree_spectrum_closed_form(self):
        for n in range(4, 41):
            g = general_extremal(n).graph
            half = (n + 1) // 2
            degrees = sorted(g.degree(v) for v in range(g.n))
            expected = sorted([half - 1] * half + [n - half - 1] * (n - half))
            assert degrees == expected
        assert general_extremal(10).graph.min_degree() == 4

    def test_regular_when_even(self):
        g = general_extremal(12).graph
        assert {g.degree(v) for v in range(12)} == {5}

    def test_connected_and_diameter(self):
        g = general_extremal(9).graph
        assert g.is_connected() and g.n == 9
        # one degree under n/2 breaks the shared-neighbor guarantee, so the
        # diameter is 3, not 2
        assert g.diameter() == 3
        assert g.diameter() == floyd_warshall_diameter(g)


class TestGeneralConfig:
    def test_size_is_vertex_count(self):
        cfg, _ = general_extremal_config(9)
        assert cfg.size == 9

    def test_root_is_lowest_admissible(self):
        lg = general_extremal(9)
        _, root = general_extremal_config(9)
        pool = sorted(lg.role_set("R") - {lg.role_vertex("w"), lg.role_vertex("z")})
        assert root == pool[0]

    def test_requires_n_at_least_9(self):
        with pytest.raises(ValueError, match="n >= 9"):
            general_extremal_config(8)

    def test_unsolvable_all_sizes(self):
        for n in range(9, 13):
            cfg, root = general_extremal_config(n)
            ok, _ = is_r_solvable(general_extremal(n).graph, cfg, root)
            assert not ok

    def test_unsolvable_any_admissible_choice(self):
        rng = random.Random(425)
        for n in (9, 10):
            lg = general_extremal(n)
            pool = sorted(
                lg.role_set("L") - {lg.role_vertex("x"), lg.role_vertex("y")}
            )
            roots = sorted(
                lg.role_set("R") - {lg.role_vertex("w"), lg.role_vertex("z")}
            )
            for _ in range(5):
                piles = rng.sample(pool, 3)
                root = rng.choice(roots)
                cfg, r = general_extremal_config(n, piles=piles, root=root)
                ok, _ = is_r_solvable(lg.graph, cfg, r)
                assert not ok


class TestRolesFormat:
    def test_round_trip(self):
        lg = general_extremal(9)
        buf = io.StringIO()
        write_roles(lg.roles, buf)
        parsed = read_roles(io.StringIO(buf.getvalue()))
        assert parsed["x"] == (lg.role_vertex("x"),)
        assert set(parsed["L"]) == set(lg.role_set("L"))
        assert set(parsed["R"]) == set(lg.role_set("R"))

    def test_canonical_output(self):
        lg = bipartite_extremal(7)
        a, b = io.StringIO(), io.StringIO()
        write_roles(lg.roles, a)
        write_roles(dict(reversed(list(lg.roles.items()))), b)
        assert a.getvalue() == b.getvalue()
