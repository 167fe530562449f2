import math
from fractions import Fraction
from itertools import combinations, product

import pytest

from crossings import (
    degree_stats,
    disjoint_union,
    erdos_renyi,
    format_edge_list,
    from_edge_list,
    from_graph6,
    from_pruefer,
    gen_family,
    is_q_zero,
    parse_edge_list,
    q_edge,
    size_q,
    to_graph6,
)
from crossings.graphs import GraphFormatError

from conftest import nx_graph6_line


def brute_size_q(g):
    # oracle: O(m^2) double loop over edge pairs
    return sum(
        1
        for (a, b), (c, d) in combinations(g.edges, 2)
        if len({a, b, c, d}) == 4
    )


class TestFromEdgeList:
    def test_basic(self):
        g = from_edge_list(4, [(1, 2), (3, 4)])
        assert g.n == 4 and g.m == 2

    def test_dedup_unordered(self):
        g = from_edge_list(4, [(1, 2), (2, 1)])
        assert g.m == 1

    def test_out_of_range_names_offending_pair(self):
        with pytest.raises(ValueError, match="pair #0"):
            from_edge_list(3, [(1, 4)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="pair #1"):
            from_edge_list(3, [(1, 2), (2, 2)])

    def test_adjacency_symmetric(self):
        g = from_edge_list(5, [(1, 2), (2, 3), (4, 5)])
        for u in g.vertices():
            for v in g.adj[u]:
                assert u in g.adj[v]

    def test_degree_sum_is_2m(self):
        g = from_edge_list(6, [(1, 2), (2, 3), (3, 4), (5, 6)])
        assert sum(g.degrees) == 2 * g.m


class TestDegreeStats:
    def test_second_moment(self):
        g = gen_family("linear_tree", 7)
        assert degree_stats(g).second_moment == Fraction(22, 7)

    def test_cauchy_schwarz(self, atlas_graphs):
        for g in atlas_graphs:
            st = degree_stats(g)
            assert st.second_moment >= Fraction(2 * st.m, g.n) ** 2


class TestFamilies:
    def test_complete(self):
        assert gen_family("complete", 4).m == 6

    def test_one_regular(self):
        g = gen_family("one_regular", 8)
        assert g.m == 4 and set(g.degrees[1:]) == {1}

    def test_one_regular_odd_rejected(self):
        with pytest.raises(ValueError):
            gen_family("one_regular", 7)

    def test_quasi_star_degrees(self):
        g = gen_family("quasi_star", 5)
        assert sorted(g.degrees[1:]) == [1, 1, 1, 2, 3]

    def test_cycle_requires_3(self):
        with pytest.raises(ValueError):
            gen_family("cycle", 2)

    def test_linear_tree_path_labeling(self):
        g = gen_family("linear_tree", 5)
        assert g.edges == ((1, 2), (2, 3), (3, 4), (4, 5))

    def test_cycle_consecutive_labeling(self):
        g = gen_family("cycle", 5)
        assert (1, 5) in g.edges and (1, 2) in g.edges

    def test_star_plus_isolated(self):
        g = gen_family("star_plus_isolated", 7, lam=4)
        assert g.m == 3 and g.degrees[1] == 3 and g.degrees[7] == 0

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            gen_family("petersen", 10)


class TestDisjointUnion:
    def test_k2_k2_isomorphic_to_one_regular_4(self):
        k2 = gen_family("complete", 2)
        g = disjoint_union(k2, k2)
        assert g == gen_family("one_regular", 4)

    def test_union_with_empty_is_identity(self):
        g = gen_family("cycle", 5)
        assert disjoint_union(g, from_edge_list(0, [])) == g

    def test_star_plus_isolated_decomposition(self):
        g = disjoint_union(gen_family("star", 4), from_edge_list(3, []))
        assert g == gen_family("star_plus_isolated", 7, lam=4)


class TestErdosRenyi:
    def test_p_zero_empty(self):
        assert erdos_renyi(12, 0.0, seed=3).m == 0

    def test_p_one_complete(self):
        assert erdos_renyi(7, 1.0, seed=3) == gen_family("complete", 7)

    def test_deterministic(self):
        assert erdos_renyi(15, 0.4, seed=9) == erdos_renyi(15, 0.4, seed=9)

    def test_edge_count_within_4_sigma(self):
        # binomial(binom(30,2), 1/2): mean 217.5, sigma ~10.4
        n, p = 30, 0.5
        npairs = n * (n - 1) // 2
        mean = p * npairs
        sigma = math.sqrt(npairs * p * (1 - p))
        m = erdos_renyi(n, p, seed=2024).m
        assert abs(m - mean) < 4 * sigma

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            erdos_renyi(5, 1.5, seed=0)


class TestSizeQ:
    def test_linear_tree_5(self):
        assert size_q(gen_family("linear_tree", 5)) == 3

    def test_complete_formula(self):
        for n in range(1, 31):
            assert size_q(gen_family("complete", n)) == 3 * math.comb(n, 4)

    def test_cycle_formula(self):
        assert size_q(gen_family("cycle", 6)) == 9
        for n in range(3, 30):
            assert size_q(gen_family("cycle", n)) == n * (n - 3) // 2

    def test_star_zero(self):
        assert size_q(gen_family("star", 9)) == 0

    def test_k_regular_formula(self):
        # (1/8)kn(k(n-4)+2) for the generated 1- and 2-regular instances
        for n in range(2, 30, 2):
            assert size_q(gen_family("one_regular", n)) == n * (n - 2) // 8
        for n in range(3, 30):
            k = 2
            assert size_q(gen_family("cycle", n)) == k * n * (k * (n - 4) + 2) // 8

    def test_bipartite_formula(self):
        for n1 in range(1, 8):
            for n2 in range(1, 8):
                g = gen_family("complete_bipartite", n1, n2=n2)
                assert size_q(g) == 2 * math.comb(n1, 2) * math.comb(n2, 2)

    def test_matches_brute_force_on_atlas(self, atlas_graphs):
        for g in atlas_graphs:
            assert size_q(g) == brute_size_q(g)

    def test_matches_brute_force_on_er(self, er_corpus):
        for _, g in er_corpus:
            assert size_q(g) == brute_size_q(g)


class TestQEdge:
    def test_k4(self):
        g = gen_family("complete", 4)
        assert q_edge(g, 1, 2) == 1

    def test_star_edges_zero(self):
        g = gen_family("star", 8)
        assert all(q_edge(g, u, v) == 0 for u, v in g.edges)

    def test_linear_tree_4(self):
        g = gen_family("linear_tree", 4)
        assert q_edge(g, 2, 3) == 0
        assert q_edge(g, 1, 2) == 1

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError):
            q_edge(gen_family("linear_tree", 4), 1, 3)

    def test_sum_is_twice_q(self, atlas_graphs):
        for g in atlas_graphs:
            assert sum(q_edge(g, u, v) for u, v in g.edges) == 2 * size_q(g)


class TestIsQZero:
    def test_triangle_with_isolated(self):
        g = disjoint_union(gen_family("complete", 3), from_edge_list(5, []))
        w = is_q_zero(g)
        assert w.is_zero and w.family == "triangle_with_isolated"

    def test_paw_not_zero(self):
        paw = from_edge_list(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
        assert not is_q_zero(paw).is_zero
        assert size_q(paw) == 1

    def test_cycle4(self):
        g = gen_family("cycle", 4)
        assert not is_q_zero(g).is_zero
        assert size_q(g) == 2

    def test_star_cases(self):
        for lam in range(0, 6):
            g = gen_family("star_plus_isolated", 6, lam=lam)
            w = is_q_zero(g)
            assert w.is_zero and w.family == "star_with_isolated"

    def test_agrees_with_size_q_on_atlas(self, atlas_graphs):
        for g in atlas_graphs:
            assert bool(is_q_zero(g)) == (size_q(g) == 0)

    def test_agrees_with_size_q_on_trees(self):
        for n in range(2, 7):
            for code in product(range(1, n + 1), repeat=n - 2):
                g = from_pruefer(code)
                assert bool(is_q_zero(g)) == (size_q(g) == 0)


class TestPruefer:
    def test_star_code(self):
        g = from_pruefer((1, 1))
        assert g == gen_family("star", 4)

    def test_n2_forced_edge(self):
        assert from_pruefer(()).edges == ((1, 2),)

    def test_decode_by_hand(self):
        # code (3, 3, 4) on n=5: leaves 1,2 attach to 3, then 3 to 4, rest (4,5)
        g = from_pruefer((3, 3, 4))
        assert set(g.edges) == {(1, 3), (2, 3), (3, 4), (4, 5)}

    def test_label_out_of_range(self):
        with pytest.raises(ValueError):
            from_pruefer((1, 5))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_cayley_distinct_trees(self, n):
        seen = {
            from_pruefer(code).edges
            for code in product(range(1, n + 1), repeat=n - 2)
        }
        assert len(seen) == n ** (n - 2)

    def test_all_decodes_are_trees(self):
        for code in product(range(1, 6), repeat=3):
            g = from_pruefer(code)
            assert g.m == g.n - 1
            assert size_q(g) == brute_size_q(g)


class TestGraph6:
    def test_k4_by_hand(self):
        # 'C' encodes n=4; all six upper-triangle bits set -> 111111 -> '~'
        assert from_graph6("C~") == gen_family("complete", 4)

    def test_single_vertex(self):
        g = from_graph6("@")
        assert g.n == 1 and g.m == 0

    def _family_instances(self, n_max=20):
        starts = {"complete": 1, "cycle": 3, "one_regular": 2,
                  "quasi_star": 4, "linear_tree": 1, "star": 1}
        for fam, start in starts.items():
            for n in range(start, n_max + 1):
                if fam == "one_regular" and n % 2:
                    continue
                yield gen_family(fam, n)

    def test_round_trip_all_families_to_20(self):
        for g in self._family_instances():
            assert from_graph6(to_graph6(g)) == g

    def test_matches_independent_encoder(self):
        # oracle: networkx's graph6 writer must agree byte for byte
        for g in self._family_instances():
            assert to_graph6(g) == nx_graph6_line(g)
            assert from_graph6(nx_graph6_line(g)) == g

    def test_header_accepted(self):
        assert from_graph6(">>graph6<<C~") == gen_family("complete", 4)

    def test_truncated(self):
        with pytest.raises(GraphFormatError, match="truncated"):
            from_graph6("F?")

    def test_bad_character(self):
        with pytest.raises(GraphFormatError):
            from_graph6("C\x07")

    def test_big_n_refused(self):
        with pytest.raises(GraphFormatError, match="n > 62"):
            from_graph6("~??")

    def test_five_vertex_decode(self):
        g = from_graph6("D?{")
        assert g.n == 5
        assert size_q(g) == brute_size_q(g)


class TestEdgeListFormat:
    def test_round_trip(self):
        g = gen_family("quasi_star", 6)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_ignored(self):
        text = "# paw graph\n4 4\n1 2\n2 3\n# middle comment\n1 3\n3 4\n"
        g = parse_edge_list(text)
        assert size_q(g) == 1

    def test_header_mismatch(self):
        with pytest.raises(GraphFormatError, match="declares 3"):
            parse_edge_list("4 3\n1 2\n2 3\n")

    def test_error_carries_line_number(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            parse_edge_list("3 2\n1 2\nnope\n")

    def test_out_of_range_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("3 1\n1 9\n")
