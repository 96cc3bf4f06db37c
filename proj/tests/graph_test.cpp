#include <gtest/gtest.h>

#include <sstream>

#include "pcover/covers.hpp"
#include "support/oracles.hpp"

using namespace pcover;

TEST(Graph, NormalisesEdges) {
    const std::vector<Edge> edges{{1, 0}, {0, 1}, {2, 1}};
    const Graph g(3, edges);
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.degree(1), 2U);
    EXPECT_FALSE(g.regular_degree().has_value());
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), std::out_of_range);
}

TEST(Cayley, HypercubeMatchesBitFlips) {
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto q = hypercube(d);
        ASSERT_EQ(q.vertex_count(), 1U << d);
        EXPECT_EQ(q.regular_degree(), d);
        for (VertexId u = 0; u < q.vertex_count(); ++u)
            for (VertexId v = 0; v < q.vertex_count(); ++v)
                ASSERT_EQ(q.has_edge(u, v), std::has_single_bit(u ^ v));
    }
}

TEST(Cayley, TriangleFromZ3) {
    const ElementaryAbelianGroup z3(Prime(3), 1);
    const auto g = cayley(z3, std::vector<ZpVector>{ZpVector(Prime(3), {1}), ZpVector(Prime(3), {2})});
    EXPECT_EQ(g, complete_graph(3));
}

TEST(Cayley, RejectsIdentityAndNonSymmetricSets) {
    const ElementaryAbelianGroup z5(Prime(5), 1);
    EXPECT_THROW(cayley(z5, std::vector<ZpVector>{ZpVector(Prime(5), {0})}), std::invalid_argument);
    EXPECT_THROW(cayley(z5, std::vector<ZpVector>{ZpVector(Prime(5), {1})}), std::invalid_argument);
}

TEST(Cayley, BaseGraphIsRegularOfDegree4d) {
    for (std::uint32_t p : {3U, 5U}) {
        for (std::size_t d : {1U, 2U}) {
            const auto g = extraspecial_base_graph(Prime(p), d);
            EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(std::pow(p, 2 * d)));
            EXPECT_EQ(g.regular_degree(), 4 * d);
            EXPECT_TRUE(g.is_connected());
        }
    }
}

TEST(Cartesian, SmallProducts) {
    const auto k2 = complete_graph(2);
    const auto c4 = cartesian_product(k2, k2);
    EXPECT_EQ(c4.vertex_count(), 4U);
    EXPECT_EQ(c4.regular_degree(), 2U);
    EXPECT_EQ(girth(c4, 16), 4U);

    const auto rook = cartesian_product(cycle_graph(3), cycle_graph(3));
    EXPECT_EQ(rook.vertex_count(), 9U);
    EXPECT_EQ(rook.regular_degree(), 4U);
    EXPECT_EQ(rook.edge_count(), 18U);
}

TEST(Cartesian, IteratedCycleProductEqualsStandardCayleyGraph) {
    for (std::uint32_t p : {3U, 5U}) {
        const Prime pr(p);
        for (std::size_t dims = 1; dims <= 3; ++dims) {
            Graph product = cycle_graph(p);
            for (std::size_t k = 1; k < dims; ++k) product = cartesian_product(product, cycle_graph(p));
            std::vector<ZpVector> gens;
            for (std::size_t i = 0; i < dims; ++i) {
                gens.push_back(ZpVector::basis(pr, dims, i));
                gens.push_back(-ZpVector::basis(pr, dims, i));
            }
            EXPECT_EQ(product, cayley(ElementaryAbelianGroup(pr, dims), gens));
        }
    }
}

TEST(Cartesian, AlphaBaseGraphIsomorphicToStandard) {
    // alpha carries the standard generators onto S, so it is an isomorphism
    // from Cay(Z_p^{2d}, {±e_i}) onto the base graph.
    const Prime p(3);
    const std::size_t d = 2;
    const BasisChange alpha(connection_set_S(p, d));
    const ElementaryAbelianGroup space(p, 2 * d);
    Graph standard = cycle_graph(3);
    for (std::size_t k = 1; k < 2 * d; ++k) standard = cartesian_product(standard, cycle_graph(3));
    const auto base = extraspecial_base_graph(p, d);
    for (auto [u, v] : standard.edges()) {
        const auto au = space.index_of(alpha.apply(space.element(u)));
        const auto av = space.index_of(alpha.apply(space.element(v)));
        ASSERT_TRUE(base.has_edge(au, av));
    }
    EXPECT_EQ(standard.edge_count(), base.edge_count());
}

TEST(Girth, Examples) {
    EXPECT_EQ(girth(cycle_graph(4), 16), 4U);
    EXPECT_EQ(girth(hypercube(3), 16), 4U);
    EXPECT_EQ(girth(complete_graph(4), 16), 3U);
    EXPECT_EQ(girth(signed_double_cover(cohen_tits_signing(3)).total, 16), 6U);
    EXPECT_EQ(girth(cycle_graph(11), 16), 11U);
}

TEST(Girth, CapAndForests) {
    EXPECT_FALSE(girth(cycle_graph(11), 10).has_value());
    EXPECT_EQ(girth(cycle_graph(11), 11), 11U);
    EXPECT_FALSE(girth(Graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}}), 16).has_value());
    EXPECT_FALSE(girth(Graph(3, std::vector<Edge>{}), 16).has_value());
}

TEST(Girth, AgreesWithBruteForceOnCorpus) {
    for (const auto& g : oracle::graph_corpus()) {
        const auto expected = oracle::brute_girth(g);
        const auto got = girth(g, std::max<std::size_t>(3, g.vertex_count()));
        ASSERT_EQ(got, expected) << "n=" << g.vertex_count() << " m=" << g.edge_count();
    }
}

TEST(FourCycles, AgreesWithBruteForceOnCorpus) {
    for (const auto& g : oracle::graph_corpus()) {
        const auto found = find_4cycle(g);
        ASSERT_EQ(found.has_value(), oracle::brute_has_4cycle(g));
        if (found) {
            const auto& c = *found;
            ASSERT_EQ(c.size(), 4U);
            for (std::size_t i = 0; i < 4; ++i) ASSERT_TRUE(g.has_edge(c[i], c[(i + 1) % 4]));
        }
    }
}

TEST(CyclesOfLength, AgreesWithBruteForceOnCorpus) {
    for (const auto& g : oracle::graph_corpus()) {
        for (std::size_t len = 3; len <= std::min<std::size_t>(g.vertex_count(), 8); ++len) {
            const auto found = find_cycle_of_length(g, len);
            ASSERT_EQ(found.has_value(), oracle::brute_has_cycle(g, len)) << "len=" << len;
            if (found) {
                auto c = *found;
                ASSERT_EQ(c.size(), len);
                for (std::size_t i = 0; i < len; ++i) ASSERT_TRUE(g.has_edge(c[i], c[(i + 1) % len]));
                std::sort(c.begin(), c.end());
                ASSERT_EQ(std::adjacent_find(c.begin(), c.end()), c.end());
            }
        }
    }
}

TEST(CyclesOfLength, CyclePrimes) {
    for (std::size_t p : {3U, 5U, 7U, 11U, 13U}) {
        EXPECT_TRUE(has_cycle_of_length(cycle_graph(p), p));
        if (p > 3) {
            EXPECT_FALSE(has_cycle_of_length(cycle_graph(p), p - 1));
        }
    }
    EXPECT_THROW(find_cycle_of_length(cycle_graph(5), 2), std::invalid_argument);
    EXPECT_THROW(find_cycle_of_length(cycle_graph(5), 14), std::invalid_argument);
}

TEST(CyclesOfLength, TrianglesInCoversDependOnSign) {
    const Prime p(3);
    EXPECT_TRUE(has_cycle_of_length(build_cover(p, 1, GroupSign::plus).total, 3));
    EXPECT_FALSE(has_cycle_of_length(build_cover(p, 1, GroupSign::minus).total, 3));
}

TEST(EdgeList, Format) {
    std::ostringstream os;
    write_edge_list(os, cycle_graph(3));
    EXPECT_EQ(os.str(), "3 3\n0 1\n0 2\n1 2\n");
}

TEST(InducedSubgraph, RelabelsInOrder) {
    const auto g = cycle_graph(6);
    const std::vector<VertexId> keep{0, 1, 2, 5};
    const auto h = g.induced_subgraph(keep);
    EXPECT_EQ(h.vertex_count(), 4U);
    EXPECT_EQ(h.edge_count(), 3U);
    EXPECT_TRUE(h.has_edge(0, 3));
    EXPECT_FALSE(h.has_edge(2, 3));
}
