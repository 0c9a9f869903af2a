#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hadwiger/generators.hpp"
#include "hadwiger/minor_oracle.hpp"
#include "hadwiger/named_graphs.hpp"
#include "support/brute_force.hpp"

using namespace hadwiger;
using hadwiger::testing::brute_force_has_clique_minor;
using hadwiger::testing::graph_from_mask;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 100 < percent)
                g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

} // namespace

TEST(HasCliqueMinor, CompleteGraphIsItsOwnModel)
{
    const Graph k5 = named::complete(5);
    const auto m = has_clique_minor(k5, 5);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->order(), 5u);
    for (const auto& b : m->branch_sets)
        EXPECT_EQ(b.count(), 1u);
    EXPECT_TRUE(validate_model(k5, *m));
}

TEST(HasCliqueMinor, PetersenHasK5)
{
    const Graph p = named::petersen();
    const auto m = has_clique_minor(p, 5);
    ASSERT_TRUE(m);
    EXPECT_TRUE(validate_model(p, *m));
    EXPECT_TRUE(brute_force_has_clique_minor(p, 5));
    EXPECT_FALSE(has_clique_minor(p, 6));
}

TEST(HasCliqueMinor, OctahedronHasNoK5)
{
    const Graph oct = named::complete_multipartite({2, 2, 2});
    EXPECT_FALSE(has_clique_minor(oct, 5));
    EXPECT_FALSE(brute_force_has_clique_minor(oct, 5));
    EXPECT_TRUE(has_clique_minor(oct, 4));
}

TEST(HasCliqueMinor, K22222HasNoK8)
{
    const Graph g = named::complete_multipartite({2, 2, 2, 2, 2});
    EXPECT_FALSE(has_clique_minor(g, 8));
    const auto m7 = has_clique_minor(g, 7);
    ASSERT_TRUE(m7);
    EXPECT_TRUE(validate_model(g, *m7));
}

TEST(HasCliqueMinor, SmallOrders)
{
    EXPECT_THROW(has_clique_minor(named::complete(3), 0), std::invalid_argument);
    EXPECT_FALSE(has_clique_minor(Graph{}, 1));
    EXPECT_TRUE(has_clique_minor(Graph(1), 1));
    EXPECT_FALSE(has_clique_minor(Graph(4), 2));
    const auto k2 = has_clique_minor(named::path(2), 2);
    ASSERT_TRUE(k2);
    EXPECT_TRUE(validate_model(named::path(2), *k2));
    EXPECT_FALSE(has_clique_minor(named::star(6), 3));
    EXPECT_TRUE(has_clique_minor(named::cycle(9), 3));
    EXPECT_FALSE(has_clique_minor(named::cycle(9), 4));
}

TEST(HasCliqueMinor, CapIsEnforced)
{
    const Graph g(41);
    try {
        has_clique_minor(g, 3);
        FAIL() << "expected resource_limit_error";
    } catch (const resource_limit_error& e) {
        EXPECT_EQ(e.cap(), kDefaultOracleCap);
        EXPECT_EQ(e.requested(), 41u);
    }
    EXPECT_FALSE(has_clique_minor(g, 3, 41));
}

TEST(HasCliqueMinor, AgreesWithBruteForceExhaustivelyUpToFiveVertices)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            for (std::size_t t = 1; t <= 5; ++t) {
                const auto m = has_clique_minor(g, t);
                ASSERT_EQ(m.has_value(), brute_force_has_clique_minor(g, t)) << "n=" << n << " mask=" << mask << " t=" << t;
                if (m)
                    ASSERT_TRUE(validate_model(g, *m));
            }
        }
    }
}

TEST(HasCliqueMinor, AgreesWithBruteForceOnRandomEightVertexGraphs)
{
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 400; ++iter) {
        const Graph g = random_graph(rng, 8, 20 + static_cast<unsigned>(iter % 50));
        for (std::size_t t = 3; t <= 5; ++t) {
            const auto m = has_clique_minor(g, t);
            ASSERT_EQ(m.has_value(), brute_force_has_clique_minor(g, t)) << "iter " << iter << " t=" << t;
            if (m)
                ASSERT_TRUE(validate_model(g, *m));
        }
    }
}

TEST(HasCliqueMinor, DecisionIgnoresLabels)
{
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 150; ++iter) {
        const Graph g = random_graph(rng, 10, 45);
        std::vector<Vertex> perm(10);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        for (std::size_t t = 4; t <= 6; ++t)
            EXPECT_EQ(has_clique_minor(g, t).has_value(), has_clique_minor(h, t).has_value());
    }
}

TEST(HasCliqueMinor, MinorMonotone)
{
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 100) {
        const Graph g = random_graph(rng, 10, 40);
        const std::size_t t = 5;
        if (has_clique_minor(g, t))
            continue;
        ++checked;
        const auto edges = g.edges();
        if (edges.empty())
            continue;
        const auto [u, v] = edges[rng() % edges.size()];
        Graph deleted = g;
        deleted.remove_edge(u, v);
        EXPECT_FALSE(has_clique_minor(deleted, t));
        EXPECT_FALSE(has_clique_minor(without_vertex(g, u), t));
        EXPECT_FALSE(has_clique_minor(contract_set(g, VertexSet{u, v}).graph, t));
    }
}

TEST(HasCliqueMinor, NeighborhoodsOfMinorFreeGraphsLoseOneOrder)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec;
        spec.family = Family::planar_triangulation;
        spec.n = 14;
        spec.seed = seed;
        const Graph g = generate(spec);
        ASSERT_FALSE(has_clique_minor(g, 5));
        for (Vertex v : g.vertices())
            EXPECT_FALSE(has_clique_minor(induced_subgraph(g, g.neighbors(v)), 4));
    }
    const Graph k22222 = named::complete_multipartite({2, 2, 2, 2, 2});
    EXPECT_FALSE(has_clique_minor(induced_subgraph(k22222, k22222.neighbors(0)), 7));
}

TEST(ValidateModel, Examples)
{
    const Graph k5 = named::complete(5);
    MinorModel singletons;
    for (Vertex v = 0; v < 5; ++v)
        singletons.branch_sets.push_back(VertexSet{v});
    EXPECT_TRUE(validate_model(k5, singletons));

    MinorModel overlap = singletons;
    overlap.branch_sets[1] = VertexSet{1, 0};
    EXPECT_FALSE(validate_model(k5, overlap));

    EXPECT_TRUE(validate_model(named::path(4), MinorModel{{VertexSet{0, 1}, VertexSet{2, 3}}}));
    EXPECT_FALSE(validate_model(named::path(4), MinorModel{{VertexSet{0, 2}, VertexSet{1, 3}}}));
    EXPECT_FALSE(validate_model(named::path(4), MinorModel{{VertexSet{0}, VertexSet{3}}}));
    EXPECT_FALSE(validate_model(named::path(4), MinorModel{{VertexSet{0}, VertexSet{}}}));
}

TEST(EdgeCountForcesMinor, Examples)
{
    Graph dense(10);
    std::size_t added = 0;
    for (Vertex u = 0; u < 10 && added < 41; ++u)
        for (Vertex v = u + 1; v < 10 && added < 41; ++v, ++added)
            dense.add_edge(u, v);
    ASSERT_EQ(dense.size(), 41u);
    EXPECT_TRUE(edge_count_forces_minor(dense, 8));

    GenSpec tri;
    tri.family = Family::planar_triangulation;
    tri.n = 10;
    const Graph planar = generate(tri);
    ASSERT_EQ(planar.size(), 24u);
    EXPECT_FALSE(edge_count_forces_minor(planar, 5));

    const Graph k22222 = named::complete_multipartite({2, 2, 2, 2, 2});
    EXPECT_TRUE(edge_count_forces_minor(k22222, 7));
    EXPECT_TRUE(has_clique_minor(k22222, 7));

    EXPECT_FALSE(edge_count_forces_minor(named::complete(2), 5)); // below the vertex minimum
    EXPECT_THROW(edge_count_forces_minor(k22222, 4), std::invalid_argument);
    EXPECT_THROW(edge_count_forces_minor(k22222, 12), std::invalid_argument);
}

// Whenever the cited edge bound fires, the exact oracle must agree.
TEST(EdgeCountForcesMinor, SoundAgainstOracle)
{
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        const Graph g = random_graph(rng, 11, 50 + static_cast<unsigned>(iter % 40));
        for (int tp1 = 5; tp1 <= 8; ++tp1)
            if (edge_count_forces_minor(g, tp1))
                EXPECT_TRUE(has_clique_minor(g, static_cast<std::size_t>(tp1)));
    }
}

TEST(WriteModel, Format)
{
    std::ostringstream os;
    write_model(os, MinorModel{{VertexSet{0, 3}, VertexSet{1}}});
    EXPECT_EQ(os.str(), "set_0: 0 3\nset_1: 1\n");
}
