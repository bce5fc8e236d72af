#include <gtest/gtest.h>

#include <random>

#include "cge/approx.hpp"
#include "cge/errors.hpp"
#include "cge/exact.hpp"
#include "generators.hpp"

using namespace cge;

namespace {

VertexCover cover(std::vector<Vertex> v) {
    VertexCover vc;
    vc.vertices = std::move(v);
    return vc;
}

ExplorationInstance make_instance(Multigraph g, Vertex v_init, int k) {
    ExplorationInstance inst;
    inst.graph = std::move(g);
    inst.v_init = v_init;
    inst.k = k;
    return inst;
}

Multigraph star(int leaves) {
    Multigraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace

TEST(EvenIndependentDegrees, PathDuplicatesBothEnds) {
    Multigraph p(3);
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    auto e = even_independent_degrees(p, cover({1}));
    EXPECT_EQ(e.multiplicity(0, 1), 2);
    EXPECT_EQ(e.multiplicity(1, 2), 2);
}

TEST(EvenIndependentDegrees, CycleNeedsNothingStarNeedsAll) {
    Multigraph c(4);
    c.add_edge(0, 1);
    c.add_edge(1, 2);
    c.add_edge(2, 3);
    c.add_edge(0, 3);
    EXPECT_EQ(even_independent_degrees(c, cover({0, 2})).size(), 4);
    EXPECT_EQ(even_independent_degrees(star(3), cover({0})).size(), 6);
}

TEST(MakeVcEvenDegree, SingleTreeEdge) {
    Multigraph tree(2);
    tree.add_edge(0, 1);
    Multigraph e(3);
    e.add_edge(0, 1);
    e.add_edge(1, 2, 2);
    auto out = make_vc_even_degree(tree, e, cover({0, 1}));
    EXPECT_TRUE(out.all_degrees_even());
    EXPECT_EQ(out.multiplicity(0, 1), 2);
}

TEST(MakeVcEvenDegree, IdentityWhenEven) {
    Multigraph tree(2);
    tree.add_edge(0, 1);
    Multigraph e(2);
    e.add_edge(0, 1, 2);
    EXPECT_EQ(make_vc_even_degree(tree, e, cover({0, 1})), e);
}

TEST(MakeVcEvenDegree, PathTreeFixesBothEnds) {
    Multigraph tree(3);
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    auto out = make_vc_even_degree(tree, tree, cover({0, 1, 2}));
    EXPECT_EQ(out.multiplicity(0, 1), 2);
    EXPECT_EQ(out.multiplicity(1, 2), 2);
    EXPECT_TRUE(out.all_degrees_even());
}

TEST(MakeVcEvenDegree, RejectsNonSpanningTree) {
    Multigraph tree(3);
    tree.add_edge(0, 1);
    EXPECT_THROW(make_vc_even_degree(tree, tree, cover({0, 1, 2})), TreeNotSpanning);
}

TEST(ApproxSolve, StarIsOptimal) {
    auto sol = approx_solve(make_instance(star(3), 0, 1), cover({0}));
    EXPECT_EQ(sol.value, 6);
}

TEST(ApproxSolve, SingleEdgeTwoRobots) {
    Multigraph g(2);
    g.add_edge(0, 1);
    auto inst = make_instance(g, 0, 2);
    auto sol = approx_solve(inst, cover({0}));
    EXPECT_EQ(sol.value, 2);
    EXPECT_TRUE(verify_solution(inst, sol).ok);
    EXPECT_EQ(sol.cycles[1].walk, (std::vector<Vertex>{0}));
}

TEST(ApproxSolve, PropagatesNotACover) {
    EXPECT_THROW(approx_solve(make_instance(star(3), 0, 1), cover({1})), NotACover);
}

TEST(ApproxPartition, PairsKeepIndependentDegreesEvenAndBalanced) {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 3 + static_cast<int>(rng() % 5);
        auto g = gen::random_connected_graph(rng, n, n + static_cast<int>(rng() % 4));
        int k = 1 + static_cast<int>(rng() % 3);
        auto inst = make_instance(g, 0, k);
        auto vcc = connect_cover(g, vertex_cover_2approx(g), 0);
        auto st = approx_partition(inst, vcc);
        int lo = 1 << 30, hi = 0;
        Multigraph all(n);
        for (const auto& ei : st.e_i) {
            for (Vertex u = 0; u < n; ++u)
                if (!vcc.contains(u)) {
                    EXPECT_EQ(ei.degree(u) % 2, 0);
                }
            lo = std::min(lo, ei.size());
            hi = std::max(hi, ei.size());
            all += ei;
        }
        EXPECT_LE(hi - lo, 2);
        for (const auto& [e, m] : g.edges()) EXPECT_GT(all.multiplicity(e.first, e.second), 0);
    }
}

TEST(ApproxSolve, RobotsContainStartAndAreConnected) {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto g = gen::random_connected_graph(rng, n, n + static_cast<int>(rng() % 4));
        Vertex v_init = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        auto inst = make_instance(g, v_init, 1 + static_cast<int>(rng() % 3));
        auto sol = approx_solve(inst, vertex_cover_2approx(g));
        EXPECT_TRUE(verify_solution(inst, sol).ok);
        for (const auto& ms : sol.multisets) {
            if (ms.empty()) continue;
            EXPECT_TRUE(ms.has_vertex(v_init));
            EXPECT_TRUE(ms.support_connected());
        }
    }
}

TEST(ApproxSolve, AdditiveBoundAgainstOracle) {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto g = gen::random_connected_graph(rng, n, n + static_cast<int>(rng() % 3));
        auto inst = make_instance(g, 0, 1 + static_cast<int>(rng() % 3));
        auto res = approx_solve_detailed(inst, vertex_cover_2approx(g));
        int opt = exact_optimum(inst).b_opt;
        EXPECT_LE(res.solution.value, opt + 2 * res.vc_connected.size());
    }
}

TEST(ApproxSolve, Deterministic) {
    std::mt19937 rng(37);
    auto g = gen::random_connected_graph(rng, 7, 10);
    auto inst = make_instance(g, 3, 2);
    auto a = approx_solve(inst, vertex_cover_2approx(g));
    auto b = approx_solve(inst, vertex_cover_2approx(g));
    ASSERT_EQ(a.cycles.size(), b.cycles.size());
    for (size_t i = 0; i < a.cycles.size(); ++i) EXPECT_EQ(a.cycles[i].walk, b.cycles[i].walk);
}
