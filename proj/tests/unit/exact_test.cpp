#include <gtest/gtest.h>

#include <random>

#include "cge/errors.hpp"
#include "cge/exact.hpp"
#include "cge/reductions.hpp"
#include "generators.hpp"

using namespace cge;

namespace {

ExplorationInstance make_instance(Multigraph g, Vertex v_init, int k) {
    ExplorationInstance inst;
    inst.graph = std::move(g);
    inst.v_init = v_init;
    inst.k = k;
    return inst;
}

Multigraph triangle() {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

Multigraph path(int n) {
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST(ExactDecide, Triangle) {
    auto inst = make_instance(triangle(), 0, 1);
    auto yes = exact_decide(inst, 3);
    ASSERT_TRUE(yes.yes);
    EXPECT_EQ(yes.witness->cycles[0].walk, (std::vector<Vertex>{0, 1, 2, 0}));
    EXPECT_FALSE(exact_decide(inst, 2).yes);
}

TEST(ExactDecide, UsesInstanceBudget) {
    auto inst = make_instance(triangle(), 0, 1);
    EXPECT_THROW(exact_decide(inst), std::invalid_argument);
    inst.budget = 3;
    EXPECT_TRUE(exact_decide(inst).yes);
}

TEST(ExactDecide, BinToRobYes) {
    BinPackingInstance bp{{2, 2}, 2, 2, true};
    auto inst = bin_to_rob(bp);
    auto res = exact_decide(inst, *inst.budget);
    ASSERT_TRUE(res.yes);
    EXPECT_TRUE(verify_solution(inst, *res.witness).ok);
}

TEST(ExactDecide, NodeLimitIsReportedSeparately) {
    std::mt19937 rng(2);
    auto inst = make_instance(gen::random_connected_graph(rng, 8, 14), 0, 3);
    SearchConfig cfg;
    cfg.node_limit = 10;
    EXPECT_THROW(exact_optimum(inst, cfg), SearchBudgetExceeded);
}

TEST(ExactOptimum, ClosedForms) {
    for (int leaves = 1; leaves <= 4; ++leaves) {
        Multigraph s(leaves + 1);
        for (int i = 1; i <= leaves; ++i) s.add_edge(0, i);
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(exact_optimum(make_instance(s, 0, k)).b_opt, 2 * ((leaves + k - 1) / k));
    }
    EXPECT_EQ(exact_optimum(make_instance(path(3), 0, 2)).b_opt, 4);
    Multigraph c4 = path(4);
    c4.add_edge(0, 3);
    EXPECT_EQ(exact_optimum(make_instance(c4, 0, 1)).b_opt, 4);
}

TEST(ExactOptimum, WitnessIsOptimal) {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto inst = make_instance(gen::random_connected_graph(rng, n, n + 2),
                                  static_cast<Vertex>(rng() % static_cast<unsigned>(n)), 1 + static_cast<int>(rng() % 3));
        auto opt = exact_optimum(inst);
        auto rep = verify_solution(inst, opt.witness);
        EXPECT_TRUE(rep.ok);
        EXPECT_EQ(rep.value, opt.b_opt);
        EXPECT_LE(exact_lower_bound(inst), opt.b_opt);
        if (opt.b_opt > 0) {
            EXPECT_FALSE(exact_decide(inst, opt.b_opt - 1).yes);
        }
    }
}

TEST(ExactOptimum, AgreesWithMultisetEnumeration) {
    std::mt19937 rng(43);
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 2);
        auto g = gen::random_connected_graph(rng, n, n + 1);
        if (g.size() > 5) continue;
        Vertex v_init = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        auto inst = make_instance(g, v_init, k);
        EXPECT_EQ(exact_optimum(inst).b_opt, gen::brute_multiset_optimum(g, v_init, k));
        ++checked;
    }
    EXPECT_GE(checked, 30);
}
