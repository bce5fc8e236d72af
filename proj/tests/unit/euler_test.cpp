#include <gtest/gtest.h>

#include <random>

#include "cge/errors.hpp"
#include "cge/euler.hpp"
#include "generators.hpp"

using namespace cge;

namespace {

ExplorationInstance star3_instance() {
    ExplorationInstance inst;
    inst.graph = Multigraph(4);
    for (int i = 1; i <= 3; ++i) inst.graph.add_edge(0, i);
    return inst;
}

}  // namespace

TEST(CycleToGraph, CountsTraversals) {
    auto g = cycle_to_graph({{0, 1, 0}});
    EXPECT_EQ(g.multiplicity(0, 1), 2);
    auto t = cycle_to_graph({{0, 1, 2, 0}});
    EXPECT_EQ(t.size(), 3);
    EXPECT_TRUE(t.is_simple());
}

TEST(HasEulerianCycle, Basics) {
    Multigraph dbl(2);
    dbl.add_edge(0, 1, 2);
    EXPECT_TRUE(has_eulerian_cycle(dbl));
    Multigraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_FALSE(has_eulerian_cycle(path));
    Multigraph two(6);
    for (int b : {0, 3}) {
        two.add_edge(b, b + 1);
        two.add_edge(b + 1, b + 2);
        two.add_edge(b, b + 2);
    }
    EXPECT_FALSE(has_eulerian_cycle(two));
    EXPECT_TRUE(has_eulerian_cycle(Multigraph(3)));
}

TEST(FindEulerianCycle, DeterministicSmallCases) {
    Multigraph dbl(2);
    dbl.add_edge(0, 1, 2);
    EXPECT_EQ(find_eulerian_cycle(dbl, 0).walk, (std::vector<Vertex>{0, 1, 0}));
    Multigraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    EXPECT_EQ(find_eulerian_cycle(tri, 0).walk, (std::vector<Vertex>{0, 1, 2, 0}));
    EXPECT_EQ(find_eulerian_cycle(Multigraph(3), 2).walk, (std::vector<Vertex>{2}));
}

TEST(FindEulerianCycle, Errors) {
    Multigraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_THROW(find_eulerian_cycle(path, 0), NotEulerian);
    Multigraph dbl(3);
    dbl.add_edge(0, 1, 2);
    EXPECT_THROW(find_eulerian_cycle(dbl, 2), StartNotInGraph);
}

TEST(FindEulerianCycle, RoundTripOnRandomWalks) {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        auto g = gen::random_even_multigraph(rng, 2 + static_cast<int>(rng() % 6), 16);
        if (g.empty()) continue;
        Vertex s = g.support().front();
        auto rc = find_eulerian_cycle(g, s);
        EXPECT_EQ(rc.walk.front(), s);
        EXPECT_EQ(rc.walk.back(), s);
        EXPECT_EQ(cycle_to_graph(rc), g);
        auto again = find_eulerian_cycle(cycle_to_graph(rc), s);
        EXPECT_EQ(cycle_to_graph(again), g);
    }
}

TEST(VerifySolution, StarWalk) {
    auto inst = star3_instance();
    auto sol = Solution::from_cycles({{{0, 1, 0, 2, 0, 3, 0}}});
    auto rep = verify_solution(inst, sol);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.value, 6);
}

TEST(VerifySolution, ReportsUncoveredEdge) {
    auto inst = star3_instance();
    auto rep = verify_solution(inst, Solution::from_cycles({{{0, 1, 0, 2, 0}}}));
    EXPECT_FALSE(rep.ok);
    ASSERT_EQ(rep.uncovered.size(), 1u);
    EXPECT_EQ(rep.uncovered[0], (Edge{0, 3}));
}

TEST(VerifySolution, EmptyRobotAllowed) {
    ExplorationInstance inst;
    inst.graph = Multigraph(3);
    inst.graph.add_edge(0, 1);
    inst.graph.add_edge(1, 2);
    inst.graph.add_edge(0, 2);
    inst.k = 2;
    auto rep = verify_solution(inst, Solution::from_cycles({{{0, 1, 2, 0}}, {{0}}}));
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.value, 3);
}

TEST(VerifySolution, FlagsBudgetAndBadWalks) {
    auto inst = star3_instance();
    inst.budget = 4;
    auto rep = verify_solution(inst, Solution::from_cycles({{{0, 1, 0, 2, 0, 3, 0}}}));
    EXPECT_FALSE(rep.budget_ok);
    EXPECT_FALSE(rep.ok);
    inst.budget.reset();
    EXPECT_FALSE(verify_solution(inst, Solution::from_cycles({{{1, 0, 1}}})).ok);
    EXPECT_FALSE(verify_solution(inst, Solution::from_cycles({{{0, 1, 2, 0}}})).ok);
    EXPECT_FALSE(verify_solution(inst, Solution::from_cycles({{{0, 1, 0}}, {{0, 2, 0, 3, 0}}})).ok);
}

TEST(MultisetsFeasible, ConnectedEvenCoveringWithinBudget) {
    auto inst = star3_instance();
    Multigraph all(4);
    for (int i = 1; i <= 3; ++i) all.add_edge(0, i, 2);
    EXPECT_TRUE(multisets_feasible(inst, {all}, 6));
    EXPECT_FALSE(multisets_feasible(inst, {all}, 5));
    Multigraph odd(4);
    for (int i = 1; i <= 3; ++i) odd.add_edge(0, i);
    EXPECT_FALSE(multisets_feasible(inst, {odd}, 6));
}
