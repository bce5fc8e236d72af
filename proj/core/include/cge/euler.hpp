#pragma once

#include <string>
#include <vector>

#include "cge/multigraph.hpp"

namespace cge {

struct RobotCycle {
    std::vector<Vertex> walk;  // v_0 .. v_l, v_0 == v_l

    int length() const { return walk.empty() ? 0 : static_cast<int>(walk.size()) - 1; }
    Vertex start() const { return walk.front(); }
};

struct Solution {
    std::vector<RobotCycle> cycles;
    std::vector<Multigraph> multisets;
    int value = 0;

    // Fills multisets and value from the walks.
    static Solution from_cycles(std::vector<RobotCycle> cycles);
};

Multigraph cycle_to_graph(const RobotCycle& rc);
bool has_eulerian_cycle(const Multigraph& g);
RobotCycle find_eulerian_cycle(const Multigraph& g, Vertex start);

// Turns k edge multisets into a solution by taking an Eulerian cycle of each.
Solution solution_from_multisets(const std::vector<Multigraph>& multisets, Vertex v_init);

struct RobotReport {
    bool starts_at_init = false;
    bool ends_at_init = false;
    bool adjacency_ok = false;
    int length = 0;
    std::string problem;  // empty when fine
};

struct VerificationReport {
    std::vector<RobotReport> robots;
    bool robot_count_ok = false;
    bool coverage_ok = false;
    std::vector<Edge> uncovered;
    int value = 0;
    bool budget_ok = true;
    bool ok = false;

    std::string describe() const;
};

VerificationReport verify_solution(const ExplorationInstance& inst, const Solution& sol);

// Feasibility checked directly on multisets: each nonempty one is connected,
// even and touches v_init, the union covers G, and none exceeds the budget.
bool multisets_feasible(const ExplorationInstance& inst, const std::vector<Multigraph>& multisets,
                        int budget);

}  // namespace cge
