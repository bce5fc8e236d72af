#include "cge/euler.hpp"

#include <algorithm>
#include <sstream>

#include "cge/errors.hpp"

namespace cge {

Solution Solution::from_cycles(std::vector<RobotCycle> cycles) {
    Solution s;
    s.cycles = std::move(cycles);
    for (const auto& rc : s.cycles) {
        s.multisets.push_back(cycle_to_graph(rc));
        s.value = std::max(s.value, rc.length());
    }
    return s;
}

Multigraph cycle_to_graph(const RobotCycle& rc) {
    Multigraph g;
    for (size_t i = 0; i + 1 < rc.walk.size(); ++i) g.add_edge(rc.walk[i], rc.walk[i + 1]);
    return g;
}

bool has_eulerian_cycle(const Multigraph& g) { return g.all_degrees_even() && g.support_connected(); }

RobotCycle find_eulerian_cycle(const Multigraph& g, Vertex start) {
    if (g.empty()) return RobotCycle{{start}};
    if (!has_eulerian_cycle(g)) throw NotEulerian("multigraph is disconnected or has odd degrees");
    if (!g.has_vertex(start)) throw StartNotInGraph("start vertex " + std::to_string(start) + " has no edges");

    std::vector<std::map<Vertex, int>> rest(static_cast<size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) rest[static_cast<size_t>(v)] = g.adjacency(v);

    std::vector<Vertex> stack{start}, circuit;
    while (!stack.empty()) {
        Vertex u = stack.back();
        auto& au = rest[static_cast<size_t>(u)];
        if (au.empty()) {
            circuit.push_back(u);
            stack.pop_back();
            continue;
        }
        auto it = au.begin();
        Vertex w = it->first;
        if (--it->second == 0) au.erase(it);
        auto& aw = rest[static_cast<size_t>(w)];
        auto jt = aw.find(u);
        if (--jt->second == 0) aw.erase(jt);
        stack.push_back(w);
    }
    std::reverse(circuit.begin(), circuit.end());
    return RobotCycle{std::move(circuit)};
}

Solution solution_from_multisets(const std::vector<Multigraph>& multisets, Vertex v_init) {
    std::vector<RobotCycle> cycles;
    for (const auto& m : multisets) cycles.push_back(find_eulerian_cycle(m, v_init));
    return Solution::from_cycles(std::move(cycles));
}

std::string VerificationReport::describe() const {
    std::ostringstream os;
    os << (ok ? "ok" : "not ok") << "\n";
    if (!robot_count_ok) os << "wrong number of robots: " << robots.size() << "\n";
    for (size_t i = 0; i < robots.size(); ++i) {
        const auto& r = robots[i];
        os << "robot " << i + 1 << ": length " << r.length;
        if (!r.problem.empty()) os << " (" << r.problem << ")";
        os << "\n";
    }
    for (const auto& e : uncovered) os << "uncovered edge " << e.first << " " << e.second << "\n";
    os << "value " << value << "\n";
    if (!budget_ok) os << "budget exceeded\n";
    return os.str();
}

VerificationReport verify_solution(const ExplorationInstance& inst, const Solution& sol) {
    VerificationReport rep;
    const auto& g = inst.graph;
    rep.robot_count_ok = static_cast<int>(sol.cycles.size()) == inst.k;
    bool robots_ok = true;
    Multigraph covered(g.n());
    for (const auto& rc : sol.cycles) {
        RobotReport r;
        r.length = rc.length();
        if (rc.walk.empty()) {
            r.problem = "empty walk";
        } else {
            r.starts_at_init = rc.walk.front() == inst.v_init;
            r.ends_at_init = rc.walk.back() == inst.v_init;
            r.adjacency_ok = true;
            for (size_t i = 0; i + 1 < rc.walk.size(); ++i) {
                Vertex a = rc.walk[i], b = rc.walk[i + 1];
                if (a == b || g.multiplicity(a, b) == 0) {
                    r.adjacency_ok = false;
                    r.problem = "no edge " + std::to_string(a) + "-" + std::to_string(b);
                    break;
                }
                if (covered.multiplicity(a, b) == 0) covered.add_edge(a, b);
            }
            if (!r.starts_at_init) r.problem = "does not start at v_init";
            else if (!r.ends_at_init) r.problem = "does not end at v_init";
        }
        robots_ok = robots_ok && r.problem.empty();
        rep.value = std::max(rep.value, r.length);
        rep.robots.push_back(std::move(r));
    }
    for (const auto& [e, m] : g.edges())
        if (covered.multiplicity(e.first, e.second) == 0) rep.uncovered.push_back(e);
    rep.coverage_ok = rep.uncovered.empty();
    if (inst.budget) rep.budget_ok = rep.value <= *inst.budget;
    rep.ok = rep.robot_count_ok && robots_ok && rep.coverage_ok && rep.budget_ok;
    return rep;
}

bool multisets_feasible(const ExplorationInstance& inst, const std::vector<Multigraph>& multisets, int budget) {
    if (static_cast<int>(multisets.size()) != inst.k) return false;
    Multigraph covered(inst.graph.n());
    for (const auto& m : multisets) {
        if (m.size() > budget) return false;
        if (m.empty()) continue;
        if (!m.has_vertex(inst.v_init) || !has_eulerian_cycle(m)) return false;
        for (const auto& [e, c] : m.edges()) {
            if (inst.graph.multiplicity(e.first, e.second) == 0) return false;
            if (covered.multiplicity(e.first, e.second) == 0) covered.add_edge(e.first, e.second);
        }
    }
    return covered.size() == inst.graph.size();
}

}  // namespace cge
