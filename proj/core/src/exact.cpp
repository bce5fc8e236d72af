#include "cge/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "cge/errors.hpp"

namespace cge {

namespace {

constexpr int kMaxEdges = 21;
constexpr size_t kMemoCap = 4'000'000;

struct Key {
    std::uint64_t a, b;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    size_t operator()(const Key& k) const {
        std::uint64_t h = k.a * 0x9E3779B97F4A7C15ULL;
        h ^= (k.b + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

class Search {
public:
    Search(const ExplorationInstance& inst, int budget, const SearchConfig& cfg)
        : inst_(inst), budget_(budget), cfg_(cfg) {
        const auto& g = inst.graph;
        for (const auto& [e, m] : g.edges()) edges_.push_back(e);
        m_ = static_cast<int>(edges_.size());
        if (m_ > kMaxEdges) throw SearchBudgetExceeded("too many edges for exact search");
        if (cfg.max_multiplicity < 1 || cfg.max_multiplicity > 3)
            throw std::invalid_argument("max_multiplicity must be in 1..3");
        inc_.resize(static_cast<size_t>(g.n()));
        for (int i = 0; i < m_; ++i) {
            inc_[static_cast<size_t>(edges_[static_cast<size_t>(i)].first)].push_back({edges_[static_cast<size_t>(i)].second, i});
            inc_[static_cast<size_t>(edges_[static_cast<size_t>(i)].second)].push_back({edges_[static_cast<size_t>(i)].first, i});
        }
        for (auto& l : inc_) std::sort(l.begin(), l.end());
        dist_ = bfs_distances(g, inst.v_init);
        all_ = m_ == 0 ? 0 : ((std::uint64_t{1} << m_) - 1);
        used_.assign(static_cast<size_t>(m_), 0);
    }

    DecideResult run() {
        DecideResult res;
        if (budget_ < 0) return res;
        walks_.assign(1, {inst_.v_init});
        res.yes = dfs(0, inst_.v_init, 0, 0, 0);
        res.nodes = nodes_;
        if (res.yes) {
            std::vector<RobotCycle> cycles;
            for (auto& w : walks_) cycles.push_back(RobotCycle{w});
            while (static_cast<int>(cycles.size()) < inst_.k) cycles.push_back(RobotCycle{{inst_.v_init}});
            res.witness = Solution::from_cycles(std::move(cycles));
        }
        return res;
    }

private:
    // lowest edge not yet covered before this robot started: this robot must take it
    int target_edge(std::uint64_t cov_before) const {
        std::uint64_t open = all_ & ~cov_before;
        return open ? std::countr_zero(open) : -1;
    }

    Key key(int robot, Vertex pos, std::uint64_t cov_before) const {
        std::uint64_t packed = 0;
        for (int i = 0; i < m_; ++i) packed |= static_cast<std::uint64_t>(used_[static_cast<size_t>(i)]) << (2 * i);
        return Key{packed, (cov_before << 10) | (static_cast<std::uint64_t>(robot) << 5) | static_cast<std::uint64_t>(pos)};
    }

    bool dfs(int robot, Vertex pos, int steps, std::uint64_t cov_before, std::uint64_t cov_now) {
        if (++nodes_ > cfg_.node_limit) throw SearchBudgetExceeded("node limit reached");
        const int rem = budget_ - steps;
        if (pos == inst_.v_init) {
            if (cov_now == all_) return true;
            int t = target_edge(cov_before);
            bool took_target = t >= 0 && ((cov_now >> t) & 1);
            if (steps > 0 && took_target && robot + 1 < inst_.k) {
                std::vector<int> saved(static_cast<size_t>(m_), 0);
                saved.swap(used_);
                walks_.push_back({inst_.v_init});
                if (dfs(robot + 1, inst_.v_init, 0, cov_now, cov_now)) return true;
                walks_.pop_back();
                used_.swap(saved);
            }
        }
        int uncovered = std::popcount(all_ & ~cov_now);
        if (uncovered > rem + (inst_.k - robot - 1) * budget_) return false;
        int t = target_edge(cov_before);
        if (t >= 0 && !((cov_now >> t) & 1)) {
            auto [a, b] = edges_[static_cast<size_t>(t)];
            int via = std::min(pos_dist(pos, a) + dist_[static_cast<size_t>(b)], pos_dist(pos, b) + dist_[static_cast<size_t>(a)]) + 1;
            if (via > rem) return false;
        }
        if (memo_.count(key(robot, pos, cov_before))) return false;
        for (const auto& [w, ei] : inc_[static_cast<size_t>(pos)]) {
            auto& u = used_[static_cast<size_t>(ei)];
            if (u >= cfg_.max_multiplicity) continue;
            if (1 + dist_[static_cast<size_t>(w)] > rem) continue;
            ++u;
            walks_.back().push_back(w);
            if (dfs(robot, w, steps + 1, cov_before, cov_now | (std::uint64_t{1} << ei))) return true;
            walks_.back().pop_back();
            --u;
        }
        if (memo_.size() < kMemoCap) memo_.insert(key(robot, pos, cov_before));
        return false;
    }

    int pos_dist(Vertex from, Vertex to) {
        if (pair_dist_.empty()) {
            const int n = inst_.graph.n();
            pair_dist_.resize(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) pair_dist_[static_cast<size_t>(v)] = bfs_distances(inst_.graph, v);
        }
        return pair_dist_[static_cast<size_t>(from)][static_cast<size_t>(to)];
    }

    const ExplorationInstance& inst_;
    int budget_;
    SearchConfig cfg_;
    std::vector<Edge> edges_;
    int m_ = 0;
    std::vector<std::vector<std::pair<Vertex, int>>> inc_;
    std::vector<int> dist_;
    std::vector<std::vector<int>> pair_dist_;
    std::uint64_t all_ = 0;
    std::vector<int> used_;
    std::vector<std::vector<Vertex>> walks_;
    std::unordered_set<Key, KeyHash> memo_;
    std::uint64_t nodes_ = 0;
};

bool is_bipartite(const Multigraph& g) {
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (side[static_cast<size_t>(s)] >= 0) continue;
        side[static_cast<size_t>(s)] = 0;
        std::vector<Vertex> st{s};
        while (!st.empty()) {
            Vertex u = st.back();
            st.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (side[static_cast<size_t>(w)] < 0) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(u)];
                    st.push_back(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

DecideResult exact_decide(const ExplorationInstance& inst, int budget, const SearchConfig& cfg) {
    validate_instance(inst);
    if (inst.graph.n() > 32 || inst.k > 31) throw SearchBudgetExceeded("instance too large for exact search");
    Search s(inst, budget, cfg);
    return s.run();
}

DecideResult exact_decide(const ExplorationInstance& inst, const SearchConfig& cfg) {
    if (!inst.budget) throw std::invalid_argument("instance has no budget");
    return exact_decide(inst, *inst.budget, cfg);
}

int exact_lower_bound(const ExplorationInstance& inst) {
    const auto& g = inst.graph;
    if (g.empty()) return 0;
    int odd = 0;
    for (Vertex v = 0; v < g.n(); ++v) odd += g.degree(v) % 2;
    int traversals = g.size() + odd / 2;
    int lb = (traversals + inst.k - 1) / inst.k;
    if (is_bipartite(g) && lb % 2 != 0) ++lb;
    auto dist = bfs_distances(g, inst.v_init);
    int ecc = *std::max_element(dist.begin(), dist.end());
    return std::max(lb, 2 * ecc);
}

OptimumResult exact_optimum(const ExplorationInstance& inst, const SearchConfig& cfg) {
    validate_instance(inst);
    int hi = std::min(cfg.max_budget, 2 * inst.graph.size());
    for (int b = exact_lower_bound(inst); b <= hi; ++b) {
        auto r = exact_decide(inst, b, cfg);
        if (r.yes) return {b, *r.witness};
    }
    throw SearchBudgetExceeded("no solution within max_budget " + std::to_string(cfg.max_budget));
}

}  // namespace cge
