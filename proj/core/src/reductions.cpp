#include "cge/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cge/errors.hpp"

namespace cge {

long long BinPackingInstance::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0LL); }

static void check_sizes(const BinPackingInstance& inst) {
    if (inst.bins < 1) throw std::invalid_argument("bin count must be at least 1");
    if (inst.capacity < 0) throw std::invalid_argument("negative capacity");
    for (int s : inst.sizes)
        if (s < 1) throw std::invalid_argument("item sizes must be positive");
}

BinPackingInstance binpacking_to_exact(const BinPackingInstance& inst) {
    check_sizes(inst);
    long long cap = static_cast<long long>(inst.capacity) * inst.bins;
    long long sum = inst.total();
    if (sum > cap)
        throw ImmediateNo("items total " + std::to_string(sum) + " exceeds B*k = " + std::to_string(cap));
    BinPackingInstance out = inst;
    out.sizes.insert(out.sizes.end(), static_cast<size_t>(cap - sum), 1);
    out.exact = true;
    return out;
}

ExplorationInstance bin_to_rob(const BinPackingInstance& inst) {
    check_sizes(inst);
    if (!inst.exact || inst.total() != static_cast<long long>(inst.capacity) * inst.bins)
        throw NotExact("bin_to_rob needs an exact instance with total size B*k");
    const int items = static_cast<int>(inst.sizes.size());
    const int n = 1 + static_cast<int>(inst.total());
    ExplorationInstance out;
    out.graph = Multigraph(n);
    int next_leaf = 1 + items;
    for (int i = 0; i < items; ++i) {
        Vertex centre = 1 + i;
        out.graph.add_edge(0, centre);
        for (int l = 0; l < inst.sizes[static_cast<size_t>(i)] - 1; ++l) out.graph.add_edge(centre, next_leaf++);
    }
    out.v_init = 0;
    out.k = inst.bins;
    out.budget = 2 * inst.capacity;
    return out;
}

bool brute_binpacking(const BinPackingInstance& inst) {
    check_sizes(inst);
    if (inst.sizes.size() > 8 || inst.bins > 4) throw TooLarge("brute force limited to 8 items and 4 bins");
    if (inst.exact && inst.total() != static_cast<long long>(inst.capacity) * inst.bins) return false;
    std::vector<int> load(static_cast<size_t>(inst.bins), 0);
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == inst.sizes.size()) {
            if (!inst.exact) return true;
            return std::all_of(load.begin(), load.end(), [&](int l) { return l == inst.capacity; });
        }
        for (auto& l : load) {
            if (l + inst.sizes[i] > inst.capacity) continue;
            l += inst.sizes[i];
            bool ok = place(i + 1);
            l -= inst.sizes[i];
            if (ok) return true;
        }
        return false;
    };
    return place(0);
}

}  // namespace cge
