#pragma once

#include <vector>

#include "cge/multigraph.hpp"

namespace cge {

struct BinPackingInstance {
    std::vector<int> sizes;
    int capacity = 0;  // B
    int bins = 1;      // k
    bool exact = false;

    long long total() const;
};

// Pads with unit items up to B*k; throws ImmediateNo when the items already exceed B*k.
BinPackingInstance binpacking_to_exact(const BinPackingInstance& inst);

// Tree of stars: root 0, one centre per item (ids 1..|I|), then the leaves item by item.
ExplorationInstance bin_to_rob(const BinPackingInstance& inst);

// Exhaustive decider for |sizes| <= 8 and k <= 4.
bool brute_binpacking(const BinPackingInstance& inst);

}  // namespace cge
