#pragma once

#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "cge/multigraph.hpp"
#include "cge/valid_pair.hpp"

namespace cge {

// Sorted multiset of cover vertices (each at most twice).
using NeiSub = std::vector<Vertex>;

struct VertexType {
    int class_id = -1;
    std::vector<NeiSub> nei_subsets;  // sorted, distinct

    auto operator<=>(const VertexType&) const = default;
};

struct AllocEntry {
    Vertex copy = -1;  // vertex of Ḡ
    NeiSub nei;
    VertexType type;

    auto operator<=>(const AllocEntry&) const = default;
};

struct RobotType {
    std::vector<std::pair<Edge, int>> cc;  // over Ḡ, canonical edge order
    std::vector<AllocEntry> alloc;         // ascending copy id
    std::vector<int> num_of_cyc;           // indexed by cycle length; entries 0, 1 and 4 stay 0

    auto operator<=>(const RobotType&) const = default;
    Multigraph cc_graph() const;
    int cc_size() const;
};

struct CycleType {
    Cycle cycle;                       // in G*, canonical rotation and direction
    std::vector<VertexType> pa_alloc;  // one entry per independent position 1..l-1
    RobotType robot;

    auto operator<=>(const CycleType&) const = default;
};

struct FptContext : CoverContext {
    Gbar gbar;
    static FptContext make(const Multigraph& g, const VertexCover& vc, Vertex v_init,
                           int gbar_cap = kDefaultGbarCap);
};

bool vertex_type_valid(const VertexType& t, const CoverContext& ctx);

// Types read off the per-robot valid pairs of one solution.
VertexType derive_vertex_type(Vertex u, const std::vector<ValidPair>& pairs, const CoverContext& ctx);
RobotType derive_robot_type(int robot, const std::vector<ValidPair>& pairs, const FptContext& ctx);
CycleType derive_cycle_type(int robot, const Cycle& c, const std::vector<ValidPair>& pairs,
                            const FptContext& ctx);

// Canonical (cycle, pair allocation) over G*: cover-vertex start, least rotation/direction.
std::pair<Cycle, std::vector<VertexType>> canonical_cycle(const Cycle& c, const std::vector<VertexType>& pa,
                                                          const CoverContext& ctx);

// Cycle lengths other than 4 that robot types count, i.e. 2..2|VC| without 4.
std::vector<int> counted_lengths(int vc_size);

int robot_bud(const RobotType& r);
int robot_cyc_bud(const RobotType& r, int budget);

struct CyclePattern {
    Cycle cycle;
    std::vector<int> pa;  // vertex-type indices
    auto operator<=>(const CyclePattern&) const = default;
};

struct TypeSpace {
    int budget = 0;
    int k = 1;
    std::vector<VertexType> ver;
    std::vector<RobotType> rob;
    std::vector<int> rob_bud, rob_cyc_bud;
    std::vector<CyclePattern> patterns;
    std::vector<std::pair<int, int>> cyc;  // (pattern, robot), sorted

    int find_ver(const VertexType& t) const;
    int find_rob(const RobotType& t) const;
    int find_cyc(const CycleType& t) const;
    CycleType cycle_type(int i) const;

    void build_index();

private:
    std::map<VertexType, int> ver_index_;
    std::map<RobotType, int> rob_index_;
    std::map<CyclePattern, int> pattern_index_;
};

struct TypeSpaceLimits {
    int max_vc = 2;
    int max_classes = 3;
    long long max_types = 1'500'000;
};

TypeSpace enumerate_type_space(const FptContext& ctx, int budget, int k, const TypeSpaceLimits& lim = {});

}  // namespace cge
