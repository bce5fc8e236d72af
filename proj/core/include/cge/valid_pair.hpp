#pragma once

#include <string>
#include <vector>

#include "cge/multigraph.hpp"

namespace cge {

// Everything derived from (G, VC') that the FPT machinery keeps consulting.
struct CoverContext {
    Multigraph g;
    VertexCover vc;
    Vertex v_init = 0;
    EquivalenceClasses eq;
    EquivalenceGraph gstar;

    static CoverContext make(const Multigraph& g, const VertexCover& vc, Vertex v_init);
    bool independent(Vertex v) const { return v >= 0 && v < g.n() && !vc.contains(v); }
};

// A closed walk v_0 .. v_l with v_0 == v_l.
using Cycle = std::vector<Vertex>;

Multigraph cycle_edges(const Cycle& c);
bool is_simple_cycle(const Cycle& c);

// Rotates a closed walk so that it starts at its smallest cover vertex.
Cycle rotate_to_cover(const Cycle& c, const VertexCover& vc);

struct ValidPair {
    Multigraph cc;
    std::vector<Cycle> cycles;
};

// Keeps at most `cap` copies of each edge, dropping copies in pairs so parity is kept.
Multigraph cap_multiplicity(const Multigraph& e, int cap = 2);

std::vector<Cycle> extract_cycle_cover(const Multigraph& g, const VertexCover& vc);

ValidPair decompose_valid_pair(const Multigraph& e, const CoverContext& ctx);

// Names of the valid-pair conditions that fail; empty when (vp) is an e-valid pair.
std::vector<std::string> valid_pair_violations(const ValidPair& vp, const Multigraph& e,
                                               const CoverContext& ctx);

}  // namespace cge
