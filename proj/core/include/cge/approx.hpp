#pragma once

#include <vector>

#include "cge/euler.hpp"
#include "cge/multigraph.hpp"

namespace cge {

struct PartitionState {
    Multigraph e_ind;
    std::vector<Multigraph> e_i;
    Multigraph tree;
    int last_pair_robot = 0;  // t: number of robots that received the final round of pairs
};

// Ê_IND: every edge with an endpoint outside vc', plus one duplicate per
// odd-degree independent vertex (the edge to its lowest-id neighbour).
Multigraph even_independent_degrees(const Multigraph& g, const VertexCover& vc);

// BFS spanning tree of G[vc'] rooted at v_init, ascending neighbour order.
Multigraph cover_spanning_tree(const Multigraph& g, const VertexCover& vc, Vertex v_init);

// Leaf-peeling parity repair along the tree.
Multigraph make_vc_even_degree(const Multigraph& tree, const Multigraph& e, const VertexCover& vc);

// Partition stage only (pairs, then VC-internal edges); exposed for tests.
PartitionState approx_partition(const ExplorationInstance& inst, const VertexCover& vc_connected);

struct ApproxResult {
    Solution solution;
    VertexCover vc_connected;
};

ApproxResult approx_solve_detailed(const ExplorationInstance& inst, const VertexCover& vc);
Solution approx_solve(const ExplorationInstance& inst, const VertexCover& vc);

}  // namespace cge
