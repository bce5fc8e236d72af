#include "cge/approx.hpp"

#include <deque>

#include "cge/errors.hpp"

namespace cge {

Multigraph even_independent_degrees(const Multigraph& g, const VertexCover& vc) {
    Multigraph out(g.n());
    for (const auto& [e, m] : g.edges())
        if (!vc.contains(e.first) || !vc.contains(e.second)) out.add_edge(e.first, e.second, m);
    for (Vertex u = 0; u < g.n(); ++u) {
        if (vc.contains(u) || out.degree(u) % 2 == 0) continue;
        out.add_edge(u, out.neighbors(u).front());
    }
    return out;
}

Multigraph cover_spanning_tree(const Multigraph& g, const VertexCover& vc, Vertex v_init) {
    Multigraph tree(g.n());
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::deque<Vertex> q{v_init};
    seen[static_cast<size_t>(v_init)] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!vc.contains(w) || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            tree.add_edge(u, w);
            q.push_back(w);
        }
    }
    return tree;
}

Multigraph make_vc_even_degree(const Multigraph& tree, const Multigraph& e, const VertexCover& vc) {
    const auto sup = tree.support();
    bool spans = tree.is_simple() && tree.support_connected() && tree.size() + 1 == vc.size();
    if (vc.size() >= 2) spans = spans && sup == vc.vertices;
    else spans = spans && tree.empty();
    if (!spans) throw TreeNotSpanning("tree does not span the cover");

    Multigraph out = e;
    Multigraph rest = tree;
    while (rest.support().size() >= 2) {
        Vertex leaf = -1;
        for (Vertex v : rest.support())
            if (rest.degree(v) == 1) {
                leaf = v;
                break;
            }
        Vertex parent = rest.neighbors(leaf).front();
        if (out.degree(leaf) % 2 != 0) out.add_edge(leaf, parent);
        rest.remove_edge(leaf, parent);
    }
    return out;
}

PartitionState approx_partition(const ExplorationInstance& inst, const VertexCover& vc) {
    const auto& g = inst.graph;
    const int k = inst.k;
    PartitionState st;
    st.e_ind = even_independent_degrees(g, vc);
    st.e_i.assign(static_cast<size_t>(k), Multigraph(g.n()));

    int pair_no = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (vc.contains(u)) continue;
        std::vector<Vertex> ends;
        for (const auto& [w, m] : st.e_ind.adjacency(u))
            for (int c = 0; c < m; ++c) ends.push_back(w);
        for (size_t i = 0; i + 1 < ends.size(); i += 2) {
            auto& target = st.e_i[static_cast<size_t>(pair_no % k)];
            target.add_edge(u, ends[i]);
            target.add_edge(u, ends[i + 1]);
            ++pair_no;
        }
    }
    st.last_pair_robot = pair_no % k;

    // single cover edges: t+1..k, then k..1, 1..k, ... (0-based below)
    int robot = st.last_pair_robot;
    int dir = +1;
    for (const auto& [e, m] : g.edges()) {
        if (!vc.contains(e.first) || !vc.contains(e.second)) continue;
        if (robot >= k) {
            robot = k - 1;
            dir = -1;
        } else if (robot < 0) {
            robot = 0;
            dir = +1;
        }
        st.e_i[static_cast<size_t>(robot)].add_edge(e.first, e.second, m);
        robot += dir;
    }
    st.tree = cover_spanning_tree(g, vc, inst.v_init);
    return st;
}

ApproxResult approx_solve_detailed(const ExplorationInstance& inst, const VertexCover& vc) {
    ApproxResult res;
    res.vc_connected = connect_cover(inst.graph, vc, inst.v_init);
    PartitionState st = approx_partition(inst, res.vc_connected);
    std::vector<Multigraph> final_sets;
    for (auto& ei : st.e_i) {
        Multigraph withtree = ei + st.tree;
        final_sets.push_back(make_vc_even_degree(st.tree, withtree, res.vc_connected));
    }
    res.solution = solution_from_multisets(final_sets, inst.v_init);
    return res;
}

Solution approx_solve(const ExplorationInstance& inst, const VertexCover& vc) {
    return approx_solve_detailed(inst, vc).solution;
}

}  // namespace cge
