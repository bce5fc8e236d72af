#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cge/errors.hpp"
#include "cge/multigraph.hpp"

namespace cge {

bool VertexCover::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool is_vertex_cover(const Multigraph& g, const std::vector<Vertex>& vc) {
    std::vector<char> in(static_cast<size_t>(g.n()), 0);
    for (Vertex v : vc) {
        if (v < 0 || v >= g.n()) return false;
        in[static_cast<size_t>(v)] = 1;
    }
    for (const auto& [e, m] : g.edges())
        if (!in[static_cast<size_t>(e.first)] && !in[static_cast<size_t>(e.second)]) return false;
    return true;
}

VertexCover vertex_cover_2approx(const Multigraph& g) {
    if (g.n() == 0) throw EmptyGraph("graph has no vertices");
    std::vector<char> matched(static_cast<size_t>(g.n()), 0);
    VertexCover out;
    for (const auto& [e, m] : g.edges()) {
        auto [u, v] = e;
        if (!matched[static_cast<size_t>(u)] && !matched[static_cast<size_t>(v)]) {
            matched[static_cast<size_t>(u)] = matched[static_cast<size_t>(v)] = 1;
            out.vertices.push_back(u);
            out.vertices.push_back(v);
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

VertexCover connect_cover(const Multigraph& g, const VertexCover& vc, Vertex v_init) {
    if (!is_vertex_cover(g, vc.vertices)) throw NotACover("input set is not a vertex cover");
    if (v_init < 0 || v_init >= g.n()) throw NotACover("v_init out of range");

    const int n = g.n();
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (Vertex v : vc.vertices) in[static_cast<size_t>(v)] = 1;
    in[static_cast<size_t>(v_init)] = 1;

    Dsu dsu(n);
    for (const auto& [e, m] : g.edges())
        if (in[static_cast<size_t>(e.first)] && in[static_cast<size_t>(e.second)]) dsu.unite(e.first, e.second);

    auto components = [&] {
        std::vector<int> roots;
        for (int v = 0; v < n; ++v)
            if (in[static_cast<size_t>(v)]) roots.push_back(dsu.find(v));
        std::sort(roots.begin(), roots.end());
        return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
    };

    while (components() > 1) {
        bool progress = false;
        for (Vertex u = 0; u < n; ++u) {
            if (in[static_cast<size_t>(u)]) continue;
            std::vector<int> roots;
            for (Vertex w : g.neighbors(u))
                if (in[static_cast<size_t>(w)]) roots.push_back(dsu.find(w));
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            if (roots.size() < 2) continue;
            in[static_cast<size_t>(u)] = 1;
            for (int r : roots) dsu.unite(u, r);
            progress = true;
        }
        // cannot happen for a connected host graph
        if (!progress) throw NotACover("cover cannot be connected: host graph disconnected");
    }

    VertexCover out;
    for (int v = 0; v < n; ++v)
        if (in[static_cast<size_t>(v)]) out.vertices.push_back(v);
    out.connected = true;
    return out;
}

EquivalenceClasses equivalence_classes(const Multigraph& g, const VertexCover& vc) {
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (vc.contains(u)) continue;
        by_nbhd[g.neighbors(u)].push_back(u);
    }
    EquivalenceClasses out;
    out.class_of.assign(static_cast<size_t>(g.n()), -1);
    for (auto& [nb, members] : by_nbhd) {
        int id = static_cast<int>(out.classes.size());
        for (Vertex u : members) out.class_of[static_cast<size_t>(u)] = id;
        out.classes.push_back({nb, members});
    }
    return out;
}

EquivalenceGraph build_equivalence_graph(const Multigraph& g, const VertexCover& vc,
                                         const EquivalenceClasses& eq) {
    EquivalenceGraph out;
    const int n = g.n();
    out.graph = Multigraph(n + static_cast<int>(eq.classes.size()));
    for (const auto& [e, m] : g.edges())
        if (vc.contains(e.first) && vc.contains(e.second)) out.graph.add_edge(e.first, e.second);
    for (size_t i = 0; i < eq.classes.size(); ++i) {
        Vertex cv = n + static_cast<int>(i);
        out.class_vertex.push_back(cv);
        for (Vertex w : eq.classes[i].neighborhood) out.graph.add_edge(cv, w);
    }
    return out;
}

int num_ver(const EquivalenceClass& c, int vc_size) {
    long long cap = (1LL << c.neighborhood.size()) + static_cast<long long>(vc_size) * vc_size;
    return static_cast<int>(std::min<long long>(static_cast<long long>(c.members.size()), cap));
}

Gbar build_gbar(const Multigraph& g, const VertexCover& vc, const EquivalenceClasses& eq, int cap) {
    if (vc.size() > cap)
        throw TypeSpaceTooLarge("|VC'| = " + std::to_string(vc.size()) + " exceeds the cap " + std::to_string(cap));
    Gbar out;
    out.base = g.n();
    int next = g.n();
    for (const auto& c : eq.classes) {
        int nv = num_ver(c, vc.size());
        out.num_ver.push_back(nv);
        std::vector<Vertex> ids;
        for (int j = 0; j < nv; ++j) {
            ids.push_back(next++);
            out.class_of_copy.push_back(static_cast<int>(out.copies.size()));
        }
        out.copies.push_back(std::move(ids));
    }
    out.graph = Multigraph(next);
    for (const auto& [e, m] : g.edges())
        if (vc.contains(e.first) && vc.contains(e.second)) out.graph.add_edge(e.first, e.second, 2);
    for (size_t i = 0; i < eq.classes.size(); ++i)
        for (Vertex c : out.copies[i])
            for (Vertex w : eq.classes[i].neighborhood) out.graph.add_edge(c, w, 2);
    return out;
}

}  // namespace cge
