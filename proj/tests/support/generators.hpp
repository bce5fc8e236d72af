#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cge/multigraph.hpp"

namespace cge::gen {

// Random connected simple graph: a random spanning tree plus extra edges.
inline Multigraph random_connected_graph(std::mt19937& rng, int n, int m) {
    Multigraph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    std::vector<Edge> rest;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.multiplicity(u, v) == 0) rest.push_back({u, v});
    std::shuffle(rest.begin(), rest.end(), rng);
    for (size_t i = 0; i < rest.size() && g.size() < m; ++i) g.add_edge(rest[i].first, rest[i].second);
    return g;
}

// Random connected multigraph with all degrees even, built as a union of closed walks
// that each start on an already-touched vertex.
inline Multigraph random_even_multigraph(std::mt19937& rng, int n, int max_edges) {
    Multigraph g(n);
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<Vertex> touched{0};
    while (true) {
        std::uniform_int_distribution<int> len_d(2, 5);
        int len = len_d(rng);
        if (g.size() + len > max_edges) break;
        std::uniform_int_distribution<size_t> pick(0, touched.size() - 1);
        Vertex start = touched[pick(rng)];
        std::vector<Vertex> walk{start};
        for (int i = 1; i < len; ++i) {
            Vertex v;
            do v = vert(rng);
            while (v == walk.back());
            walk.push_back(v);
        }
        if (walk.back() == start) continue;
        walk.push_back(start);
        for (size_t i = 0; i + 1 < walk.size(); ++i) {
            g.add_edge(walk[i], walk[i + 1]);
            if (std::find(touched.begin(), touched.end(), walk[i + 1]) == touched.end()) touched.push_back(walk[i + 1]);
        }
        if (g.size() >= max_edges - 1) break;
    }
    return g;
}

// Smallest vertex cover by exhaustive search (n <= 12).
inline int brute_vertex_cover_size(const Multigraph& g) {
    const int n = g.n();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool ok = true;
        for (const auto& [e, m] : g.edges())
            if (!(mask >> e.first & 1u) && !(mask >> e.second & 1u)) ok = false;
        if (ok) best = size;
    }
    return best;
}

// Optimum by enumerating all k-tuples of multiplicity-<=2 edge multisets and
// checking the four multiset conditions directly (m * k <= 12).
inline int brute_multiset_optimum(const Multigraph& g, Vertex v_init, int k) {
    auto edges = g.edge_list();
    const size_t m = edges.size();
    const size_t slots = m * static_cast<size_t>(k);
    std::vector<int> mult(slots, 0);
    int best = 1 << 30;
    while (true) {
        bool covered = true;
        for (size_t e = 0; e < m; ++e) {
            bool any = false;
            for (int r = 0; r < k; ++r) any = any || mult[static_cast<size_t>(r) * m + e] > 0;
            covered = covered && any;
        }
        if (covered) {
            int value = 0;
            bool ok = true;
            for (int r = 0; r < k && ok; ++r) {
                std::vector<int> deg(static_cast<size_t>(g.n()), 0);
                std::vector<int> comp(static_cast<size_t>(g.n()));
                for (int v = 0; v < g.n(); ++v) comp[static_cast<size_t>(v)] = v;
                auto find = [&](int v) {
                    while (comp[static_cast<size_t>(v)] != v) v = comp[static_cast<size_t>(v)];
                    return v;
                };
                int size = 0;
                for (size_t e = 0; e < m; ++e) {
                    int c = mult[static_cast<size_t>(r) * m + e];
                    if (c == 0) continue;
                    size += c;
                    deg[static_cast<size_t>(edges[e].first)] += c;
                    deg[static_cast<size_t>(edges[e].second)] += c;
                    comp[static_cast<size_t>(find(edges[e].first))] = find(edges[e].second);
                }
                if (size == 0) continue;
                if (deg[static_cast<size_t>(v_init)] == 0) ok = false;
                for (int v = 0; v < g.n(); ++v) {
                    if (deg[static_cast<size_t>(v)] % 2 != 0) ok = false;
                    if (deg[static_cast<size_t>(v)] > 0 && find(v) != find(v_init)) ok = false;
                }
                value = std::max(value, size);
            }
            if (ok) best = std::min(best, value);
        }
        size_t i = 0;
        while (i < slots && mult[i] == 2) mult[i++] = 0;
        if (i == slots) break;
        ++mult[i];
    }
    return best;
}

}  // namespace cge::gen
