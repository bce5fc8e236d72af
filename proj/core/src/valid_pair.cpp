#include "cge/valid_pair.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cge/errors.hpp"

namespace cge {

CoverContext CoverContext::make(const Multigraph& g, const VertexCover& vc, Vertex v_init) {
    CoverContext ctx;
    ctx.g = g;
    ctx.vc = vc;
    ctx.v_init = v_init;
    ctx.eq = equivalence_classes(g, vc);
    ctx.gstar = build_equivalence_graph(g, vc, ctx.eq);
    return ctx;
}

Multigraph cycle_edges(const Cycle& c) {
    Multigraph m;
    for (size_t i = 0; i + 1 < c.size(); ++i) m.add_edge(c[i], c[i + 1]);
    return m;
}

bool is_simple_cycle(const Cycle& c) {
    if (c.size() < 3 || c.front() != c.back()) return false;
    std::set<Vertex> seen(c.begin(), c.end() - 1);
    return seen.size() == c.size() - 1;
}

Cycle rotate_to_cover(const Cycle& c, const VertexCover& vc) {
    if (c.size() < 2) return c;
    const size_t len = c.size() - 1;
    size_t best = len;
    for (size_t i = 0; i < len; ++i)
        if (vc.contains(c[i]) && (best == len || c[i] < c[best])) best = i;
    if (best == len) return c;
    Cycle out;
    for (size_t i = 0; i <= len; ++i) out.push_back(c[(best + i) % len]);
    return out;
}

Multigraph cap_multiplicity(const Multigraph& e, int cap) {
    Multigraph out(e.n());
    for (const auto& [ed, m] : e.edges()) {
        int keep = m;
        if (keep > cap) keep -= 2 * ((keep - cap + 1) / 2);
        out.add_edge(ed.first, ed.second, keep);
    }
    return out;
}

namespace {

// Removes and returns one simple cycle of an even multigraph with at least one edge.
Cycle peel_simple_cycle(Multigraph& r, const VertexCover& vc) {
    for (const auto& [e, m] : r.edges()) {
        if (m >= 2) {
            r.remove_edge(e.first, e.second, 2);
            return rotate_to_cover({e.first, e.second, e.first}, vc);
        }
    }
    Vertex s = r.support().front();
    std::vector<Vertex> path{s};
    std::map<Vertex, size_t> pos{{s, 0}};
    Vertex prev = -1, cur = s;
    while (true) {
        Vertex next = -1;
        for (Vertex w : r.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        auto it = pos.find(next);
        if (it != pos.end()) {
            Cycle c(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
            c.push_back(next);
            for (size_t i = 0; i + 1 < c.size(); ++i) r.remove_edge(c[i], c[i + 1]);
            return rotate_to_cover(c, vc);
        }
        pos[next] = path.size();
        path.push_back(next);
        prev = cur;
        cur = next;
    }
}

}  // namespace

std::vector<Cycle> extract_cycle_cover(const Multigraph& g, const VertexCover& vc) {
    if (!g.all_degrees_even()) throw OddDegree("cycle cover needs all degrees even");
    Multigraph r = g;
    std::vector<Cycle> out;
    const int limit = 2 * vc.size() * vc.size();

    // pigeonhole stage: two pairs at independent vertices with the same cover endpoints
    while (r.size() > limit) {
        std::map<std::pair<Vertex, Vertex>, Vertex> first_at;
        Cycle found;
        for (Vertex u : r.support()) {
            if (vc.contains(u)) continue;
            std::vector<Vertex> ends;
            for (const auto& [w, m] : r.adjacency(u))
                for (int c = 0; c < m; ++c) ends.push_back(w);
            for (size_t i = 0; i + 1 < ends.size(); i += 2) {
                std::pair<Vertex, Vertex> key{ends[i], ends[i + 1]};
                auto it = first_at.find(key);
                if (it == first_at.end()) {
                    first_at.emplace(key, u);
                    continue;
                }
                found = {key.first, it->second, key.second, u, key.first};
                break;
            }
            if (!found.empty()) break;
        }
        if (found.empty()) break;
        for (size_t i = 0; i + 1 < found.size(); ++i) r.remove_edge(found[i], found[i + 1]);
        out.push_back(found);
    }
    while (!r.empty()) out.push_back(peel_simple_cycle(r, vc));
    return out;
}

ValidPair decompose_valid_pair(const Multigraph& e, const CoverContext& ctx) {
    if (e.empty()) return ValidPair{Multigraph(ctx.g.n()), {}};
    if (!e.has_vertex(ctx.v_init)) throw PreconditionViolated("multiset does not contain v_init");
    if (!e.support_connected()) throw PreconditionViolated("multiset is not connected");
    if (!e.all_degrees_even()) throw PreconditionViolated("multiset has odd degrees");
    for (const auto& [ed, m] : e.edges()) {
        if (m > 2) throw PreconditionViolated("multiplicity above 2");
        if (ctx.g.multiplicity(ed.first, ed.second) == 0) throw PreconditionViolated("edge not in G");
    }
    if (!ctx.vc.contains(ctx.v_init)) throw PreconditionViolated("v_init must lie in the cover");

    // collapse independent vertices of one class with equal neighbourhoods
    Multigraph h = e;
    std::set<std::pair<int, std::vector<Vertex>>> kept;
    for (Vertex u : e.support()) {
        if (ctx.vc.contains(u)) continue;
        auto key = std::make_pair(ctx.eq.class_of[static_cast<size_t>(u)], e.neighbors(u));
        if (kept.insert(key).second) continue;
        for (const auto& [w, m] : e.adjacency(u)) h.remove_edge(u, w, m);
    }

    // repair odd cover degrees with simple paths through edges outside H
    while (true) {
        std::vector<Vertex> odd;
        for (Vertex v : ctx.vc.vertices)
            if (h.degree(v) % 2 != 0) odd.push_back(v);
        if (odd.empty()) break;
        Vertex s = odd.front();
        Multigraph rest = e - h;
        std::vector<Vertex> parent(static_cast<size_t>(e.n()), -2);
        parent[static_cast<size_t>(s)] = -1;
        std::deque<Vertex> q{s};
        Vertex t = -1;
        while (!q.empty() && t < 0) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : rest.neighbors(u)) {
                if (parent[static_cast<size_t>(w)] != -2) continue;
                parent[static_cast<size_t>(w)] = u;
                if (ctx.vc.contains(w) && h.degree(w) % 2 != 0) {
                    t = w;
                    break;
                }
                q.push_back(w);
            }
        }
        if (t < 0) throw PreconditionViolated("no repair path found");
        for (Vertex w = t; parent[static_cast<size_t>(w)] >= 0; w = parent[static_cast<size_t>(w)])
            h.add_edge(w, parent[static_cast<size_t>(w)]);
    }

    ValidPair vp;
    vp.cc = h;
    vp.cycles = extract_cycle_cover(e - h, ctx.vc);
    return vp;
}

std::vector<std::string> valid_pair_violations(const ValidPair& vp, const Multigraph& e, const CoverContext& ctx) {
    std::vector<std::string> bad;
    const int vcs = ctx.vc.size();

    std::vector<int> per_class(ctx.eq.classes.size(), 0);
    bool mult_ok = true;
    for (const auto& [ed, m] : vp.cc.edges())
        if (m > 2 || ctx.g.multiplicity(ed.first, ed.second) == 0) mult_ok = false;
    for (Vertex u : vp.cc.support())
        if (!ctx.vc.contains(u)) ++per_class[static_cast<size_t>(ctx.eq.class_of[static_cast<size_t>(u)])];
    for (size_t c = 0; c < per_class.size(); ++c)
        if (per_class[c] > num_ver(ctx.eq.classes[c], vcs)) mult_ok = false;
    if (!mult_ok) bad.push_back("condition 1: skeleton is not a sub-multigraph of the bounded expansion");

    bool cc_ok = vp.cc.all_degrees_even() && vp.cc.support_connected();
    if (e.empty()) cc_ok = cc_ok && vp.cc.empty();
    else cc_ok = cc_ok && vp.cc.has_vertex(ctx.v_init);
    if (!cc_ok) bad.push_back("condition 2: skeleton not connected/even/rooted");

    for (Vertex v : ctx.vc.vertices)
        if (vp.cc.has_vertex(v) != e.has_vertex(v)) {
            bad.push_back("condition 3: skeleton misses a cover vertex of the multiset");
            break;
        }

    int non4 = 0;
    bool simple_ok = true, walks_ok = true;
    for (const auto& c : vp.cycles) {
        int len = static_cast<int>(c.size()) - 1;
        if (c.size() < 3 || c.front() != c.back()) walks_ok = false;
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] == c[i + 1] || ctx.g.multiplicity(c[i], c[i + 1]) == 0) walks_ok = false;
        if (len == 4) continue;
        ++non4;
        if (!is_simple_cycle(c) || len > 2 * vcs) simple_ok = false;
    }
    if (!walks_ok) bad.push_back("cycles are not closed walks of G");
    if (non4 > 2 * vcs * vcs) bad.push_back("condition 4: too many cycles of length other than 4");
    if (!simple_ok) bad.push_back("condition 5: a cycle of length other than 4 is not simple");

    Multigraph total = vp.cc;
    for (const auto& c : vp.cycles) total += cycle_edges(c);
    if (!(total == e)) bad.push_back("condition 6: skeleton and cycles do not reassemble the multiset");
    return bad;
}

}  // namespace cge
