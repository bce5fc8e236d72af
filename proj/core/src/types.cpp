#include "cge/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cge/errors.hpp"

namespace cge {

FptContext FptContext::make(const Multigraph& g, const VertexCover& vc, Vertex v_init, int gbar_cap) {
    FptContext ctx;
    static_cast<CoverContext&>(ctx) = CoverContext::make(g, vc, v_init);
    ctx.gbar = build_gbar(g, vc, ctx.eq, gbar_cap);
    return ctx;
}

Multigraph RobotType::cc_graph() const {
    Multigraph m;
    for (const auto& [e, c] : cc) m.add_edge(e.first, e.second, c);
    return m;
}

int RobotType::cc_size() const {
    int s = 0;
    for (const auto& [e, c] : cc) s += c;
    return s;
}

std::vector<int> counted_lengths(int vc_size) {
    std::vector<int> out;
    for (int j = 2; j <= 2 * vc_size; ++j)
        if (j != 4) out.push_back(j);
    if (out.empty()) out.push_back(2);
    return out;
}

static size_t num_of_cyc_size(int vc_size) { return static_cast<size_t>(std::max(3, 2 * vc_size + 1)); }

int robot_bud(const RobotType& r) {
    int b = r.cc_size();
    for (size_t j = 0; j < r.num_of_cyc.size(); ++j) b += static_cast<int>(j) * r.num_of_cyc[j];
    return b;
}

int robot_cyc_bud(const RobotType& r, int budget) {
    int slack = budget - robot_bud(r);
    int q = slack >= 0 ? slack / 4 : -((-slack + 3) / 4);
    return q * 4;
}

bool vertex_type_valid(const VertexType& t, const CoverContext& ctx) {
    if (t.class_id < 0 || t.class_id >= static_cast<int>(ctx.eq.classes.size())) return false;
    const auto& nb = ctx.eq.classes[static_cast<size_t>(t.class_id)].neighborhood;
    if (!std::is_sorted(t.nei_subsets.begin(), t.nei_subsets.end())) return false;
    if (std::adjacent_find(t.nei_subsets.begin(), t.nei_subsets.end()) != t.nei_subsets.end()) return false;
    std::set<Vertex> covered;
    for (const auto& s : t.nei_subsets) {
        if (s.empty() || s.size() % 2 != 0 || !std::is_sorted(s.begin(), s.end())) return false;
        for (Vertex v : s) {
            if (!std::binary_search(nb.begin(), nb.end(), v)) return false;
            if (std::count(s.begin(), s.end(), v) > 2) return false;
            covered.insert(v);
        }
    }
    return std::equal(nb.begin(), nb.end(), covered.begin(), covered.end());
}

namespace {

NeiSub neighbor_multiset(const Multigraph& m, Vertex u) {
    NeiSub out;
    if (u >= m.n()) return out;
    for (const auto& [w, c] : m.adjacency(u))
        for (int i = 0; i < c; ++i) out.push_back(w);
    return out;
}

Cycle oriented(const Cycle& c, const VertexCover& vc) {
    if (!c.empty() && vc.contains(c.front())) return c;
    return rotate_to_cover(c, vc);
}

struct Entry {
    int cls;
    NeiSub nei;
    VertexType type;
    auto operator<=>(const Entry&) const = default;
};

RobotType make_robot_type(const FptContext& ctx, const std::vector<std::pair<Edge, int>>& vc_edges,
                          std::vector<Entry> entries, std::vector<int> num_of_cyc) {
    std::sort(entries.begin(), entries.end());
    Multigraph cc;
    for (const auto& [e, c] : vc_edges) cc.add_edge(e.first, e.second, c);
    RobotType r;
    std::vector<size_t> used(ctx.gbar.copies.size(), 0);
    for (auto& en : entries) {
        const auto& pool = ctx.gbar.copies[static_cast<size_t>(en.cls)];
        size_t& j = used[static_cast<size_t>(en.cls)];
        if (j >= pool.size()) throw PreconditionViolated("more skeleton vertices than Ḡ copies in a class");
        Vertex copy = pool[j++];
        for (Vertex w : en.nei) cc.add_edge(copy, w);
        r.alloc.push_back({copy, std::move(en.nei), std::move(en.type)});
    }
    r.cc = cc.edges();
    r.num_of_cyc = std::move(num_of_cyc);
    return r;
}

}  // namespace

VertexType derive_vertex_type(Vertex u, const std::vector<ValidPair>& pairs, const CoverContext& ctx) {
    if (!ctx.independent(u)) throw NotIndependent("vertex " + std::to_string(u) + " is not independent");
    std::set<NeiSub> subs;
    for (const auto& vp : pairs) {
        if (vp.cc.has_vertex(u)) subs.insert(neighbor_multiset(vp.cc, u));
        for (const auto& raw : vp.cycles) {
            Cycle c = oriented(raw, ctx.vc);
            for (size_t i = 1; i + 1 < c.size(); ++i)
                if (c[i] == u) subs.insert(NeiSub{std::min(c[i - 1], c[i + 1]), std::max(c[i - 1], c[i + 1])});
        }
    }
    return VertexType{ctx.eq.class_of[static_cast<size_t>(u)], {subs.begin(), subs.end()}};
}

RobotType derive_robot_type(int robot, const std::vector<ValidPair>& pairs, const FptContext& ctx) {
    const auto& vp = pairs.at(static_cast<size_t>(robot));
    std::vector<std::pair<Edge, int>> vc_edges;
    for (const auto& [e, c] : vp.cc.edges())
        if (ctx.vc.contains(e.first) && ctx.vc.contains(e.second)) vc_edges.push_back({e, c});
    std::vector<Entry> entries;
    for (Vertex u : vp.cc.support()) {
        if (ctx.vc.contains(u)) continue;
        entries.push_back({ctx.eq.class_of[static_cast<size_t>(u)], neighbor_multiset(vp.cc, u),
                           derive_vertex_type(u, pairs, ctx)});
    }
    std::vector<int> counts(num_of_cyc_size(ctx.vc.size()), 0);
    for (const auto& c : vp.cycles) {
        size_t len = c.size() - 1;
        if (len == 4) continue;
        if (len >= counts.size()) throw PreconditionViolated("cycle longer than 2|VC|");
        ++counts[len];
    }
    return make_robot_type(ctx, vc_edges, std::move(entries), std::move(counts));
}

std::pair<Cycle, std::vector<VertexType>> canonical_cycle(const Cycle& c, const std::vector<VertexType>& pa,
                                                          const CoverContext& ctx) {
    const size_t len = c.size() - 1;
    const int n = ctx.g.n();
    std::vector<const VertexType*> at(len, nullptr);
    size_t next = 0;
    for (size_t i = 0; i < len; ++i)
        if (c[i] >= n) {
            if (next >= pa.size()) throw PreconditionViolated("pair allocation shorter than cycle");
            at[i] = &pa[next++];
        }
    if (next != pa.size()) throw PreconditionViolated("pair allocation length mismatch");

    std::pair<Cycle, std::vector<VertexType>> best;
    bool have = false;
    for (size_t s = 0; s < len; ++s) {
        if (c[s] >= n) continue;
        for (int dir : {+1, -1}) {
            std::pair<Cycle, std::vector<VertexType>> cand;
            for (size_t t = 0; t <= len; ++t) {
                size_t i = dir > 0 ? (s + t) % len : (s + len - t % len) % len;
                cand.first.push_back(c[i]);
                if (t < len && at[i]) cand.second.push_back(*at[i]);
            }
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    if (!have) throw PreconditionViolated("cycle has no cover vertex");
    return best;
}

CycleType derive_cycle_type(int robot, const Cycle& raw, const std::vector<ValidPair>& pairs, const FptContext& ctx) {
    Cycle c = oriented(raw, ctx.vc);
    const int n = ctx.g.n();
    Cycle star;
    std::vector<VertexType> pa;
    for (size_t i = 0; i < c.size(); ++i) {
        Vertex v = c[i];
        if (ctx.vc.contains(v)) {
            star.push_back(v);
        } else {
            star.push_back(n + ctx.eq.class_of[static_cast<size_t>(v)]);
            if (i + 1 < c.size()) pa.push_back(derive_vertex_type(v, pairs, ctx));
        }
    }
    auto [cyc, alloc] = canonical_cycle(star, pa, ctx);
    return CycleType{std::move(cyc), std::move(alloc), derive_robot_type(robot, pairs, ctx)};
}

// ---------------------------------------------------------------------------
// TypeSpace

void TypeSpace::build_index() {
    ver_index_.clear();
    rob_index_.clear();
    pattern_index_.clear();
    for (size_t i = 0; i < ver.size(); ++i) ver_index_.emplace(ver[i], static_cast<int>(i));
    for (size_t i = 0; i < rob.size(); ++i) rob_index_.emplace(rob[i], static_cast<int>(i));
    for (size_t i = 0; i < patterns.size(); ++i) pattern_index_.emplace(patterns[i], static_cast<int>(i));
}

int TypeSpace::find_ver(const VertexType& t) const {
    auto it = ver_index_.find(t);
    return it == ver_index_.end() ? -1 : it->second;
}

int TypeSpace::find_rob(const RobotType& t) const {
    auto it = rob_index_.find(t);
    return it == rob_index_.end() ? -1 : it->second;
}

int TypeSpace::find_cyc(const CycleType& t) const {
    CyclePattern p{t.cycle, {}};
    for (const auto& v : t.pa_alloc) {
        int i = find_ver(v);
        if (i < 0) return -1;
        p.pa.push_back(i);
    }
    auto pit = pattern_index_.find(p);
    if (pit == pattern_index_.end()) return -1;
    int r = find_rob(t.robot);
    if (r < 0) return -1;
    auto key = std::make_pair(pit->second, r);
    auto it = std::lower_bound(cyc.begin(), cyc.end(), key);
    if (it == cyc.end() || *it != key) return -1;
    return static_cast<int>(it - cyc.begin());
}

CycleType TypeSpace::cycle_type(int i) const {
    const auto& [p, r] = cyc.at(static_cast<size_t>(i));
    CycleType t;
    t.cycle = patterns[static_cast<size_t>(p)].cycle;
    for (int v : patterns[static_cast<size_t>(p)].pa) t.pa_alloc.push_back(ver[static_cast<size_t>(v)]);
    t.robot = rob[static_cast<size_t>(r)];
    return t;
}

namespace {

// Even, nonempty sub-multisets of nb x 2, in ascending order.
std::vector<NeiSub> even_submultisets(const std::vector<Vertex>& nb) {
    std::vector<NeiSub> out;
    size_t total = 1;
    for (size_t i = 0; i < nb.size(); ++i) total *= 3;
    for (size_t code = 1; code < total; ++code) {
        NeiSub s;
        size_t c = code;
        for (Vertex v : nb) {
            for (size_t t = 0; t < c % 3; ++t) s.push_back(v);
            c /= 3;
        }
        if (s.size() % 2 == 0) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Item {
    NeiSub nei;
    int ver;  // index into TypeSpace::ver
};

class RobotEnumerator {
public:
    RobotEnumerator(const FptContext& ctx, TypeSpace& ts, const std::vector<std::vector<Item>>& items,
                    long long cap)
        : ctx_(ctx), ts_(ts), items_(items), cap_(cap) {
        for (const auto& [e, m] : ctx.g.edges())
            if (ctx.vc.contains(e.first) && ctx.vc.contains(e.second)) vc_edges_.push_back(e);
        lengths_ = counted_lengths(ctx.vc.size());
        chosen_.resize(items.size());
    }

    void run() { edge_level(0, 0); }

private:
    void edge_level(size_t idx, int size) {
        if (idx == vc_edges_.size()) {
            class_level(0, size);
            return;
        }
        for (int m = 0; m <= 2 && size + m <= ts_.budget; ++m) {
            mults_.push_back(m);
            edge_level(idx + 1, size + m);
            mults_.pop_back();
        }
    }

    void class_level(size_t cls, int size) {
        if (cls == items_.size()) {
            finish(size);
            return;
        }
        pick(cls, 0, size);
    }

    // multiset of items of class cls in non-decreasing index order
    void pick(size_t cls, size_t from, int size) {
        class_level(cls + 1, size);
        if (static_cast<int>(chosen_[cls].size()) >= ctx_.gbar.num_ver[cls]) return;
        for (size_t i = from; i < items_[cls].size(); ++i) {
            int add = static_cast<int>(items_[cls][i].nei.size());
            if (size + add > ts_.budget) continue;
            chosen_[cls].push_back(i);
            pick(cls, i, size + add);
            chosen_[cls].pop_back();
        }
    }

    void finish(int size) {
        // parity and connectivity on the cover vertices
        const auto& vcv = ctx_.vc.vertices;
        std::map<Vertex, int> deg;
        std::vector<int> parent(vcv.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(vcv.begin(), vcv.end(), v) - vcv.begin()); };
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
            return x;
        };
        auto unite = [&](Vertex a, Vertex b) { parent[static_cast<size_t>(find(idx(a)))] = find(idx(b)); };
        for (size_t i = 0; i < vc_edges_.size(); ++i) {
            if (!mults_[i]) continue;
            deg[vc_edges_[i].first] += mults_[i];
            deg[vc_edges_[i].second] += mults_[i];
            unite(vc_edges_[i].first, vc_edges_[i].second);
        }
        for (size_t c = 0; c < chosen_.size(); ++c)
            for (size_t i : chosen_[c]) {
                const auto& nei = items_[c][i].nei;
                for (Vertex v : nei) {
                    deg[v] += 1;
                    unite(v, nei.front());
                }
            }
        if (size == 0) {
            emit_empty();
            return;
        }
        if (!deg.count(ctx_.v_init)) return;
        for (const auto& [v, d] : deg) {
            if (d % 2 != 0) return;
            if (find(idx(v)) != find(idx(ctx_.v_init))) return;
        }

        std::vector<std::pair<Edge, int>> vc_e;
        for (size_t i = 0; i < vc_edges_.size(); ++i)
            if (mults_[i]) vc_e.push_back({vc_edges_[i], mults_[i]});
        std::vector<Entry> entries;
        for (size_t c = 0; c < chosen_.size(); ++c)
            for (size_t i : chosen_[c])
                entries.push_back({static_cast<int>(c), items_[c][i].nei, ts_.ver[static_cast<size_t>(items_[c][i].ver)]});
        std::vector<int> counts(num_of_cyc_size(ctx_.vc.size()), 0);
        RobotType base = make_robot_type(ctx_, vc_e, std::move(entries), counts);
        counts_level(base, 0, size);
    }

    void emit_empty() {
        RobotType r;
        r.num_of_cyc.assign(num_of_cyc_size(ctx_.vc.size()), 0);
        push(std::move(r));
    }

    void counts_level(RobotType& r, size_t li, int bud) {
        if (li == lengths_.size()) {
            push(r);
            return;
        }
        int j = lengths_[li];
        int cap = 2 * ctx_.vc.size() * ctx_.vc.size();
        for (int c = 0; c <= cap && bud + c * j <= ts_.budget; ++c) {
            r.num_of_cyc[static_cast<size_t>(j)] = c;
            counts_level(r, li + 1, bud + c * j);
        }
        r.num_of_cyc[static_cast<size_t>(j)] = 0;
    }

    void push(RobotType r) {
        ts_.rob.push_back(std::move(r));
        if (static_cast<long long>(ts_.rob.size()) > cap_)
            throw TypeSpaceTooLarge("robot type count exceeds " + std::to_string(cap_));
    }

    const FptContext& ctx_;
    TypeSpace& ts_;
    const std::vector<std::vector<Item>>& items_;
    long long cap_;
    std::vector<Edge> vc_edges_;
    std::vector<int> lengths_;
    std::vector<int> mults_;
    std::vector<std::vector<size_t>> chosen_;
};

void closed_walks(const Multigraph& gs, Cycle& cur, size_t len, std::set<Cycle>& out) {
    if (cur.size() == len + 1) {
        if (cur.back() == cur.front()) out.insert(cur);
        return;
    }
    for (Vertex w : gs.neighbors(cur.back())) {
        if (cur.size() == len && w != cur.front()) continue;
        cur.push_back(w);
        closed_walks(gs, cur, len, out);
        cur.pop_back();
    }
}

}  // namespace

TypeSpace enumerate_type_space(const FptContext& ctx, int budget, int k, const TypeSpaceLimits& lim) {
    if (ctx.vc.size() > lim.max_vc)
        throw TypeSpaceTooLarge("|VC'| = " + std::to_string(ctx.vc.size()) + " exceeds the enumeration guard");
    if (static_cast<int>(ctx.eq.classes.size()) > lim.max_classes)
        throw TypeSpaceTooLarge(std::to_string(ctx.eq.classes.size()) + " classes exceed the enumeration guard");

    TypeSpace ts;
    ts.budget = budget;
    ts.k = k;
    const int n = ctx.g.n();
    const size_t nclasses = ctx.eq.classes.size();

    std::vector<std::vector<NeiSub>> subs(nclasses);
    for (size_t c = 0; c < nclasses; ++c) {
        const auto& nb = ctx.eq.classes[c].neighborhood;
        subs[c] = even_submultisets(nb);
        const size_t s = subs[c].size();
        for (size_t mask = 1; mask < (size_t{1} << s); ++mask) {
            VertexType t{static_cast<int>(c), {}};
            for (size_t i = 0; i < s; ++i)
                if (mask >> i & 1) t.nei_subsets.push_back(subs[c][i]);
            if (vertex_type_valid(t, ctx)) ts.ver.push_back(std::move(t));
        }
    }
    std::sort(ts.ver.begin(), ts.ver.end());

    std::vector<std::vector<Item>> items(nclasses);
    for (size_t c = 0; c < nclasses; ++c)
        for (const auto& s : subs[c])
            for (size_t v = 0; v < ts.ver.size(); ++v) {
                const auto& t = ts.ver[v];
                if (t.class_id == static_cast<int>(c) &&
                    std::binary_search(t.nei_subsets.begin(), t.nei_subsets.end(), s))
                    items[c].push_back({s, static_cast<int>(v)});
            }

    if (budget >= 0) {
        RobotEnumerator re(ctx, ts, items, lim.max_types);
        re.run();
    }
    std::sort(ts.rob.begin(), ts.rob.end());
    ts.rob.erase(std::unique(ts.rob.begin(), ts.rob.end()), ts.rob.end());
    for (const auto& r : ts.rob) {
        ts.rob_bud.push_back(robot_bud(r));
        ts.rob_cyc_bud.push_back(robot_cyc_bud(r, budget));
    }

    // cycles of G* with their pair allocations
    const size_t maxlen = static_cast<size_t>(std::max(4, 2 * ctx.vc.size()));
    std::set<Cycle> raw;
    for (Vertex s : ctx.vc.vertices)
        for (size_t len = 2; len <= maxlen; ++len) {
            Cycle cur{s};
            closed_walks(ctx.gstar.graph, cur, len, raw);
        }
    std::set<Cycle> base;
    for (const auto& c : raw) {
        // lengths other than 4 must be simple
        if (c.size() - 1 != 4 && !is_simple_cycle(c)) continue;
        std::vector<VertexType> dummy;
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] >= n) dummy.push_back(VertexType{});
        base.insert(canonical_cycle(c, dummy, ctx).first);
    }
    std::set<std::pair<Cycle, std::vector<VertexType>>> pats;
    for (const auto& c : base) {
        std::vector<std::vector<int>> options;
        for (size_t i = 1; i + 1 < c.size(); ++i) {
            if (c[i] < n) continue;
            int cls = c[i] - n;
            NeiSub pair{std::min(c[i - 1], c[i + 1]), std::max(c[i - 1], c[i + 1])};
            std::vector<int> opt;
            for (const auto& it : items[static_cast<size_t>(cls)])
                if (it.nei == pair) opt.push_back(it.ver);
            options.push_back(std::move(opt));
        }
        std::vector<size_t> pick(options.size(), 0);
        bool any = std::all_of(options.begin(), options.end(), [](const auto& o) { return !o.empty(); });
        while (any) {
            std::vector<VertexType> pa;
            for (size_t i = 0; i < options.size(); ++i) pa.push_back(ts.ver[static_cast<size_t>(options[i][pick[i]])]);
            pats.insert(canonical_cycle(c, pa, ctx));
            size_t d = 0;
            while (d < pick.size() && ++pick[d] == options[d].size()) pick[d++] = 0;
            if (d == pick.size()) break;
        }
    }
    ts.build_index();
    for (const auto& [c, pa] : pats) {
        CyclePattern p{c, {}};
        for (const auto& v : pa) p.pa.push_back(ts.find_ver(v));
        ts.patterns.push_back(std::move(p));
    }
    std::sort(ts.patterns.begin(), ts.patterns.end());

    // robot-type compatibility: shared cover vertex, and room in its eq5 / eq6 rows
    std::vector<std::set<Vertex>> rob_vc(ts.rob.size());
    for (size_t r = 0; r < ts.rob.size(); ++r)
        for (const auto& [e, m] : ts.rob[r].cc) {
            if (ctx.vc.contains(e.first)) rob_vc[r].insert(e.first);
            if (ctx.vc.contains(e.second)) rob_vc[r].insert(e.second);
        }
    long long total = static_cast<long long>(ts.ver.size() + ts.rob.size());
    for (size_t p = 0; p < ts.patterns.size(); ++p) {
        const auto& c = ts.patterns[p].cycle;
        size_t len = c.size() - 1;
        for (size_t r = 0; r < ts.rob.size(); ++r) {
            if (len == 4) {
                if (ts.rob_cyc_bud[r] < 4) continue;
            } else if (len >= ts.rob[r].num_of_cyc.size() || ts.rob[r].num_of_cyc[len] == 0) {
                continue;
            }
            bool shares = false;
            for (Vertex v : c)
                if (rob_vc[r].count(v)) {
                    shares = true;
                    break;
                }
            if (!shares) continue;
            ts.cyc.push_back({static_cast<int>(p), static_cast<int>(r)});
            if (++total > lim.max_types)
                throw TypeSpaceTooLarge("type space exceeds " + std::to_string(lim.max_types) + " types");
        }
    }
    ts.build_index();
    return ts;
}

}  // namespace cge
