#include "cge/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cge/errors.hpp"

namespace cge {

void Multigraph::resize(int n) {
    if (n < this->n()) {
        for (int v = n; v < this->n(); ++v)
            if (!adj_[static_cast<size_t>(v)].empty()) throw std::invalid_argument("resize would drop edges");
    }
    adj_.resize(static_cast<size_t>(n));
}

void Multigraph::add_edge(Vertex u, Vertex v, int mult) {
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
    if (mult <= 0) return;
    int hi = std::max(u, v);
    if (hi >= n()) adj_.resize(static_cast<size_t>(hi) + 1);
    adj_[static_cast<size_t>(u)][v] += mult;
    adj_[static_cast<size_t>(v)][u] += mult;
    size_ += mult;
}

int Multigraph::remove_edge(Vertex u, Vertex v, int mult) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return 0;
    auto& au = adj_[static_cast<size_t>(u)];
    auto it = au.find(v);
    if (it == au.end()) return 0;
    int removed = std::min(mult, it->second);
    it->second -= removed;
    auto& av = adj_[static_cast<size_t>(v)];
    av[u] -= removed;
    if (it->second == 0) {
        au.erase(it);
        av.erase(u);
    }
    size_ -= removed;
    return removed;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return 0;
    const auto& au = adj_[static_cast<size_t>(u)];
    auto it = au.find(v);
    return it == au.end() ? 0 : it->second;
}

int Multigraph::degree(Vertex v) const {
    if (v < 0 || v >= n()) return 0;
    int d = 0;
    for (const auto& [w, m] : adj_[static_cast<size_t>(v)]) d += m;
    return d;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    if (v < 0 || v >= n()) return out;
    for (const auto& [w, m] : adj_[static_cast<size_t>(v)]) out.push_back(w);
    return out;
}

int Multigraph::num_pairs() const {
    int c = 0;
    for (int u = 0; u < n(); ++u)
        for (const auto& [w, m] : adj_[static_cast<size_t>(u)])
            if (u < w) ++c;
    return c;
}

bool Multigraph::is_simple() const {
    for (const auto& a : adj_)
        for (const auto& [w, m] : a)
            if (m != 1) return false;
    return true;
}

std::vector<std::pair<Edge, int>> Multigraph::edges() const {
    std::vector<std::pair<Edge, int>> out;
    for (int u = 0; u < n(); ++u)
        for (const auto& [w, m] : adj_[static_cast<size_t>(u)])
            if (u < w) out.push_back({{u, w}, m});
    return out;
}

std::vector<Edge> Multigraph::edge_list() const {
    std::vector<Edge> out;
    for (const auto& [e, m] : edges())
        for (int i = 0; i < m; ++i) out.push_back(e);
    return out;
}

std::vector<Vertex> Multigraph::support() const {
    std::vector<Vertex> out;
    for (int v = 0; v < n(); ++v)
        if (!adj_[static_cast<size_t>(v)].empty()) out.push_back(v);
    return out;
}

static int reach_count(const std::vector<std::map<Vertex, int>>& adj, Vertex s) {
    std::vector<char> seen(adj.size(), 0);
    std::deque<Vertex> q{s};
    seen[static_cast<size_t>(s)] = 1;
    int count = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (const auto& [w, m] : adj[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                q.push_back(w);
            }
        }
    }
    return count;
}

bool Multigraph::support_connected() const {
    auto sup = support();
    if (sup.empty()) return true;
    return reach_count(adj_, sup.front()) == static_cast<int>(sup.size());
}

bool Multigraph::all_degrees_even() const {
    for (int v = 0; v < n(); ++v)
        if (degree(v) % 2 != 0) return false;
    return true;
}

bool Multigraph::connected() const {
    if (n() == 0) return true;
    return reach_count(adj_, 0) == n();
}

Multigraph& Multigraph::operator+=(const Multigraph& o) {
    if (o.n() > n()) adj_.resize(static_cast<size_t>(o.n()));
    for (const auto& [e, m] : o.edges()) add_edge(e.first, e.second, m);
    return *this;
}

Multigraph& Multigraph::operator-=(const Multigraph& o) {
    if (!contains(o)) throw std::invalid_argument("multiset difference of non-contained multiset");
    for (const auto& [e, m] : o.edges()) remove_edge(e.first, e.second, m);
    return *this;
}

bool Multigraph::contains(const Multigraph& o) const {
    for (const auto& [e, m] : o.edges())
        if (multiplicity(e.first, e.second) < m) return false;
    return true;
}

Multigraph operator+(Multigraph a, const Multigraph& b) { return a += b; }
Multigraph operator-(Multigraph a, const Multigraph& b) { return a -= b; }

std::vector<int> bfs_distances(const Multigraph& g, Vertex s) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    if (s < 0 || s >= g.n()) return dist;
    dist[static_cast<size_t>(s)] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (const auto& [w, m] : g.adjacency(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

void validate_instance(const ExplorationInstance& inst) {
    if (inst.k < 1) throw std::invalid_argument("robot count must be at least 1");
    if (inst.v_init < 0 || inst.v_init >= inst.graph.n())
        throw std::invalid_argument("v_init out of range");
    if (inst.budget && *inst.budget < 0) throw std::invalid_argument("negative budget");
    if (!inst.graph.is_simple()) throw std::invalid_argument("instance graph must be simple");
    if (!inst.graph.connected()) throw NotConnected("instance graph is not connected");
}

}  // namespace cge
