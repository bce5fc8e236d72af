#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cge {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Undirected multigraph on vertices 0..n-1. Also used as a plain edge multiset,
// in which case n is just the id universe.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : adj_(static_cast<size_t>(n)) {}

    int n() const { return static_cast<int>(adj_.size()); }
    void resize(int n);

    void add_edge(Vertex u, Vertex v, int mult = 1);
    // Removes up to mult copies; returns how many were removed.
    int remove_edge(Vertex u, Vertex v, int mult = 1);
    int multiplicity(Vertex u, Vertex v) const;

    int degree(Vertex v) const;
    // Distinct neighbours in ascending order.
    std::vector<Vertex> neighbors(Vertex v) const;
    const std::map<Vertex, int>& adjacency(Vertex v) const { return adj_[static_cast<size_t>(v)]; }

    // Total multiplicity |E|.
    int size() const { return size_; }
    int num_pairs() const;
    bool empty() const { return size_ == 0; }
    bool is_simple() const;

    // Canonical ascending list of (edge, multiplicity).
    std::vector<std::pair<Edge, int>> edges() const;
    // Same, but each edge repeated multiplicity times.
    std::vector<Edge> edge_list() const;

    bool has_vertex(Vertex v) const { return v >= 0 && v < n() && !adj_[static_cast<size_t>(v)].empty(); }
    // Vertices of positive degree, ascending (V(Graph(E)) for an edge multiset).
    std::vector<Vertex> support() const;
    // True if the non-isolated vertices induce a connected graph (vacuously for no edges).
    bool support_connected() const;
    bool all_degrees_even() const;
    bool connected() const;  // every vertex 0..n-1 reachable from 0

    Multigraph& operator+=(const Multigraph& o);
    // Multiset difference; throws std::invalid_argument if o is not contained.
    Multigraph& operator-=(const Multigraph& o);
    bool contains(const Multigraph& o) const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) { return a.edges() == b.edges(); }

private:
    std::vector<std::map<Vertex, int>> adj_;
    int size_ = 0;
};

Multigraph operator+(Multigraph a, const Multigraph& b);
Multigraph operator-(Multigraph a, const Multigraph& b);

// BFS distances from s (unit edge lengths); -1 for unreachable.
std::vector<int> bfs_distances(const Multigraph& g, Vertex s);

struct ExplorationInstance {
    Multigraph graph;
    Vertex v_init = 0;
    int k = 1;
    std::optional<int> budget;
};

// Throws NotConnected / std::invalid_argument when the instance invariants fail.
void validate_instance(const ExplorationInstance& inst);

struct VertexCover {
    std::vector<Vertex> vertices;  // sorted
    bool connected = false;        // true for a VC' (G[VC] connected and v_init inside)

    bool contains(Vertex v) const;
    int size() const { return static_cast<int>(vertices.size()); }
};

bool is_vertex_cover(const Multigraph& g, const std::vector<Vertex>& vc);

VertexCover vertex_cover_2approx(const Multigraph& g);
VertexCover connect_cover(const Multigraph& g, const VertexCover& vc, Vertex v_init);

struct EquivalenceClass {
    std::vector<Vertex> neighborhood;  // sorted subset of VC
    std::vector<Vertex> members;       // sorted independent vertices
};

struct EquivalenceClasses {
    std::vector<EquivalenceClass> classes;  // sorted by neighborhood
    // class index of each vertex of G, -1 for cover vertices
    std::vector<int> class_of;
};

EquivalenceClasses equivalence_classes(const Multigraph& g, const VertexCover& vc);

// G*: cover vertices keep their ids, class i becomes vertex n + i.
struct EquivalenceGraph {
    Multigraph graph;
    std::vector<Vertex> class_vertex;
};

EquivalenceGraph build_equivalence_graph(const Multigraph& g, const VertexCover& vc,
                                         const EquivalenceClasses& eq);

// Ḡ: class i gets NumVer(u*_i) copies; copies are numbered consecutively from n.
struct Gbar {
    Multigraph graph;
    std::vector<std::vector<Vertex>> copies;  // per class
    std::vector<int> num_ver;                 // per class
    std::vector<int> class_of_copy;           // indexed by (copy id - n)
    int base = 0;                             // n of the host graph
};

constexpr int kDefaultGbarCap = 6;

int num_ver(const EquivalenceClass& c, int vc_size);
Gbar build_gbar(const Multigraph& g, const VertexCover& vc, const EquivalenceClasses& eq,
                int cap = kDefaultGbarCap);

}  // namespace cge
