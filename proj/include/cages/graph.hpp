#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cages/errors.hpp"
#include "cages/field.hpp"
#include "cages/vertex.hpp"

namespace cages {

/// Symmetric adjacency lists with sorted neighbor sequences.  The exact
/// metrics below work on any simple undirected graph in this form.
using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Sorted, duplicate-free sequence of vertex ids.
using VertexSet = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kUnreached = 0xFFFFFFFFu;

/// BFS distances from root; kUnreached marks vertices farther than
/// depth_limit (or disconnected from root).
std::vector<std::uint32_t> bfs_distances(const Adjacency& adj, std::uint32_t root,
                                         std::uint32_t depth_limit = kUnreached);

std::optional<std::uint32_t> distance(const Adjacency& adj, std::uint32_t u, std::uint32_t v);

/// Exact girth by BFS from every vertex with parent-edge exclusion; nullopt
/// for forests.
std::optional<std::uint32_t> girth(const Adjacency& adj);

std::map<std::size_t, std::size_t> degree_profile(const Adjacency& adj);

/// Vertices at distance exactly t from v.
VertexSet sphere(const Adjacency& adj, std::uint32_t v, std::uint32_t t);
/// Vertices at distance at most t from v.
VertexSet ball(const Adjacency& adj, std::uint32_t v, std::uint32_t t);

/// True iff every vertex outside u has exactly one neighbor inside u.
bool is_perfect_dominating(const Adjacency& adj, const VertexSet& u);

bool is_connected(const Adjacency& adj);
std::size_t component_count(const Adjacency& adj);
/// Two-colorability.
bool is_bipartite(const Adjacency& adj);

// set algebra on sorted id sequences
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet vs_difference(const VertexSet& a, const VertexSet& b);
bool vs_contains(const VertexSet& s, std::uint32_t v);
VertexSet vs_normalized(VertexSet s);

/// Union of open neighborhoods over the set.
VertexSet neighbors_of_set(const Adjacency& adj, const VertexSet& s);

/// Immutable bipartite graph: side-0 vertices occupy ids [0, n0), side-1
/// ids [n0, n0+n1).  Graphs built from coordinate formulas carry a field
/// context and one coordinate label per vertex; graphs loaded from foreign
/// files may carry neither.
class BipartiteGraph {
  public:
    BipartiteGraph(std::uint32_t n0, std::uint32_t n1,
                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                   std::vector<Vertex> labels = {}, std::optional<Field> field = {});

    std::uint32_t order() const { return n0_ + n1_; }
    std::uint32_t side_count(int side) const { return side == 0 ? n0_ : n1_; }
    std::size_t edge_count() const { return edge_count_; }
    int side_of(std::uint32_t v) const { return v < n0_ ? 0 : 1; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const { return adj_[v]; }
    std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
    const Adjacency& adjacency() const { return adj_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<Vertex>& labels() const { return labels_; }
    const Vertex& label(std::uint32_t v) const { return labels_[v]; }

    const std::optional<Field>& field() const { return field_; }

    /// Id of the vertex carrying this label; throws MissingContext when the
    /// graph has no labels and VertexNotFound when the label is absent.
    std::uint32_t find_vertex(const Vertex& v) const;
    std::optional<std::uint32_t> try_find_vertex(const Vertex& v) const;

    /// Structural equality: side sizes, adjacency, and labels.
    bool operator==(const BipartiteGraph& other) const {
        return n0_ == other.n0_ && n1_ == other.n1_ && adj_ == other.adj_ &&
               labels_ == other.labels_;
    }

  private:
    std::uint32_t n0_ = 0;
    std::uint32_t n1_ = 0;
    std::size_t edge_count_ = 0;
    Adjacency adj_;
    std::vector<Vertex> labels_;
    std::optional<Field> field_;
    bool labels_sorted_ = false;
};

// convenience overloads on the bipartite container
inline std::optional<std::uint32_t> girth(const BipartiteGraph& g) { return girth(g.adjacency()); }
inline std::map<std::size_t, std::size_t> degree_profile(const BipartiteGraph& g) {
    return degree_profile(g.adjacency());
}
inline std::optional<std::uint32_t> distance(const BipartiteGraph& g, std::uint32_t u,
                                             std::uint32_t v) {
    return distance(g.adjacency(), u, v);
}
inline VertexSet sphere(const BipartiteGraph& g, std::uint32_t v, std::uint32_t t) {
    return sphere(g.adjacency(), v, t);
}
inline VertexSet ball(const BipartiteGraph& g, std::uint32_t v, std::uint32_t t) {
    return ball(g.adjacency(), v, t);
}
inline VertexSet sphere(const BipartiteGraph& g, const Vertex& v, std::uint32_t t) {
    return sphere(g.adjacency(), g.find_vertex(v), t);
}
inline VertexSet ball(const BipartiteGraph& g, const Vertex& v, std::uint32_t t) {
    return ball(g.adjacency(), g.find_vertex(v), t);
}
inline bool is_perfect_dominating(const BipartiteGraph& g, const VertexSet& u) {
    return is_perfect_dominating(g.adjacency(), u);
}
inline bool is_connected(const BipartiteGraph& g) { return is_connected(g.adjacency()); }
inline std::size_t component_count(const BipartiteGraph& g) {
    return component_count(g.adjacency());
}

/// Induced subgraph on the complement of u; surviving vertices keep their
/// labels and are assigned new dense ids in ascending old-id order.
BipartiteGraph remove_set(const BipartiteGraph& g, const VertexSet& u);

/// Explicit vertex bijection, f[v] = image of v.
using VertexMap = std::vector<std::uint32_t>;

/// Map-checking only: true iff f is a bijection of V(g1) onto V(g2) that
/// preserves adjacency both ways.  Throws MapNotTotal / MapNotInjective for
/// defective maps (distinct from returning false).
bool is_isomorphism_via(const BipartiteGraph& g1, const BipartiteGraph& g2,
                        std::span<const std::uint32_t> f);

}  // namespace cages
