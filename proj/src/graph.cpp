#include "cages/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <string>

namespace cages {

std::vector<std::uint32_t> bfs_distances(const Adjacency& adj, std::uint32_t root,
                                         std::uint32_t depth_limit) {
    std::vector<std::uint32_t> dist(adj.size(), kUnreached);
    std::deque<std::uint32_t> queue;
    dist[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        if (dist[u] >= depth_limit) continue;
        for (const std::uint32_t v : adj[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::optional<std::uint32_t> distance(const Adjacency& adj, std::uint32_t u, std::uint32_t v) {
    if (u >= adj.size() || v >= adj.size()) throw VertexNotFound("vertex id out of range");
    if (u == v) return 0;
    std::vector<std::uint32_t> dist(adj.size(), kUnreached);
    std::deque<std::uint32_t> queue;
    dist[u] = 0;
    queue.push_back(u);
    while (!queue.empty()) {
        const std::uint32_t x = queue.front();
        queue.pop_front();
        for (const std::uint32_t y : adj[x]) {
            if (dist[y] != kUnreached) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

std::optional<std::uint32_t> girth(const Adjacency& adj) {
    const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    std::uint32_t best = kUnreached;
    std::vector<std::uint32_t> dist(n), parent(n);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    for (std::uint32_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        dist[root] = 0;
        parent[root] = root;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            // any cycle detected from u has length >= 2 dist[u] + 1
            if (best != kUnreached && 2 * dist[u] + 1 >= best) break;
            for (const std::uint32_t v : adj[u]) {
                if (v == parent[u]) continue;
                if (dist[v] == kUnreached) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (dist[v] >= dist[u]) {
                    // non-tree edge; cycles to lower levels were counted
                    // when the lower endpoint was scanned
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == kUnreached) return std::nullopt;
    return best;
}

std::map<std::size_t, std::size_t> degree_profile(const Adjacency& adj) {
    std::map<std::size_t, std::size_t> hist;
    for (const auto& nbrs : adj) ++hist[nbrs.size()];
    return hist;
}

VertexSet sphere(const Adjacency& adj, std::uint32_t v, std::uint32_t t) {
    if (v >= adj.size()) throw VertexNotFound("vertex id out of range");
    const auto dist = bfs_distances(adj, v, t);
    VertexSet out;
    for (std::uint32_t u = 0; u < dist.size(); ++u)
        if (dist[u] == t) out.push_back(u);
    return out;
}

VertexSet ball(const Adjacency& adj, std::uint32_t v, std::uint32_t t) {
    if (v >= adj.size()) throw VertexNotFound("vertex id out of range");
    const auto dist = bfs_distances(adj, v, t);
    VertexSet out;
    for (std::uint32_t u = 0; u < dist.size(); ++u)
        if (dist[u] <= t) out.push_back(u);
    return out;
}

bool is_perfect_dominating(const Adjacency& adj, const VertexSet& u) {
    std::vector<char> in_set(adj.size(), 0);
    for (const std::uint32_t v : u) {
        if (v >= adj.size()) throw VertexNotFound("set member out of range");
        in_set[v] = 1;
    }
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
        if (in_set[v]) continue;
        std::size_t hits = 0;
        for (const std::uint32_t w : adj[v])
            if (in_set[w] && ++hits > 1) break;
        if (hits != 1) return false;
    }
    return true;
}

std::size_t component_count(const Adjacency& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::size_t count = 0;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < adj.size(); ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        queue.assign(1, s);
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (const std::uint32_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        }
    }
    return count;
}

bool is_connected(const Adjacency& adj) {
    return adj.empty() || component_count(adj) == 1;
}

bool is_bipartite(const Adjacency& adj) {
    std::vector<char> color(adj.size(), 2);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < adj.size(); ++s) {
        if (color[s] != 2) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (const std::uint32_t v : adj[u]) {
                if (color[v] == 2) {
                    color[v] = static_cast<char>(1 - color[u]);
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet vs_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool vs_contains(const VertexSet& s, std::uint32_t v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vs_normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet neighbors_of_set(const Adjacency& adj, const VertexSet& s) {
    VertexSet out;
    for (const std::uint32_t v : s) {
        if (v >= adj.size()) throw VertexNotFound("set member out of range");
        out.insert(out.end(), adj[v].begin(), adj[v].end());
    }
    return vs_normalized(std::move(out));
}

BipartiteGraph::BipartiteGraph(std::uint32_t n0, std::uint32_t n1,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                               std::vector<Vertex> labels, std::optional<Field> field)
    : n0_(n0), n1_(n1), labels_(std::move(labels)), field_(std::move(field)) {
    const std::uint32_t n = n0_ + n1_;
    if (!labels_.empty() && labels_.size() != n)
        throw std::invalid_argument("label count does not match vertex count");
    adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if ((u < n0_) == (v < n0_))
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} does not cross sides");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("parallel edges are not allowed");
    }
    edge_count_ = edges.size();
    labels_sorted_ = std::is_sorted(labels_.begin(), labels_.end());
}

std::optional<std::uint32_t> BipartiteGraph::try_find_vertex(const Vertex& v) const {
    if (labels_.empty()) throw MissingContext("graph carries no vertex labels");
    if (labels_sorted_) {
        const auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
        if (it != labels_.end() && *it == v)
            return static_cast<std::uint32_t>(it - labels_.begin());
        return std::nullopt;
    }
    const auto it = std::find(labels_.begin(), labels_.end(), v);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - labels_.begin());
}

std::uint32_t BipartiteGraph::find_vertex(const Vertex& v) const {
    if (const auto id = try_find_vertex(v)) return *id;
    throw VertexNotFound("vertex " + to_string(v) + " not in graph");
}

BipartiteGraph remove_set(const BipartiteGraph& g, const VertexSet& u) {
    const VertexSet removal = vs_normalized(u);
    if (!removal.empty() && removal.back() >= g.order())
        throw VertexNotFound("removal set member out of range");
    const std::uint32_t n = g.order();
    std::vector<std::uint32_t> new_id(n, kUnreached);
    std::uint32_t next = 0, new_n0 = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (vs_contains(removal, v)) continue;
        new_id[v] = next++;
        if (g.side_of(v) == 0) ++new_n0;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (new_id[v] == kUnreached) continue;
        for (const std::uint32_t w : g.neighbors(v))
            if (w > v && new_id[w] != kUnreached) edges.emplace_back(new_id[v], new_id[w]);
    }
    std::vector<Vertex> labels;
    if (g.has_labels()) {
        labels.reserve(next);
        for (std::uint32_t v = 0; v < n; ++v)
            if (new_id[v] != kUnreached) labels.push_back(g.label(v));
    }
    return BipartiteGraph(new_n0, next - new_n0, edges, std::move(labels), g.field());
}

bool is_isomorphism_via(const BipartiteGraph& g1, const BipartiteGraph& g2,
                        std::span<const std::uint32_t> f) {
    if (f.size() != g1.order())
        throw MapNotTotal("map covers " + std::to_string(f.size()) + " of " +
                          std::to_string(g1.order()) + " vertices");
    std::vector<char> hit(g2.order(), 0);
    for (const std::uint32_t image : f) {
        if (image >= g2.order())
            throw MapNotTotal("image " + std::to_string(image) + " outside target graph");
        if (hit[image]) throw MapNotInjective("two vertices share image " + std::to_string(image));
        hit[image] = 1;
    }
    if (g1.order() != g2.order()) return false;  // injective but not onto
    if (g1.edge_count() != g2.edge_count()) return false;
    for (std::uint32_t u = 0; u < g1.order(); ++u) {
        const auto targets = g2.neighbors(f[u]);
        for (const std::uint32_t v : g1.neighbors(u)) {
            if (v < u) continue;
            if (!std::binary_search(targets.begin(), targets.end(), f[v])) return false;
        }
    }
    return true;
}

}  // namespace cages
