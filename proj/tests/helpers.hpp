#pragma once

// Shared fixtures for the test suites.

#include <vector>

#include "cages/cage.hpp"
#include "cages/graph.hpp"
#include "cages/pds.hpp"

namespace cages::testutil {

inline Coord el(FieldElem i) { return Coord::element(i); }
inline const Coord oo = Coord::infinity();

inline std::vector<Vertex> neighbor_labels(const BipartiteGraph& g, std::uint32_t v) {
    std::vector<Vertex> out;
    for (const std::uint32_t w : g.neighbors(v)) out.push_back(g.label(w));
    return out;
}

// every pair of class members present in g is at distance >= bound
inline bool class_dist_at_least(const BipartiteGraph& g, const std::vector<Vertex>& members,
                                std::uint32_t bound) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto id_i = g.try_find_vertex(members[i]);
        if (!id_i) continue;
        const auto dist = bfs_distances(g.adjacency(), *id_i, bound - 1);
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j == i) continue;
            const auto id_j = g.try_find_vertex(members[j]);
            if (id_j && dist[*id_j] != kUnreached) return false;
        }
    }
    return true;
}

// even cycle 0-1-...-(n-1)-0 as a bipartite graph (evens on side 0)
inline BipartiteGraph even_cycle(std::uint32_t n) {
    // re-id so side 0 = even positions: position 2i -> id i, 2i+1 -> n/2 + i
    auto id_of = [n](std::uint32_t pos) { return pos % 2 == 0 ? pos / 2 : n / 2 + pos / 2; };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(id_of(i), id_of((i + 1) % n));
    return BipartiteGraph(n / 2, n / 2, edges);
}

inline BipartiteGraph complete_bipartite(std::uint32_t a, std::uint32_t b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return BipartiteGraph(a, b, edges);
}

inline Adjacency petersen() {
    Adjacency adj(10);
    auto add = [&](std::uint32_t u, std::uint32_t v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    for (std::uint32_t i = 0; i < 5; ++i) {
        add(i, (i + 1) % 5);          // outer pentagon
        add(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        add(i, 5 + i);                // spokes
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// claim suites over the staged construction, exhaustive for one q
struct ClaimResults {
    bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true;
};

inline ClaimResults check_claims(std::uint32_t q) {
    ClaimResults res;
    const auto stages = gamma_stage_graphs(q);
    const BipartiteGraph& bq = stages[0];
    const BipartiteGraph& bp = stages[1];
    const BipartiteGraph& bpp = stages[2];
    const BipartiteGraph hq = build_h(q);
    // claim 1: fixed-first-coordinate classes are mutually >= 4 apart in H_q and B_q
    for (const BipartiteGraph* g : {&hq, &bq}) {
        for (FieldElem a = 0; a < q; ++a) {
            std::vector<Vertex> lines_a, points_a;
            for (FieldElem b = 0; b < q; ++b)
                for (FieldElem c = 0; c < q; ++c) {
                    lines_a.push_back(line(el(a), el(b), el(c)));
                    points_a.push_back(point(el(a), el(b), el(c)));
                }
            if (!class_dist_at_least(*g, lines_a, 4)) res.c1 = false;
            if (!class_dist_at_least(*g, points_a, 4)) res.c1 = false;
        }
    }
    // claim 2: point classes {(x,y,j) : j} are mutually >= 6 apart in B_q
    for (FieldElem x = 0; x < q; ++x)
        for (FieldElem y = 0; y < q; ++y) {
            std::vector<Vertex> cls;
            for (FieldElem j = 0; j < q; ++j) cls.push_back(point(el(x), el(y), el(j)));
            if (!class_dist_at_least(bq, cls, 6)) res.c2 = false;
        }
    // claim 3: fixed-first-coordinate line classes >= 4 in B'_q, first coord may be infinity
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? el(i) : oo;
        std::vector<Vertex> cls;
        for (FieldElem b = 0; b < q; ++b)
            for (FieldElem c = 0; c < q; ++c) cls.push_back(line(a, el(b), el(c)));
        if (!class_dist_at_least(bp, cls, 4)) res.c3 = false;
    }
    // claim 4: line classes {(a,t,c) : t} >= 6 in B'_q
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? el(i) : oo;
        for (FieldElem c = 0; c < q; ++c) {
            std::vector<Vertex> cls;
            for (FieldElem t = 0; t < q; ++t) cls.push_back(line(a, el(t), el(c)));
            if (!class_dist_at_least(bp, cls, 6)) res.c4 = false;
        }
    }
    // claim 5: point classes {(inf,a,j) : j} >= 6 in B''_q
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? el(i) : oo;
        std::vector<Vertex> cls;
        for (FieldElem j = 0; j < q; ++j) cls.push_back(point(oo, a, el(j)));
        if (!class_dist_at_least(bpp, cls, 6)) res.c5 = false;
    }
    return res;
}

}  // namespace cages::testutil
