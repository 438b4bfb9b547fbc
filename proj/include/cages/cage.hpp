#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cages/graph.hpp"

namespace cages {

/// Auxiliary q-regular girth-8 graph H_q on 2q^3 vertices: both sides are
/// F_q^3 and line (a,b,c) meets the points (x, ax+b, a^2 x + c), x in F_q.
BipartiteGraph build_h(std::uint32_t q);

/// Auxiliary graph B_q, same vertex sets as H_q; line (a,b,c) meets
/// (j, aj+b, a^2 j + 2ab + c).  Equal to H_q when q is even.
BipartiteGraph build_b(std::uint32_t q);

/// The isomorphism B_q -> H_q fixing points and sending line (a,b,c) to
/// (a, b, 2ab+c), as an explicit id map.
VertexMap sigma_map(std::uint32_t q);

/// The (q+1)-regular girth-8 incidence graph of the generalized quadrangle
/// Q(4,q) on 2(q^3+q^2+q+1) vertices, generated line-side from the three
/// closed-form neighborhood families.
BipartiteGraph build_gamma(std::uint32_t q);

/// Point-side neighborhood computed directly from the dual closed form,
/// independent of build_gamma's line-side generation; serves as a
/// correctness oracle.  Returns coordinate labels sorted by id order.
std::vector<Vertex> gamma_point_neighborhood(const Field& field, const Vertex& point);

struct StageReport {
    std::string name;
    std::size_t order = 0;
    std::optional<std::uint32_t> girth;
};

struct StagedBuild {
    BipartiteGraph graph;  // the final stage
    std::vector<StageReport> stages;
};

/// The five construction stages (B, B', B'', B''', final), each as a graph
/// on its own dense ids with coordinate labels.
std::vector<BipartiteGraph> gamma_stage_graphs(std::uint32_t q);

/// Rebuilds the cage by staged vertex additions (orders 2q^3, +q^2, +q^2+q,
/// +q+1, +1), recording per-stage order and girth; the final graph is
/// edge-for-edge identical to build_gamma(q).
StagedBuild build_gamma_staged(std::uint32_t q);

/// The coordinate-preserving side swap of a balanced bipartite graph, as an
/// id map; an automorphism of the cage exactly when q is even.
VertexMap side_swap_map(const BipartiteGraph& g);

/// Distance-partition lower bound n_0(k, g) on the order of a k-regular
/// graph of girth g, both parities of g.
std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g);

}  // namespace cages
