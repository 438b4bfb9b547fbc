#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cages/cage.hpp"
#include "cages/graph.hpp"

namespace cages {

enum class PdsFamily { A, B, C, Cprime, S };

std::string family_name(PdsFamily f);
std::optional<PdsFamily> family_from_name(const std::string& name);

/// Which removal was performed with which parameters, plus the expected
/// outcome; the derivation verifies the expectations exactly.
struct DerivedSpec {
    PdsFamily family;
    std::uint32_t q = 0;
    std::optional<FieldElem> xi;
    std::optional<Vertex> alpha, beta;
    std::size_t expected_removed = 0;
    std::size_t expected_order = 0;
    std::size_t expected_degree = 0;
};

/// A = N^2[alpha] union N^2[beta] with beta at distance exactly 3 from
/// alpha; cardinality 2(q+1)^2.  Defaults: alpha = (inf,inf,inf) point,
/// beta = the minimum-id vertex at distance 3.  Throws BadDistance when an
/// explicit pair is not at distance 3.
VertexSet pds_a(const BipartiteGraph& gamma, std::optional<Vertex> alpha = {},
                std::optional<Vertex> beta = {});

/// The ball-expression family of cardinality 2(q^2+3q+1), parameterized by
/// xi in F_q \ {0} (default 1).  Closed-form descriptions of the
/// intersection terms are re-derived internally as a cross-check.
VertexSet pds_b(const BipartiteGraph& gamma, std::optional<FieldElem> xi = {});

/// The even-q family of cardinality 2(q^2+4q+3) built around the polynomial
/// p(x) = 1 + x + x^2; requires even q >= 8.
VertexSet pds_c(const BipartiteGraph& gamma);

/// The q = 4 variant of C (p(x) only takes the values 0 and 1 over F_4),
/// built with xi = the index-2 element; cardinality 70.
VertexSet pds_c_prime(const BipartiteGraph& gamma);

/// Default xi for the q-regular graph G_q and everything derived from it:
/// the index-2 element for even q, and -1 for odd q (the unique choice for
/// which each removed-set vertex class has the closed-form neighbor below).
FieldElem default_gq_xi(const Field& field);

/// G_q = the cage minus the xi-family of pds_b, xi outside {0,1}: q-regular
/// of girth 8 on 2q(q^2-2) vertices.  Requires q >= 4.
BipartiteGraph build_gq(std::uint32_t q, std::optional<FieldElem> xi = {});

struct SetS {
    VertexSet p;  // points (inf,y,z) with y outside {0,1,xi}
    VertexSet r;  // N(p) restricted to the distance-5 sphere of (inf,1,0)
    VertexSet s;  // union of closed balls around (inf,1,z) plus N[r]
};

/// The sets P, R, S inside G_q (ids in G_q's id space).  |P| = |R| =
/// q(q-3), |N(R)| = 2q(q-2), |S| = 4q^2-6q, and each P-vertex has the
/// single R-neighbor (y, (1-y^2)^{-1} y z, z).
SetS build_set_s(const BipartiteGraph& gq, FieldElem xi);

/// G_q minus S: (q-1)-regular of girth 8 on 2q(q-1)^2 vertices.
BipartiteGraph build_q_minus_1(std::uint32_t q, std::optional<FieldElem> xi = {});

struct DeriveParams {
    std::optional<FieldElem> xi;
    std::optional<Vertex> alpha, beta;
};

struct Derived {
    BipartiteGraph graph;
    DerivedSpec spec;
    VertexSet removed;  // ids in the base graph (the cage, or G_q for family S)
};

/// Builds the base graph and the removal set for the family, verifies
/// perfect domination and the expected order/degree, and removes.  Throws
/// PdsViolation when a verification fails.
Derived derive(std::uint32_t q, PdsFamily family, const DeriveParams& params = {});

}  // namespace cages
