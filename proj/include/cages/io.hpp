#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cages/graph.hpp"
#include "cages/pds.hpp"

namespace cages::io {

// All writers are deterministic: identical inputs produce byte-identical
// output.  Text formats use UTF-8 with LF line endings.

/// Edge list with '#' header comments:
///   #bipartite <n0> <n1>
///   #v <id> <side>:(<a>,<b>,<c>)     one per vertex, when labelled
///   <u> <v>                          edges with u < v, ascending
void write_edgelist(const BipartiteGraph& g, std::ostream& os);
std::string to_edgelist(const BipartiteGraph& g);

/// Inverse of write_edgelist; throws ParseError with the offending line.
BipartiteGraph read_edgelist(std::istream& is);

/// DIMACS: "p edge N M" then "e u v" with 1-based ids in canonical order.
void write_dimacs(const BipartiteGraph& g, std::ostream& os);
Adjacency read_dimacs(std::istream& is);

/// Standard graph6 bit-packed upper-triangle encoding of the canonical-id
/// adjacency.  Throws TooLarge beyond the format's 2^36-1 vertex limit.
void write_graph6(const Adjacency& adj, std::ostream& os);
void write_graph6(const BipartiteGraph& g, std::ostream& os);
Adjacency read_graph6(std::istream& is);

/// One vertex id per line, '#' comments allowed.
void write_vertex_set(const VertexSet& s, std::ostream& os);
VertexSet read_vertex_set(std::istream& is);

struct Metadata {
    Field field;
    std::optional<PdsFamily> family;
    std::optional<FieldElem> xi;
    std::optional<Vertex> alpha, beta;
    std::size_t order = 0;
    std::optional<std::size_t> degree;   // uniform degree, absent if irregular
    std::optional<std::uint32_t> girth;  // absent for forests
    std::optional<std::size_t> removed;
};

/// JSON object with keys, in order: q, p, n, modulus, family, xi, alpha,
/// beta, order, degree, girth, removed, moore_bound, excess.  Absent
/// parameters serialize as null.
std::string metadata_json(const Metadata& m);
void write_metadata(const Metadata& m, std::ostream& os);

}  // namespace cages::io
