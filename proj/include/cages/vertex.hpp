#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "cages/errors.hpp"

namespace cages {

/// A coordinate: either an element of GF(q) by canonical index, or the
/// distinguished infinity sentinel.  Ordered with all field elements first
/// (by index) and infinity last, so infinity has ordinal q.
class Coord {
  public:
    constexpr Coord() = default;  // element 0
    static constexpr Coord infinity() { return Coord(kInf); }
    static constexpr Coord element(std::uint32_t index) { return Coord(index); }

    constexpr bool is_infinity() const { return raw_ == kInf; }
    constexpr std::uint32_t index() const { return raw_; }  // finite coords only
    constexpr std::uint32_t ord(std::uint32_t q) const { return is_infinity() ? q : raw_; }

    friend constexpr auto operator<=>(Coord, Coord) = default;

  private:
    explicit constexpr Coord(std::uint32_t raw) : raw_(raw) {}
    static constexpr std::uint32_t kInf = 0xFFFFFFFFu;
    std::uint32_t raw_ = 0;
};

/// A point (side 0) or line (side 1) with its coordinate triple.
struct Vertex {
    std::uint8_t side = 0;
    Coord a, b, c;

    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex point(Coord a, Coord b, Coord c) { return {0, a, b, c}; }
constexpr Vertex line(Coord a, Coord b, Coord c) { return {1, a, b, c}; }

/// Legal coordinate shapes: (a, b, c) with b, c finite, or (inf, inf, c)
/// with c finite or infinite.
constexpr bool vertex_shape_ok(const Vertex& v) {
    if (!v.b.is_infinity() && !v.c.is_infinity()) return true;
    return v.a.is_infinity() && v.b.is_infinity();
}

/// Vertices per side of the cage universe: q^3 + q^2 + q + 1.
constexpr std::uint32_t gamma_side_order(std::uint32_t q) { return q * q * q + q * q + q + 1; }

/// Dense id within a side: ord(a) q^2 + ord(b) q + ord(c).
/// Throws InvalidVertex for bad shapes or out-of-range indices.
std::uint32_t gamma_local_id(const Vertex& v, std::uint32_t q);

/// side * (q^3 + q^2 + q + 1) + local id.
std::uint32_t gamma_global_id(const Vertex& v, std::uint32_t q);

Vertex gamma_vertex_of(std::uint32_t global_id, std::uint32_t q);

std::string to_string(Coord c);                   // "3" or "inf"
std::string to_string(const Vertex& v);           // "0:(3,0,inf)"
Vertex parse_vertex(const std::string& text);     // inverse of to_string; throws InvalidVertex

}  // namespace cages
