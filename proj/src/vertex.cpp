#include "cages/vertex.hpp"

#include <charconv>

namespace cages {

namespace {

bool coord_in_range(Coord c, std::uint32_t q) { return c.is_infinity() || c.index() < q; }

}  // namespace

std::uint32_t gamma_local_id(const Vertex& v, std::uint32_t q) {
    if (!vertex_shape_ok(v) || !coord_in_range(v.a, q) || !coord_in_range(v.b, q) ||
        !coord_in_range(v.c, q))
        throw InvalidVertex("invalid vertex " + to_string(v) + " for q=" + std::to_string(q));
    return v.a.ord(q) * q * q + v.b.ord(q) * q + v.c.ord(q);
}

std::uint32_t gamma_global_id(const Vertex& v, std::uint32_t q) {
    return v.side * gamma_side_order(q) + gamma_local_id(v, q);
}

Vertex gamma_vertex_of(std::uint32_t global_id, std::uint32_t q) {
    const std::uint32_t side_n = gamma_side_order(q);
    if (global_id >= 2 * side_n)
        throw InvalidVertex("vertex id " + std::to_string(global_id) + " out of range");
    const std::uint8_t side = global_id < side_n ? 0 : 1;
    std::uint32_t local = global_id % side_n;
    auto coord = [q](std::uint32_t ord) {
        return ord == q ? Coord::infinity() : Coord::element(ord);
    };
    if (local < (q + 1) * q * q) {
        return {side, coord(local / (q * q)), coord(local / q % q), coord(local % q)};
    }
    local -= (q + 1) * q * q;
    return {side, Coord::infinity(), Coord::infinity(), coord(local)};
}

std::string to_string(Coord c) {
    return c.is_infinity() ? "inf" : std::to_string(c.index());
}

std::string to_string(const Vertex& v) {
    return std::to_string(v.side) + ":(" + to_string(v.a) + "," + to_string(v.b) + "," +
           to_string(v.c) + ")";
}

Vertex parse_vertex(const std::string& text) {
    const auto fail = [&]() -> InvalidVertex {
        return InvalidVertex("cannot parse vertex '" + text + "'");
    };
    std::size_t pos = 0;
    auto expect = [&](char ch) {
        if (pos >= text.size() || text[pos] != ch) throw fail();
        ++pos;
    };
    auto coord = [&]() -> Coord {
        if (text.compare(pos, 3, "inf") == 0) {
            pos += 3;
            return Coord::infinity();
        }
        std::uint32_t value = 0;
        auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || next == text.data() + pos) throw fail();
        pos = static_cast<std::size_t>(next - text.data());
        return Coord::element(value);
    };
    if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1')) throw fail();
    const std::uint8_t side = static_cast<std::uint8_t>(text[pos] - '0');
    ++pos;
    expect(':');
    expect('(');
    const Coord a = coord();
    expect(',');
    const Coord b = coord();
    expect(',');
    const Coord c = coord();
    expect(')');
    if (pos != text.size()) throw fail();
    const Vertex v{side, a, b, c};
    if (!vertex_shape_ok(v)) throw InvalidVertex("illegal coordinate shape '" + text + "'");
    return v;
}

}  // namespace cages
