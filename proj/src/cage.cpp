#include "cages/cage.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cages {

namespace {

// Graph builders materialize the full edge set, so cap the order well below
// what 32-bit ids could address.
void check_buildable(std::uint32_t q) {
    if (q > 128) throw TooLarge("graph construction is limited to q <= 128");
}

// dense id in the F_q^3 universe of H_q / B_q
std::uint32_t cube_local(FieldElem a, FieldElem b, FieldElem c, std::uint32_t q) {
    return a * q * q + b * q + c;
}

std::vector<Vertex> cube_labels(std::uint32_t q) {
    std::vector<Vertex> labels(2u * q * q * q);
    for (std::uint8_t side = 0; side <= 1; ++side)
        for (FieldElem a = 0; a < q; ++a)
            for (FieldElem b = 0; b < q; ++b)
                for (FieldElem c = 0; c < q; ++c)
                    labels[side * q * q * q + cube_local(a, b, c, q)] = {
                        side, Coord::element(a), Coord::element(b), Coord::element(c)};
    return labels;
}

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

BipartiteGraph build_cube_graph(std::uint32_t q, bool twist) {
    check_buildable(q);
    Field f(q);
    const std::uint32_t side = q * q * q;
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(side) * q);
    for (FieldElem a = 0; a < q; ++a) {
        const FieldElem aa = f.mul(a, a);
        for (FieldElem b = 0; b < q; ++b) {
            const FieldElem tab = twist ? f.twice(f.mul(a, b)) : 0;
            for (FieldElem c = 0; c < q; ++c) {
                const std::uint32_t line_id = side + cube_local(a, b, c, q);
                for (FieldElem x = 0; x < q; ++x) {
                    const FieldElem y = f.add(f.mul(a, x), b);
                    const FieldElem z = f.add(f.mul(aa, x), f.add(tab, c));
                    edges.emplace_back(cube_local(x, y, z, q), line_id);
                }
            }
        }
    }
    return BipartiteGraph(side, side, edges, cube_labels(q), f);
}

}  // namespace

BipartiteGraph build_h(std::uint32_t q) { return build_cube_graph(q, false); }

BipartiteGraph build_b(std::uint32_t q) { return build_cube_graph(q, true); }

VertexMap sigma_map(std::uint32_t q) {
    Field f(q);
    const std::uint32_t side = q * q * q;
    VertexMap map(2u * side);
    for (std::uint32_t v = 0; v < side; ++v) map[v] = v;  // points are fixed
    for (FieldElem a = 0; a < q; ++a)
        for (FieldElem b = 0; b < q; ++b) {
            const FieldElem tab = f.twice(f.mul(a, b));
            for (FieldElem c = 0; c < q; ++c)
                map[side + cube_local(a, b, c, q)] =
                    side + cube_local(a, b, f.add(tab, c), q);
        }
    return map;
}

namespace {

// The three line-side neighborhood families of the cage.  `emit` receives
// the point label for each neighbor of the given line.
template <typename Emit>
void for_each_gamma_edge(const Field& f, Emit&& emit) {
    const std::uint32_t q = f.q();
    const Coord inf = Coord::infinity();
    // lines (a,b,c), a,b,c in F_q
    for (FieldElem a = 0; a < q; ++a) {
        const FieldElem aa = f.mul(a, a);
        for (FieldElem b = 0; b < q; ++b) {
            const FieldElem tab = f.twice(f.mul(a, b));
            for (FieldElem c = 0; c < q; ++c) {
                const Vertex ln = line(Coord::element(a), Coord::element(b), Coord::element(c));
                for (FieldElem x = 0; x < q; ++x) {
                    const FieldElem y = f.add(f.mul(a, x), b);
                    const FieldElem z = f.add(f.mul(aa, x), f.add(tab, c));
                    emit(ln, point(Coord::element(x), Coord::element(y), Coord::element(z)));
                }
                emit(ln, point(inf, Coord::element(a), Coord::element(c)));
            }
        }
    }
    // lines (inf,b,c), b,c in F_q
    for (FieldElem b = 0; b < q; ++b)
        for (FieldElem c = 0; c < q; ++c) {
            const Vertex ln = line(inf, Coord::element(b), Coord::element(c));
            for (FieldElem x = 0; x < q; ++x)
                emit(ln, point(Coord::element(c), Coord::element(b), Coord::element(x)));
            emit(ln, point(inf, inf, Coord::element(c)));
        }
    // lines (inf,inf,a), a in F_q or infinity
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? Coord::element(i) : inf;
        const Vertex ln = line(inf, inf, a);
        for (FieldElem x = 0; x < q; ++x) emit(ln, point(inf, a, Coord::element(x)));
        emit(ln, point(inf, inf, inf));
    }
}

std::vector<Vertex> gamma_labels(std::uint32_t q) {
    const std::uint32_t side = gamma_side_order(q);
    std::vector<Vertex> labels(2u * side);
    for (std::uint32_t v = 0; v < 2u * side; ++v) labels[v] = gamma_vertex_of(v, q);
    return labels;
}

}  // namespace

BipartiteGraph build_gamma(std::uint32_t q) {
    check_buildable(q);
    Field f(q);
    const std::uint32_t side = gamma_side_order(q);
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(side) * (q + 1));
    for_each_gamma_edge(f, [&](const Vertex& ln, const Vertex& pt) {
        edges.emplace_back(gamma_global_id(pt, q), gamma_global_id(ln, q));
    });
    return BipartiteGraph(side, side, edges, gamma_labels(q), f);
}

std::vector<Vertex> gamma_point_neighborhood(const Field& field, const Vertex& pt) {
    const std::uint32_t q = field.q();
    const Coord inf = Coord::infinity();
    auto in_range = [&](Coord c) { return c.is_infinity() || c.index() < q; };
    if (pt.side != 0 || !vertex_shape_ok(pt) || !in_range(pt.a) || !in_range(pt.b) ||
        !in_range(pt.c))
        throw InvalidVertex("not a point of the q=" + std::to_string(q) +
                            " cage: " + to_string(pt));
    std::vector<Vertex> out;
    out.reserve(q + 1);
    if (!pt.a.is_infinity()) {
        // (x,y,z): lines (a, y-ax, a^2 x - 2ay + z) plus (inf, y, x)
        const FieldElem x = pt.a.index(), y = pt.b.index(), z = pt.c.index();
        for (FieldElem a = 0; a < q; ++a) {
            const FieldElem second = field.sub(y, field.mul(a, x));
            const FieldElem third =
                field.add(field.sub(field.mul(field.mul(a, a), x), field.twice(field.mul(a, y))), z);
            out.push_back(line(Coord::element(a), Coord::element(second), Coord::element(third)));
        }
        out.push_back(line(inf, Coord::element(y), Coord::element(x)));
    } else if (!pt.b.is_infinity()) {
        // (inf,y,z): lines (y, a, z) plus (inf, inf, y)
        for (FieldElem a = 0; a < q; ++a) out.push_back(line(pt.b, Coord::element(a), pt.c));
        out.push_back(line(inf, inf, pt.b));
    } else if (!pt.c.is_infinity()) {
        // (inf,inf,z): lines (inf, a, z) plus (inf, inf, inf)
        for (FieldElem a = 0; a < q; ++a) out.push_back(line(inf, Coord::element(a), pt.c));
        out.push_back(line(inf, inf, inf));
    } else {
        // (inf,inf,inf): lines (inf, inf, x), x in F_q or infinity
        for (FieldElem x = 0; x < q; ++x) out.push_back(line(inf, inf, Coord::element(x)));
        out.push_back(line(inf, inf, inf));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Incremental construction state over the full cage id universe.
struct StagedState {
    std::uint32_t q;
    Field field;
    std::vector<char> active;  // by universe global id
    EdgeList edges;            // universe ids

    explicit StagedState(std::uint32_t q_) : q(q_), field(q_), active(2u * gamma_side_order(q_), 0) {}

    void activate(const Vertex& v) { active[gamma_global_id(v, q)] = 1; }

    void add_edge(const Vertex& u, const Vertex& v) {
        edges.emplace_back(gamma_global_id(u, q), gamma_global_id(v, q));
    }

    // induced graph on the active vertices, dense ids in ascending universe order
    BipartiteGraph materialize() const {
        const std::uint32_t side = gamma_side_order(q);
        std::vector<std::uint32_t> new_id(2u * side, kUnreached);
        std::vector<Vertex> labels;
        std::uint32_t next = 0, n0 = 0;
        for (std::uint32_t v = 0; v < 2u * side; ++v) {
            if (!active[v]) continue;
            new_id[v] = next++;
            if (v < side) ++n0;
            labels.push_back(gamma_vertex_of(v, q));
        }
        EdgeList compact;
        compact.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            assert(active[u] && active[v]);
            compact.emplace_back(new_id[u], new_id[v]);
        }
        return BipartiteGraph(n0, next - n0, compact, std::move(labels), field);
    }
};

}  // namespace

std::vector<BipartiteGraph> gamma_stage_graphs(std::uint32_t q) {
    check_buildable(q);
    StagedState st(q);
    const Field& f = st.field;
    const Coord inf = Coord::infinity();
    auto el = [](FieldElem i) { return Coord::element(i); };
    std::vector<BipartiteGraph> stages;

    // stage B: both sides F_q^3, twisted incidence formula
    for (FieldElem a = 0; a < q; ++a)
        for (FieldElem b = 0; b < q; ++b)
            for (FieldElem c = 0; c < q; ++c) {
                st.activate(point(el(a), el(b), el(c)));
                st.activate(line(el(a), el(b), el(c)));
            }
    for (FieldElem a = 0; a < q; ++a) {
        const FieldElem aa = f.mul(a, a);
        for (FieldElem b = 0; b < q; ++b) {
            const FieldElem tab = f.twice(f.mul(a, b));
            for (FieldElem c = 0; c < q; ++c)
                for (FieldElem j = 0; j < q; ++j) {
                    const FieldElem y = f.add(f.mul(a, j), b);
                    const FieldElem z = f.add(f.mul(aa, j), f.add(tab, c));
                    st.add_edge(point(el(j), el(y), el(z)), line(el(a), el(b), el(c)));
                }
        }
    }
    stages.push_back(st.materialize());

    // stage B': q^2 new lines (inf,b,c) joined to the points (c,b,j)
    for (FieldElem b = 0; b < q; ++b)
        for (FieldElem c = 0; c < q; ++c) {
            st.activate(line(inf, el(b), el(c)));
            for (FieldElem j = 0; j < q; ++j)
                st.add_edge(point(el(c), el(b), el(j)), line(inf, el(b), el(c)));
        }
    stages.push_back(st.materialize());

    // stage B'': q^2+q new points (inf,a,c), a in F_q or infinity, joined to
    // the lines (a,t,c)
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? el(i) : inf;
        for (FieldElem c = 0; c < q; ++c) {
            st.activate(point(inf, a, el(c)));
            for (FieldElem t = 0; t < q; ++t)
                st.add_edge(point(inf, a, el(c)), line(a, el(t), el(c)));
        }
    }
    stages.push_back(st.materialize());

    // stage B''': q+1 new lines (inf,inf,a) joined to the points (inf,a,c)
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? el(i) : inf;
        st.activate(line(inf, inf, a));
        for (FieldElem c = 0; c < q; ++c)
            st.add_edge(point(inf, a, el(c)), line(inf, inf, a));
    }
    stages.push_back(st.materialize());

    // final stage: the last point (inf,inf,inf) joined to every line (inf,inf,i)
    st.activate(point(inf, inf, inf));
    for (std::uint32_t i = 0; i <= q; ++i) {
        const Coord a = i < q ? el(i) : inf;
        st.add_edge(point(inf, inf, inf), line(inf, inf, a));
    }
    stages.push_back(st.materialize());
    return stages;
}

StagedBuild build_gamma_staged(std::uint32_t q) {
    std::vector<BipartiteGraph> graphs = gamma_stage_graphs(q);
    static const char* kNames[] = {"B", "B'", "B''", "B'''", "Gamma"};
    std::vector<StageReport> reports;
    reports.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        reports.push_back({kNames[i], graphs[i].order(), girth(graphs[i])});
    return {std::move(graphs.back()), std::move(reports)};
}

VertexMap side_swap_map(const BipartiteGraph& g) {
    if (g.side_count(0) != g.side_count(1))
        throw std::invalid_argument("side swap needs a balanced bipartite graph");
    const std::uint32_t half = g.side_count(0);
    VertexMap map(g.order());
    for (std::uint32_t v = 0; v < g.order(); ++v) map[v] = v < half ? v + half : v - half;
    return map;
}

std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g) {
    if (k < 2 || g < 3) throw std::invalid_argument("moore_bound needs k >= 2 and g >= 3");
    if (g % 2 == 0) {
        // 2 (1 + (k-1) + ... + (k-1)^{g/2-1})
        std::uint64_t sum = 0, term = 1;
        for (std::uint64_t i = 0; i < g / 2; ++i) {
            sum += term;
            term *= k - 1;
        }
        return 2 * sum;
    }
    // 1 + k (1 + (k-1) + ... + (k-1)^{(g-3)/2})
    std::uint64_t sum = 0, term = 1;
    for (std::uint64_t i = 0; i <= (g - 3) / 2; ++i) {
        sum += term;
        term *= k - 1;
    }
    return 1 + k * sum;
}

}  // namespace cages
