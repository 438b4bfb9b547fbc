#include "cages/pds.hpp"

#include <algorithm>

namespace cages {

std::string family_name(PdsFamily f) {
    switch (f) {
        case PdsFamily::A: return "A";
        case PdsFamily::B: return "B";
        case PdsFamily::C: return "C";
        case PdsFamily::Cprime: return "Cprime";
        case PdsFamily::S: return "S";
    }
    return "?";
}

std::optional<PdsFamily> family_from_name(const std::string& name) {
    if (name == "A") return PdsFamily::A;
    if (name == "B") return PdsFamily::B;
    if (name == "C") return PdsFamily::C;
    if (name == "Cprime") return PdsFamily::Cprime;
    if (name == "S") return PdsFamily::S;
    return std::nullopt;
}

namespace {

const Field& require_field(const BipartiteGraph& g) {
    if (!g.field()) throw MissingContext("operation needs a field-labelled graph");
    return *g.field();
}

Coord el(FieldElem i) { return Coord::element(i); }
const Coord oo = Coord::infinity();

VertexSet ids_of(const BipartiteGraph& g, const std::vector<Vertex>& labels) {
    VertexSet out;
    out.reserve(labels.size());
    for (const Vertex& v : labels) out.push_back(g.find_vertex(v));
    return vs_normalized(std::move(out));
}

void check_xi(FieldElem xi, const Field& f, bool exclude_one) {
    if (xi >= f.q() || xi == 0 || (exclude_one && xi == 1))
        throw BadXi("xi = " + std::to_string(xi) + " must be a nonzero element of GF(" +
                    std::to_string(f.q()) + ")" + (exclude_one ? " other than 1" : ""));
}

}  // namespace

VertexSet pds_a(const BipartiteGraph& gamma, std::optional<Vertex> alpha_opt,
                std::optional<Vertex> beta_opt) {
    require_field(gamma);
    const Vertex alpha = alpha_opt.value_or(point(oo, oo, oo));
    const std::uint32_t a_id = gamma.find_vertex(alpha);
    std::uint32_t b_id;
    if (beta_opt) {
        b_id = gamma.find_vertex(*beta_opt);
        const auto d = distance(gamma, a_id, b_id);
        if (!d || *d != 3)
            throw BadDistance("beta must be at distance exactly 3 from alpha, got " +
                              (d ? std::to_string(*d) : std::string("inf")));
    } else {
        const VertexSet third = sphere(gamma, a_id, 3);
        if (third.empty()) throw BadDistance("no vertex at distance 3 from alpha");
        b_id = third.front();
    }
    return vs_union(ball(gamma, a_id, 2), ball(gamma, b_id, 2));
}

VertexSet pds_b(const BipartiteGraph& gamma, std::optional<FieldElem> xi_opt) {
    const Field& f = require_field(gamma);
    const std::uint32_t q = f.q();
    const FieldElem xi = xi_opt.value_or(1);
    check_xi(xi, f, false);

    VertexSet acc;
    for (FieldElem c = 0; c < q; ++c)
        acc = vs_union(acc, ball(gamma, line(oo, el(0), el(c)), 1));
    acc = vs_union(acc, ball(gamma, line(oo, oo, el(0)), 1));

    VertexSet inter = ball(gamma, line(oo, el(0), el(0)), 2);
    for (FieldElem c = 1; c < q; ++c)
        inter = vs_intersect(inter, ball(gamma, line(oo, el(0), el(c)), 2));
    inter = vs_intersect(inter, ball(gamma, line(oo, oo, el(0)), 2));
    {
        // closed form of the intersection term
        std::vector<Vertex> expect{line(oo, oo, oo)};
        for (FieldElem c = 0; c < q; ++c) expect.push_back(line(el(0), el(0), el(c)));
        if (inter != ids_of(gamma, expect))
            throw PdsViolation("pds_b intersection term does not match its closed form");
    }
    acc = vs_union(acc, inter);

    const VertexSet ball_xi = ball(gamma, line(oo, oo, el(xi)), 2);
    {
        // N^2[(inf,inf,xi)] as a union of closed point neighborhoods
        VertexSet expect;
        for (FieldElem j = 0; j < q; ++j)
            expect = vs_union(expect, ball(gamma, point(oo, el(xi), el(j)), 1));
        expect = vs_union(expect, ball(gamma, point(oo, oo, oo), 1));
        if (ball_xi != expect)
            throw PdsViolation("pds_b ball around (inf,inf,xi) does not match its closed form");
    }
    return vs_union(acc, ball_xi);
}

VertexSet pds_c(const BipartiteGraph& gamma) {
    const Field& f = require_field(gamma);
    const std::uint32_t q = f.q();
    if (f.p() != 2 || q < 8)
        throw BadQ("family C needs an even prime power q >= 8" +
                   std::string(q == 4 ? " (use Cprime for q = 4)" : ""));
    auto px = [&](FieldElem x) { return f.add(1, f.add(x, f.mul(x, x))); };  // 1 + x + x^2

    // point side: centers (inf,x,0) for x in F_q and (inf,inf,0)
    std::vector<Vertex> centers0;
    for (FieldElem x = 0; x < q; ++x) centers0.push_back(point(oo, el(x), el(0)));
    centers0.push_back(point(oo, oo, el(0)));
    VertexSet r0;
    for (const Vertex& v : centers0) r0 = vs_union(r0, ball(gamma, v, 1));
    VertexSet inter0 = ball(gamma, centers0.front(), 2);
    for (std::size_t i = 1; i < centers0.size(); ++i)
        inter0 = vs_intersect(inter0, ball(gamma, centers0[i], 2));
    {
        std::vector<Vertex> expect{point(oo, oo, oo)};
        for (FieldElem y = 0; y < q; ++y) expect.push_back(point(el(0), el(y), el(0)));
        if (inter0 != ids_of(gamma, expect))
            throw PdsViolation("pds_c point-side intersection does not match its closed form");
    }
    r0 = vs_union(r0, inter0);

    // line side: centers (x,x,p(x)) for x in F_q and (inf,1,1)
    std::vector<Vertex> centers1;
    for (FieldElem x = 0; x < q; ++x) centers1.push_back(line(el(x), el(x), el(px(x))));
    centers1.push_back(line(oo, el(1), el(1)));
    VertexSet r1;
    for (const Vertex& v : centers1) r1 = vs_union(r1, ball(gamma, v, 1));
    VertexSet inter1 = ball(gamma, centers1.front(), 2);
    for (std::size_t i = 1; i < centers1.size(); ++i)
        inter1 = vs_intersect(inter1, ball(gamma, centers1[i], 2));
    {
        std::vector<Vertex> expect{line(oo, el(0), el(1))};
        for (FieldElem x = 0; x < q; ++x)
            expect.push_back(line(el(x), el(f.add(1, x)), el(px(x))));
        if (inter1 != ids_of(gamma, expect))
            throw PdsViolation("pds_c line-side intersection does not match its closed form");
    }
    r1 = vs_union(r1, inter1);

    return vs_union(r0, r1);
}

VertexSet pds_c_prime(const BipartiteGraph& gamma) {
    const Field& f = require_field(gamma);
    const std::uint32_t q = f.q();
    if (q != 4) throw BadQ("family Cprime is defined for q = 4 only");
    const FieldElem xi = 2;  // outside {0,1}
    auto px = [&](FieldElem x) { return f.add(1, f.add(x, f.mul(x, x))); };

    // point side mirrors family C with the x-family shifted to third
    // coordinate xi and the infinity center kept at (inf,inf,0)
    std::vector<Vertex> centers0;
    for (FieldElem x = 0; x < q; ++x) centers0.push_back(point(oo, el(x), el(xi)));
    centers0.push_back(point(oo, oo, el(0)));
    VertexSet r0;
    for (const Vertex& v : centers0) r0 = vs_union(r0, ball(gamma, v, 1));
    VertexSet inter0 = ball(gamma, centers0.front(), 2);
    for (std::size_t i = 1; i < centers0.size(); ++i)
        inter0 = vs_intersect(inter0, ball(gamma, centers0[i], 2));
    r0 = vs_union(r0, inter0);

    std::vector<Vertex> centers1;
    for (FieldElem x = 0; x < q; ++x) centers1.push_back(line(el(x), el(x), el(px(x))));
    centers1.push_back(line(oo, el(1), el(1)));
    VertexSet r1;
    for (const Vertex& v : centers1) r1 = vs_union(r1, ball(gamma, v, 1));
    VertexSet inter1 = ball(gamma, centers1.front(), 2);
    for (std::size_t i = 1; i < centers1.size(); ++i)
        inter1 = vs_intersect(inter1, ball(gamma, centers1[i], 2));
    r1 = vs_union(r1, inter1);

    return vs_union(r0, r1);
}

FieldElem default_gq_xi(const Field& field) {
    return field.p() == 2 ? 2 : field.neg(1);
}

BipartiteGraph build_gq(std::uint32_t q, std::optional<FieldElem> xi_opt) {
    if (q < 4) throw BadQ("G_q requires q >= 4");
    BipartiteGraph gamma = build_gamma(q);
    const Field& f = *gamma.field();
    const FieldElem xi = xi_opt.value_or(default_gq_xi(f));
    check_xi(xi, f, true);
    return remove_set(gamma, pds_b(gamma, xi));
}

SetS build_set_s(const BipartiteGraph& gq, FieldElem xi) {
    const Field& f = require_field(gq);
    const std::uint32_t q = f.q();
    if (q < 4) throw BadQ("the set S requires q >= 4");
    check_xi(xi, f, true);

    SetS out;
    for (FieldElem y = 0; y < q; ++y) {
        if (y == 0 || y == 1 || y == xi) continue;
        for (FieldElem z = 0; z < q; ++z) out.p.push_back(gq.find_vertex(point(oo, el(y), el(z))));
    }
    out.p = vs_normalized(std::move(out.p));

    const std::uint32_t base = gq.find_vertex(point(oo, el(1), el(0)));
    out.r = vs_intersect(neighbors_of_set(gq.adjacency(), out.p), sphere(gq, base, 5));

    for (FieldElem z = 0; z < q; ++z)
        out.s = vs_union(out.s, ball(gq, point(oo, el(1), el(z)), 1));
    out.s = vs_union(out.s, vs_union(out.r, neighbors_of_set(gq.adjacency(), out.r)));
    return out;
}

BipartiteGraph build_q_minus_1(std::uint32_t q, std::optional<FieldElem> xi_opt) {
    BipartiteGraph gq = build_gq(q, xi_opt);
    const FieldElem xi = xi_opt.value_or(default_gq_xi(*gq.field()));
    return remove_set(gq, build_set_s(gq, xi).s);
}

Derived derive(std::uint32_t q, PdsFamily family, const DeriveParams& params) {
    DerivedSpec spec;
    spec.family = family;
    spec.q = q;

    std::optional<BipartiteGraph> base;
    VertexSet removal;
    switch (family) {
        case PdsFamily::A: {
            base = build_gamma(q);
            spec.alpha = params.alpha.value_or(point(oo, oo, oo));
            if (params.beta) {
                spec.beta = params.beta;
            } else {
                const VertexSet third = sphere(*base, base->find_vertex(*spec.alpha), 3);
                if (third.empty()) throw BadDistance("no vertex at distance 3 from alpha");
                spec.beta = base->label(third.front());
            }
            removal = pds_a(*base, spec.alpha, spec.beta);
            spec.expected_removed = 2u * (q + 1) * (q + 1);
            spec.expected_order = 2u * q * (q * q - 1);
            spec.expected_degree = q;
            break;
        }
        case PdsFamily::B: {
            base = build_gamma(q);
            spec.xi = params.xi.value_or(1);
            removal = pds_b(*base, spec.xi);
            spec.expected_removed = 2u * (q * q + 3 * q + 1);
            spec.expected_order = 2u * q * (q * q - 2);
            spec.expected_degree = q;
            break;
        }
        case PdsFamily::C: {
            base = build_gamma(q);
            removal = pds_c(*base);
            spec.expected_removed = 2u * (q * q + 4 * q + 3);
            spec.expected_order = 2u * (q * q * q - 3 * q - 2);
            spec.expected_degree = q;
            break;
        }
        case PdsFamily::Cprime: {
            if (q != 4) throw BadQ("family Cprime is defined for q = 4 only");
            base = build_gamma(q);
            spec.xi = 2;
            removal = pds_c_prime(*base);
            spec.expected_removed = 70;
            spec.expected_order = 100;
            spec.expected_degree = 4;
            break;
        }
        case PdsFamily::S: {
            if (q < 4) throw BadQ("family S requires q >= 4");
            base = build_gq(q, params.xi);
            spec.xi = params.xi.value_or(default_gq_xi(*base->field()));
            const SetS sets = build_set_s(*base, *spec.xi);
            if (sets.p.size() != static_cast<std::size_t>(q) * (q - 3) ||
                sets.r.size() != static_cast<std::size_t>(q) * (q - 3))
                throw PdsViolation("sets P and R do not have the expected cardinality q(q-3)");
            removal = sets.s;
            spec.expected_removed = 4u * q * q - 6 * q;
            spec.expected_order = 2u * q * (q - 1) * (q - 1);
            spec.expected_degree = q - 1;
            break;
        }
    }

    // The set-S construction only achieves its contract for q <= 5: each
    // surviving point lies on at most two R-lines (the membership condition
    // is quadratic in the slope), so the removal is too large beyond that.
    const std::string s_hint =
        family == PdsFamily::S
            ? " (the S removal works for q = 4 and q = 5 only, with xi = -1 when q is odd)"
            : "";
    if (removal.size() != spec.expected_removed)
        throw PdsViolation("family " + family_name(family) + " has " +
                           std::to_string(removal.size()) + " vertices, expected " +
                           std::to_string(spec.expected_removed) + s_hint);
    if (!is_perfect_dominating(*base, removal))
        throw PdsViolation("family " + family_name(family) +
                           " is not perfect dominating in its base graph" + s_hint);
    BipartiteGraph derived = remove_set(*base, removal);
    if (derived.order() != spec.expected_order)
        throw PdsViolation("derived order " + std::to_string(derived.order()) + ", expected " +
                           std::to_string(spec.expected_order));
    const auto profile = degree_profile(derived);
    if (profile.size() != 1 || profile.begin()->first != spec.expected_degree)
        throw PdsViolation("derived graph is not " + std::to_string(spec.expected_degree) +
                           "-regular");
    return {std::move(derived), spec, std::move(removal)};
}

}  // namespace cages
