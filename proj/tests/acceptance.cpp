// Acceptance suite: runs every contract of the construction pipeline at
// desk scale and prints one PASS/FAIL line per criterion.  Exits with the
// number of failed criteria.
//
// Criteria 4, 7 and 8 encode claims of the source constructions that are
// provably unattainable in part (see the notes printed on failure); they
// are exercised as stated rather than weakened.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cages/io.hpp"
#include "helpers.hpp"

using namespace cages;
using namespace cages::testutil;

namespace {

const std::vector<std::uint32_t> kAllQ{2, 3, 4, 5, 7, 8, 9};

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes.push_back(what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::string q_str(std::uint32_t q) { return "q=" + std::to_string(q); }

bool uniform_degree(const BipartiteGraph& g, std::size_t k) {
    const auto profile = degree_profile(g);
    return profile.size() == 1 && profile.begin()->first == k;
}

std::vector<std::size_t> component_sizes(const Adjacency& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < adj.size(); ++s) {
        if (seen[s]) continue;
        std::size_t size = 0;
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            const std::uint32_t u = stack.back();
            stack.pop_back();
            ++size;
            for (const std::uint32_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

void criterion_1_cages(Criterion& c) {
    for (const std::uint32_t q : kAllQ) {
        const auto g = build_gamma(q);
        const std::size_t want_order = 2ull * (1ull * q * q * q + q * q + q + 1);
        c.expect(g.order() == want_order, q_str(q) + ": order " + std::to_string(g.order()));
        c.expect(uniform_degree(g, q + 1), q_str(q) + ": not (q+1)-regular");
        c.expect(is_bipartite(g.adjacency()), q_str(q) + ": not bipartite");
        c.expect(is_connected(g), q_str(q) + ": not connected");
        c.expect(girth(g) == 8, q_str(q) + ": girth != 8");
        c.expect(g.order() == moore_bound(q + 1, 8), q_str(q) + ": excess != 0");
    }
}

void criterion_2_auxiliary(Criterion& c) {
    for (const std::uint32_t q : kAllQ) {
        const auto h = build_h(q);
        const auto b = build_b(q);
        const std::size_t cube = 2ull * q * q * q;
        c.expect(h.order() == cube && b.order() == cube, q_str(q) + ": wrong order");
        c.expect(uniform_degree(h, q) && uniform_degree(b, q), q_str(q) + ": not q-regular");
        c.expect(girth(h) == 8 && girth(b) == 8, q_str(q) + ": girth != 8");
        c.expect(is_isomorphism_via(b, h, sigma_map(q)), q_str(q) + ": sigma fails");
    }
    const auto sizes = component_sizes(build_h(2).adjacency());
    c.expect(sizes == std::vector<std::size_t>{8, 8}, "H_2 is not two 8-vertex components");
}

void criterion_3_oracles(Criterion& c) {
    for (const std::uint32_t q : kAllQ) {
        const auto direct = build_gamma(q);
        const auto staged = build_gamma_staged(q);
        c.expect(staged.graph == direct, q_str(q) + ": staged build differs from direct");
        for (const auto& st : staged.stages)
            c.expect(st.girth == 8, q_str(q) + ": stage " + st.name + " girth != 8");
        const Field& f = *direct.field();
        bool agree = true;
        for (std::uint32_t v = 0; v < direct.side_count(0); ++v)
            if (gamma_point_neighborhood(f, direct.label(v)) != neighbor_labels(direct, v))
                agree = false;
        c.expect(agree, q_str(q) + ": point-side formula disagrees with adjacency");
    }
}

void criterion_4_self_duality(Criterion& c) {
    for (const std::uint32_t q : {2u, 4u, 8u}) {
        const auto g = build_gamma(q);
        c.expect(is_isomorphism_via(g, g, side_swap_map(g)),
                 q_str(q) + ": coordinate-preserving side swap is not an automorphism");
    }
    if (!c.pass)
        c.info("note: {(inf,0,0) line, (0,0,1) point} is an edge, its swap image is not; "
               "the quadrangle is self-dual only via a nontrivial coordinate map");
}

void criterion_5_pds_sizes(Criterion& c) {
    for (const std::uint32_t q : kAllQ) {
        const auto g = build_gamma(q);
        const auto a = pds_a(g);
        c.expect(a.size() == 2ull * (q + 1) * (q + 1), q_str(q) + ": |A| = " +
                                                           std::to_string(a.size()));
        c.expect(is_perfect_dominating(g, a), q_str(q) + ": A not perfect dominating");
        const auto b = pds_b(g);
        c.expect(b.size() == 2ull * (1ull * q * q + 3 * q + 1),
                 q_str(q) + ": |B| = " + std::to_string(b.size()));
        c.expect(is_perfect_dominating(g, b), q_str(q) + ": B not perfect dominating");
    }
    const auto g8 = build_gamma(8);
    const auto c8 = pds_c(g8);
    c.expect(c8.size() == 198, "|C| = " + std::to_string(c8.size()));
    c.expect(is_perfect_dominating(g8, c8), "C not perfect dominating");
    const auto g4 = build_gamma(4);
    const auto cp = pds_c_prime(g4);
    c.expect(cp.size() == 70, "|C'| = " + std::to_string(cp.size()));
    c.expect(is_perfect_dominating(g4, cp), "C' not perfect dominating");
}

void criterion_6_derived(Criterion& c) {
    for (const std::uint32_t q : kAllQ) {
        const auto da = derive(q, PdsFamily::A);
        c.expect(da.graph.order() == 2ull * q * (1ull * q * q - 1) &&
                     uniform_degree(da.graph, q),
                 q_str(q) + ": family A derived graph wrong");
        const auto ga = girth(da.graph);
        if (q == 2) {
            c.expect(ga.has_value() && *ga >= 8, "q=2: family A girth below 8");
            c.info("q=2: family A computed girth = " + std::to_string(*ga));
        } else {
            c.expect(ga == 8, q_str(q) + ": family A girth != 8");
        }
        const auto db = derive(q, PdsFamily::B);
        c.expect(db.graph.order() == 2ull * q * (1ull * q * q - 2) &&
                     uniform_degree(db.graph, q),
                 q_str(q) + ": family B derived graph wrong");
        if (q == 2) {
            c.expect(girth(db.graph) == 8 && component_count(db.graph) == 1 &&
                         db.graph.order() == 8,
                     "q=2: family B does not leave a single 8-cycle");
        } else {
            c.expect(girth(db.graph) == 8, q_str(q) + ": family B girth != 8");
        }
    }
    const auto dc = derive(8, PdsFamily::C);
    c.expect(dc.graph.order() == 972 && uniform_degree(dc.graph, 8) && girth(dc.graph) == 8,
             "family C at q=8 wrong");
    const auto dp = derive(4, PdsFamily::Cprime);
    c.expect(dp.graph.order() == 100 && uniform_degree(dp.graph, 4) && girth(dp.graph) == 8,
             "family C' at q=4 wrong");
}

void criterion_7_set_quantities(Criterion& c) {
    for (const std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
        const Field f(q);
        const FieldElem xi = default_gq_xi(f);
        const auto gq = build_gq(q, xi);
        const auto sets = build_set_s(gq, xi);
        c.expect(sets.p.size() == 1ull * q * (q - 3) && sets.r.size() == 1ull * q * (q - 3),
                 q_str(q) + ": |P| or |R| != q(q-3)");
        const auto nr = neighbors_of_set(gq.adjacency(), sets.r);
        c.expect(nr.size() == 2ull * q * (q - 2),
                 q_str(q) + ": |N(R)| = " + std::to_string(nr.size()) + ", expected " +
                     std::to_string(2 * q * (q - 2)));
        bool closed_form = true;
        for (const std::uint32_t pid : sets.p) {
            VertexSet nbrs(gq.neighbors(pid).begin(), gq.neighbors(pid).end());
            const auto in_r = vs_intersect(nbrs, sets.r);
            if (in_r.size() != 1) {
                closed_form = false;
                continue;
            }
            const Vertex pv = gq.label(pid);
            const FieldElem y = pv.b.index(), z = pv.c.index();
            if (f.sub(1, f.mul(y, y)) == 0) {
                closed_form = false;
                continue;
            }
            const FieldElem t = f.mul(f.inv(f.sub(1, f.mul(y, y))), f.mul(y, z));
            if (gq.label(in_r.front()) != line(el(y), el(t), el(z))) closed_form = false;
        }
        c.expect(closed_form, q_str(q) + ": P-vertex R-neighbors do not match the closed form");
        const std::uint32_t base = gq.find_vertex(point(oo, el(1), el(0)));
        const VertexSet sphere5_not_r = vs_difference(sphere(gq, base, 5), sets.r);
        bool unique5 = true;
        for (const std::uint32_t v : vs_difference(nr, sets.p)) {
            VertexSet nbrs(gq.neighbors(v).begin(), gq.neighbors(v).end());
            if (vs_intersect(nbrs, sphere5_not_r).size() != 1) unique5 = false;
        }
        c.expect(unique5, q_str(q) + ": some vertex of N(R)\\P lacks a unique distance-5 "
                                     "neighbor outside R");
    }
    if (!c.pass)
        c.info("note: a surviving point lies on at most two of the special distance-5 lines "
               "(quadratic slope condition), so |N(R)| = 2q(q-2) is impossible once q-3 > 2");
}

void criterion_8_q_minus_1(Criterion& c) {
    for (const std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
        const Field f(q);
        const FieldElem xi = default_gq_xi(f);
        const auto gq = build_gq(q, xi);
        const auto sets = build_set_s(gq, xi);
        c.expect(sets.s.size() == 4ull * q * q - 6 * q,
                 q_str(q) + ": |S| = " + std::to_string(sets.s.size()) + ", expected " +
                     std::to_string(4 * q * q - 6 * q));
        c.expect(is_perfect_dominating(gq, sets.s),
                 q_str(q) + ": S is not perfect dominating in G_q");
        const auto rem = remove_set(gq, sets.s);
        c.expect(rem.order() == 2ull * q * (q - 1) * (q - 1),
                 q_str(q) + ": order " + std::to_string(rem.order()) + ", expected " +
                     std::to_string(2 * q * (q - 1) * (q - 1)));
        const bool regular = uniform_degree(rem, q - 1);
        c.expect(regular, q_str(q) + ": remainder is not (q-1)-regular");
        if (regular) c.expect(girth(rem) == 8, q_str(q) + ": remainder girth != 8");
    }
    if (!c.pass)
        c.info("note: the S removal achieves its contract exactly for q in {4,5}; see the "
               "criterion-7 slope-count obstruction");
}

void criterion_9_claims(Criterion& c) {
    for (const std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const auto res = check_claims(q);
        c.expect(res.c1, q_str(q) + ": claim 1 fails");
        c.expect(res.c2, q_str(q) + ": claim 2 fails");
        c.expect(res.c3, q_str(q) + ": claim 3 fails");
        c.expect(res.c4, q_str(q) + ": claim 4 fails");
        c.expect(res.c5, q_str(q) + ": claim 5 fails");
    }
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int run(const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return status < 0 ? status : WEXITSTATUS(status);
}

void criterion_10_roundtrip(Criterion& c, const std::string& cli) {
    // in-process: edge-list round trip is the identity
    for (const std::uint32_t q : {2u, 3u, 4u}) {
        const auto g = build_gamma(q);
        std::istringstream is(io::to_edgelist(g));
        c.expect(io::read_edgelist(is) == g, q_str(q) + ": edge-list round trip differs");
    }
    const auto derived = derive(4, PdsFamily::B).graph;
    std::istringstream is(io::to_edgelist(derived));
    c.expect(io::read_edgelist(is) == derived, "derived-graph round trip differs");

    // through the CLI: identical flags give byte-identical exports
    if (cli.empty()) {
        c.expect(false, "CAGES_CLI not set; cannot exercise the command-line determinism check");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("cages-accept-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto gpath = [&](int i) { return (dir / ("g" + std::to_string(i) + ".edges")).string(); };
    for (int i = 1; i <= 2; ++i)
        c.expect(run(cli + " construct --q 3 --family gamma --out " + gpath(i)) == 0,
                 "construct run failed");
    c.expect(read_file(gpath(1)) == read_file(gpath(2)), "construct exports differ between runs");
    c.expect(read_file(gpath(1) + ".meta.json") == read_file(gpath(2) + ".meta.json"),
             "construct metadata differs between runs");
    const auto dpath = [&](int i) { return (dir / ("d" + std::to_string(i) + ".edges")).string(); };
    for (int i = 1; i <= 2; ++i)
        c.expect(run(cli + " derive --q 4 --remove S --out " + dpath(i) + " --set-out " +
                     dpath(i) + ".ids") == 0,
                 "derive run failed");
    c.expect(read_file(dpath(1)) == read_file(dpath(2)), "derive exports differ between runs");
    c.expect(read_file(dpath(1) + ".meta.json") == read_file(dpath(2) + ".meta.json"),
             "derive metadata differs between runs");
    c.expect(read_file(dpath(1) + ".ids") == read_file(dpath(2) + ".ids"),
             "removed-set exports differ between runs");

    // the verifier agrees with the exported artifacts
    c.expect(run(cli + " verify " + gpath(1) + " --girth 8 --regular 4 --bipartite") == 0,
             "verify disagrees with the construct export");
    c.expect(run(cli + " verify " + dpath(1) + " --girth 8 --regular 3 --bipartite") == 0,
             "verify disagrees with the derive export");
    const std::string bset = (dir / "b4.ids").string();
    c.expect(run(cli + " derive --q 4 --remove B --set-out " + bset) == 0, "set export failed");
    const std::string g4 = (dir / "g4.edges").string();
    c.expect(run(cli + " construct --q 4 --family gamma --out " + g4) == 0, "construct failed");
    c.expect(run(cli + " verify " + g4 + " --pds " + bset) == 0,
             "verify rejects the exported perfect dominating set");
    fs::remove_all(dir);
}

}  // namespace

int main() {
    const char* cli_env = std::getenv("CAGES_CLI");
    const std::string cli = cli_env ? cli_env : "";

    struct Entry {
        int id;
        const char* title;
        std::function<void(Criterion&)> fn;
    };
    const std::vector<Entry> entries{
        {1, "cage reproduction (order, degree, bipartite, connected, girth, excess)",
         criterion_1_cages},
        {2, "auxiliary graphs and the sigma isomorphism", criterion_2_auxiliary},
        {3, "staged construction and point-side oracle agree with the generator",
         criterion_3_oracles},
        {4, "self-duality via the coordinate-preserving side swap", criterion_4_self_duality},
        {5, "removal-set cardinalities and perfect domination", criterion_5_pds_sizes},
        {6, "derived orders, degrees and girths", criterion_6_derived},
        {7, "P/R/N(R) cardinalities and closed forms", criterion_7_set_quantities},
        {8, "the (q-1)-regular remainder of G_q", criterion_8_q_minus_1},
        {9, "distance claims 1-5, exhaustive for q <= 5", criterion_9_claims},
        {10, "round trips and deterministic exports", [&cli](Criterion& c) {
             criterion_10_roundtrip(c, cli);
         }},
    };

    int failed = 0;
    for (const auto& entry : entries) {
        Criterion c;
        entry.fn(c);
        std::printf("criterion %2d: %s  %s\n", entry.id, c.pass ? "PASS" : "FAIL", entry.title);
        for (const auto& note : c.notes) std::printf("    %s\n", note.c_str());
        if (!c.pass) ++failed;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(entries.size()) - failed,
                entries.size());
    return failed;
}
