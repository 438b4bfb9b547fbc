#include "cages/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cages::io {

namespace {

std::uint32_t parse_u32(const std::string& token, std::size_t line_no, const char* what) {
    std::uint32_t value = 0;
    const auto [next, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || next != token.data() + token.size())
        throw ParseError(line_no, std::string("bad ") + what + " '" + token + "'");
    return value;
}

std::vector<std::string> split_ws(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string token;
    while (ss >> token) out.push_back(std::move(token));
    return out;
}

}  // namespace

void write_edgelist(const BipartiteGraph& g, std::ostream& os) {
    os << "#bipartite " << g.side_count(0) << ' ' << g.side_count(1) << '\n';
    if (g.has_labels())
        for (std::uint32_t v = 0; v < g.order(); ++v)
            os << "#v " << v << ' ' << to_string(g.label(v)) << '\n';
    for (std::uint32_t u = 0; u < g.order(); ++u)
        for (const std::uint32_t v : g.neighbors(u))
            if (u < v) os << u << ' ' << v << '\n';
}

std::string to_edgelist(const BipartiteGraph& g) {
    std::ostringstream ss;
    write_edgelist(g, ss);
    return ss.str();
}

BipartiteGraph read_edgelist(std::istream& is) {
    std::optional<std::uint32_t> n0, n1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::pair<std::uint32_t, Vertex>> labelled;
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(is, text)) {
        ++line_no;
        if (text.empty()) continue;
        if (text[0] == '#') {
            const auto tokens = split_ws(text);
            if (tokens[0] == "#bipartite") {
                if (tokens.size() != 3) throw ParseError(line_no, "malformed #bipartite header");
                n0 = parse_u32(tokens[1], line_no, "side-0 count");
                n1 = parse_u32(tokens[2], line_no, "side-1 count");
            } else if (tokens[0] == "#v") {
                if (tokens.size() != 3) throw ParseError(line_no, "malformed #v label");
                const std::uint32_t id = parse_u32(tokens[1], line_no, "vertex id");
                try {
                    labelled.emplace_back(id, parse_vertex(tokens[2]));
                } catch (const InvalidVertex& e) {
                    throw ParseError(line_no, e.what());
                }
            }
            continue;  // other comments are ignored
        }
        const auto tokens = split_ws(text);
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
        const std::uint32_t u = parse_u32(tokens[0], line_no, "vertex id");
        const std::uint32_t v = parse_u32(tokens[1], line_no, "vertex id");
        if (!n0 || !n1) throw ParseError(line_no, "edge before #bipartite header");
        const std::uint32_t n = *n0 + *n1;
        if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
        if ((u < *n0) == (v < *n0)) throw ParseError(line_no, "edge does not cross sides");
        edges.emplace_back(u, v);
    }
    if (!n0 || !n1) throw ParseError(line_no, "missing #bipartite header");
    std::vector<Vertex> labels;
    if (!labelled.empty()) {
        if (labelled.size() != static_cast<std::size_t>(*n0) + *n1)
            throw ParseError(line_no, "label lines do not cover every vertex");
        labels.resize(labelled.size());
        std::vector<char> seen(labelled.size(), 0);
        for (const auto& [id, vertex] : labelled) {
            if (id >= labels.size() || seen[id])
                throw ParseError(line_no, "duplicate or out-of-range #v id");
            labels[id] = vertex;
            seen[id] = 1;
        }
    }
    try {
        return BipartiteGraph(*n0, *n1, edges, std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

void write_dimacs(const BipartiteGraph& g, std::ostream& os) {
    os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (std::uint32_t u = 0; u < g.order(); ++u)
        for (const std::uint32_t v : g.neighbors(u))
            if (u < v) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Adjacency read_dimacs(std::istream& is) {
    std::string text;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    while (std::getline(is, text)) {
        ++line_no;
        if (text.empty() || text[0] == 'c') continue;
        const auto tokens = split_ws(text);
        if (tokens[0] == "p") {
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError(line_no, "malformed problem line");
            n = parse_u32(tokens[2], line_no, "vertex count");
        } else if (tokens[0] == "e") {
            if (tokens.size() != 3) throw ParseError(line_no, "malformed edge line");
            if (!n) throw ParseError(line_no, "edge before problem line");
            const std::uint32_t u = parse_u32(tokens[1], line_no, "vertex id");
            const std::uint32_t v = parse_u32(tokens[2], line_no, "vertex id");
            if (u < 1 || v < 1 || u > *n || v > *n || u == v)
                throw ParseError(line_no, "edge endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(line_no, "unrecognized line");
        }
    }
    if (!n) throw ParseError(line_no, "missing problem line");
    Adjacency adj(*n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

void write_graph6(const Adjacency& adj, std::ostream& os) {
    const std::uint64_t n = adj.size();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + (n >> shift & 63));
    } else if (n <= 68719476735ull) {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + (n >> shift & 63));
    } else {
        throw TooLarge("graph6 supports at most 2^36-1 vertices");
    }
    unsigned bits = 0, count = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            const bool edge = std::binary_search(adj[j].begin(), adj[j].end(),
                                                 static_cast<std::uint32_t>(i));
            bits = bits << 1 | static_cast<unsigned>(edge);
            if (++count == 6) {
                out += static_cast<char>(63 + bits);
                bits = 0;
                count = 0;
            }
        }
    if (count != 0) out += static_cast<char>(63 + (bits << (6 - count)));
    os << out << '\n';
}

void write_graph6(const BipartiteGraph& g, std::ostream& os) { write_graph6(g.adjacency(), os); }

Adjacency read_graph6(std::istream& is) {
    std::string text;
    if (!std::getline(is, text) || text.empty()) throw ParseError(1, "empty graph6 input");
    std::size_t pos = 0;
    auto next = [&]() -> std::uint64_t {
        if (pos >= text.size()) throw ParseError(1, "truncated graph6 data");
        const char ch = text[pos++];
        if (ch < 63 || ch > 126) throw ParseError(1, "invalid graph6 byte");
        return static_cast<std::uint64_t>(ch - 63);
    };
    std::uint64_t n;
    if (text[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            n = 0;
            for (int i = 0; i < 6; ++i) n = n << 6 | next();
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i) n = n << 6 | next();
        }
    }
    Adjacency adj(n);
    unsigned bits = 0, count = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            if (count == 0) {
                bits = static_cast<unsigned>(next());
                count = 6;
            }
            --count;
            if (bits >> count & 1) {
                adj[i].push_back(static_cast<std::uint32_t>(j));
                adj[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

void write_vertex_set(const VertexSet& s, std::ostream& os) {
    os << "#vertexset " << s.size() << '\n';
    for (const std::uint32_t v : s) os << v << '\n';
}

VertexSet read_vertex_set(std::istream& is) {
    VertexSet out;
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(is, text)) {
        ++line_no;
        if (text.empty() || text[0] == '#') continue;
        for (const auto& token : split_ws(text))
            out.push_back(parse_u32(token, line_no, "vertex id"));
    }
    return vs_normalized(std::move(out));
}

std::string metadata_json(const Metadata& m) {
    nlohmann::ordered_json j;
    j["q"] = m.field.q();
    j["p"] = m.field.p();
    j["n"] = m.field.n();
    if (m.field.n() > 1)
        j["modulus"] = m.field.modulus();
    else
        j["modulus"] = nullptr;
    j["family"] = m.family ? nlohmann::ordered_json(family_name(*m.family))
                           : nlohmann::ordered_json(nullptr);
    j["xi"] = m.xi ? nlohmann::ordered_json(*m.xi) : nlohmann::ordered_json(nullptr);
    j["alpha"] =
        m.alpha ? nlohmann::ordered_json(to_string(*m.alpha)) : nlohmann::ordered_json(nullptr);
    j["beta"] =
        m.beta ? nlohmann::ordered_json(to_string(*m.beta)) : nlohmann::ordered_json(nullptr);
    j["order"] = m.order;
    j["degree"] = m.degree ? nlohmann::ordered_json(*m.degree) : nlohmann::ordered_json(nullptr);
    j["girth"] = m.girth ? nlohmann::ordered_json(*m.girth) : nlohmann::ordered_json(nullptr);
    j["removed"] =
        m.removed ? nlohmann::ordered_json(*m.removed) : nlohmann::ordered_json(nullptr);
    if (m.degree && m.girth && *m.degree >= 2 && *m.girth >= 3) {
        const std::uint64_t bound = moore_bound(*m.degree, *m.girth);
        j["moore_bound"] = bound;
        j["excess"] = static_cast<std::int64_t>(m.order) - static_cast<std::int64_t>(bound);
    } else {
        j["moore_bound"] = nullptr;
        j["excess"] = nullptr;
    }
    return j.dump(2) + "\n";
}

void write_metadata(const Metadata& m, std::ostream& os) { os << metadata_json(m); }

}  // namespace cages::io
