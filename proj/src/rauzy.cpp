#include "gtm/rauzy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gtm/errors.hpp"
#include "gtm/factors.hpp"

namespace gtm {

ParikhVector RauzyEdge::target() const {
    ParikhVector t = src;
    t[a] -= 1;
    t[b] += 1;
    return t;
}

bool AbelianRauzyGraph::has_vertex(const ParikhVector& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

AbelianRauzyGraph build_graph(int m, std::size_t order) {
    if (order < 1) throw std::invalid_argument("graph order must be at least 1");
    const FactorSet& extended = factor_set(m, order + 1);
    std::set<ParikhVector> vertex_set;
    std::set<RauzyEdge> edge_set;
    for (const Word& w : extended.words) {
        // w = a U b with |U| = order - 1.
        const ParikhVector source = parikh(w.slice(0, order));
        edge_set.insert(RauzyEdge{source, w[0], w[order]});
        vertex_set.insert(source);
    }
    for (const Word& w : factor_set(m, order).words) vertex_set.insert(parikh(w));

    AbelianRauzyGraph g;
    g.m = m;
    g.order = order;
    g.vertices.assign(vertex_set.begin(), vertex_set.end());
    g.edges.assign(edge_set.begin(), edge_set.end());
    return g;
}

std::int64_t edge_count(int m, std::size_t order) {
    return static_cast<std::int64_t>(build_graph(m, order).edges.size());
}

YSets y_sets(int m, std::size_t order) {
    if (order < 1) throw std::invalid_argument("extension records need order at least 1");
    const FactorSet& extended = factor_set(m, order + 1);
    std::set<std::pair<ParikhVector, Letter>> right;
    std::set<std::pair<Letter, ParikhVector>> left;
    for (const Word& w : extended.words) {
        right.insert({parikh(w.slice(0, order)), w[order]});
        left.insert({w[0], parikh(w.slice(1, order))});
    }
    YSets y;
    y.right.assign(right.begin(), right.end());
    y.left.assign(left.begin(), left.end());
    return y;
}

namespace {

// Indices of strongly connected components via two depth-first passes.
bool strongly_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& out,
                        const std::vector<std::vector<std::size_t>>& in) {
    if (n == 0) return false;
    auto reachable = [n](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return reachable(out) && reachable(in);
}

}  // namespace

bool eulerian_check(const AbelianRauzyGraph& g) {
    std::map<ParikhVector, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
    const std::size_t n = g.vertices.size();
    std::vector<std::int64_t> out_deg(n, 0), in_deg(n, 0);
    std::vector<std::vector<std::size_t>> out_adj(n), in_adj(n);
    for (const RauzyEdge& e : g.edges) {
        const auto s = index.find(e.src);
        const auto t = index.find(e.target());
        if (s == index.end() || t == index.end())
            throw InvariantError("edge endpoint is not a vertex");
        ++out_deg[s->second];
        ++in_deg[t->second];
        out_adj[s->second].push_back(t->second);
        in_adj[t->second].push_back(s->second);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (out_deg[i] != in_deg[i]) return false;
    }
    return strongly_connected(n, out_adj, in_adj);
}

bool shift_isomorphism_check(int m, std::size_t order, int t) {
    if (t < 1) throw std::invalid_argument("shift amount must be at least 1");
    if (order < static_cast<std::size_t>(m) || order >= 2 * static_cast<std::size_t>(m))
        throw std::invalid_argument("shift comparison needs m <= order < 2m");
    const AbelianRauzyGraph lo = build_graph(m, order);
    const AbelianRauzyGraph hi = build_graph(m, order + static_cast<std::size_t>(t) * m);

    // Adding a constant to every coordinate preserves lexicographic order, so
    // the shifted lists can be compared element by element.
    if (lo.vertices.size() != hi.vertices.size() || lo.edges.size() != hi.edges.size())
        return false;
    for (std::size_t i = 0; i < lo.vertices.size(); ++i) {
        ParikhVector shifted = lo.vertices[i];
        for (int& c : shifted) c += t;
        if (shifted != hi.vertices[i]) return false;
    }
    for (std::size_t i = 0; i < lo.edges.size(); ++i) {
        RauzyEdge shifted = lo.edges[i];
        for (int& c : shifted.src) c += t;
        if (shifted != hi.edges[i]) return false;
    }
    return true;
}

namespace {

std::string vertex_id(const ParikhVector& v) {
    std::string id = "v";
    for (int c : v) {
        id += '_';
        id += std::to_string(c);
    }
    return id;
}

std::string vertex_tuple(const ParikhVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    s += ')';
    return s;
}

constexpr const char* kEdgePalette[] = {"red",    "blue",   "forestgreen", "orange",  "purple",
                                        "brown",  "cyan3",  "magenta",     "gold3",   "gray40"};

}  // namespace

std::string export_dot(const AbelianRauzyGraph& g, bool color_edges) {
    std::ostringstream out;
    out << "digraph rauzy_" << g.m << '_' << g.order << " {\n";
    for (const ParikhVector& v : g.vertices) {
        out << "  " << vertex_id(v) << " [label=\"" << vertex_tuple(v) << "\"];\n";
    }
    for (const RauzyEdge& e : g.edges) {
        out << "  " << vertex_id(e.src) << " -> " << vertex_id(e.target()) << " [label=\"("
            << static_cast<int>(e.a) << ',' << static_cast<int>(e.b) << ")\"";
        if (color_edges) {
            constexpr std::size_t palette_size = sizeof(kEdgePalette) / sizeof(kEdgePalette[0]);
            out << ", color=\"" << kEdgePalette[e.b % palette_size] << "\"";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json export_json(const AbelianRauzyGraph& g) {
    nlohmann::json j;
    j["m"] = g.m;
    j["order"] = g.order;
    j["vertices"] = nlohmann::json::array();
    for (const ParikhVector& v : g.vertices) j["vertices"].push_back(v);
    j["edges"] = nlohmann::json::array();
    for (const RauzyEdge& e : g.edges) {
        nlohmann::json edge;
        edge["src"] = e.src;
        edge["a"] = static_cast<int>(e.a);
        edge["b"] = static_cast<int>(e.b);
        j["edges"].push_back(edge);
    }
    return j;
}

AbelianRauzyGraph graph_from_json(const nlohmann::json& j) {
    AbelianRauzyGraph g;
    g.m = j.at("m").get<int>();
    g.order = j.at("order").get<std::size_t>();
    for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<ParikhVector>());
    for (const auto& e : j.at("edges")) {
        RauzyEdge edge;
        edge.src = e.at("src").get<ParikhVector>();
        edge.a = static_cast<Letter>(e.at("a").get<int>());
        edge.b = static_cast<Letter>(e.at("b").get<int>());
        g.edges.push_back(edge);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::string export_graph(const AbelianRauzyGraph& g, const std::string& format) {
    if (format == "dot") return export_dot(g);
    if (format == "json") return export_json(g).dump(2) + "\n";
    throw std::invalid_argument("unknown graph format: " + format);
}

}  // namespace gtm
