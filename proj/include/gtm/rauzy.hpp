#pragma once

// Abelian Rauzy graphs: vertices are Parikh vectors of length-order factors,
// edges connect the abelianizations of the two length-order windows of a
// length-(order+1) factor.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtm/word.hpp"

namespace gtm {

// A directed edge. The target is determined by the source and the label:
// drop one a, append one b.
struct RauzyEdge {
    ParikhVector src;
    Letter a = 0;
    Letter b = 0;

    ParikhVector target() const;

    friend bool operator==(const RauzyEdge&, const RauzyEdge&) = default;
    friend auto operator<=>(const RauzyEdge&, const RauzyEdge&) = default;
};

struct AbelianRauzyGraph {
    int m = 2;
    std::size_t order = 1;
    std::vector<ParikhVector> vertices;  // sorted lexicographically
    std::vector<RauzyEdge> edges;        // sorted, deduplicated by (src, a, b)

    bool has_vertex(const ParikhVector& v) const;
};

AbelianRauzyGraph build_graph(int m, std::size_t order);

// Number of deduplicated edges of the order-l graph, by construction.
std::int64_t edge_count(int m, std::size_t order);

// One-sided extension records of length-order factors: (counts, letter) for
// right extensions, (letter, counts) for left extensions. The two sides are
// kept apart; the total is the size of their disjoint union.
struct YSets {
    std::vector<std::pair<ParikhVector, Letter>> right;  // sorted
    std::vector<std::pair<Letter, ParikhVector>> left;   // sorted

    std::size_t total() const { return right.size() + left.size(); }
};

YSets y_sets(int m, std::size_t order);

// True iff every vertex balances in-degree with out-degree and the graph is
// strongly connected.
bool eulerian_check(const AbelianRauzyGraph& g);

// True iff adding t to every coordinate maps the order-l graph onto the
// order-(l + t*m) graph, preserving edge labels. Requires m <= l < 2m.
bool shift_isomorphism_check(int m, std::size_t order, int t);

// Deterministic serializations. DOT node ids are "v_" + underscore-joined
// counts; edge labels are "(a,b)"; when color_edges is set each edge gets a
// color chosen by its second label component.
std::string export_dot(const AbelianRauzyGraph& g, bool color_edges = false);
nlohmann::json export_json(const AbelianRauzyGraph& g);
AbelianRauzyGraph graph_from_json(const nlohmann::json& j);

// Dispatch on format name: "dot" or "json".
std::string export_graph(const AbelianRauzyGraph& g, const std::string& format);

}  // namespace gtm
