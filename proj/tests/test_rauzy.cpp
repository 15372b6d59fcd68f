#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "gtm/formulas.hpp"
#include "gtm/rauzy.hpp"

TEST_CASE("order-1 graphs are complete on the letter vertices") {
    for (int m : {2, 3, 5}) {
        const gtm::AbelianRauzyGraph g = gtm::build_graph(m, 1);
        CHECK(g.vertices.size() == static_cast<std::size_t>(m));
        CHECK(g.edges.size() == static_cast<std::size_t>(m) * m);
        CHECK(gtm::eulerian_check(g));
    }
    CHECK_THROWS_AS(gtm::build_graph(3, 0), std::invalid_argument);
}

TEST_CASE("vertex and edge counts match the closed forms") {
    const gtm::AbelianRauzyGraph g = gtm::build_graph(6, 4);
    CHECK(g.vertices.size() == 39);
    CHECK(g.edges.size() == 126);
    CHECK(gtm::edge_count(6, 4) == 126);
    CHECK(gtm::edge_count(4, 5) == 52);
    CHECK(gtm::build_graph(5, 4).edges.size() == 85);
}

TEST_CASE("one-sided extension counts") {
    const gtm::YSets y = gtm::y_sets(5, 4);
    CHECK(y.right.size() == 55);
    CHECK(y.left.size() == 55);
    CHECK(y.total() == static_cast<std::size_t>(gtm::extension_pair_formula(5, 4)));
    CHECK(gtm::y_sets(4, 5).total() == 56);
}

TEST_CASE("edges stay inside the vertex set and never repeat") {
    for (std::size_t order = 1; order <= 5; ++order) {
        const gtm::AbelianRauzyGraph g = gtm::build_graph(3, order);
        std::set<std::tuple<gtm::ParikhVector, int, int>> seen;
        for (const auto& e : g.edges) {
            CHECK(g.has_vertex(e.src));
            CHECK(g.has_vertex(e.target()));
            CHECK(seen.insert({e.src, e.a, e.b}).second);
        }
    }
}

TEST_CASE("low orders are eulerian") {
    for (int m : {3, 4, 5})
        for (std::size_t order = 1; order < static_cast<std::size_t>(m); ++order)
            CHECK(gtm::eulerian_check(gtm::build_graph(m, order)));
}

TEST_CASE("shifting the order by the alphabet size relabels the graph") {
    CHECK(gtm::shift_isomorphism_check(3, 3, 1));
    CHECK(gtm::shift_isomorphism_check(3, 5, 2));
    CHECK(gtm::shift_isomorphism_check(4, 5, 1));
    CHECK(gtm::shift_isomorphism_check(5, 6, 1));
    CHECK_THROWS_AS(gtm::shift_isomorphism_check(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gtm::shift_isomorphism_check(3, 6, 1), std::invalid_argument);
}

TEST_CASE("dot export lists every edge") {
    const gtm::AbelianRauzyGraph g = gtm::build_graph(3, 1);
    const std::string dot = gtm::export_dot(g);
    std::size_t arrows = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2))
        ++arrows;
    CHECK(arrows == g.edges.size());
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("color=") == std::string::npos);
    CHECK(gtm::export_dot(g, true).find("color=") != std::string::npos);
}

TEST_CASE("json export round-trips") {
    const gtm::AbelianRauzyGraph g = gtm::build_graph(3, 2);
    const gtm::AbelianRauzyGraph back = gtm::graph_from_json(gtm::export_json(g));
    CHECK(back.m == g.m);
    CHECK(back.order == g.order);
    CHECK(back.vertices == g.vertices);
    CHECK(back.edges == g.edges);
    CHECK_THROWS_AS(gtm::export_graph(g, "svg"), std::invalid_argument);
}
