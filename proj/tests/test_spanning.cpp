#include "doctest.h"

#include "radstat/centrality.hpp"
#include "radstat/enumerate.hpp"
#include "radstat/extremal.hpp"
#include "radstat/spanning.hpp"
#include "support.hpp"

using namespace radstat;
using testing_support::edge_list;

namespace {

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
    return Graph(n, es);
}

bool is_subgraph(const Graph& sub, const Graph& g) {
    for (const Edge& e : sub.edges())
        if (!g.has_edge(e.u, e.v)) return false;
    return sub.order() == g.order();
}

}  // namespace

TEST_CASE("preservation target names") {
    for (Preserved p : {Preserved::Radius, Preserved::Status, Preserved::MaxDegree})
        CHECK(parse_preserved(preserved_name(p)) == p);
    CHECK(parse_preserved("RADIUS") == Preserved::Radius);
    CHECK_FALSE(parse_preserved("girth").has_value());
}

TEST_CASE("spanning trees of small named graphs") {
    Graph c5 = cycle(5);
    auto r = radius_preserving_spanning_tree(c5);
    CHECK(radius(r.tree).radius == 2);
    CHECK(max_degree(r.tree) == 2);

    Graph k4 = complete(4);
    auto s = status_preserving_spanning_tree(k4);
    CHECK(are_isomorphic(s.tree, parse_tree("0 1\n0 2\n0 3")));
    CHECK(graph_status(s.tree).status == 3);
    CHECK(graph_status(k4).status == 3);
    CHECK(max_degree(max_degree_spanning_tree(k4).tree) == 3);
    CHECK(max_degree(max_degree_spanning_tree(cycle(7)).tree) == 2);

    Tree p5 = parse_tree("0 1\n1 2\n2 3\n3 4");
    for (Preserved p : {Preserved::Radius, Preserved::Status, Preserved::MaxDegree}) {
        auto cert = spanning_tree(p5, p);
        CHECK(Graph(cert.tree) == Graph(p5));
        CHECK(cert.preserved == p);
    }
    CHECK_THROWS_AS(bfs_tree(p5, 5), Error);
}

TEST_CASE("spanning trees keep their quantity on random graphs") {
    for (int i = 0; i < 400; ++i) {
        int n = 2 + i % 11;
        std::int64_t cap = std::int64_t(n) * (n - 1) / 2 - (n - 1);
        Graph g = random_connected_graph(n, (i * 5) % (cap + 1), mix_seed(3, i));
        auto el = edge_list(g);
        auto r = radius_preserving_spanning_tree(g);
        auto s = status_preserving_spanning_tree(g);
        auto d = max_degree_spanning_tree(g);
        for (const auto* c : {&r, &s, &d}) CHECK(is_subgraph(c->tree, g));
        CHECK(oracle::radius(n, edge_list(r.tree)) == oracle::radius(n, el));
        CHECK(oracle::min_status(n, edge_list(s.tree)) == oracle::min_status(n, el));
        CHECK(oracle::max_degree(n, edge_list(d.tree)) == oracle::max_degree(n, el));
        CHECK(r.witness_vertex.has_value());
    }
}

TEST_CASE("graph bound checks") {
    auto b = graph_bounds_check(build_balanced(10, 3));
    CHECK(b.radius == b.radius_lo);
    CHECK(b.status == b.status_lo);
    CHECK(b.balanced_spanning == Containment::Yes);
    CHECK(b.balanced_radius_ok == true);
    CHECK(b.all_ok());

    auto s = graph_bounds_check(build_s_comet(12, 9));
    CHECK(s.status_at_upper);
    CHECK(s.upper_is_broom == true);
    CHECK(s.radius_at_upper);
    CHECK(s.upper_is_extremal == true);
    CHECK(s.balanced_spanning == Containment::No);

    auto k = graph_bounds_check(complete(5));
    CHECK(k.balanced_spanning == Containment::Unknown);
    CHECK_FALSE(k.upper_is_broom.has_value());
    CHECK(k.all_ok());

    try {
        graph_bounds_check(parse_edge_list("0 1"));
        FAIL("expected InvalidParams");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidParams);
    }

    for (int i = 0; i < 300; ++i) {
        int n = 3 + i % 10;
        std::int64_t cap = std::int64_t(n) * (n - 1) / 2 - (n - 1);
        Graph g = random_connected_graph(n, (i * 13) % (cap + 1), mix_seed(8, i));
        CHECK(graph_bounds_check(g).all_ok());
    }
}
