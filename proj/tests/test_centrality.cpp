#include "doctest.h"

#include "radstat/centrality.hpp"
#include "radstat/extremal.hpp"
#include "support.hpp"

using namespace radstat;
using testing_support::edge_list;

namespace {

const Tree kP4 = parse_tree("0 1\n1 2\n2 3");
const Tree kP5 = parse_tree("0 1\n1 2\n2 3\n3 4");

Tree star(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.emplace_back(0, i);
    return Tree(n, es);
}

}  // namespace

TEST_CASE("status of single vertices") {
    CHECK(status_of_vertex(kP5, 2) == 6);
    CHECK(status_of_vertex(star(10), 0) == 9);

    Tree s = build_s_comet(12, 9);
    CHECK(status_of_vertex(s, 0) == oracle::statuses(12, edge_list(s))[0]);
    CHECK(status_of_vertex(s, 0) == 14);
}

TEST_CASE("graph status, radius and centroid on small trees") {
    auto p5 = graph_status(kP5);
    CHECK(p5.status == 6);
    CHECK(p5.medians == std::vector<Vertex>{2});
    auto p4 = graph_status(kP4);
    CHECK(p4.status == 4);
    CHECK(p4.medians == std::vector<Vertex>{1, 2});

    CHECK(radius(kP5).radius == 2);
    CHECK(radius(kP5).center == std::vector<Vertex>{2});
    CHECK(radius(star(10)).radius == 1);
    CHECK(radius(star(10)).center == std::vector<Vertex>{0});

    CHECK(branch_weight(kP5, 2) == 2);
    CHECK(branch_weight(kP5, 0) == 4);
    CHECK(branch_weight(parse_tree(""), 0) == 0);
    CHECK_THROWS_AS(branch_weight(kP5, 5), Error);

    CHECK(centroid(kP5) == std::vector<Vertex>{2});
    CHECK(centroid(kP4) == std::vector<Vertex>{1, 2});

    Tree b = build_balanced(10, 3);
    CHECK(graph_status(b).status == 15);
    CHECK(graph_status(b).medians.size() == 1);
    CHECK(max_degree(b) == 3);
    CHECK(leaves(b).size() == 6);

    Tree s = build_s_comet(12, 9);
    CHECK(max_degree(s) == 9);
    CHECK(branch_weight(s, 0) == oracle::largest_component_without(12, edge_list(s), 0));
    CHECK(branch_weight(s, 0) == 3);
}

TEST_CASE("linear tree statuses match BFS and Floyd on every small tree") {
    for (const Tree& t : testing_support::trees_up_to(1, 10)) {
        auto expect = oracle::statuses(t.order(), edge_list(t));
        auto fast = tree_statuses(t);
        auto slow = bfs_statuses(t);
        CHECK(std::equal(fast.begin(), fast.end(), expect.begin(), expect.end()));
        CHECK(slow == fast);
    }
}

TEST_CASE("random large trees: reroot statuses equal BFS statuses") {
    Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        Tree t = random_tree(20 + 7 * i, rng);
        CHECK(tree_statuses(t) == bfs_statuses(t));
    }
}

TEST_CASE("centroid, branch weight and Zelinka on every small tree") {
    for (const Tree& t : testing_support::trees_up_to(1, 10)) {
        const int n = t.order();
        auto el = edge_list(t);
        auto c = centroid(t);
        CHECK(c == oracle::centroid(n, el));
        CHECK(c == oracle::medians(n, el));
        auto w = branch_weights(t);
        for (Vertex v = 0; v < n; ++v) {
            int expect = n == 1 ? 0 : oracle::largest_component_without(n, el, v);
            CHECK(w[v] == expect);
            CHECK(branch_weight(t, v) == expect);
            bool in_c = std::find(c.begin(), c.end(), v) != c.end();
            CHECK(in_c == (2 * w[v] <= n));
        }
        CHECK(c.size() <= 2);
        if (c.size() == 2) CHECK(t.has_edge(c[0], c[1]));
    }
}

TEST_CASE("analyze on graphs matches Floyd-Warshall and omits tree-only fields") {
    for (int i = 0; i < 150; ++i) {
        int n = 1 + i % 14;
        std::int64_t cap = std::int64_t(n) * (n - 1) / 2 - (n - 1);
        Graph g = random_connected_graph(n, (i * 3) % (cap + 1), mix_seed(21, i));
        auto el = edge_list(g);
        auto rep = analyze(g);
        CHECK(rep.n == n);
        CHECK(rep.status == oracle::min_status(n, el));
        CHECK(rep.radius == oracle::radius(n, el));
        CHECK(rep.medians == oracle::medians(n, el));
        CHECK(rep.centroid.has_value() == g.is_tree());
        CHECK(rep.branch_weight.has_value() == g.is_tree());
        auto s = oracle::statuses(n, el);
        CHECK(std::equal(rep.vertex_status.begin(), rep.vertex_status.end(), s.begin(), s.end()));
        CHECK(graph_status(g).status == rep.status);
    }
}
