#include "doctest.h"

#include "radstat/centrality.hpp"
#include "radstat/enumerate.hpp"
#include "radstat/extremal.hpp"
#include "radstat/transform.hpp"
#include "support.hpp"

using namespace radstat;
using testing_support::edge_list;

namespace {

const Tree kP5 = parse_tree("0 1\n1 2\n2 3\n3 4");

Errc code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::InvalidParams;
}

bool contains(const std::vector<int>& vs, int v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

}  // namespace

TEST_CASE("relocate_leaf swaps one edge") {
    Tree t = relocate_leaf(kP5, {4, 1});
    CHECK(t == parse_tree("0 1\n1 2\n2 3\n1 4"));

    Tree star = parse_tree("0 1\n0 2\n0 3\n0 4\n0 5");
    Tree moved = relocate_leaf(star, {1, 2});
    CHECK(are_isomorphic(moved, build_s_comet(6, 4)));
}

TEST_CASE("validate_move rejects invalid moves") {
    CHECK(code_of([] { validate_move(kP5, {2, 0}); }) == Errc::NotALeaf);
    CHECK(code_of([] { validate_move(kP5, {4, 4}); }) == Errc::TargetIsSelf);
    CHECK(code_of([] { validate_move(kP5, {4, 3}); }) == Errc::TargetIsNeighbor);
    CHECK(code_of([] { validate_move(kP5, {4, 9}); }) == Errc::VertexOutOfRange);
    CHECK(code_of([] { validate_move(kP5, {-1, 0}); }) == Errc::VertexOutOfRange);
    CHECK(code_of([] { RelocationAnalyzer(kP5, 1); }) == Errc::NotACentroid);
}

TEST_CASE("prediction on the path of order 5") {
    RelocationAnalyzer an(kP5, 2);
    auto p = an.predict({4, 1});
    CHECK(p.vertex == 1);
    CHECK(p.case_tag == CentroidCase::LargeT1);
    auto sz = an.sizes({4, 1});
    CHECK(sz.target_branch == 3);
    CHECK(sz.leaf_branch == 3);
    CHECK(sz.rest == 1);
    CHECK(centroid(relocate_leaf(kP5, {4, 1})) == std::vector<Vertex>{1});
    CHECK(an.status_delta({4, 1}) == -1);

    auto q = an.predict({0, 2});
    CHECK(q.vertex == 2);
    CHECK(q.case_tag == CentroidCase::AtCentroid);
    CHECK(an.status_delta({0, 2}) == -1);
    CHECK(graph_status(relocate_leaf(kP5, {0, 2})).status == 5);

    auto ctx = an.context({4, 1});
    CHECK(ctx.target_branch == std::vector<Vertex>{0, 1, 2});
    CHECK(ctx.leaf_branch == std::vector<Vertex>{2, 3, 4});
    CHECK(ctx.rest == std::vector<Vertex>{2});
    CHECK_FALSE(ctx.same_branch());
    CHECK(code_of([&] { an.context({0, 2}); }) == Errc::InvalidParams);
}

TEST_CASE("prediction and status delta are exact for every move on trees up to 8") {
    std::size_t moves = 0;
    for (const Tree& t : testing_support::trees_up_to(3, 8)) {
        const int n = t.order();
        const Status before = oracle::min_status(n, edge_list(t));
        for (Vertex x : oracle::centroid(n, edge_list(t))) {
            RelocationAnalyzer an(t, x);
            for (Vertex b = 0; b < n; ++b) {
                if (t.degree(b) != 1) continue;
                for (Vertex u = 0; u < n; ++u) {
                    if (u == b || t.has_edge(u, b)) continue;
                    RelocationMove m{b, u};
                    Tree after = relocate_leaf(t, m);
                    auto el = edge_list(after);
                    auto p = an.predict(m);
                    CAPTURE(to_edge_line(t));
                    CAPTURE(x);
                    CAPTURE(b);
                    CAPTURE(u);
                    CHECK(contains(oracle::centroid(n, el), p.vertex));
                    CHECK(an.status_delta(m) == oracle::min_status(n, el) - before);
                    CHECK(status_delta(t, x, m) == an.status_delta(m));
                    CHECK(predict_centroid(t, x, m).vertex == p.vertex);
                    if (u == x) CHECK(p.case_tag == CentroidCase::AtCentroid);
                    else if (an.branch_root(u) == an.branch_root(b)) {
                        CHECK(p.case_tag == CentroidCase::SameBranch);
                        CHECK(p.vertex == x);
                    }
                    ++moves;
                }
            }
        }
    }
    CHECK(moves > 1000);
}

TEST_CASE("minimize_status reaches the balanced status with a falling trace") {
    Tree s = build_s_comet(10, 3);
    auto r = minimize_status(s);
    CHECK(graph_status(r.tree).status == 15);

    CHECK(minimize_status(build_balanced(10, 3)).trace.empty());
    CHECK(minimize_status(parse_tree("0 1\n1 2\n2 3\n3 4\n4 5")).trace.empty());
    CHECK(code_of([] { minimize_status(parse_tree("0 1")); }) == Errc::InvalidParams);

    for (const Tree& t : testing_support::trees_up_to(3, 9)) {
        const int n = t.order();
        const int k = max_degree(t);
        auto res = minimize_status(t);
        Status s0 = graph_status(t).status;
        Status sum = 0;
        for (const auto& step : res.trace) {
            CHECK(step.delta_status < 0);
            sum += step.delta_status;
        }
        CHECK(graph_status(res.tree).status == s0 + sum);
        CHECK(oracle::min_status(n, edge_list(res.tree)) == status_bounds(n, k).lo);
        CHECK(max_degree(res.tree) == k);
        CHECK(oracle::is_k_balanced(n, edge_list(res.tree)));
    }
}

TEST_CASE("maximize_status reaches the broom with a rising trace") {
    auto r = maximize_status(build_balanced(10, 3));
    CHECK(are_isomorphic(r.tree, build_s_comet(10, 3)));
    CHECK(maximize_status(build_s_comet(9, 4)).trace.empty());

    for (const Tree& t : testing_support::trees_up_to(3, 9)) {
        const int n = t.order();
        const int k = max_degree(t);
        auto res = maximize_status(t);
        Status s0 = graph_status(t).status;
        Status sum = 0;
        for (const auto& step : res.trace) {
            CHECK(step.delta_status > 0);
            sum += step.delta_status;
        }
        CHECK(graph_status(res.tree).status == s0 + sum);
        CHECK(oracle::min_status(n, edge_list(res.tree)) == status_bounds(n, k).hi);
        CHECK(are_isomorphic(res.tree, build_s_comet(n, k)));
    }
}

TEST_CASE("radius reduction moves never raise the radius") {
    for (const Tree& t : testing_support::trees_up_to(3, 10)) {
        const int r = radius(t).radius;
        const int k = max_degree(t);
        auto moves = radius_reduction_moves(t);
        CHECK(std::is_sorted(moves.begin(), moves.end()));
        CHECK(std::adjacent_find(moves.begin(), moves.end()) == moves.end());
        for (const auto& m : moves) {
            Tree after = relocate_leaf(t, m);
            CHECK(radius(after).radius <= r);
            CHECK(max_degree(after) == k);
        }
    }
}

TEST_CASE("case names") {
    CHECK(case_name(CentroidCase::SameBranch) == "SameBranch");
    CHECK(case_name(CentroidCase::SmallT1) == "SmallT1");
    CHECK(case_name(CentroidCase::LargeT1) == "LargeT1");
    CHECK(case_name(CentroidCase::AtCentroid) == "AtCentroid");
}
