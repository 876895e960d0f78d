#include "doctest.h"

#include "radstat/serialize.hpp"
#include "radstat/verify.hpp"

using namespace radstat;

namespace {

VerifyOptions small(int n_max, int jobs = 1) {
    VerifyOptions o;
    o.n_max = n_max;
    o.jobs = jobs;
    o.graphs_per_order = 60;
    return o;
}

std::size_t failures(const std::vector<VerificationReport>& rs, TheoremId id) {
    for (const auto& r : rs)
        if (r.theorem == id) return r.counterexamples.size();
    return 0;
}

}  // namespace

TEST_CASE("theorem names") {
    for (TheoremId id : kAllTheorems) CHECK(parse_theorem(theorem_name(id)) == id);
    CHECK(parse_theorem("zelinka") == TheoremId::Zelinka);
    CHECK(parse_theorem("GRAPHSTATUS") == TheoremId::GraphStatus);
    CHECK_FALSE(parse_theorem("Fermat").has_value());
}

TEST_CASE("verify_all passes at n_max = 8") {
    auto reports = verify_all(small(8));
    REQUIRE(reports.size() == 12);
    for (const auto& r : reports) {
        CAPTURE(theorem_name(r.theorem));
        CHECK(r.passed());
        CHECK(r.trees_examined > 0);
        CHECK(r.n_max == 8);
    }
}

TEST_CASE("examined counts follow the enumeration") {
    auto z = verify(TheoremId::Zelinka, small(10));
    CHECK(z.n_min == 1);
    CHECK(z.trees_examined == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
    auto s = verify(TheoremId::StatusLower, small(10));
    CHECK(s.n_min == 3);
    CHECK(s.trees_examined == 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
    auto p = verify(TheoremId::Prop1, small(6));
    CHECK(p.moves_examined > 0);
    auto g = verify(TheoremId::GraphRadius, small(6));
    CHECK(g.trees_examined == 3 * 60);
}

TEST_CASE("shared pass equals per-theorem runs") {
    auto all = verify_all(small(7));
    for (const auto& r : all) {
        auto single = verify(r.theorem, small(7));
        CHECK(dump(to_json(single, false)) == dump(to_json(r, false)));
    }
}

TEST_CASE("reports are reproducible and independent of the job count") {
    auto a = dump(to_json(verify_all(small(8, 1)), false));
    auto b = dump(to_json(verify_all(small(8, 1)), false));
    CHECK(a == b);
    auto c = verify_all(small(8, 3));
    for (auto& r : c) r.jobs = 1;
    CHECK(dump(to_json(c, false)) == a);
}

TEST_CASE("injected faults produce counterexamples") {
    auto o = small(7);
    o.mutation = Mutation::RadiusUpperOffByOne;
    auto r = verify_all(o);
    CHECK(failures(r, TheoremId::RadiusUpper) > 0);
    CHECK(failures(r, TheoremId::StatusLower) == 0);

    o.mutation = Mutation::StatusLowerOffByOne;
    CHECK(!verify(TheoremId::StatusLower, o).passed());

    o.mutation = Mutation::PredictionIgnoresMove;
    auto p = verify(TheoremId::Prop1, o);
    REQUIRE_FALSE(p.passed());
    const auto& c = p.counterexamples.front();
    CHECK(c.n >= 3);
    CHECK_FALSE(c.edges.empty());
    CHECK(c.details.find("predicted") != std::string::npos);
    CHECK(std::is_sorted(p.counterexamples.begin(), p.counterexamples.end()));
}

TEST_CASE("option validation") {
    auto code = [](VerifyOptions o) {
        try {
            verify(TheoremId::Zelinka, o);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::FormulaMismatch;
    };
    auto o = small(21);
    CHECK(code(o) == Errc::OrderTooLarge);
    o = small(5, 0);
    CHECK(code(o) == Errc::InvalidParams);
    o = small(0);
    CHECK(code(o) == Errc::InvalidParams);
}

TEST_CASE("report JSON layout") {
    auto r = verify(TheoremId::Lemma1, small(4));
    auto j = to_json(r, true);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"theorem", "n_min", "n_max", "examined", "moves_examined", "jobs",
                                           "passed", "counterexamples", "elapsed_ms"});
    CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
}
