#include "radstat/serialize.hpp"

namespace radstat {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const CentralityReport& r) {
    Json j;
    j["n"] = r.n;
    j["radius"] = r.radius;
    j["status"] = r.status;
    j["center"] = r.center;
    j["medians"] = r.medians;
    j["centroid"] = optional_json(r.centroid);
    Json per = Json::array();
    for (int v = 0; v < r.n; ++v) {
        Json row;
        row["v"] = v;
        row["status"] = r.vertex_status[v];
        row["ecc"] = r.eccentricity[v];
        row["branch_weight"] = r.branch_weight ? Json((*r.branch_weight)[v]) : Json(nullptr);
        per.push_back(std::move(row));
    }
    j["per_vertex"] = std::move(per);
    return j;
}

Json to_json(const std::vector<TraceStep>& trace) {
    Json arr = Json::array();
    for (const auto& s : trace) {
        Json step;
        step["b"] = s.move.leaf;
        step["u"] = s.move.target;
        step["delta_status"] = s.delta_status;
        step["case_tag"] = std::string(case_name(s.case_tag));
        arr.push_back(std::move(step));
    }
    return arr;
}

Json to_json(const SpanningCertificate& c) {
    Json j;
    j["preserved"] = std::string(preserved_name(c.preserved));
    j["root"] = optional_json(c.witness_vertex);
    j["n"] = c.tree.order();
    Json edges = Json::array();
    for (const Edge& e : c.tree.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    j["radius"] = radius(c.tree).radius;
    j["status"] = graph_status(c.tree).status;
    j["max_degree"] = max_degree(c.tree);
    return j;
}

Json to_json(const GraphBoundsReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["radius"] = {{"value", r.radius}, {"lower", r.radius_lo}, {"upper", r.radius_hi},
                   {"lower_ok", r.radius_lower_ok}, {"upper_ok", r.radius_upper_ok}};
    j["status"] = {{"value", r.status}, {"lower", r.status_lo}, {"upper", r.status_hi},
                   {"lower_ok", r.status_lower_ok}, {"upper_ok", r.status_upper_ok}};
    j["balanced_spanning"] = std::string(containment_name(r.balanced_spanning));
    j["balanced_radius_ok"] = optional_json(r.balanced_radius_ok);
    j["balanced_status_ok"] = optional_json(r.balanced_status_ok);
    j["radius_at_upper"] = r.radius_at_upper;
    j["upper_is_extremal"] = optional_json(r.upper_is_extremal);
    j["status_at_upper"] = r.status_at_upper;
    j["upper_is_broom"] = optional_json(r.upper_is_broom);
    j["all_ok"] = r.all_ok();
    return j;
}

Json to_json(const VerificationReport& r, bool include_timing) {
    Json j;
    j["theorem"] = std::string(theorem_name(r.theorem));
    j["n_min"] = r.n_min;
    j["n_max"] = r.n_max;
    j["examined"] = r.trees_examined;
    j["moves_examined"] = r.moves_examined;
    j["jobs"] = r.jobs;
    j["passed"] = r.passed();
    Json cex = Json::array();
    for (const auto& c : r.counterexamples) cex.push_back({{"n", c.n}, {"edges", c.edges}, {"details", c.details}});
    j["counterexamples"] = std::move(cex);
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Json to_json(const std::vector<VerificationReport>& reports, bool include_timing) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
    return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace radstat
