#include "radstat/spanning.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "radstat/enumerate.hpp"
#include "radstat/extremal.hpp"

namespace radstat {

std::string_view preserved_name(Preserved p) {
    switch (p) {
    case Preserved::Radius: return "radius";
    case Preserved::Status: return "status";
    case Preserved::MaxDegree: return "maxdegree";
    }
    return "unknown";
}

std::optional<Preserved> parse_preserved(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Preserved p : {Preserved::Radius, Preserved::Status, Preserved::MaxDegree})
        if (lower == preserved_name(p)) return p;
    return std::nullopt;
}

std::string_view containment_name(Containment c) {
    switch (c) {
    case Containment::Yes: return "yes";
    case Containment::No: return "no";
    case Containment::Unknown: return "unknown";
    }
    return "unknown";
}

Tree bfs_tree(const Graph& g, Vertex root) {
    if (!g.contains(root))
        throw Error(Errc::VertexOutOfRange, "root " + std::to_string(root) + " outside 0.." +
                                                std::to_string(g.order() - 1));
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> queue{root};
    std::vector<Edge> edges;
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = true;
            edges.emplace_back(v, w);
            queue.push_back(w);
        }
    }
    return Tree(g.order(), std::move(edges));
}

SpanningCertificate radius_preserving_spanning_tree(const Graph& g) {
    Vertex c = radius(g).center.front();
    return {bfs_tree(g, c), Preserved::Radius, c};
}

SpanningCertificate status_preserving_spanning_tree(const Graph& g) {
    Vertex m = graph_status(g).medians.front();
    return {bfs_tree(g, m), Preserved::Status, m};
}

SpanningCertificate max_degree_spanning_tree(const Graph& g) {
    const int k = max_degree(g);
    Vertex hub = 0;
    while (g.degree(hub) != k) ++hub;
    return {bfs_tree(g, hub), Preserved::MaxDegree, hub};
}

SpanningCertificate spanning_tree(const Graph& g, Preserved p) {
    switch (p) {
    case Preserved::Radius: return radius_preserving_spanning_tree(g);
    case Preserved::Status: return status_preserving_spanning_tree(g);
    case Preserved::MaxDegree: return max_degree_spanning_tree(g);
    }
    throw Error(Errc::InvalidParams, "unknown preservation target");
}

bool GraphBoundsReport::all_ok() const {
    return radius_lower_ok && radius_upper_ok && status_lower_ok && status_upper_ok &&
           balanced_radius_ok.value_or(true) && balanced_status_ok.value_or(true) && upper_is_broom.value_or(true) &&
           upper_is_extremal.value_or(true);
}

GraphBoundsReport graph_bounds_check(const Graph& g) {
    GraphBoundsReport r;
    r.n = g.order();
    r.k = max_degree(g);
    if (r.k < 2)
        throw Error(Errc::InvalidParams, "bounds need maximum degree at least 2, got " + std::to_string(r.k));
    r.radius = radius(g).radius;
    r.status = graph_status(g).status;
    r.radius_lo = radius_lower_bound(r.n, r.k);
    r.radius_hi = radius(build_s_comet(r.n, r.k)).radius;
    auto sb = status_bounds(r.n, r.k);
    r.status_lo = sb.lo;
    r.status_hi = sb.hi;

    r.radius_lower_ok = r.radius_lo <= r.radius;
    r.radius_upper_ok = r.radius <= r.radius_hi;
    r.status_lower_ok = r.status_lo <= r.status;
    r.status_upper_ok = r.status <= r.status_hi;
    r.radius_at_upper = r.radius == r.radius_hi;
    r.status_at_upper = r.status == r.status_hi;

    if (g.is_tree()) {
        Tree t(g);
        bool balanced = is_k_balanced(t).has_value();
        r.balanced_spanning = balanced ? Containment::Yes : Containment::No;
        if (balanced) r.balanced_radius_ok = r.radius == r.radius_lo;
        // Status equality holds exactly for k-balanced trees.
        r.balanced_status_ok = balanced == (r.status == r.status_lo);
        if (r.status_at_upper) r.upper_is_broom = is_comet(t, Family::SComet);
        if (r.radius_at_upper) {
            bool even = (r.n - r.k + 1) % 2 == 0;
            r.upper_is_extremal = is_comet(t, even ? Family::CStar : Family::Comet);
        }
    }
    return r;
}

}  // namespace radstat
