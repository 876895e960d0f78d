#include "radstat/extremal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <tuple>

#include "radstat/enumerate.hpp"

namespace radstat {

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Balanced: return "balanced";
    case Family::Comet: return "comet";
    case Family::SComet: return "scomet";
    case Family::CStar: return "cstar";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Family f : {Family::Balanced, Family::Comet, Family::SComet, Family::CStar})
        if (lower == family_name(f)) return f;
    return std::nullopt;
}

namespace {

void require_degree_range(int n, int k, const char* what) {
    if (k < 2 || k > n - 1)
        throw Error(Errc::InvalidParams, std::string(what) + ": need 2 <= k <= n-1, got n=" +
                                             std::to_string(n) + " k=" + std::to_string(k));
}

Tree star(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Tree(n, std::move(edges));
}

// Shape of a balanced tree: full levels, then `leftover` vertices spread over
// the `parents` vertices of the deepest full level, at most `capacity` each.
struct BalancedShape {
    std::vector<int> level_sizes;  // full levels only
    int leftover = 0;
    int parents = 0;
    int capacity = 0;
};

BalancedShape balanced_shape(int n, int k) {
    BalancedShape s;
    s.level_sizes.push_back(1);
    int placed = 1;
    while (true) {
        int last = s.level_sizes.back();
        int cap = s.level_sizes.size() == 1 ? k : last * (k - 1);
        if (placed + cap > n) {
            s.leftover = n - placed;
            s.parents = last;
            s.capacity = s.level_sizes.size() == 1 ? k : k - 1;
            return s;
        }
        s.level_sizes.push_back(cap);
        placed += cap;
        if (placed == n) return s;
    }
}

// Number of non-increasing sequences of at most `parts` entries from
// [1, cap] summing to `total`.
std::int64_t count_partitions(int total, int parts, int cap, std::map<std::tuple<int, int, int>, std::int64_t>& memo) {
    if (total == 0) return 1;
    if (parts == 0 || cap == 0) return 0;
    auto key = std::make_tuple(total, parts, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t count = 0;
    for (int first = std::min(cap, total); first >= 1; --first)
        count += count_partitions(total - first, parts - 1, first, memo);
    memo.emplace(key, count);
    return count;
}

// The index-th partition in reverse lexicographic order; index 0 is greedy.
std::vector<int> nth_partition(int total, int parts, int cap, std::int64_t index,
                               std::map<std::tuple<int, int, int>, std::int64_t>& memo) {
    std::vector<int> out;
    while (total > 0) {
        for (int first = std::min(cap, total); first >= 1; --first) {
            std::int64_t block = count_partitions(total - first, parts - 1, first, memo);
            if (index < block) {
                out.push_back(first);
                total -= first;
                --parts;
                cap = first;
                break;
            }
            index -= block;
        }
    }
    return out;
}

}  // namespace

std::int64_t balanced_variant_count(int n, int k) {
    require_degree_range(n, k, "balanced");
    auto s = balanced_shape(n, k);
    if (s.leftover == 0) return 1;
    std::map<std::tuple<int, int, int>, std::int64_t> memo;
    return count_partitions(s.leftover, s.parents, s.capacity, memo);
}

Tree build_balanced(int n, int k, int variant) {
    require_degree_range(n, k, "balanced");
    auto s = balanced_shape(n, k);
    std::vector<int> spread;
    if (s.leftover > 0) {
        std::map<std::tuple<int, int, int>, std::int64_t> memo;
        std::int64_t count = count_partitions(s.leftover, s.parents, s.capacity, memo);
        if (variant < 0 || variant >= count)
            throw Error(Errc::InvalidVariant, "balanced(" + std::to_string(n) + "," + std::to_string(k) +
                                                  ") has " + std::to_string(count) + " variants");
        spread = nth_partition(s.leftover, s.parents, s.capacity, variant, memo);
    } else if (variant != 0) {
        throw Error(Errc::InvalidVariant, "balanced(" + std::to_string(n) + "," + std::to_string(k) +
                                              ") has a single variant");
    }

    std::vector<Edge> edges;
    Vertex level_begin = 0;
    Vertex next = 1;
    for (std::size_t lv = 0; lv + 1 < s.level_sizes.size(); ++lv) {
        int per_parent = lv == 0 ? k : k - 1;
        for (Vertex p = level_begin; p < level_begin + s.level_sizes[lv]; ++p)
            for (int c = 0; c < per_parent; ++c) edges.emplace_back(p, next++);
        level_begin += s.level_sizes[lv];
    }
    for (std::size_t i = 0; i < spread.size(); ++i)
        for (int c = 0; c < spread[i]; ++c) edges.emplace_back(level_begin + static_cast<Vertex>(i), next++);
    return Tree(n, std::move(edges));
}

Tree build_s_comet(int n, int k) {
    if (n < 3) throw Error(Errc::InvalidParams, "comets need n >= 3");
    require_degree_range(n, k, "scomet");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < k; ++v) edges.emplace_back(0, v);
    Vertex prev = 0;
    for (Vertex v = k; v < n; ++v) {
        edges.emplace_back(prev, v);
        prev = v;
    }
    return Tree(n, std::move(edges));
}

Tree build_comet(int n, int k, int hub_position) {
    if (n < 3) throw Error(Errc::InvalidParams, "comets need n >= 3");
    require_degree_range(n, k, "comet");
    const int spine_len = n - k + 1;
    if (hub_position < 1 || hub_position > spine_len - 1)
        throw Error(Errc::InvalidHubPosition, "hub position " + std::to_string(hub_position) +
                                                  " must lie in 1.." + std::to_string(spine_len - 1));
    std::vector<Edge> edges;
    for (Vertex v = 0; v < spine_len; ++v) edges.emplace_back(v, v + 1);
    for (Vertex v = spine_len + 1; v < n; ++v) edges.emplace_back(hub_position, v);
    return Tree(n, std::move(edges));
}

Tree build_c_star(int n, int k, int attach) {
    if (n < 3) throw Error(Errc::InvalidParams, "comets need n >= 3");
    require_degree_range(n, k, "cstar");
    if (k == n - 1) return star(n);
    Tree base = build_comet(n - 1, k, (n - k) / 2);
    if (!base.contains(attach) || base.degree(attach) >= k)
        throw Error(Errc::InvalidVariant, "cstar attachment vertex " + std::to_string(attach) +
                                              " must exist in the base comet with degree below " +
                                              std::to_string(k));
    std::vector<Edge> edges = base.edges();
    edges.emplace_back(attach, n - 1);
    return Tree(n, std::move(edges));
}

Tree build(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::Balanced: return build_balanced(spec.n, spec.k, spec.variant);
    case Family::Comet: return build_comet(spec.n, spec.k, spec.variant);
    case Family::SComet: return build_s_comet(spec.n, spec.k);
    case Family::CStar: return build_c_star(spec.n, spec.k, spec.variant);
    }
    throw Error(Errc::InvalidParams, "unknown family");
}

std::optional<Vertex> is_k_balanced(const Tree& t) {
    const int k = max_degree(t);
    for (Vertex x = 0; x < t.order(); ++x) {
        auto d = bfs_distances(t, x);
        int ecc = *std::max_element(d.begin(), d.end());
        bool ok = true;
        for (Vertex z = 0; z < t.order() && ok; ++z)
            if (d[z] <= ecc - 2 && t.degree(z) != k) ok = false;
        if (ok) return x;
    }
    return std::nullopt;
}

bool is_comet(const Tree& t, Family kind) {
    const int n = t.order();
    if (n < 3) return false;
    const int k = max_degree(t);
    switch (kind) {
    case Family::Comet: {
        // No path is longer than n-k+1 (a degree-k vertex uses k-2 edges off
        // any path through it), so only a longest path needs checking.
        auto path = longest_path(t);
        if (static_cast<int>(path.size()) - 1 != n - k + 1) return false;
        return std::any_of(path.begin(), path.end(), [&](Vertex v) { return t.degree(v) == k; });
    }
    case Family::SComet:
        return canonical_code(t) == canonical_code(build_s_comet(n, k));
    case Family::CStar: {
        if (k == n - 1) return true;
        for (Vertex leaf : leaves(t)) {
            Tree rest = remove_leaf(t, leaf);
            if (max_degree(rest) == k && is_comet(rest, Family::Comet)) return true;
        }
        return false;
    }
    case Family::Balanced:
        return is_k_balanced(t).has_value();
    }
    return false;
}

int radius_upper_bound(int n, int k) {
    require_degree_range(n, k, "radius_upper_bound");
    return (n - k + 2) / 2;
}

int radius_lower_bound(int n, int k) { return radius(build_balanced(n, k, 0)).radius; }

StatusBounds status_bounds(int n, int k) {
    require_degree_range(n, k, "status_bounds");
    return {graph_status(build_balanced(n, k, 0)).status, graph_status(build_s_comet(n, k)).status};
}

}  // namespace radstat
