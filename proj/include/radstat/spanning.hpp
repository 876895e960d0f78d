#pragma once

#include <optional>
#include <string_view>

#include "radstat/centrality.hpp"
#include "radstat/graph.hpp"

namespace radstat {

enum class Preserved { Radius, Status, MaxDegree };

std::string_view preserved_name(Preserved p);
std::optional<Preserved> parse_preserved(std::string_view name);

struct SpanningCertificate {
    Tree tree;
    Preserved preserved;
    std::optional<Vertex> witness_vertex;  // BFS root
};

/// BFS tree of g rooted at `root`; neighbors are scanned in ascending order.
Tree bfs_tree(const Graph& g, Vertex root);

/// BFS tree from the smallest central vertex: distances from it are kept, so
/// rad(tree) = rad(g).
SpanningCertificate radius_preserving_spanning_tree(const Graph& g);

/// Shortest-path tree from the smallest median: its status is kept and no
/// status can drop, so s(tree) = s(g).
SpanningCertificate status_preserving_spanning_tree(const Graph& g);

/// BFS tree from the smallest vertex of maximum degree, which keeps all of its
/// edges, so max_degree(tree) = max_degree(g).
SpanningCertificate max_degree_spanning_tree(const Graph& g);

SpanningCertificate spanning_tree(const Graph& g, Preserved p);

enum class Containment { Yes, No, Unknown };
std::string_view containment_name(Containment c);

struct GraphBoundsReport {
    int n = 0;
    int k = 0;
    int radius = 0;
    Status status = 0;
    int radius_lo = 0;  // rad(B(n,k))
    int radius_hi = 0;  // rad(S(n,k))
    Status status_lo = 0;
    Status status_hi = 0;

    bool radius_lower_ok = false;
    bool radius_upper_ok = false;
    bool status_lower_ok = false;
    bool status_upper_ok = false;

    // Whether g has a k-balanced spanning tree. Only decided when g is itself
    // a tree; general containment is left Unknown.
    Containment balanced_spanning = Containment::Unknown;
    // When containment is decided: rad(g) = rad(B) and s(g) = s(B) agree with it.
    std::optional<bool> balanced_radius_ok;
    std::optional<bool> balanced_status_ok;
    // s(g) = s(S(n,k)): g should contain a broom; decided for trees only.
    bool status_at_upper = false;
    std::optional<bool> upper_is_broom;
    bool radius_at_upper = false;
    // rad(g) at the upper bound: a tree should be a comet (n-k+1 odd) or a
    // C* tree (n-k+1 even); decided for trees only.
    std::optional<bool> upper_is_extremal;

    bool all_ok() const;
};

/// Throws InvalidParams when max_degree(g) < 2 (n <= 2).
GraphBoundsReport graph_bounds_check(const Graph& g);

}  // namespace radstat
