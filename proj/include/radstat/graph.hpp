#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radstat/error.hpp"

namespace radstat {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple, undirected, connected graph on the dense vertex ids 0..n-1.
///
/// Construction validates the invariants (no loops, no parallel edges,
/// connected); the object is immutable afterwards. Neighbor lists are sorted
/// ascending and the edge list is sorted by (min, max), so iteration order is
/// deterministic.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }
    bool is_tree() const noexcept { return edges_.size() + 1 == static_cast<std::size_t>(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

protected:
    void check_vertex(Vertex v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<Vertex> adjacency_;
};

/// A Graph with exactly n-1 edges.
class Tree : public Graph {
public:
    Tree(int n, std::vector<Edge> edges);
    explicit Tree(Graph g);
};

/// Row-major n x n hop-count matrix.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    int order() const noexcept { return n_; }
    int operator()(Vertex a, Vertex b) const { return d_[static_cast<std::size_t>(a) * n_ + b]; }
    int& operator()(Vertex a, Vertex b) { return d_[static_cast<std::size_t>(a) * n_ + b]; }
    std::span<const int> row(Vertex a) const {
        return {d_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
    }

private:
    int n_;
    std::vector<int> d_;
};

// Edge-list text: one "u v" pair per line, '#' comments and blank lines
// ignored, LF or CRLF. Empty input is the single-vertex graph.
Graph parse_edge_list(std::string_view text);
Tree parse_tree(std::string_view text);

// "u v\n" per edge in canonical order.
std::string to_edge_list(const Graph& g);
// Single line "u v;u v;..." used by the enumerator stream and counterexamples.
std::string to_edge_line(const Graph& g);
// `graph G {` ... `}` with one "  u -- v;" line per edge.
std::string to_dot(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, Vertex source);
DistanceMatrix all_pairs_distances(const Graph& g);

/// Degree-1 vertices in ascending order. Throws SingletonTree for n = 1.
std::vector<Vertex> leaves(const Tree& t);
int max_degree(const Graph& g);

/// Vertices of a longest path, endpoint to endpoint.
std::vector<Vertex> longest_path(const Tree& t);

/// Deletes a leaf and renumbers the vertices above it down by one.
Tree remove_leaf(const Tree& t, Vertex leaf);

/// Applies `perm` (old id -> new id) to every vertex.
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Tree relabel(const Tree& t, std::span<const Vertex> perm);

}  // namespace radstat
