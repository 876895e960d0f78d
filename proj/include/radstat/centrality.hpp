#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radstat/graph.hpp"

namespace radstat {

using Status = std::int64_t;

struct StatusResult {
    Status status = 0;
    std::vector<Vertex> medians;  // ascending
};

struct RadiusResult {
    int radius = 0;
    std::vector<Vertex> center;  // ascending
};

struct CentralityReport {
    int n = 0;
    std::vector<Status> vertex_status;
    std::vector<int> eccentricity;
    Status status = 0;
    int radius = 0;
    std::vector<Vertex> medians;
    std::vector<Vertex> center;
    // Present only when the input is a tree.
    std::optional<std::vector<Vertex>> centroid;
    std::optional<std::vector<int>> branch_weight;
};

/// Sum of BFS distances from x, self-term included.
Status status_of_vertex(const Graph& g, Vertex x);

/// Status of every vertex by one BFS per source. Works on any graph and is
/// the oracle for tree_statuses.
std::vector<Status> bfs_statuses(const Graph& g);

/// Status of every vertex of a tree in O(n): subtree sizes, then
/// s(child) = s(parent) + n - 2 * size(child).
std::vector<Status> tree_statuses(const Tree& t);

/// Minimum status and the sorted set of medians. Trees take the linear path.
StatusResult graph_status(const Graph& g);
StatusResult graph_status(const Tree& t);

int eccentricity(const Graph& g, Vertex x);
std::vector<int> eccentricities(const Graph& g);
RadiusResult radius(const Graph& g);

/// Largest branch at x, counted without x. Zero for the one-vertex tree.
int branch_weight(const Tree& t, Vertex x);
std::vector<int> branch_weights(const Tree& t);

/// Vertices of minimum branch weight, ascending; one vertex or two adjacent ones.
std::vector<Vertex> centroid(const Tree& t);

CentralityReport analyze(const Graph& g);

}  // namespace radstat
