#pragma once

#include <string_view>
#include <vector>

#include "radstat/centrality.hpp"
#include "radstat/graph.hpp"

namespace radstat {

/// Detach leaf `leaf` from its neighbor and attach it to `target`.
struct RelocationMove {
    Vertex leaf = 0;
    Vertex target = 0;

    friend bool operator==(const RelocationMove&, const RelocationMove&) = default;
    friend auto operator<=>(const RelocationMove&, const RelocationMove&) = default;
};

/// Branches at a centroid vertex x relative to a move with target != x.
/// Every vertex set contains x.
struct RelocationContext {
    Vertex centroid = 0;
    std::vector<Vertex> target_branch;  // branch at x containing the target
    std::vector<Vertex> leaf_branch;    // branch at x containing the leaf
    std::vector<Vertex> rest;           // the other branches, plus x

    bool same_branch() const { return target_branch == leaf_branch; }
};

enum class CentroidCase { SameBranch, SmallT1, LargeT1, AtCentroid };

std::string_view case_name(CentroidCase c);

struct CentroidPrediction {
    Vertex vertex = 0;
    CentroidCase case_tag = CentroidCase::SameBranch;
};

/// Throws NotALeaf, TargetIsSelf, TargetIsNeighbor or VertexOutOfRange.
void validate_move(const Tree& t, RelocationMove m);
Tree relocate_leaf(const Tree& t, RelocationMove m);

/// Precomputed view of a tree from one of its centroid vertices; answers
/// context/prediction/delta queries for many moves in O(1) each (context in
/// O(n)).
class RelocationAnalyzer {
public:
    /// Throws NotACentroid when x is not in centroid(t).
    RelocationAnalyzer(const Tree& t, Vertex x);

    const Tree& tree() const { return *tree_; }
    Vertex centroid_vertex() const { return x_; }
    int distance(Vertex v) const { return dist_[v]; }
    /// The neighbor of x whose branch holds v; -1 for x itself.
    Vertex branch_root(Vertex v) const { return branch_[v]; }
    /// Vertex count of the branch rooted at neighbor r, x included.
    int branch_size(Vertex r) const { return size_[r] + 1; }
    bool branch_is_path(Vertex r) const { return branch_path_[r]; }

    RelocationContext context(RelocationMove m) const;
    CentroidPrediction predict(RelocationMove m) const;
    /// s(after) - s(before) from the closed form belonging to predict(m)'s case.
    Status status_delta(RelocationMove m) const;

    // Sizes |T1|, |T2|, |S| for a move whose target is not x and lies in a
    // different branch from the leaf.
    struct Sizes {
        int target_branch;
        int leaf_branch;
        int rest;
    };
    Sizes sizes(RelocationMove m) const;

private:
    const Tree* tree_;
    Vertex x_;
    std::vector<int> dist_;
    std::vector<Vertex> branch_;
    std::vector<int> size_;  // subtree size below x, indexed by vertex
    std::vector<char> branch_path_;
};

RelocationContext relocation_context(const Tree& t, Vertex x, RelocationMove m);
CentroidPrediction predict_centroid(const Tree& t, Vertex x, RelocationMove m);
Status status_delta(const Tree& t, Vertex x, RelocationMove m);

struct TraceStep {
    RelocationMove move;
    Status delta_status = 0;
    CentroidCase case_tag = CentroidCase::SameBranch;
};

struct OptimizationResult {
    Tree tree;
    std::vector<TraceStep> trace;
};

/// Moves leaves toward a centroid vertex until the tree is k-balanced
/// (k = max degree). Every step lowers the status and keeps n and k.
/// Throws NoProgress if no admissible move exists or a move fails to lower the
/// status, and FormulaMismatch if a closed-form delta disagrees with the
/// recomputed status.
OptimizationResult minimize_status(const Tree& t);

/// Moves one leaf onto another until the tree is the broom S(n, k). Every step
/// raises the status and keeps n and k. Errors as for minimize_status.
OptimizationResult maximize_status(const Tree& t);

/// Far-leaf-to-shallow-target moves: x central, target within rad-2 of x with
/// degree below k, leaf an end of a longest path whose removal keeps the
/// maximum degree. Sorted, without duplicates.
std::vector<RelocationMove> radius_reduction_moves(const Tree& t);

}  // namespace radstat
