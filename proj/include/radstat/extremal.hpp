#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "radstat/centrality.hpp"
#include "radstat/graph.hpp"

namespace radstat {

enum class Family { Balanced, Comet, SComet, CStar };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
    Family family = Family::Balanced;
    int n = 0;
    int k = 0;
    // Balanced: index of the last-level layout. Comet: hub position on the
    // spine. CStar: vertex of the base comet receiving the extra leaf.
    // Ignored for SComet.
    int variant = 0;
};

/// k-balanced tree: a root of degree k, every later vertex filled to degree k
/// level by level, the leftover vertices forming a partial last level.
/// Variant 0 fills the last level leftmost-first; variant i > 0 takes the
/// i-th partition (in reverse lexicographic order) of the leftover count over
/// the last full level. Distinct variants have distinct degree sequences.
Tree build_balanced(int n, int k, int variant = 0);
std::int64_t balanced_variant_count(int n, int k);

/// Broom: hub 0 with leaves 1..k-1 and a pendant path k..n-1 hanging from it.
Tree build_s_comet(int n, int k);

/// Spine 0..L with L = n-k+1, hub at spine index `hub_position`
/// (1 <= hub_position <= L-1) carrying the k-2 extra leaves L+1..n-1.
Tree build_comet(int n, int k, int hub_position);

/// build_comet(n-1, k, (n-k)/2) with one more leaf n-1 attached to vertex
/// `attach`, which must have degree below k in the base comet.
/// k = n-1 yields the star.
Tree build_c_star(int n, int k, int attach);

Tree build(const FamilySpec& spec);

/// Some x such that every vertex within distance ecc(x)-2 of x has degree
/// max_degree(t); the smallest such x, or nullopt.
std::optional<Vertex> is_k_balanced(const Tree& t);

/// Structural recognition with k = max_degree(t):
///   Comet  - a degree-k vertex lies on a path of length n-k+1;
///   SComet - isomorphic to build_s_comet(n, k);
///   CStar  - deleting some leaf leaves a Comet of order n-1 with the same
///            maximum degree (the star, k = n-1, counts as degenerate CStar).
bool is_comet(const Tree& t, Family kind);

/// ceil((n-k+1)/2).
int radius_upper_bound(int n, int k);

/// Radius of build_balanced(n, k).
int radius_lower_bound(int n, int k);

struct StatusBounds {
    Status lo = 0;  // graph status of build_balanced(n, k)
    Status hi = 0;  // graph status of build_s_comet(n, k)
};
StatusBounds status_bounds(int n, int k);

}  // namespace radstat
