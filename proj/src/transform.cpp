#include "radstat/transform.hpp"

#include <algorithm>
#include <optional>

#include "radstat/enumerate.hpp"
#include "radstat/extremal.hpp"

namespace radstat {

std::string_view case_name(CentroidCase c) {
    switch (c) {
    case CentroidCase::SameBranch: return "SameBranch";
    case CentroidCase::SmallT1: return "SmallT1";
    case CentroidCase::LargeT1: return "LargeT1";
    case CentroidCase::AtCentroid: return "AtCentroid";
    }
    return "Unknown";
}

void validate_move(const Tree& t, RelocationMove m) {
    for (Vertex v : {m.leaf, m.target})
        if (!t.contains(v))
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 0.." +
                                                    std::to_string(t.order() - 1));
    if (t.degree(m.leaf) != 1)
        throw Error(Errc::NotALeaf, "vertex " + std::to_string(m.leaf) + " has degree " +
                                        std::to_string(t.degree(m.leaf)));
    if (m.leaf == m.target) throw Error(Errc::TargetIsSelf, "leaf and target are both " + std::to_string(m.leaf));
    if (t.neighbors(m.leaf)[0] == m.target)
        throw Error(Errc::TargetIsNeighbor, "leaf " + std::to_string(m.leaf) + " already hangs from " +
                                                std::to_string(m.target));
}

Tree relocate_leaf(const Tree& t, RelocationMove m) {
    validate_move(t, m);
    const Edge old_edge(m.leaf, t.neighbors(m.leaf)[0]);
    std::vector<Edge> edges;
    edges.reserve(t.edge_count());
    for (const Edge& e : t.edges())
        if (e != old_edge) edges.push_back(e);
    edges.emplace_back(m.leaf, m.target);
    return Tree(t.order(), std::move(edges));
}

RelocationAnalyzer::RelocationAnalyzer(const Tree& t, Vertex x) : tree_(&t), x_(x) {
    if (!t.contains(x))
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(x) + " outside 0.." +
                                                std::to_string(t.order() - 1));
    auto c = centroid(t);
    if (std::find(c.begin(), c.end(), x) == c.end())
        throw Error(Errc::NotACentroid, "vertex " + std::to_string(x) + " is not a centroid vertex");

    const int n = t.order();
    dist_.assign(n, -1);
    branch_.assign(n, -1);
    size_.assign(n, 1);
    branch_path_.assign(n, 1);
    std::vector<Vertex> order{x};
    std::vector<Vertex> parent(n, -1);
    order.reserve(n);
    dist_[x] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        for (Vertex w : t.neighbors(v)) {
            if (dist_[w] >= 0) continue;
            dist_[w] = dist_[v] + 1;
            parent[w] = v;
            branch_[w] = v == x ? w : branch_[v];
            order.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0 && parent[*it] != x) size_[parent[*it]] += size_[*it];
    for (Vertex v = 0; v < n; ++v)
        if (v != x && t.degree(v) > 2) branch_path_[branch_[v]] = 0;
}

RelocationAnalyzer::Sizes RelocationAnalyzer::sizes(RelocationMove m) const {
    const int n = tree_->order();
    int t1 = branch_size(branch_[m.target]);
    int t2 = branch_size(branch_[m.leaf]);
    return {t1, t2, n + 2 - t1 - t2};
}

RelocationContext RelocationAnalyzer::context(RelocationMove m) const {
    validate_move(*tree_, m);
    if (m.target == x_)
        throw Error(Errc::InvalidParams, "the branch context needs a target other than the centroid vertex");
    RelocationContext ctx;
    ctx.centroid = x_;
    const Vertex r1 = branch_[m.target];
    const Vertex r2 = branch_[m.leaf];
    for (Vertex v = 0; v < tree_->order(); ++v) {
        if (v == x_) {
            ctx.target_branch.push_back(v);
            ctx.leaf_branch.push_back(v);
            ctx.rest.push_back(v);
        } else if (branch_[v] == r1) {
            ctx.target_branch.push_back(v);
            if (r1 == r2) ctx.leaf_branch.push_back(v);
        } else if (branch_[v] == r2) {
            ctx.leaf_branch.push_back(v);
        } else {
            ctx.rest.push_back(v);
        }
    }
    return ctx;
}

CentroidPrediction RelocationAnalyzer::predict(RelocationMove m) const {
    validate_move(*tree_, m);
    if (m.target == x_) return {x_, CentroidCase::AtCentroid};
    if (branch_[m.target] == branch_[m.leaf]) return {x_, CentroidCase::SameBranch};
    auto s = sizes(m);
    if (s.target_branch < s.leaf_branch + s.rest - 1) return {x_, CentroidCase::SmallT1};
    return {branch_[m.target], CentroidCase::LargeT1};
}

Status RelocationAnalyzer::status_delta(RelocationMove m) const {
    auto p = predict(m);
    const Status to_target = dist_[m.target];
    const Status to_leaf = dist_[m.leaf];
    if (p.case_tag != CentroidCase::LargeT1) {
        // x stays a median: only the leaf's own distance changes.
        return to_target + 1 - to_leaf;
    }
    // The median moves one step toward the target: the target branch gets one
    // closer, everything else one farther.
    auto s = sizes(m);
    return (to_target - to_leaf) + (s.rest + s.leaf_branch - s.target_branch - 1);
}

RelocationContext relocation_context(const Tree& t, Vertex x, RelocationMove m) {
    return RelocationAnalyzer(t, x).context(m);
}

CentroidPrediction predict_centroid(const Tree& t, Vertex x, RelocationMove m) {
    return RelocationAnalyzer(t, x).predict(m);
}

Status status_delta(const Tree& t, Vertex x, RelocationMove m) {
    return RelocationAnalyzer(t, x).status_delta(m);
}

// ---------------------------------------------------------------------------
// Optimizers

namespace {

void require_optimizable(const Tree& t) {
    if (t.order() < 3) throw Error(Errc::InvalidParams, "status optimization needs n >= 3");
}

// Applies `m`, cross-checks the closed-form delta against a full recomputation
// and the direction against `sign` (-1 lower, +1 higher).
void apply_step(Tree& cur, Status& status, int k, const RelocationAnalyzer& an, RelocationMove m, int sign,
                std::vector<TraceStep>& trace, std::optional<Status> special_delta = std::nullopt) {
    auto pred = an.predict(m);
    Status delta = an.status_delta(m);
    if (special_delta && *special_delta != delta)
        throw Error(Errc::FormulaMismatch, "special-case delta " + std::to_string(*special_delta) +
                                               " differs from general delta " + std::to_string(delta) +
                                               " on " + to_edge_line(cur));
    if (delta * sign <= 0)
        throw Error(Errc::NoProgress, "move (" + std::to_string(m.leaf) + " -> " + std::to_string(m.target) +
                                          ") changes status by " + std::to_string(delta) + " on " +
                                          to_edge_line(cur));
    Tree next = relocate_leaf(cur, m);
    Status recomputed = graph_status(next).status;
    if (recomputed != status + delta)
        throw Error(Errc::FormulaMismatch, "closed form predicts " + std::to_string(status + delta) +
                                               ", recomputation gives " + std::to_string(recomputed) +
                                               " on " + to_edge_line(cur));
    if (max_degree(next) != k)
        throw Error(Errc::NoProgress, "move changed the maximum degree on " + to_edge_line(cur));
    trace.push_back({m, delta, pred.case_tag});
    cur = std::move(next);
    status = recomputed;
}

int count_of_degree(const Tree& t, int k) {
    int c = 0;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) == k) ++c;
    return c;
}

}  // namespace

OptimizationResult minimize_status(const Tree& t) {
    require_optimizable(t);
    const int k = max_degree(t);
    Tree cur = t;
    Status status = graph_status(cur).status;
    std::vector<TraceStep> trace;
    while (!is_k_balanced(cur)) {
        const Vertex x = centroid(cur)[0];
        RelocationAnalyzer an(cur, x);
        const int n = cur.order();
        int ecc = 0;
        for (Vertex v = 0; v < n; ++v) ecc = std::max(ecc, an.distance(v));

        std::optional<RelocationMove> move;
        if (cur.degree(x) == k) {
            // A deepest leaf goes to a vertex of spare degree at most ecc-2 deep.
            for (Vertex b = 0; b < n && !move; ++b) {
                if (cur.degree(b) != 1 || an.distance(b) != ecc) continue;
                for (Vertex u = 0; u < n; ++u) {
                    if (an.distance(u) <= ecc - 2 && cur.degree(u) < k) {
                        move = RelocationMove{b, u};
                        break;
                    }
                }
            }
        } else {
            // A leaf away from x goes to x, keeping some degree-k vertex.
            const int with_k = count_of_degree(cur, k);
            for (Vertex b = 0; b < n && !move; ++b) {
                if (cur.degree(b) != 1 || an.distance(b) <= 1) continue;
                Vertex anchor = cur.neighbors(b)[0];
                int remaining = with_k - (cur.degree(anchor) == k ? 1 : 0);
                if (remaining > 0) move = RelocationMove{b, x};
            }
        }
        if (!move) throw Error(Errc::NoProgress, "no admissible lowering move on " + to_edge_line(cur));
        apply_step(cur, status, k, an, *move, -1, trace);
    }
    return {std::move(cur), std::move(trace)};
}

namespace {

// Lexicographically smallest (leaf, target) over candidate leaves with the
// target at least as far from x as the leaf, subject to `accept`.
template <typename Accept>
std::optional<RelocationMove> first_pair(const std::vector<Vertex>& candidates, const RelocationAnalyzer& an,
                                         Accept accept) {
    for (Vertex leaf : candidates)
        for (Vertex target : candidates) {
            if (leaf == target || an.distance(target) < an.distance(leaf)) continue;
            RelocationMove m{leaf, target};
            if (accept(m)) return m;
        }
    return std::nullopt;
}

}  // namespace

OptimizationResult maximize_status(const Tree& t) {
    require_optimizable(t);
    const int k = max_degree(t);
    Tree cur = t;
    std::vector<TraceStep> trace;
    if (k <= 2) return {std::move(cur), std::move(trace)};  // paths are already comets

    const int n = t.order();
    const CanonicalCode broom = canonical_code(build_s_comet(n, k));
    Status status = graph_status(cur).status;
    while (canonical_code(cur) != broom) {
        const Vertex x = centroid(cur)[0];
        RelocationAnalyzer an(cur, x);
        Vertex z = x;
        if (cur.degree(x) != k)
            for (z = 0; cur.degree(z) != k; ++z) {
            }
        auto dz = bfs_distances(cur, z);
        std::vector<Vertex> candidates;
        for (Vertex v = 0; v < n; ++v)
            if (cur.degree(v) == 1 && dz[v] > 1) candidates.push_back(v);
        if (candidates.size() < 2)
            throw Error(Errc::NoProgress, "fewer than two leaves away from the hub on " + to_edge_line(cur));

        auto same_branch_in = [&](auto pred_root) {
            return first_pair(candidates, an, [&](RelocationMove m) {
                Vertex r = an.branch_root(m.leaf);
                return r == an.branch_root(m.target) && pred_root(r);
            });
        };
        auto small_t1 = [&] {
            return first_pair(candidates, an, [&](RelocationMove m) {
                return an.predict(m).case_tag == CentroidCase::SmallT1;
            });
        };

        std::optional<RelocationMove> move;
        std::optional<Status> special;
        if (x != z) {
            const Vertex hub_branch = an.branch_root(z);
            // Two far leaves inside the hub's branch, or inside any other branch
            // that is not a path: x stays a median.
            move = same_branch_in([&](Vertex r) { return r == hub_branch; });
            if (!move) move = same_branch_in([&](Vertex r) { return r != hub_branch && !an.branch_is_path(r); });
            if (!move) move = small_t1();
            if (!move) {
                if (candidates.size() == 2) {
                    // One far leaf in the hub branch, one at the end of a path
                    // branch, no other branches: the gain is k-2.
                    move = first_pair(candidates, an, [&](RelocationMove m) {
                        return an.distance(m.target) > an.distance(m.leaf);
                    });
                    special = k - 2;
                } else {
                    move = first_pair(candidates, an, [&](RelocationMove m) {
                        return an.distance(m.target) > an.distance(m.leaf) + 1;
                    });
                }
            }
        } else {
            move = same_branch_in([&](Vertex r) { return !an.branch_is_path(r); });
            if (!move) move = small_t1();
            if (!move) {
                // All branches are paths: the gain is |S|-1.
                move = first_pair(candidates, an, [](RelocationMove) { return true; });
                if (move) special = an.sizes(*move).rest - 1;
            }
        }
        if (!move) throw Error(Errc::NoProgress, "no admissible raising move on " + to_edge_line(cur));
        apply_step(cur, status, k, an, *move, +1, trace, special);
    }
    return {std::move(cur), std::move(trace)};
}

std::vector<RelocationMove> radius_reduction_moves(const Tree& t) {
    std::vector<RelocationMove> moves;
    const int n = t.order();
    if (n < 3) return moves;
    const int k = max_degree(t);
    auto rad = radius(t);
    auto path = longest_path(t);
    const int diameter = static_cast<int>(path.size()) - 1;
    int with_k = count_of_degree(t, k);

    std::vector<Vertex> ends;
    for (Vertex b = 0; b < n; ++b) {
        if (t.degree(b) != 1 || eccentricity(t, b) != diameter) continue;
        Vertex anchor = t.neighbors(b)[0];
        if (with_k - (t.degree(anchor) == k ? 1 : 0) > 0) ends.push_back(b);
    }
    for (Vertex x : rad.center) {
        auto d = bfs_distances(t, x);
        for (Vertex u = 0; u < n; ++u) {
            if (d[u] > rad.radius - 2 || t.degree(u) >= k) continue;
            for (Vertex b : ends)
                if (b != u && t.neighbors(b)[0] != u) moves.push_back({b, u});
        }
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    return moves;
}

}  // namespace radstat
