#include "radstat/centrality.hpp"

#include <algorithm>
#include <numeric>

namespace radstat {

namespace {

template <typename T>
std::vector<Vertex> argmin_set(const std::vector<T>& values, T best) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(values.size()); ++v)
        if (values[v] == best) out.push_back(v);
    return out;
}

// BFS order from vertex 0 with parent links; the basis of every one-pass tree
// computation here.
struct RootedOrder {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

RootedOrder root_at_zero(const Tree& t) {
    RootedOrder r;
    r.order.reserve(t.order());
    r.parent.assign(t.order(), -1);
    r.order.push_back(0);
    for (std::size_t head = 0; head < r.order.size(); ++head) {
        Vertex v = r.order[head];
        for (Vertex w : t.neighbors(v)) {
            if (w != r.parent[v]) {
                r.parent[w] = v;
                r.order.push_back(w);
            }
        }
    }
    return r;
}

std::vector<int> subtree_sizes(const Tree& t, const RootedOrder& r) {
    std::vector<int> size(t.order(), 1);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it)
        if (r.parent[*it] >= 0) size[r.parent[*it]] += size[*it];
    return size;
}

}  // namespace

Status status_of_vertex(const Graph& g, Vertex x) {
    auto d = bfs_distances(g, x);
    return std::accumulate(d.begin(), d.end(), Status{0});
}

std::vector<Status> bfs_statuses(const Graph& g) {
    std::vector<Status> s(g.order());
    for (Vertex v = 0; v < g.order(); ++v) s[v] = status_of_vertex(g, v);
    return s;
}

std::vector<Status> tree_statuses(const Tree& t) {
    const int n = t.order();
    auto r = root_at_zero(t);
    auto size = subtree_sizes(t, r);
    std::vector<Status> s(n, 0);
    // s(0) = sum of depths = sum over non-root vertices of their subtree size.
    for (Vertex v = 1; v < n; ++v) s[0] += size[v];
    for (std::size_t i = 1; i < r.order.size(); ++i) {
        Vertex v = r.order[i];
        s[v] = s[r.parent[v]] + n - 2 * size[v];
    }
    return s;
}

StatusResult graph_status(const Tree& t) {
    auto s = tree_statuses(t);
    Status best = *std::min_element(s.begin(), s.end());
    return {best, argmin_set(s, best)};
}

StatusResult graph_status(const Graph& g) {
    if (g.is_tree()) return graph_status(Tree(g));
    auto s = bfs_statuses(g);
    Status best = *std::min_element(s.begin(), s.end());
    return {best, argmin_set(s, best)};
}

int eccentricity(const Graph& g, Vertex x) {
    auto d = bfs_distances(g, x);
    return *std::max_element(d.begin(), d.end());
}

std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> e(g.order());
    for (Vertex v = 0; v < g.order(); ++v) e[v] = eccentricity(g, v);
    return e;
}

RadiusResult radius(const Graph& g) {
    auto e = eccentricities(g);
    int best = *std::min_element(e.begin(), e.end());
    return {best, argmin_set(e, best)};
}

std::vector<int> branch_weights(const Tree& t) {
    const int n = t.order();
    auto r = root_at_zero(t);
    auto size = subtree_sizes(t, r);
    std::vector<int> w(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        int best = n - size[v];  // the branch through the parent
        for (Vertex c : t.neighbors(v))
            if (c != r.parent[v]) best = std::max(best, size[c]);
        w[v] = best;
    }
    return w;
}

int branch_weight(const Tree& t, Vertex x) {
    if (!t.contains(x))
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(x) + " outside 0.." +
                                                std::to_string(t.order() - 1));
    return branch_weights(t)[x];
}

std::vector<Vertex> centroid(const Tree& t) {
    auto w = branch_weights(t);
    int best = *std::min_element(w.begin(), w.end());
    return argmin_set(w, best);
}

CentralityReport analyze(const Graph& g) {
    CentralityReport rep;
    rep.n = g.order();
    rep.eccentricity = eccentricities(g);
    if (g.is_tree()) {
        Tree t(g);
        rep.vertex_status = tree_statuses(t);
        rep.branch_weight = branch_weights(t);
        rep.centroid = centroid(t);
    } else {
        rep.vertex_status = bfs_statuses(g);
    }
    rep.status = *std::min_element(rep.vertex_status.begin(), rep.vertex_status.end());
    rep.medians = argmin_set(rep.vertex_status, rep.status);
    rep.radius = *std::min_element(rep.eccentricity.begin(), rep.eccentricity.end());
    rep.center = argmin_set(rep.eccentricity, rep.radius);
    return rep;
}

}  // namespace radstat
