#include "radstat/enumerate.hpp"

#include <algorithm>
#include <queue>

namespace radstat {

// ---------------------------------------------------------------------------
// Canonical codes

std::vector<Vertex> tree_center(const Tree& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

CanonicalCode rooted_code(const Tree& t, Vertex root) {
    const int n = t.order();
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, -1);
    order.reserve(n);
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        for (Vertex w : t.neighbors(v))
            if (w != parent[v]) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    std::vector<CanonicalCode> code(n);
    std::vector<std::vector<const CanonicalCode*>> kids(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& ch = kids[v];
        std::sort(ch.begin(), ch.end(), [](const CanonicalCode* a, const CanonicalCode* b) { return *a < *b; });
        std::size_t len = 2;
        for (const auto* c : ch) len += c->size();
        CanonicalCode s;
        s.reserve(len);
        s += '(';
        for (const auto* c : ch) s += *c;
        s += ')';
        code[v] = std::move(s);
        if (parent[v] >= 0) kids[parent[v]].push_back(&code[v]);
    }
    return std::move(code[root]);
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
    auto c = tree_center(t);
    CanonicalCode best = rooted_code(t, c[0]);
    if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
    return best;
}

bool are_isomorphic(const Tree& a, const Tree& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() &&
           canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// Free tree generation over level sequences

Tree tree_from_level_sequence(std::span<const int> levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    std::vector<Vertex> last_at_level(n + 1, -1);
    for (Vertex i = 0; i < n; ++i) {
        int lv = levels[i];
        if (lv > 0) edges.emplace_back(last_at_level[lv - 1], i);
        last_at_level[lv] = i;
    }
    return Tree(n, std::move(edges));
}

namespace {

using Layout = std::vector<int>;

// One step of the rooted-tree successor (Beyer-Hedetniemi) from position p.
// Empty result when no successor exists.
Layout next_rooted(const Layout& pred, int p) {
    if (p == 0) return {};
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout result = pred;
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

Layout next_rooted(const Layout& pred) {
    int p = static_cast<int>(pred.size()) - 1;
    while (p > 0 && pred[p] == 1) --p;
    return next_rooted(pred, p);
}

// Splits at the second child of the root: `left` is the first subtree (levels
// shifted up by one), `rest` is the tree with that subtree removed.
void split(const Layout& layout, Layout& left, Layout& rest) {
    std::size_t m = layout.size();
    bool seen_one = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (seen_one) {
                m = i;
                break;
            }
            seen_one = true;
        }
    }
    left.clear();
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    rest.assign(1, 0);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// A rooted level sequence is a free-tree representative when the root is the
// center and its first subtree is no larger than the remainder under the
// (height, size, sequence) order.
bool is_free_canonical(const Layout& left, const Layout& rest) {
    int lh = *std::max_element(left.begin(), left.end());
    int rh = *std::max_element(rest.begin(), rest.end());
    if (rh < lh) return false;
    if (rh == lh) {
        if (left.size() > rest.size()) return false;
        if (left.size() == rest.size() && left > rest) return false;
    }
    return true;
}

// Advances `candidate` to the first valid free-tree layout at or after it.
Layout next_valid(Layout candidate) {
    Layout left, rest;
    while (!candidate.empty()) {
        split(candidate, left, rest);
        if (is_free_canonical(left, rest)) return candidate;
        int p = static_cast<int>(left.size());
        Layout jumped = next_rooted(candidate, p);
        if (jumped.empty()) return {};
        if (candidate[p] > 2) {
            Layout nl, nr;
            split(jumped, nl, nr);
            int h = *std::max_element(nl.begin(), nl.end());
            // Overwrite the tail with the path 1, 2, ..., h + 1.
            std::size_t len = static_cast<std::size_t>(h) + 1;
            for (std::size_t i = 0; i < len; ++i) jumped[jumped.size() - len + i] = static_cast<int>(i) + 1;
        }
        candidate = std::move(jumped);
    }
    return {};
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
    if (n < 1) throw Error(Errc::InvalidParams, "tree order must be at least 1");
    if (n > kMaxEnumerationOrder)
        throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds the enumeration cap of " +
                                             std::to_string(kMaxEnumerationOrder));
    if (n >= 2) {
        // The path rooted at its center.
        for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
        for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
    }
}

std::optional<Tree> FreeTreeGenerator::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        current_ = {0};
        return Tree(1, {});
    }
    if (started_) layout_ = next_rooted(layout_);
    started_ = true;
    layout_ = next_valid(std::move(layout_));
    if (layout_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    current_ = layout_;
    return tree_from_level_sequence(current_);
}

std::vector<Tree> free_trees(int n) {
    std::vector<Tree> out;
    FreeTreeGenerator gen(n);
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
    FreeTreeGenerator gen(n);
    while (auto t = gen.next()) fn(*t);
}

// ---------------------------------------------------------------------------
// Prüfer codec

Tree tree_from_pruefer(int n, std::span<const Vertex> sequence) {
    if (n < 1) throw Error(Errc::InvalidParams, "tree order must be at least 1");
    if (n == 1) {
        if (!sequence.empty()) throw Error(Errc::InvalidParams, "n = 1 takes an empty sequence");
        return Tree(1, {});
    }
    if (sequence.size() != static_cast<std::size_t>(n - 2))
        throw Error(Errc::InvalidParams, "Prüfer sequence must have length n - 2");
    std::vector<int> degree(n, 1);
    for (Vertex v : sequence) {
        if (v < 0 || v >= n) throw Error(Errc::VertexOutOfRange, "Prüfer entry " + std::to_string(v));
        ++degree[v];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` follows
    // chains of newly created leaves smaller than ptr.
    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex v : sequence) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree(n, std::move(edges));
}

std::vector<Vertex> pruefer_sequence(const Tree& t) {
    const int n = t.order();
    if (n <= 2) return {};
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = t.degree(v);
    std::vector<bool> removed(n, false);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves_heap;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves_heap.push(v);
    std::vector<Vertex> seq;
    seq.reserve(n - 2);
    while (static_cast<int>(seq.size()) < n - 2) {
        Vertex leaf = leaves_heap.top();
        leaves_heap.pop();
        removed[leaf] = true;
        for (Vertex w : t.neighbors(leaf)) {
            if (!removed[w]) {
                seq.push_back(w);
                if (--degree[w] == 1) leaves_heap.push(w);
                break;
            }
        }
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Randomness

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(Errc::InvalidParams, "Rng::below needs a positive bound");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Tree random_tree(int n, Rng& rng) {
    if (n < 1) throw Error(Errc::InvalidParams, "tree order must be at least 1");
    std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
    for (auto& v : seq) v = static_cast<Vertex>(rng.below(n));
    return tree_from_pruefer(n, seq);
}

Graph random_connected_graph(int n, std::int64_t extra_edges, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::InvalidParams, "graph order must be at least 1");
    const std::int64_t capacity = static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
    if (extra_edges < 0 || extra_edges > capacity)
        throw Error(Errc::TooManyEdges, std::to_string(extra_edges) + " extra edges requested, at most " +
                                            std::to_string(capacity) + " fit on " + std::to_string(n) +
                                            " vertices");
    Rng rng(seed);
    Tree base = random_tree(n, rng);
    std::vector<Edge> edges = base.edges();
    std::vector<Edge> absent;
    absent.reserve(static_cast<std::size_t>(capacity));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!base.has_edge(u, v)) absent.emplace_back(u, v);
    // Partial Fisher-Yates: the first extra_edges slots are a uniform sample.
    for (std::int64_t i = 0; i < extra_edges; ++i) {
        auto j = i + static_cast<std::int64_t>(rng.below(absent.size() - i));
        std::swap(absent[i], absent[j]);
        edges.push_back(absent[i]);
    }
    return Graph(n, std::move(edges));
}

}  // namespace radstat
