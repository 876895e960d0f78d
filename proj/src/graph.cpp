#include "radstat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <sstream>

namespace radstat {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotATree: return "NotATree";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SingletonTree: return "SingletonTree";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InvalidHubPosition: return "InvalidHubPosition";
    case Errc::InvalidVariant: return "InvalidVariant";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::TargetIsNeighbor: return "TargetIsNeighbor";
    case Errc::TargetIsSelf: return "TargetIsSelf";
    case Errc::NotACentroid: return "NotACentroid";
    case Errc::NoProgress: return "NoProgress";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::TooManyEdges: return "TooManyEdges";
    }
    return "Unknown";
}

namespace {

// Returns the component label of every vertex (BFS from the lowest unvisited id).
std::vector<int> components(int n, const std::vector<int>& offsets, const std::vector<Vertex>& adj) {
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (int i = offsets[v]; i < offsets[v + 1]; ++i) {
                if (label[adj[i]] == -1) {
                    label[adj[i]] = next;
                    queue.push_back(adj[i]);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error(Errc::InvalidParams, "graph needs at least one vertex");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                    std::to_string(e.v) + ") outside 0.." +
                                                    std::to_string(n_ - 1));
        if (e.u == e.v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(Errc::DuplicateEdge,
                    "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");

    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    adjacency_.resize(offsets_[n_]);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    // Edges are sorted by (u, v), so each list is already ascending except for
    // the interleaving of "smaller" and "larger" neighbors.
    for (Vertex v = 0; v < n_; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);

    auto label = components(n_, offsets_, adjacency_);
    auto stray = std::find_if(label.begin(), label.end(), [](int c) { return c != 0; });
    if (stray != label.end())
        throw Error(Errc::Disconnected, "vertex " + std::to_string(stray - label.begin()) +
                                            " is not reachable from vertex 0");
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

void Graph::check_vertex(Vertex v) const {
    if (!contains(v))
        throw Error(Errc::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

Tree::Tree(int n, std::vector<Edge> edges) : Graph(n, std::move(edges)) {
    if (!is_tree())
        throw Error(Errc::NotATree, std::to_string(edge_count()) + " edges on " +
                                        std::to_string(n) + " vertices");
}

Tree::Tree(Graph g) : Graph(std::move(g)) {
    if (!is_tree())
        throw Error(Errc::NotATree, std::to_string(edge_count()) + " edges on " +
                                        std::to_string(order()) + " vertices");
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::map<Edge, int> seen;  // edge -> first line
    int max_id = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;

        Vertex ids[2];
        int found = 0;
        std::size_t i = first;
        auto malformed = [&] {
            return Error(Errc::MalformedLine,
                         "line " + std::to_string(line_no) + ": expected \"u v\", got \"" +
                             std::string(line) + "\"");
        };
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            if (found == 2) throw malformed();
            Vertex value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc() || value < 0) throw malformed();
            std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
            i += consumed;
            if (i < line.size() && line[i] != ' ' && line[i] != '\t') throw malformed();
            ids[found++] = value;
        }
        if (found != 2) throw malformed();
        if (ids[0] == ids[1])
            throw Error(Errc::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at vertex " +
                                            std::to_string(ids[0]));
        Edge e(ids[0], ids[1]);
        auto [it, inserted] = seen.emplace(e, line_no);
        if (!inserted)
            throw Error(Errc::DuplicateEdge, "line " + std::to_string(line_no) + ": edge " +
                                                 std::to_string(e.u) + " " + std::to_string(e.v) +
                                                 " already given on line " +
                                                 std::to_string(it->second));
        max_id = std::max(max_id, e.v);
        edges.push_back(e);
        if (end == text.size()) break;
    }
    return Graph(max_id + 1, std::move(edges));
}

Tree parse_tree(std::string_view text) { return Tree(parse_edge_list(text)); }

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

std::string to_edge_line(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        if (!out.empty()) out += ';';
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
    }
    return out;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    if (g.order() == 1) out += "  0;\n";
    for (const Edge& e : g.edges()) {
        out += "  ";
        out += std::to_string(e.u);
        out += " -- ";
        out += std::to_string(e.v);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (!g.contains(source))
        throw Error(Errc::VertexOutOfRange, "source " + std::to_string(source) + " outside 0.." +
                                                std::to_string(g.order() - 1));
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix d(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        auto row = bfs_distances(g, s);
        for (Vertex t = 0; t < g.order(); ++t) d(s, t) = row[t];
    }
    return d;
}

std::vector<Vertex> leaves(const Tree& t) {
    if (t.order() == 1) throw Error(Errc::SingletonTree, "a single-vertex tree has no leaves");
    std::vector<Vertex> out;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1) out.push_back(v);
    return out;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<Vertex> longest_path(const Tree& t) {
    auto far_from = [&](Vertex s) {
        auto d = bfs_distances(t, s);
        return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
    };
    Vertex a = far_from(0);
    // Walk back from the far end along strictly decreasing distance to a.
    auto da = bfs_distances(t, a);
    Vertex b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
    std::vector<Vertex> path{b};
    while (path.back() != a) {
        Vertex cur = path.back();
        for (Vertex w : t.neighbors(cur)) {
            if (da[w] == da[cur] - 1) {
                path.push_back(w);
                break;
            }
        }
    }
    return path;
}

Tree remove_leaf(const Tree& t, Vertex leaf) {
    if (!t.contains(leaf))
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(leaf));
    if (t.order() < 2 || t.degree(leaf) != 1)
        throw Error(Errc::NotALeaf, "vertex " + std::to_string(leaf) + " has degree " +
                                        std::to_string(t.degree(leaf)));
    auto shift = [leaf](Vertex v) { return v > leaf ? v - 1 : v; };
    std::vector<Edge> edges;
    edges.reserve(t.edge_count() - 1);
    for (const Edge& e : t.edges())
        if (e.u != leaf && e.v != leaf) edges.emplace_back(shift(e.u), shift(e.v));
    return Tree(t.order() - 1, std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != static_cast<std::size_t>(g.order()))
        throw Error(Errc::InvalidParams, "permutation size does not match graph order");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.order(), std::move(edges));
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
    return Tree(relabel(static_cast<const Graph&>(t), perm));
}

}  // namespace radstat
