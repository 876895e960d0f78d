#include "radstat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "radstat/centrality.hpp"
#include "radstat/enumerate.hpp"
#include "radstat/extremal.hpp"
#include "radstat/spanning.hpp"
#include "radstat/transform.hpp"

namespace radstat {

std::string_view theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::RadiusLower: return "RadiusLower";
    case TheoremId::StatusLower: return "StatusLower";
    case TheoremId::RadiusUpper: return "RadiusUpper";
    case TheoremId::StatusUpper: return "StatusUpper";
    case TheoremId::Zelinka: return "Zelinka";
    case TheoremId::Lemma1: return "Lemma1";
    case TheoremId::Inequality2: return "Inequality2";
    case TheoremId::Prop1: return "Prop1";
    case TheoremId::Prop2: return "Prop2";
    case TheoremId::MonotonicityLemma: return "MonotonicityLemma";
    case TheoremId::GraphRadius: return "GraphRadius";
    case TheoremId::GraphStatus: return "GraphStatus";
    }
    return "Unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return out;
    };
    const std::string wanted = lower(name);
    for (TheoremId id : kAllTheorems)
        if (lower(theorem_name(id)) == wanted) return id;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kTheoremCount = kAllTheorems.size();

std::size_t slot(TheoremId id) { return static_cast<std::size_t>(id); }

bool is_tree_theorem(TheoremId id) {
    switch (id) {
    case TheoremId::MonotonicityLemma:
    case TheoremId::GraphRadius:
    case TheoremId::GraphStatus: return false;
    default: return true;
    }
}

int first_order(TheoremId id) {
    switch (id) {
    case TheoremId::Zelinka:
    case TheoremId::Lemma1:
    case TheoremId::Inequality2: return 1;
    case TheoremId::GraphRadius:
    case TheoremId::GraphStatus: return 4;
    default: return 3;
    }
}

void validate(const VerifyOptions& o) {
    if (o.n_max < 1) throw Error(Errc::InvalidParams, "n_max must be at least 1");
    if (o.n_max > kMaxEnumerationOrder)
        throw Error(Errc::OrderTooLarge, "n_max " + std::to_string(o.n_max) + " exceeds the cap of " +
                                             std::to_string(kMaxEnumerationOrder));
    if (o.jobs < 1) throw Error(Errc::InvalidParams, "jobs must be at least 1");
    if (o.graphs_per_order < 0) throw Error(Errc::InvalidParams, "graphs_per_order must be non-negative");
}

// Runs fn(i) for i in [0, count) on `jobs` threads; the first exception wins.
template <typename Fn>
void parallel_for(int jobs, std::size_t count, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

// Bound values per (n, k), built from the constructed extremal trees.
struct Bounds {
    int radius_lo = 0;
    int radius_hi = 0;
    Status status_lo = 0;
    Status status_hi = 0;
    CanonicalCode broom;
};

class BoundsTable {
public:
    explicit BoundsTable(int n_max) : n_max_(n_max) {
        for (int n = 3; n <= n_max; ++n)
            for (int k = 2; k <= n - 1; ++k) {
                Bounds b;
                b.radius_lo = radius_lower_bound(n, k);
                b.radius_hi = radius_upper_bound(n, k);
                auto sb = status_bounds(n, k);
                b.status_lo = sb.lo;
                b.status_hi = sb.hi;
                b.broom = canonical_code(build_s_comet(n, k));
                table_.emplace(std::make_pair(n, k), std::move(b));
            }
    }
    const Bounds& at(int n, int k) const { return table_.at({n, k}); }

private:
    int n_max_;
    std::map<std::pair<int, int>, Bounds> table_;
};

struct TreeFacts {
    int n;
    int k;
    std::vector<Status> status;
    std::vector<int> ecc;
    Status graph_status;
    int radius;
    std::vector<Vertex> medians;
    std::vector<Vertex> centroid;
    std::vector<int> weight;
};

TreeFacts facts_of(const Tree& t) {
    TreeFacts f;
    f.n = t.order();
    f.k = max_degree(t);
    f.status = tree_statuses(t);
    f.ecc = eccentricities(t);
    f.graph_status = *std::min_element(f.status.begin(), f.status.end());
    f.radius = *std::min_element(f.ecc.begin(), f.ecc.end());
    for (Vertex v = 0; v < f.n; ++v)
        if (f.status[v] == f.graph_status) f.medians.push_back(v);
    f.weight = branch_weights(t);
    f.centroid = centroid(t);
    return f;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

struct SweepOutput {
    std::array<std::vector<Counterexample>, kTheoremCount> counterexamples;
    std::array<std::uint64_t, kTheoremCount> moves{};
    std::array<std::uint64_t, kTheoremCount> examined{};
};

class TreeChecker {
public:
    TreeChecker(const BoundsTable& bounds, Mutation mutation) : bounds_(bounds), mutation_(mutation) {}

    void run(TheoremId id, const Tree& t, const TreeFacts& f, SweepOutput& out) const {
        auto fail = [&](std::string details) {
            out.counterexamples[slot(id)].push_back({f.n, to_edge_line(t), std::move(details)});
        };
        ++out.examined[slot(id)];
        switch (id) {
        case TheoremId::RadiusLower: {
            const auto& b = bounds_.at(f.n, f.k);
            if (f.radius < b.radius_lo)
                fail("rad=" + std::to_string(f.radius) + " < rad(B)=" + std::to_string(b.radius_lo));
            break;
        }
        case TheoremId::StatusLower: {
            const auto& b = bounds_.at(f.n, f.k);
            Status lo = b.status_lo + (mutation_ == Mutation::StatusLowerOffByOne ? 1 : 0);
            bool balanced = is_k_balanced(t).has_value();
            if (f.graph_status < lo)
                fail("s=" + std::to_string(f.graph_status) + " < s(B)=" + std::to_string(lo));
            else if ((f.graph_status == lo) != balanced)
                fail("s=" + std::to_string(f.graph_status) + ", s(B)=" + std::to_string(lo) +
                     ", k-balanced=" + (balanced ? "true" : "false"));
            break;
        }
        case TheoremId::RadiusUpper: {
            int bound = radius_upper_bound(f.n, f.k) - (mutation_ == Mutation::RadiusUpperOffByOne ? 1 : 0);
            bool even = (f.n - f.k + 1) % 2 == 0;
            bool recognized = is_comet(t, even ? Family::CStar : Family::Comet);
            if (f.radius > bound)
                fail("rad=" + std::to_string(f.radius) + " > bound=" + std::to_string(bound));
            else if ((f.radius == bound) != recognized)
                fail("rad=" + std::to_string(f.radius) + ", bound=" + std::to_string(bound) + ", " +
                     (even ? "cstar" : "comet") + "=" + (recognized ? "true" : "false"));
            break;
        }
        case TheoremId::StatusUpper: {
            const auto& b = bounds_.at(f.n, f.k);
            bool broom = canonical_code(t) == b.broom;
            if (f.graph_status > b.status_hi)
                fail("s=" + std::to_string(f.graph_status) + " > s(S)=" + std::to_string(b.status_hi));
            else if ((f.graph_status == b.status_hi) != broom)
                fail("s=" + std::to_string(f.graph_status) + ", s(S)=" + std::to_string(b.status_hi) +
                     ", broom=" + (broom ? "true" : "false"));
            break;
        }
        case TheoremId::Zelinka:
            if (f.centroid != f.medians) fail("centroid=" + join(f.centroid) + " medians=" + join(f.medians));
            break;
        case TheoremId::Lemma1:
            for (Vertex v = 0; v < f.n; ++v) {
                bool in_centroid = std::binary_search(f.centroid.begin(), f.centroid.end(), v);
                bool light = 2 * f.weight[v] <= f.n;
                if (in_centroid != light)
                    fail("vertex " + std::to_string(v) + ": W=" + std::to_string(f.weight[v]) +
                         ", in centroid=" + (in_centroid ? "true" : "false"));
            }
            break;
        case TheoremId::Inequality2:
            for (Vertex x : f.centroid) {
                RelocationAnalyzer an(t, x);
                for (Vertex r : t.neighbors(x)) {
                    // |T'| <= |T \ T'| + 1, the complement keeping x.
                    int branch = an.branch_size(r);
                    int complement = f.n - branch + 1;
                    if (branch > complement + 1)
                        fail("centroid " + std::to_string(x) + ", branch at " + std::to_string(r) + ": |T'|=" +
                             std::to_string(branch) + " > " + std::to_string(complement + 1));
                }
            }
            break;
        case TheoremId::Prop1:
        case TheoremId::Prop2:
            check_moves(id, t, f, out, fail);
            break;
        default: break;
        }
    }

private:
    template <typename Fail>
    void check_moves(TheoremId id, const Tree& t, const TreeFacts& f, SweepOutput& out, Fail& fail) const {
        for (Vertex x : f.centroid) {
            RelocationAnalyzer an(t, x);
            for (Vertex b = 0; b < f.n; ++b) {
                if (t.degree(b) != 1) continue;
                const Vertex anchor = t.neighbors(b)[0];
                for (Vertex u = 0; u < f.n; ++u) {
                    if (u == b || u == anchor) continue;
                    if ((id == TheoremId::Prop2) != (u == x)) continue;
                    RelocationMove m{b, u};
                    ++out.moves[slot(id)];
                    auto pred = an.predict(m);
                    if (mutation_ == Mutation::PredictionIgnoresMove) pred.vertex = x;
                    Status delta = an.status_delta(m);
                    Tree after = relocate_leaf(t, m);
                    auto c = centroid(after);
                    Status actual = graph_status(after).status - f.graph_status;
                    std::string where = "x=" + std::to_string(x) + " b=" + std::to_string(b) +
                                        " u=" + std::to_string(u) + " [" + std::string(case_name(pred.case_tag)) + "]";
                    if (!std::binary_search(c.begin(), c.end(), pred.vertex))
                        fail(where + ": predicted " + std::to_string(pred.vertex) + " not in centroid " + join(c));
                    if (delta != actual)
                        fail(where + ": delta " + std::to_string(delta) + " != recomputed " + std::to_string(actual));
                }
            }
        }
    }

    const BoundsTable& bounds_;
    Mutation mutation_;
};

void run_tree_sweeps(const std::vector<TheoremId>& ids, const VerifyOptions& o, SweepOutput& total) {
    if (ids.empty()) return;
    BoundsTable bounds(o.n_max);
    TreeChecker checker(bounds, o.mutation);
    for (int n = 1; n <= o.n_max; ++n) {
        std::vector<TheoremId> active;
        for (TheoremId id : ids)
            if (n >= first_order(id)) active.push_back(id);
        if (active.empty()) continue;
        auto trees = free_trees(n);
        std::vector<SweepOutput> per_tree(trees.size());
        parallel_for(o.jobs, trees.size(), [&](std::size_t i) {
            TreeFacts f = facts_of(trees[i]);
            for (TheoremId id : active) checker.run(id, trees[i], f, per_tree[i]);
        });
        for (auto& r : per_tree)
            for (std::size_t s = 0; s < kTheoremCount; ++s) {
                auto& dst = total.counterexamples[s];
                dst.insert(dst.end(), std::make_move_iterator(r.counterexamples[s].begin()),
                           std::make_move_iterator(r.counterexamples[s].end()));
                total.moves[s] += r.moves[s];
                total.examined[s] += r.examined[s];
            }
    }
}

void run_monotonicity(const VerifyOptions& o, SweepOutput& out) {
    const std::size_t s = slot(TheoremId::MonotonicityLemma);
    auto fail = [&](int n, const Tree& t, std::string details) {
        out.counterexamples[s].push_back({n, to_edge_line(t), std::move(details)});
    };
    constexpr std::int64_t kVariantsChecked = 32;
    for (int n = 3; n <= o.n_max; ++n) {
        std::vector<Status> status(n, 0);
        std::vector<int> rad(n, 0);
        for (int k = 2; k <= n - 1; ++k) {
            Tree base = build_balanced(n, k, 0);
            ++out.examined[s];
            status[k] = graph_status(base).status;
            rad[k] = radius(base).radius;
            // k = l: every balanced variant agrees on status and radius.
            std::int64_t variants = std::min(balanced_variant_count(n, k), kVariantsChecked);
            for (int v = 1; v < variants; ++v) {
                Tree alt = build_balanced(n, k, v);
                ++out.examined[s];
                Status sa = graph_status(alt).status;
                int ra = radius(alt).radius;
                if (sa != status[k] || ra != rad[k])
                    fail(n, alt, "variant " + std::to_string(v) + " of B(" + std::to_string(n) + "," +
                                     std::to_string(k) + "): s=" + std::to_string(sa) + " rad=" + std::to_string(ra) +
                                     " vs s=" + std::to_string(status[k]) + " rad=" + std::to_string(rad[k]));
            }
        }
        for (int k = 3; k <= n - 1; ++k)
            for (int l = 2; l < k; ++l) {
                if (!(status[k] < status[l]))
                    fail(n, build_balanced(n, k, 0),
                         "s(B(" + std::to_string(n) + "," + std::to_string(k) + "))=" + std::to_string(status[k]) +
                             " not below s(B(" + std::to_string(n) + "," + std::to_string(l) +
                             "))=" + std::to_string(status[l]));
                if (!(rad[k] <= rad[l]))
                    fail(n, build_balanced(n, k, 0),
                         "rad(B(" + std::to_string(n) + "," + std::to_string(k) + "))=" + std::to_string(rad[k]) +
                             " above rad(B(" + std::to_string(n) + "," + std::to_string(l) +
                             "))=" + std::to_string(rad[l]));
            }
    }
}

Graph sample_graph(const VerifyOptions& o, int n, int index) {
    const std::uint64_t stream = mix_seed(o.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(index));
    Rng rng(stream);
    const std::int64_t capacity = static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
    auto extra = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(capacity) + 1));
    return random_connected_graph(n, extra, rng.next());
}

void check_graph(TheoremId id, const Graph& g, SweepOutput& out) {
    auto fail = [&](std::string details) {
        out.counterexamples[slot(id)].push_back({g.order(), to_edge_line(g), std::move(details)});
    };
    ++out.examined[slot(id)];
    auto rep = graph_bounds_check(g);
    auto degree_tree = max_degree_spanning_tree(g);
    if (max_degree(degree_tree.tree) != rep.k)
        fail("max-degree spanning tree has degree " + std::to_string(max_degree(degree_tree.tree)) + " != " +
             std::to_string(rep.k));
    // A spanning tree never shortens a distance.
    auto dg = all_pairs_distances(g);
    auto dt = all_pairs_distances(degree_tree.tree);
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < g.order(); ++b)
            if (dg(a, b) > dt(a, b)) {
                fail("dist_G(" + std::to_string(a) + "," + std::to_string(b) + ") exceeds the spanning-tree distance");
                a = g.order();
                break;
            }

    if (id == TheoremId::GraphRadius) {
        if (!rep.radius_lower_ok)
            fail("rad=" + std::to_string(rep.radius) + " < rad(B)=" + std::to_string(rep.radius_lo));
        if (!rep.radius_upper_ok)
            fail("rad=" + std::to_string(rep.radius) + " > rad(S)=" + std::to_string(rep.radius_hi));
        if (!rep.balanced_radius_ok.value_or(true)) fail("contains B(n,k) but rad != rad(B)");
        if (!rep.upper_is_extremal.value_or(true)) fail("rad at the upper bound but the tree is not extremal");
        auto cert = radius_preserving_spanning_tree(g);
        int rt = radius(cert.tree).radius;
        if (rt != rep.radius)
            fail("radius-preserving tree has rad " + std::to_string(rt) + " != " + std::to_string(rep.radius));
        if (radius(degree_tree.tree).radius < rep.radius) fail("spanning tree radius below rad(G)");
    } else {
        if (!rep.status_lower_ok)
            fail("s=" + std::to_string(rep.status) + " < s(B)=" + std::to_string(rep.status_lo));
        if (!rep.status_upper_ok)
            fail("s=" + std::to_string(rep.status) + " > s(S)=" + std::to_string(rep.status_hi));
        if (!rep.balanced_status_ok.value_or(true)) fail("s = s(B) does not match k-balanced containment");
        if (!rep.upper_is_broom.value_or(true)) fail("s = s(S) but the tree is not S(n,k)");
        auto cert = status_preserving_spanning_tree(g);
        Status st = graph_status(cert.tree).status;
        if (st != rep.status)
            fail("status-preserving tree has s " + std::to_string(st) + " != " + std::to_string(rep.status));
        if (graph_status(degree_tree.tree).status < rep.status) fail("spanning tree status below s(G)");
    }
}

void run_graph_sweeps(const std::vector<TheoremId>& ids, const VerifyOptions& o, SweepOutput& total) {
    if (ids.empty()) return;
    for (int n = 4; n <= o.n_max; ++n) {
        std::vector<SweepOutput> per_graph(static_cast<std::size_t>(o.graphs_per_order));
        parallel_for(o.jobs, per_graph.size(), [&](std::size_t i) {
            Graph g = sample_graph(o, n, static_cast<int>(i));
            for (TheoremId id : ids) check_graph(id, g, per_graph[i]);
        });
        for (auto& r : per_graph)
            for (TheoremId id : ids) {
                auto s = slot(id);
                auto& dst = total.counterexamples[s];
                dst.insert(dst.end(), r.counterexamples[s].begin(), r.counterexamples[s].end());
                total.examined[s] += r.examined[s];
            }
    }
}

VerificationReport make_report(TheoremId id, const VerifyOptions& o, SweepOutput& out, double elapsed_ms) {
    VerificationReport r;
    r.theorem = id;
    r.n_min = first_order(id);
    r.n_max = o.n_max;
    r.trees_examined = out.examined[slot(id)];
    r.moves_examined = out.moves[slot(id)];
    r.jobs = o.jobs;
    r.counterexamples = std::move(out.counterexamples[slot(id)]);
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.elapsed_ms = elapsed_ms;
    return r;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<VerificationReport> run(const std::vector<TheoremId>& ids, const VerifyOptions& o) {
    validate(o);
    std::vector<TheoremId> tree_ids, graph_ids;
    bool monotonicity = false;
    for (TheoremId id : ids) {
        if (is_tree_theorem(id))
            tree_ids.push_back(id);
        else if (id == TheoremId::MonotonicityLemma)
            monotonicity = true;
        else
            graph_ids.push_back(id);
    }
    SweepOutput out;
    std::array<double, kTheoremCount> elapsed{};
    auto t0 = Clock::now();
    run_tree_sweeps(tree_ids, o, out);
    for (TheoremId id : tree_ids) elapsed[slot(id)] = ms_since(t0);
    auto t1 = Clock::now();
    if (monotonicity) run_monotonicity(o, out);
    elapsed[slot(TheoremId::MonotonicityLemma)] = ms_since(t1);
    auto t2 = Clock::now();
    run_graph_sweeps(graph_ids, o, out);
    for (TheoremId id : graph_ids) elapsed[slot(id)] = ms_since(t2);

    std::vector<VerificationReport> reports;
    for (TheoremId id : ids) reports.push_back(make_report(id, o, out, elapsed[slot(id)]));
    return reports;
}

}  // namespace

VerificationReport verify(TheoremId id, const VerifyOptions& options) { return run({id}, options).front(); }

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
    return run({kAllTheorems.begin(), kAllTheorems.end()}, options);
}

}  // namespace radstat
