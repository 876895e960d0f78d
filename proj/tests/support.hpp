#pragma once

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "radstat/enumerate.hpp"
#include "radstat/graph.hpp"

namespace testing_support {

inline oracle::EdgeList edge_list(const radstat::Graph& g) {
    oracle::EdgeList out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

inline radstat::Tree tree_of(int n, const oracle::EdgeList& edges) {
    std::vector<radstat::Edge> es;
    for (auto [a, b] : edges) es.emplace_back(a, b);
    return radstat::Tree(n, std::move(es));
}

inline std::vector<radstat::Vertex> random_permutation(int n, radstat::Rng& rng) {
    std::vector<radstat::Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

// Every free tree of orders lo..hi, one per class.
inline std::vector<radstat::Tree> trees_up_to(int lo, int hi) {
    std::vector<radstat::Tree> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& t : radstat::free_trees(n)) out.push_back(std::move(t));
    return out;
}

}  // namespace testing_support
