#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "radstat/graph.hpp"

namespace radstat {

// Largest order free_trees accepts. There are 823065 free trees of order 20.
inline constexpr int kMaxEnumerationOrder = 20;

/// AHU string of the tree rooted at its center: '(' + sorted child codes + ')'.
/// Bicentral trees take the smaller of the two rootings. Equal codes iff the
/// trees are isomorphic.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const Tree& t);
bool are_isomorphic(const Tree& a, const Tree& b);

/// Center of a tree by repeated leaf stripping (one or two adjacent vertices).
std::vector<Vertex> tree_center(const Tree& t);

/// Generates one representative of every isomorphism class of free trees of
/// a given order, walking canonical level sequences in the successor order of
/// Wright, Richmond, Odlyzko and McKay (rooted at the center, so each class
/// appears exactly once).
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n);

    /// Next tree, or nullopt when exhausted.
    std::optional<Tree> next();

    /// Level sequence of the last tree returned by next().
    const std::vector<int>& level_sequence() const { return current_; }

private:
    int n_;
    std::vector<int> layout_;
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Tree> free_trees(int n);
void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

/// Tree whose vertex i hangs from the last earlier vertex one level up.
Tree tree_from_level_sequence(std::span<const int> levels);

/// Prüfer codec on labeled trees; sequences have length n - 2.
Tree tree_from_pruefer(int n, std::span<const Vertex> sequence);
std::vector<Vertex> pruefer_sequence(const Tree& t);

/// Seeded generator for every randomized routine in the library:
/// std::mt19937_64 (fully specified by the standard, so identical streams on
/// every platform) with bounded draws by rejection sampling instead of the
/// implementation-defined std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Stable seed derivation for independent sub-streams (SplitMix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

Tree random_tree(int n, Rng& rng);

/// Uniform random labeled tree plus `extra_edges` distinct non-tree edges
/// drawn uniformly; reproducible from `seed`.
Graph random_connected_graph(int n, std::int64_t extra_edges, std::uint64_t seed);

}  // namespace radstat
