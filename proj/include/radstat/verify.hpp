#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radstat {

enum class TheoremId {
    RadiusLower,
    StatusLower,
    RadiusUpper,
    StatusUpper,
    Zelinka,
    Lemma1,
    Inequality2,
    Prop1,
    Prop2,
    MonotonicityLemma,
    GraphRadius,
    GraphStatus,
};

inline constexpr std::array<TheoremId, 12> kAllTheorems = {
    TheoremId::RadiusLower, TheoremId::StatusLower, TheoremId::RadiusUpper,      TheoremId::StatusUpper,
    TheoremId::Zelinka,     TheoremId::Lemma1,      TheoremId::Inequality2,      TheoremId::Prop1,
    TheoremId::Prop2,       TheoremId::MonotonicityLemma, TheoremId::GraphRadius, TheoremId::GraphStatus,
};

std::string_view theorem_name(TheoremId id);
/// Case-insensitive match on theorem_name.
std::optional<TheoremId> parse_theorem(std::string_view name);

// Deliberate faults for checking that the harness can fail.
enum class Mutation {
    None,
    RadiusUpperOffByOne,   // compare against ceil((n-k+1)/2) - 1
    StatusLowerOffByOne,   // compare against s(B) + 1
    PredictionIgnoresMove, // always predict the old centroid vertex
};

struct VerifyOptions {
    int n_max = 10;
    std::uint64_t seed = 1;
    int jobs = 1;
    int graphs_per_order = 1000;
    Mutation mutation = Mutation::None;
};

struct Counterexample {
    int n = 0;
    std::string edges;  // "u v;u v;..." replayable through the CLI
    std::string details;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
    friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::RadiusLower;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t trees_examined = 0;  // trees or graphs, per theorem
    std::uint64_t moves_examined = 0;  // Prop1 / Prop2 only
    int jobs = 1;
    std::vector<Counterexample> counterexamples;  // sorted
    double elapsed_ms = 0.0;

    bool passed() const { return counterexamples.empty(); }
};

/// Runs one theorem's sweep. Throws OrderTooLarge past kMaxEnumerationOrder
/// and InvalidParams for jobs < 1.
VerificationReport verify(TheoremId id, const VerifyOptions& options);

/// Runs all twelve sweeps, sharing one enumeration pass for the per-tree
/// theorems. Results match verify() per theorem except for timing.
std::vector<VerificationReport> verify_all(const VerifyOptions& options);

}  // namespace radstat
