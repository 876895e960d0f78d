#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radstat {

enum class Errc {
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    NotATree,
    VertexOutOfRange,
    SingletonTree,
    InvalidParams,
    InvalidHubPosition,
    InvalidVariant,
    NotALeaf,
    TargetIsNeighbor,
    TargetIsSelf,
    NotACentroid,
    NoProgress,
    FormulaMismatch,
    OrderTooLarge,
    TooManyEdges,
};

std::string_view errc_name(Errc code);

// Domain error carrying a machine-readable code. Everything the library
// rejects (bad input, violated preconditions, a theorem that failed to hold)
// surfaces as one of these.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace radstat
