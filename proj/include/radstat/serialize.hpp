#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "radstat/centrality.hpp"
#include "radstat/spanning.hpp"
#include "radstat/transform.hpp"
#include "radstat/verify.hpp"

namespace radstat {

using Json = nlohmann::ordered_json;

Json to_json(const CentralityReport& r);
Json to_json(const std::vector<TraceStep>& trace);
Json to_json(const SpanningCertificate& c);
Json to_json(const GraphBoundsReport& r);
/// elapsed_ms is left out when include_timing is false so that reports can be
/// compared byte for byte.
Json to_json(const VerificationReport& r, bool include_timing = true);
Json to_json(const std::vector<VerificationReport>& reports, bool include_timing = true);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace radstat
