#pragma once

#include <chrono>
#include <vector>

#include <json.hpp>

#include "ctsum/verify.hpp"

namespace ctsum::cli {

/// {"identities": [...], "summary": {"pass", "failures"}, "timing_ms"}.
/// Every number derived from the computation is an exact "p/q" string.
nlohmann::ordered_json report_to_json(const std::vector<VerificationReport>& reports, std::chrono::milliseconds timing);

}  // namespace ctsum::cli
