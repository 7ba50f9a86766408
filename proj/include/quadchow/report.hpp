#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quadchow/verify.hpp"

namespace quadchow {

/// {"check", "params": {n, m, j, t, d, ...extra}, "status", "residual": [{"coeff", "monomial"}], "duration_ms"}
nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports);

/// One table per check, rows in report order.
std::string to_markdown(const std::vector<VerificationReport>& reports);

}  // namespace quadchow
