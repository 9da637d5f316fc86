#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ellint/catalog.hpp"

namespace ellint {

/// Report records are the evaluated results (skipped domain points are not
/// serialized). Fields: id, params, lhs, rhs, abs_err, rel_err, pass, evals,
/// elapsed_ms. Non-finite numbers are written as null.
std::string to_json(const std::vector<VerificationResult>& results);
std::string to_csv(const std::vector<VerificationResult>& results);
std::string to_text(const std::vector<VerificationResult>& results);

/// Parses a JSON report; throws std::invalid_argument on schema violations.
std::vector<VerificationResult> from_json(const std::string& text);

/// "k=0.5;m=1"
std::string format_params(const Params& p);
/// Shortest decimal string that round-trips.
std::string format_double(double v);

}  // namespace ellint
