#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellint::cli {

/// Exit codes: 0 all requested verifications pass, 1 any failure,
/// 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellint::cli
