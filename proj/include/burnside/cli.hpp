#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace burnside::cli {

inline constexpr const char* kToolVersion = "0.1.0";
/// Overrides the subgroup enumeration cap when set to a positive integer.
inline constexpr const char* kLatticeCapEnv = "BURNSIDE_LATTICE_CAP";

/// Exit codes: 0 success, 1 domain error, 2 usage error, 3 theorem disagreement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnside::cli
