#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eforge {

/// Dispatch `entangler-forge <analyze|synthesize|verify|bound|oracle>`.
/// Returns the process exit code: 0 ok, 1 verification failed, 2 parse/usage
/// error, 3 not unitary, 4 regime violation (not entangling, perfect
/// entangler where forbidden, ...). Errors print machine-readable JSON on
/// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eforge
