#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobcat::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
  kOk = 0,
  kNegative = 1,      // a check failed, not Frobenius, or the lift failed
  kInputError = 2,    // unreadable or invalid input, unknown name
  kInconclusive = 3,  // randomized search found no nondegenerate form
  kNotConnected = 4,
  kCapacity = 5,      // exact mode refused the input
  kInternal = 6,
};

/// Runs one invocation; `args` excludes the program name. The JSON report
/// goes to `out` and the human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by the demo subcommand.
std::vector<std::string> demo_names();

}  // namespace frobcat::cli
