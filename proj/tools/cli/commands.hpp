#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace seifert::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,         // bad flags, unreadable or malformed spec
  kInvalidModel = 3,  // NonUnimodular, NotCharacteristic, NotSymmetric, ...
  kOddSmale = 4,      // compression obstructed
  kGoldenMismatch = 5,
};

/// Runs the command line `args` (without the program name). stdout-bound output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// All builder families used by `table`, in output order.
std::vector<InvariantReport> invariant_table_rows();

/// Text rendering of the table (header + one row per report).
std::string render_table(const std::vector<InvariantReport>& rows);

/// Golden copy of render_table(invariant_table_rows()) compiled into the binary.
std::string_view embedded_golden_table();

}  // namespace seifert::cli
