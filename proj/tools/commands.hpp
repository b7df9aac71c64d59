#pragma once

#include <iosfwd>

namespace dsmt::cli {

// Runs one CLI invocation. Returns the process exit status; diagnostics go to
// `err` as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Embedded reference checks behind `dsmt verify`; one PASS/FAIL line each.
int run_verify(std::ostream& out);

}  // namespace dsmt::cli
