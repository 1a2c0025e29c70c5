#pragma once

#include <iosfwd>

namespace bspline::cli {

/// Process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_invariant_failure = 1,
    exit_invalid_input = 2,
    exit_io_error = 3,
};

/// Runs the command line; output goes to `out`, diagnostics to `err`.
///
///   basis-matrix --degree K [--knots FILE] [--span J] [--cumulative] [--format json|csv]
///   eval         --spline FILE --tau T [--method coxdeboor|matrix|cumulative] [--derivative N]
///   sample       --spline FILE --n N --out FILE.csv
///   check        [--degree-max K] [--trials T] [--seed S]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bspline::cli
