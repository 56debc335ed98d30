#pragma once

// Command-line front end. Every subcommand prints one JSON document to `out`;
// tables additionally go to CSV files when an output directory is given
// (--out, or the JAMESGEO_OUT_DIR environment variable).

#include <ostream>

namespace jamesgeo::cli {

enum ExitCode : int {
    kOk = 0,
    kChecksFailed = 1,   // suite --strict with a failing criterion
    kUsage = 2,
    kInvalidInput = 3,
    kPrecondition = 4,
    kResource = 5,
    kUnsupported = 6,
    kInternal = 70,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jamesgeo::cli
