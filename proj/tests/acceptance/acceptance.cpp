// Runs every acceptance criterion and prints one line per criterion.
// Exits nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "jamesgeo/suite.hpp"

int main(int argc, char** argv) {
    jamesgeo::suite::Options options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

    int failed = 0;
    for (int id = 1; id <= jamesgeo::suite::kCriterionCount; ++id) {
        const auto result = jamesgeo::suite::run_criterion(id, options);
        std::printf("%s\n", jamesgeo::suite::format_line(result).c_str());
        std::fflush(stdout);
        if (!result.passed) ++failed;
    }
    std::printf("%d/%d criteria passed\n", jamesgeo::suite::kCriterionCount - failed,
                jamesgeo::suite::kCriterionCount);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
