// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdlib>
#include <iostream>

#include "verify/acceptance.hpp"

int main(int argc, char** argv) {
    tinkit::verify::AcceptanceOptions options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
    tinkit::verify::Acceptance acceptance(options);
    bool all = true;
    acceptance.run_all([&](const tinkit::verify::CriterionResult& r) {
        std::cout << tinkit::verify::format_line(r) << std::endl;
        all = all && r.pass;
    });
    return all ? 0 : 1;
}
