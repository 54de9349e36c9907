#pragma once

#include <iosfwd>
#include <string>

namespace mg {

struct AcceptanceOptions {
    int threads = 0;  // 0: current worker_count()
    uint64_t seed = 20260809;
    std::string scratch_dir = ".";  // where the determinism trial keeps its cache file
};

struct AcceptanceReport {
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

// Runs every acceptance criterion, printing one PASS/FAIL line per criterion.
AcceptanceReport run_acceptance(const AcceptanceOptions& opts, std::ostream& out);

}  // namespace mg
