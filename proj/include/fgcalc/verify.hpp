#pragma once

#include <string>

namespace fgc {

struct SuiteResult {
    bool ok;
    std::string report; // deterministic, newline-terminated PASS/FAIL lines
};

// Named verification suites. Each prints one line per sub-case and a final
// summary line; on failure the report carries the first discrepancy.
SuiteResult verify_hopf(unsigned order);            // default 8
SuiteResult verify_additive(unsigned order);        // default 8
SuiteResult verify_integrality(unsigned max_n);     // default 10
SuiteResult verify_divisibility(unsigned max_k);    // default 12
SuiteResult verify_symfunc_suite(unsigned max_deg); // default 12
SuiteResult verify_roundtrip(unsigned order);       // default 12

} // namespace fgc
