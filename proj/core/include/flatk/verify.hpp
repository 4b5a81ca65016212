#pragma once

#include <string>
#include <vector>

namespace flatk {

struct VerifyCase {
    std::string inputs;
    std::string engine;
    std::string oracle;
    bool equal = false;
};

struct VerifyReport {
    std::string suite;
    bool pass = true;
    std::vector<VerifyCase> cases;
};

std::vector<std::string> verify_suite_names();

// suite is one of fusion, disk, shift, lambda, quasi; unknown names throw
// SpecError.
VerifyReport run_verify_suite(const std::string& suite, int threads = 1);

}  // namespace flatk
