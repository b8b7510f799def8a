#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amo::cli {

struct VerifyOptions {
    std::optional<int> q_max;
    int k_max = 5;
    double lambda = 2.0;
    std::uint64_t seed = 1;
    int trials = 25;
    unsigned jobs = 0;
    unsigned precision_bits = 0;
};

// kind is PASS, FAIL, ERRATUM, CONJECTURE or INFO; only FAIL affects the exit code.
struct VerifyLine {
    std::string suite;
    std::string kind;
    std::string name;
    std::string detail;
};

std::vector<VerifyLine> verify_combinatorics(const VerifyOptions& o);
std::vector<VerifyLine> verify_continuants(const VerifyOptions& o);
std::vector<VerifyLine> verify_identities(const VerifyOptions& o);
std::vector<VerifyLine> verify_spectrum(const VerifyOptions& o);

} // namespace amo::cli
