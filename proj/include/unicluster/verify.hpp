#pragma once

#include "unicluster/repio.hpp"

#include <cstdint>

namespace unicluster {

struct CheckResult {
    int criterion;
    std::string name;
    bool pass;
    std::string detail;  // names the violated statement on failure
};

inline constexpr std::uint64_t kDefaultSeed = 37;

// Criteria by number (1..10); throws on unknown numbers.
CheckResult run_criterion(int number, std::uint64_t seed = kDefaultSeed);

// Suites: ext {1,4}, char {2,3,9}, exchange {5,6,7}, positivity {8},
// fold {10}, all {1..10}.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed);

// Deterministic sample streams used by the positivity criterion.
struct SampleRng {
    std::uint64_t state;
    explicit SampleRng(std::uint64_t seed);
    std::uint64_t next();
    long next_in(long lo, long hi);  // inclusive
    Rational next_rational(long max_abs_num, long max_den);          // any sign
    Rational next_positive_rational(long max_num, long max_den);     // > 0
};

RatUniMat random_unitriangular(SampleRng& rng);
RatUniMat random_positive_parametrized(SampleRng& rng, const Word& w);

}  // namespace unicluster
