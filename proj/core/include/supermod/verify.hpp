#pragma once

#include "supermod/hwmod.hpp"
#include "supermod/possys.hpp"

#include <string>
#include <vector>

namespace supermod {

// Exact finite check of  Delta_{k,0} * ch(F)  ==  sum_s eps(s) e^{s(lambda+rho_{k,0})}.
bool weyl_numerator_identity_holds(const HermitianPair& pair, const PositiveSystem& p, const Weight& lambda);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    size_t budget = 2'000'000; // enumeration guard
    unsigned seed = 2024;
    bool quick = false; // trims the heavier randomized checks
};

// Runs the module-invariant suite; one named result per invariant family.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt);

} // namespace supermod
