#pragma once

#include "supermod/possys.hpp"
#include "supermod/rootsys.hpp"
#include "supermod/sympoly.hpp"
#include "supermod/weylgroup.hpp"

namespace supermod {

// Thrown by linkage when lambda is atypical (the proposition's hypothesis
// fails, which must be distinguishable from a negative answer).
struct AtypicalWeightError : std::runtime_error {
    explicit AtypicalWeightError(const std::string& what) : std::runtime_error(what) {}
};

bool is_W_invariant(const WeylGroup& w, const SymPoly& phi);

// Membership in I(h): phi must be W-invariant (else std::invalid_argument),
// and phi(lambda + t*alpha) - phi(lambda) must vanish identically on the
// hyperplane lambda in <alpha>-perp for every isotropic root alpha. Tested
// symbolically, never by sampling.
bool in_I_h(const SuperRootSystem& sys, const WeylGroup& w, const SymPoly& phi);

// g = prod over isotropic roots alpha of the linear form (., alpha).
SymPoly g_polynomial(const SuperRootSystem& sys);

// (lambda+rho, alpha) != 0 for every isotropic alpha.
bool is_typical(const SuperRootSystem& sys, const Weight& lambda_plus_rho);

// chi_lambda == chi_mu test at typical lambda: mu+rho in W(lambda+rho).
// Throws AtypicalWeightError when lambda is atypical.
bool linkage(const SuperRootSystem& sys, const WeylGroup& w, const Weight& rho, const Weight& lambda,
             const Weight& mu);

// Orbit-symmetrized power sum of degree d of the W-orbit of seed: used as a
// convenient supply of W-invariants in tests and verification.
SymPoly orbit_power_sum(const WeylGroup& w, const Weight& seed, int d);

} // namespace supermod
