#pragma once

#include "supermod/possys.hpp"
#include "supermod/rootsys.hpp"

#include <json.hpp>

#include <map>

namespace supermod {

// rho = (1/2) sum P_0 - (1/2) sum P_1.
Weight rho(const PositiveSystem& p);
// (1/2) sum of the even part of P.
Weight rho0(const PositiveSystem& p);
// Half sums over the compact / noncompact-even parts.
Weight rho_k0(const HermitianPair& pair, const PositiveSystem& p);
Weight rho_n0(const HermitianPair& pair, const PositiveSystem& p);

// lambda with lambda(H_alpha) a nonnegative integer for every alpha in P_k.
struct HighestWeight {
    HermitianPair pair;
    PositiveSystem P;
    Weight lambda;

    HighestWeight(HermitianPair pair_, PositiveSystem p_, Weight lambda_);
};

bool is_k_dominant_integral(const HermitianPair& pair, const PositiveSystem& p, const Weight& lambda);

// Finite-dimensional irreducible k-module of highest weight lambda: weight
// multiplicities by Freudenthal recursion per compact simple factor (the
// center acts by lambda).
struct KModule {
    Weight highest;
    std::map<Weight, long long> mult;
    long long dim = 0;
};

KModule build_k_module(const HighestWeight& hw);

// Weyl dimension formula over the compact positive roots (test oracle lives
// in the tests; this is the production-side value used for cross-checks).
Rational weyl_dimension(const HermitianPair& pair, const PositiveSystem& p, const Weight& lambda);

// Height of a drop with respect to the simple roots of P (coefficient sum).
// Throws if the drop is not a nonnegative integral combination.
class HeightMap {
public:
    HeightMap() = default;
    explicit HeightMap(const SimpleSystem& simple);
    // Exact expansion coefficients over the simple roots.
    std::vector<Rational> expand(const Weight& drop) const;
    long long height(const Weight& drop) const;
    const SimpleSystem& simple() const { return simple_; }

private:
    SimpleSystem simple_;
    Mat pseudo_; // solves S c = drop via precomputed RREF data
    std::vector<size_t> pivots_;
    Mat reduced_;
};

// Truncated formal character: terms index mu by the actual weight; every key
// satisfies height(base - mu) <= height_bound.
struct FormalCharacter {
    Weight base;
    long long height_bound = 0;
    SimpleSystem simple_basis;
    std::map<Weight, long long> terms;

    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
        return a.base == b.base && a.height_bound == b.height_bound && a.terms == b.terms;
    }
};

// Weyl-group expansion of ch(U^lambda): the alternating W_k-sum over
// e^{s(lambda+rho_0)} divided by the even Weyl denominator, times the odd
// product, all expanded as truncated geometric series.
FormalCharacter character_formula(const HighestWeight& hw, long long depth);

// PBW-monomial enumeration convolved with the k-module weights; serves as
// the independent oracle for character_formula.
FormalCharacter character_bruteforce(const HighestWeight& hw, long long depth);

// (lambda+rho)(H_gamma) <= 0 for all noncompact positive gamma, strictly
// negative for isotropic gamma.
bool check_irreducibility_criterion(const HighestWeight& hw);

nlohmann::json character_to_json(const FormalCharacter& ch);

} // namespace supermod
