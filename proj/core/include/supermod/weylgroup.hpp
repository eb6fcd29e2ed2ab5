#pragma once

#include "supermod/linalg.hpp"
#include "supermod/rootsys.hpp"

#include <set>
#include <vector>

namespace supermod {

// Finite reflection group acting on weight coordinates. Generators are
// reflections in non-isotropic roots; elements are enumerated on demand.
struct WeylGroup {
    size_t dim = 0;
    std::vector<Mat> gens;
    std::vector<Mat> elements; // identity first
    std::vector<int> signs;    // det(element), +1/-1

    size_t order() const { return elements.size(); }
};

// Reflection in a non-isotropic root gamma.
Mat reflection_matrix(const SuperRootSystem& sys, const Root& gamma);

// Group generated by reflections in the given roots (all non-isotropic).
WeylGroup weyl_group_from_roots(const SuperRootSystem& sys, const std::vector<Root>& gens);

// Weyl group of the even part g_0 (reflections in all even roots).
WeylGroup even_weyl_group(const SuperRootSystem& sys);

// Orbit under the generators, by closure (no full enumeration needed).
std::set<Weight> weyl_orbit(const WeylGroup& w, const Weight& lambda);

} // namespace supermod
