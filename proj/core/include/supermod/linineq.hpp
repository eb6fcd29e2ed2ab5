#pragma once

#include "supermod/rational.hpp"

#include <optional>
#include <vector>

namespace supermod {

// Exact Fourier-Motzkin feasibility for homogeneous strict systems
//   a_i . x > 0  for every row a_i.
// Returns a rational witness x when the system is feasible.
std::optional<std::vector<Rational>> fm_strict_witness(std::vector<std::vector<Rational>> rows);

} // namespace supermod
