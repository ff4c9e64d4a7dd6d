#pragma once

#include <vector>

#include "conic/arith.hpp"
#include "conic/triple.hpp"

namespace conic {

/// Ground-truth solver: every normalized (a, b, c) with a, b >= 1 found
/// by scanning b and testing c^2 - D b^2 for perfect squarehood, with the
/// literal gcd(a, b, c) = 1 filter. Deliberately shares nothing with the
/// group-theoretic enumeration beyond the Triple type. Sorted ascending
/// by a; for D = 1 each unordered pair appears once with a <= b.
std::vector<Triple> brute_force_solutions(const Int& D, const Int& c);

}  // namespace conic
