#include "conic/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace conic {

std::vector<Triple> brute_force_solutions(const Int& D, const Int& c) {
  if (D < 1) throw std::invalid_argument("brute_force_solutions: D must be >= 1");
  if (c < 1) throw std::invalid_argument("brute_force_solutions: c must be >= 1");
  std::vector<Triple> out;
  // b <= sqrt((c^2 - 1)/D) keeps a >= 1 by construction.
  const Int bmax = integer_sqrt((c * c - 1) / D);
  for (Int b = 1; b <= bmax; ++b) {
    const auto a = is_perfect_square(c * c - D * b * b);
    if (!a || *a < 1) continue;
    if (D == 1 && *a > b) continue;  // emit each unordered pair once, a <= b
    if (gcd(gcd(*a, b), c) != 1) continue;
    out.push_back(Triple{D, *a, b, c});
  }
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

}  // namespace conic
