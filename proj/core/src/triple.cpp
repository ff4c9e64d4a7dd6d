#include "conic/triple.hpp"

#include <stdexcept>

namespace conic {

Triple make_triple(const Int& D, const Int& a, const Int& b, const Int& c) {
  if (D < 1) throw std::invalid_argument("make_triple: D must be >= 1");
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("make_triple: components must be positive");
  if (a * a + D * b * b != c * c)
    throw std::invalid_argument("make_triple: a^2 + D b^2 != c^2");
  if (gcd(gcd(a, b), c) != 1)
    throw std::invalid_argument("make_triple: gcd(a, b, c) != 1");
  if (D == 1 && a > b)
    throw std::invalid_argument("make_triple: D = 1 requires a <= b");
  return Triple{D, a, b, c};
}

bool triple_less(const Triple& l, const Triple& r) {
  if (l.a != r.a) return l.a < r.a;
  if (l.b != r.b) return l.b < r.b;
  return l.c < r.c;
}

}  // namespace conic
