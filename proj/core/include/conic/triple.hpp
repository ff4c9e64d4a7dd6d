#pragma once

#include "conic/arith.hpp"

namespace conic {

/// A normalized positive solution (a, b, c) of x^2 + D y^2 = z^2:
/// a, b, c >= 1, a^2 + D b^2 = c^2, gcd(a, b, c) = 1, and a <= b when D = 1.
struct Triple {
  Int D;
  Int a;
  Int b;
  Int c;

  friend bool operator==(const Triple& l, const Triple& r) {
    return l.D == r.D && l.a == r.a && l.b == r.b && l.c == r.c;
  }
};

/// Validating constructor; throws std::invalid_argument when any
/// invariant fails.
Triple make_triple(const Int& D, const Int& a, const Int& b, const Int& c);

/// Ordering used for output: ascending a, ties by b then c.
bool triple_less(const Triple& l, const Triple& r);

}  // namespace conic
