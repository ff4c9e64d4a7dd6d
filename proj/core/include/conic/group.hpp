#pragma once

#include <utility>
#include <vector>

#include "conic/arith.hpp"
#include "conic/triple.hpp"

namespace conic {

/// A reduced norm-one element (a + b sqrt(-D))/c of G_D(Q):
/// a^2 + D b^2 = c^2, c >= 1, gcd(a, b) = 1 except the identity and its
/// negation, stored as (+-1, 0, 1). Immutable value; all invariants are
/// checked on construction.
class GroupElement {
 public:
  GroupElement(Int D, Int a, Int b, Int c);

  static GroupElement identity(const Int& D) { return {D, 1, 0, 1}; }

  const Int& D() const { return d_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  friend bool operator==(const GroupElement& l, const GroupElement& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

 private:
  Int d_, a_, b_, c_;
};

/// Divides (a, b, c) through by gcd(a, b) before constructing, so scaled
/// inputs such as (146, 24, 286) land on their reduced representative.
GroupElement make_element(const Int& D, const Int& a, const Int& b, const Int& c);

/// Canonical generator: element (x0 + y0 sqrt(-D))/p with x0, y0 > 0.
struct ZetaGenerator {
  Int p;
  GroupElement element;
};

/// sign * prod zeta_p^e, primes ascending, every e nonzero. For an
/// element of denominator prod p^alpha the exponents satisfy |e| = alpha.
struct FactorizationResult {
  int sign = 1;
  std::vector<std::pair<Int, long>> factors;

  friend bool operator==(const FactorizationResult& l, const FactorizationResult& r) {
    return l.sign == r.sign && l.factors == r.factors;
  }
};

/// One enumerated solution: the normalized triple, the orbit element the
/// reported factorization applies to, and that factorization.
struct NormalizedSolution {
  Triple triple;
  GroupElement element;
  FactorizationResult representative;
};

/// The unique pair a, b > 0 with a^2 + D b^2 = p^2 and gcd(a, b) = 1,
/// for an odd prime p with kronecker(-D, p) = 1 (for D = 1 the pair is
/// reported with a <= b). The scan runs the full range and raises
/// theorem_violation if zero or two pairs appear.
///
/// Unless allow_unverified_d is set, D must pass is_theorem_applicable.
std::pair<Int, Int> unique_prime_solution(const Int& D, const Int& p,
                                          bool allow_unverified_d = false);

/// zeta_p = (x0 + y0 sqrt(-D))/p from unique_prime_solution.
ZetaGenerator zeta(const Int& D, const Int& p, bool allow_unverified_d = false);

/// Complex-style product, reduced: both elements must share the same D.
GroupElement multiply(const GroupElement& z1, const GroupElement& z2);

/// (a, -b, c); an involution, and the group inverse since the norm is 1.
GroupElement conjugate(const GroupElement& z);

/// (-a, -b, c); an involution.
GroupElement negate(const GroupElement& z);

/// z^n for any signed n; negative exponents go through the conjugate.
GroupElement power(const GroupElement& z, long n);

/// The normalized triple (|a|, |b|, c) of a nontrivial element, with the
/// D = 1 pair swapped into a <= b order. All Gamma-images of z (and for
/// D = 1 its unit multiples) map to the same triple. Trivial points
/// (b = 0, or a = 0 when D = 1) raise trivial_point_error.
Triple to_triple(const GroupElement& z);

/// Expresses z as sign * prod zeta_p^e by peeling one generator at a
/// time off the denominator. Requires kronecker(-D, p) = 1 for every
/// prime p of the denominator. The reconstruction is asserted before
/// returning. For D = 1, elements that need the unit i raise
/// unit_obstruction_error; see factor_orbit_representative.
FactorizationResult factor_element(const GroupElement& z, bool allow_unverified_d = false);

/// The member of z's orbit (under negation, conjugation, and for D = 1
/// the units) that admits an exact +-prod zeta^e expression with positive
/// numerator components, together with that factorization. For D > 1
/// this is the positive-component element itself.
std::pair<GroupElement, FactorizationResult> factor_orbit_representative(
    const GroupElement& z, bool allow_unverified_d = false);

/// Evaluates sign * prod zeta_p^e.
GroupElement reconstruct(const Int& D, const FactorizationResult& f,
                         bool allow_unverified_d = false);

/// All normalized solutions (a, b, c) for the given c > 1, each paired
/// with the factorization of its orbit representative. Empty when some
/// prime of c fails the symbol test; otherwise exactly 2^(k-1) entries
/// where k counts the distinct primes of c. Sorted ascending by a.
std::vector<NormalizedSolution> enumerate_normalized(const Int& D, const Int& c,
                                                     bool allow_unverified_d = false);

/// 0 if some prime of c fails the symbol test, else 2^(k-1).
Int count_normalized(const Int& D, const Int& c, bool allow_unverified_d = false);

}  // namespace conic
