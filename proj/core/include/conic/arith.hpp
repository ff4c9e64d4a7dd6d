#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace conic {

/// Exact integer type used throughout. Arbitrary precision, so the
/// c^4-scale intermediates that show up in norm checks can never wrap.
using Int = mpz_class;

/// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

/// Largest s with s*s <= n. Negative input is a contract violation.
Int integer_sqrt(const Int& n);

/// The exact root if n is a perfect square, otherwise empty.
std::optional<Int> is_perfect_square(const Int& n);

/// Deterministic primality for 1 <= n < 3.3e24 (fixed Miller-Rabin
/// witness set, exact on that range). Larger inputs throw
/// std::domain_error instead of degrading to a probabilistic answer.
bool is_prime(const Int& n);

struct PrimeFactorization {
  /// (prime, exponent) pairs, primes strictly ascending, exponents >= 1.
  std::vector<std::pair<Int, unsigned>> factors;

  /// Recompose the factored integer.
  Int value() const;
};

/// Canonical factorization of n >= 1; factorize(1) has an empty list.
PrimeFactorization factorize(const Int& n);

/// Kronecker symbol (a|n) for n >= 1. Coincides with the Legendre symbol
/// for odd prime n not dividing a; 0 whenever gcd(a, n) > 1.
int kronecker(const Int& a, const Int& n);

}  // namespace conic
