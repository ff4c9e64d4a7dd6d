#include "conic/arith.hpp"

#include <map>
#include <stdexcept>

namespace conic {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int integer_sqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt: negative input");
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

std::optional<Int> is_perfect_square(const Int& n) {
  if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return integer_sqrt(n);
}

namespace {

constexpr long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Largest n for which kWitnesses is a proven-exact Miller-Rabin base set.
const Int& miller_rabin_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

// True if a witnesses that odd n > 1 is composite; n - 1 = d * 2^r, d odd.
bool mr_composite_witness(const Int& n, long a, const Int& d, mp_bitcnt_t r) {
  Int x, base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (mp_bitcnt_t i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 1) throw std::invalid_argument("is_prime: n must be >= 1");
  if (n == 1) return false;
  for (long p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n >= miller_rabin_bound())
    throw std::domain_error("is_prime: n exceeds the deterministic witness range");
  Int d = n - 1;
  const mp_bitcnt_t r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  for (long a : kWitnesses)
    if (mr_composite_witness(n, a, d, r)) return false;
  return true;
}

Int PrimeFactorization::value() const {
  Int v = 1;
  Int pe;
  for (const auto& [p, e] : factors) {
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

namespace {

constexpr unsigned long kTrialBound = 100000;

// Brent's variant of Pollard rho with the polynomial parameter stepped
// deterministically 1, 2, 3, ... until a proper factor appears. Callers
// guarantee n is an odd composite with no factor below kTrialBound, so a
// proper factor exists and the loop terminates.
Int rho_factor(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one squaring at a time to recover the factor.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  const Int d = rho_factor(n);
  factor_into(d, acc);
  factor_into(n / d, acc);
}

}  // namespace

PrimeFactorization factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<Int, unsigned> acc;
  Int rem = n;
  for (unsigned long d = 2; d <= kTrialBound; d = (d == 2 ? 3 : d + 2)) {
    if (Int(d) * d > rem) break;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
      ++acc[Int(d)];
      rem /= d;
    }
  }
  if (rem > 1) {
    if (Int(kTrialBound) * kTrialBound > rem) {
      ++acc[rem];  // below the trial square, so rem is prime
    } else {
      factor_into(rem, acc);
    }
  }
  PrimeFactorization pf;
  pf.factors.assign(acc.begin(), acc.end());
  return pf;
}

int kronecker(const Int& a, const Int& n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

}  // namespace conic
