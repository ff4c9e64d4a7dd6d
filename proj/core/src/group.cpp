#include "conic/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "conic/errors.hpp"
#include "conic/quadform.hpp"

namespace conic {

GroupElement::GroupElement(Int D, Int a, Int b, Int c)
    : d_(std::move(D)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (d_ < 1) throw std::invalid_argument("GroupElement: D must be >= 1");
  if (c_ < 1) throw hypothesis_error("GroupElement: denominator must be >= 1");
  if (a_ * a_ + d_ * b_ * b_ != c_ * c_)
    throw hypothesis_error("GroupElement: a^2 + D b^2 != c^2");
  if (b_ == 0) {
    if (c_ != 1) throw hypothesis_error("GroupElement: not reduced (b = 0 with c > 1)");
  } else if (gcd(a_, b_) != 1) {
    throw hypothesis_error("GroupElement: not reduced (gcd(a, b) != 1)");
  }
}

GroupElement make_element(const Int& D, const Int& a, const Int& b, const Int& c) {
  if (c < 1) throw hypothesis_error("make_element: denominator must be >= 1");
  if (a * a + D * b * b != c * c)
    throw hypothesis_error("make_element: a^2 + D b^2 != c^2, not a norm-one element");
  const Int g = gcd(a, b);
  if (g == 0) throw hypothesis_error("make_element: a = b = 0 is not on the conic");
  if (g == 1) return {D, a, b, c};
  // g^2 divides a^2 + D b^2 = c^2, so g divides c.
  return {D, a / g, b / g, c / g};
}

namespace {

void require_applicable(const Int& D, bool allow_unverified_d) {
  if (allow_unverified_d) return;
  const auto report = is_theorem_applicable(D);
  if (report.applicable) return;
  std::ostringstream msg;
  msg << "D = " << D << " fails the applicability test (";
  for (std::size_t i = 0; i < report.issues.size(); ++i) {
    if (i) msg << "; ";
    msg << to_string(report.issues[i]);
  }
  msg << "); pass the unverified-D override to proceed anyway";
  throw hypothesis_error(msg.str());
}

bool symbol_ok(const Int& D, const Int& p) {
  return p != 2 && kronecker(-D, p) == 1;
}

// Exhaustive b-scan for the unique positive pair with a^2 + D b^2 = p^2.
// The scan always covers the full range so a second pair cannot hide.
std::pair<Int, Int> prime_solution_scan(const Int& D, const Int& p) {
  std::vector<std::pair<Int, Int>> hits;
  const Int bmax = integer_sqrt((p * p - 1) / D);
  for (Int b = 1; b <= bmax; ++b) {
    const Int t = p * p - D * b * b;
    const auto a = is_perfect_square(t);
    if (!a || *a < 1) continue;
    Int x = *a, y = b;
    if (D == 1 && x > y) std::swap(x, y);
    if (std::find(hits.begin(), hits.end(), std::make_pair(x, y)) == hits.end())
      hits.emplace_back(x, y);
  }
  if (hits.size() != 1)
    throw theorem_violation("lemma violated: expected exactly one normalized solution (a, b, " +
                            p.get_str() + ") and found " + std::to_string(hits.size()));
  return hits.front();
}

unsigned valuation(const Int& n, const Int& p) {
  unsigned v = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

struct StripOutcome {
  std::vector<std::pair<Int, long>> factors;
  GroupElement terminal;
};

// Peels generators off z one at a time until the denominator is 1.
// gens holds (p, zeta_p) ascending and covers every prime of z's
// denominator. Direction per step: if z * zeta_p^-1 drops the p-adic
// valuation of the denominator the exponent gains +1, otherwise
// z * zeta_p must drop it and the exponent gains -1.
StripOutcome strip_generators(GroupElement z, const std::vector<ZetaGenerator>& gens) {
  std::vector<std::pair<Int, long>> factors;
  for (const auto& gen : gens) {
    const Int& p = gen.p;
    unsigned remaining = valuation(z.c(), p);
    const unsigned alpha = remaining;
    const GroupElement inverse = conjugate(gen.element);
    long e = 0;
    while (remaining > 0) {
      GroupElement peeled = multiply(z, inverse);
      if (valuation(peeled.c(), p) == remaining - 1) {
        z = std::move(peeled);
        ++e;
      } else {
        GroupElement other = multiply(z, gen.element);
        if (valuation(other.c(), p) != remaining - 1)
          throw theorem_violation("factorization failed: stripping zeta_" + p.get_str() +
                                  " reduced the denominator in neither direction");
        z = std::move(other);
        --e;
      }
      --remaining;
    }
    if (static_cast<unsigned>(e < 0 ? -e : e) != alpha)
      throw theorem_violation("factorization failed: net exponent of " + p.get_str() +
                              " does not match its multiplicity in the denominator");
    if (e != 0) factors.emplace_back(p, e);
  }
  if (z.c() != 1)
    throw theorem_violation("factorization failed: denominator not exhausted by the generators");
  return {std::move(factors), std::move(z)};
}

FactorizationResult factor_with_generators(const GroupElement& z,
                                           const std::vector<ZetaGenerator>& gens) {
  StripOutcome stripped = strip_generators(z, gens);
  if (stripped.terminal.b() != 0)
    throw unit_obstruction_error(
        "factor_element: element is a unit-i multiple of a generator product (D = 1); "
        "factor its orbit representative instead");
  FactorizationResult result;
  result.sign = stripped.terminal.a() == 1 ? 1 : -1;
  result.factors = std::move(stripped.factors);

  GroupElement rebuilt = GroupElement::identity(z.D());
  for (const auto& [p, e] : result.factors) {
    const auto it = std::find_if(gens.begin(), gens.end(),
                                 [&](const ZetaGenerator& g) { return g.p == p; });
    rebuilt = multiply(rebuilt, power(it->element, e));
  }
  if (result.sign < 0) rebuilt = negate(rebuilt);
  if (!(rebuilt == z))
    throw theorem_violation("factor_element: reconstruction does not reproduce the input");
  return result;
}

GroupElement prime_solution_element(const Int& D, const Int& p) {
  auto [x, y] = prime_solution_scan(D, p);
  return {D, x, y, p};
}

std::vector<ZetaGenerator> generators_for(const Int& D, const PrimeFactorization& pf) {
  std::vector<ZetaGenerator> gens;
  gens.reserve(pf.factors.size());
  for (const auto& [p, e] : pf.factors) {
    auto [x, y] = prime_solution_scan(D, p);
    gens.push_back({p, GroupElement(D, x, y, p)});
  }
  return gens;
}

// Factorization of z with the symbol screen but without the D gate.
FactorizationResult factor_screened(const GroupElement& z) {
  if (z.c() == 1) {
    if (z.b() != 0)
      throw unit_obstruction_error("factor_element: the unit i is not a generator product");
    FactorizationResult r;
    r.sign = z.a() == 1 ? 1 : -1;
    return r;
  }
  const auto pf = factorize(z.c());
  for (const auto& [p, e] : pf.factors)
    if (!symbol_ok(z.D(), p))
      throw hypothesis_error("outside theorem hypotheses: prime " + p.get_str() +
                             " of the denominator has kronecker(-D, p) != 1");
  return factor_with_generators(z, generators_for(z.D(), pf));
}

// Picks the first-quadrant orbit member that factors over +-F. For
// D = 1 exactly one of (pa, pb) and (pb, pa) does.
template <typename FactorFn>
std::pair<GroupElement, FactorizationResult> choose_orbit_member(
    const Int& D, const Int& pa, const Int& pb, const Int& c, FactorFn&& factor) {
  GroupElement first(D, pa, pb, c);
  if (D != 1) return {first, factor(first)};
  try {
    return {first, factor(first)};
  } catch (const unit_obstruction_error&) {
  }
  GroupElement second(D, pb, pa, c);
  try {
    return {second, factor(second)};
  } catch (const unit_obstruction_error&) {
    throw theorem_violation(
        "factor_orbit_representative: no first-quadrant orbit member factors over +-F");
  }
}

}  // namespace

std::pair<Int, Int> unique_prime_solution(const Int& D, const Int& p,
                                          bool allow_unverified_d) {
  if (D < 1) throw std::invalid_argument("unique_prime_solution: D must be >= 1");
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("unique_prime_solution: p must be an odd prime");
  require_applicable(D, allow_unverified_d);
  if (kronecker(-D, p) != 1)
    throw hypothesis_error("unique_prime_solution: kronecker(-D, p) != 1 for p = " + p.get_str());
  return prime_solution_scan(D, p);
}

ZetaGenerator zeta(const Int& D, const Int& p, bool allow_unverified_d) {
  auto [x, y] = unique_prime_solution(D, p, allow_unverified_d);
  return {p, GroupElement(D, x, y, p)};
}

GroupElement multiply(const GroupElement& z1, const GroupElement& z2) {
  if (z1.D() != z2.D()) throw std::invalid_argument("multiply: mismatched D");
  const Int num_a = z1.a() * z2.a() - z1.D() * z1.b() * z2.b();
  const Int num_b = z1.a() * z2.b() + z2.a() * z1.b();
  const Int den = z1.c() * z2.c();
  const Int g = gcd(num_a, num_b);
  // g divides den: g^2 | num_a^2 + D num_b^2 = den^2.
  return {z1.D(), num_a / g, num_b / g, den / g};
}

GroupElement conjugate(const GroupElement& z) { return {z.D(), z.a(), -z.b(), z.c()}; }

GroupElement negate(const GroupElement& z) { return {z.D(), -z.a(), -z.b(), z.c()}; }

GroupElement power(const GroupElement& z, long n) {
  GroupElement base = n < 0 ? conjugate(z) : z;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  GroupElement acc = GroupElement::identity(z.D());
  while (e != 0) {
    if (e & 1UL) acc = multiply(acc, base);
    e >>= 1UL;
    if (e != 0) base = multiply(base, base);
  }
  return acc;
}

Triple to_triple(const GroupElement& z) {
  if (z.a() == 0 || z.b() == 0)
    throw trivial_point_error("to_triple: trivial point, no normalized positive triple exists");
  Int aa = abs(z.a());
  Int bb = abs(z.b());
  if (z.D() == 1 && aa > bb) std::swap(aa, bb);
  return make_triple(z.D(), aa, bb, z.c());
}

FactorizationResult factor_element(const GroupElement& z, bool allow_unverified_d) {
  require_applicable(z.D(), allow_unverified_d);
  return factor_screened(z);
}

std::pair<GroupElement, FactorizationResult> factor_orbit_representative(
    const GroupElement& z, bool allow_unverified_d) {
  require_applicable(z.D(), allow_unverified_d);
  if (z.a() == 0) {
    // Orbit of the unit +-i collapses onto the identity.
    return {GroupElement::identity(z.D()), FactorizationResult{}};
  }
  if (z.b() == 0) {
    const GroupElement pos = z.a() > 0 ? z : negate(z);
    return {pos, factor_screened(pos)};
  }
  return choose_orbit_member(z.D(), abs(z.a()), abs(z.b()), z.c(),
                             [](const GroupElement& w) { return factor_screened(w); });
}

GroupElement reconstruct(const Int& D, const FactorizationResult& f,
                         bool allow_unverified_d) {
  require_applicable(D, allow_unverified_d);
  GroupElement acc = GroupElement::identity(D);
  for (const auto& [p, e] : f.factors) {
    if (p == 2 || !is_prime(p))
      throw std::invalid_argument("reconstruct: " + p.get_str() + " is not an odd prime");
    if (!symbol_ok(D, p))
      throw hypothesis_error("reconstruct: kronecker(-D, p) != 1 for p = " + p.get_str());
    acc = multiply(acc, power(prime_solution_element(D, p), e));
  }
  if (f.sign < 0) acc = negate(acc);
  return acc;
}

std::vector<NormalizedSolution> enumerate_normalized(const Int& D, const Int& c,
                                                     bool allow_unverified_d) {
  if (D < 1) throw std::invalid_argument("enumerate_normalized: D must be >= 1");
  if (c <= 1) throw std::invalid_argument("enumerate_normalized: c must be > 1");
  require_applicable(D, allow_unverified_d);

  const auto pf = factorize(c);
  for (const auto& [p, e] : pf.factors)
    if (!symbol_ok(D, p)) return {};

  const auto gens = generators_for(D, pf);
  const std::size_t k = gens.size();
  std::vector<GroupElement> plus, minus;
  plus.reserve(k);
  minus.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    plus.push_back(power(gens[i].element, static_cast<long>(pf.factors[i].second)));
    minus.push_back(conjugate(plus.back()));
  }

  std::vector<NormalizedSolution> out;
  out.reserve(std::size_t(1) << (k - 1));
  for (std::size_t mask = 0; mask < (std::size_t(1) << (k - 1)); ++mask) {
    GroupElement z = plus[0];
    for (std::size_t i = 1; i < k; ++i)
      z = multiply(z, ((mask >> (i - 1)) & 1U) ? minus[i] : plus[i]);
    Triple t = to_triple(z);
    auto [element, representative] = choose_orbit_member(
        D, t.a, t.b, t.c,
        [&gens](const GroupElement& w) { return factor_with_generators(w, gens); });
    out.push_back({std::move(t), std::move(element), std::move(representative)});
  }

  std::sort(out.begin(), out.end(), [](const NormalizedSolution& l, const NormalizedSolution& r) {
    return triple_less(l.triple, r.triple);
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].triple == out[i - 1].triple)
      throw theorem_violation("enumerate_normalized: duplicate triple across sign vectors");
  return out;
}

Int count_normalized(const Int& D, const Int& c, bool allow_unverified_d) {
  if (D < 1) throw std::invalid_argument("count_normalized: D must be >= 1");
  if (c <= 1) throw std::invalid_argument("count_normalized: c must be > 1");
  require_applicable(D, allow_unverified_d);
  const auto pf = factorize(c);
  for (const auto& [p, e] : pf.factors)
    if (!symbol_ok(D, p)) return 0;
  Int n = 1;
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), pf.factors.size() - 1);
  return n;
}

}  // namespace conic
