#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "conic/quadform.hpp"
#include "doctest.h"

using conic::Int;
using conic::QuadraticForm;

namespace {

// Independent oracle: reduce an arbitrary primitive positive-definite
// form by explicit SL2 steps (translate b into (-a, a], swap when
// a > c), then fix the boundary sign. Plain machine integers on
// purpose: a different arithmetic substrate than the implementation.
struct OForm {
  long a, b, c;
  auto operator<=>(const OForm&) const = default;
};

OForm sl2_reduce(long a, long b, long c) {
  const long disc = b * b - 4 * a * c;
  while (true) {
    long m = ((b % (2 * a)) + 2 * a) % (2 * a);  // [0, 2a)
    if (m > a) m -= 2 * a;                       // (-a, a]
    b = m;
    c = (b * b - disc) / (4 * a);
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    if (a == c && b < 0) b = -b;
    return {a, b, c};
  }
}

std::set<OForm> oracle_classes(long disc) {
  std::set<OForm> classes;
  const long bound = 40;
  for (long a = 1; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (((b - disc) % 2 + 2) % 2 != 0) continue;  // parity of b matches disc
      const long num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < 1) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      classes.insert(sl2_reduce(a, b, c));
    }
  }
  return classes;
}

std::set<OForm> to_oform_set(const std::vector<QuadraticForm>& forms) {
  std::set<OForm> out;
  for (const auto& f : forms)
    out.insert({f.a.get_si(), f.b.get_si(), f.c.get_si()});
  return out;
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(conic::discriminant({1, 0, 105}) == -420);
  CHECK(conic::discriminant({11, 8, 11}) == -420);
  CHECK(conic::discriminant({1, 0, 1}) == -4);
}

TEST_CASE("is_reduced") {
  CHECK(conic::is_reduced({10, 10, 13}));
  CHECK(conic::is_reduced({1, 0, 105}));
  CHECK(!conic::is_reduced({105, 0, 1}));
  CHECK(conic::is_reduced({3, -2, 5}));    // interior negative b is fine
  CHECK(!conic::is_reduced({2, -2, 53}));  // |b| = a needs b >= 0
  CHECK(!conic::is_reduced({5, -3, 5}));   // a = c needs b >= 0
}

TEST_CASE("enumerate_reduced_forms for -420 reproduces the eight classes") {
  const std::vector<QuadraticForm> expected = {
      {1, 0, 105}, {2, 2, 53}, {3, 0, 35},   {5, 0, 21},
      {6, 6, 19},  {7, 0, 15}, {10, 10, 13}, {11, 8, 11},
  };
  CHECK(conic::enumerate_reduced_forms(-420) == expected);
}

TEST_CASE("enumerate_reduced_forms small discriminants") {
  CHECK(conic::enumerate_reduced_forms(-4) == std::vector<QuadraticForm>{{1, 0, 1}});
  CHECK(conic::enumerate_reduced_forms(-3) == std::vector<QuadraticForm>{{1, 1, 1}});
  // D = 6 sits in the convenient list; derived by the reduction sweep
  CHECK(conic::enumerate_reduced_forms(-24) ==
        std::vector<QuadraticForm>{{1, 0, 6}, {2, 0, 3}});
  CHECK_THROWS_AS(conic::enumerate_reduced_forms(-5), std::invalid_argument);
  CHECK_THROWS_AS(conic::enumerate_reduced_forms(4), std::invalid_argument);
}

TEST_CASE("enumerated forms are reduced, primitive, on-discriminant, distinct") {
  for (long disc = -3; disc >= -200; --disc) {
    const long r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    const auto forms = conic::enumerate_reduced_forms(disc);
    std::set<OForm> seen;
    for (const auto& f : forms) {
      REQUIRE(conic::is_reduced(f));
      REQUIRE(conic::is_primitive(f));
      REQUIRE(conic::is_positive_definite(f));
      REQUIRE(conic::discriminant(f) == disc);
      REQUIRE(seen.insert({f.a.get_si(), f.b.get_si(), f.c.get_si()}).second);
    }
  }
}

TEST_CASE("enumerate_reduced_forms agrees with the SL2 reduction oracle") {
  for (long disc = -3; disc >= -200; --disc) {
    const long r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    CAPTURE(disc);
    REQUIRE(to_oform_set(conic::enumerate_reduced_forms(disc)) == oracle_classes(disc));
  }
}

TEST_CASE("order_at_most_two") {
  CHECK(conic::order_at_most_two({11, 8, 11}));  // a = c
  CHECK(conic::order_at_most_two({2, 2, 53}));   // a = b
  CHECK(conic::order_at_most_two({1, 0, 1}));    // b = 0
  CHECK(!conic::order_at_most_two({3, 2, 5}));
  CHECK_THROWS_AS(conic::order_at_most_two({105, 0, 1}), std::invalid_argument);
}

TEST_CASE("class_group_report") {
  const auto r105 = conic::class_group_report(105);
  CHECK(r105.discriminant == -420);
  CHECK(r105.class_number == 8);
  CHECK(r105.is_elementary_two);
  CHECK(r105.two_rank == 3u);

  const auto r1 = conic::class_group_report(1);
  CHECK(r1.class_number == 1);
  CHECK(r1.is_elementary_two);
  CHECK(r1.two_rank == 0u);

  // 14 is not convenient: [3, +-2, 5] has order > 2
  const auto r14 = conic::class_group_report(14);
  CHECK(r14.class_number == 4);
  CHECK(!r14.is_elementary_two);
  CHECK(!r14.two_rank.has_value());
  CHECK(r14.forms == std::vector<QuadraticForm>{{1, 0, 14}, {2, 0, 7}, {3, -2, 5}, {3, 2, 5}});
  CHECK(r14.display_forms() == std::vector<QuadraticForm>{{1, 0, 14}, {2, 0, 7}, {3, 2, 5}});
}

TEST_CASE("principal form is always present") {
  for (long d = 1; d <= 60; ++d) {
    const auto report = conic::class_group_report(d);
    REQUIRE(report.class_number >= 1);
    REQUIRE(std::find(report.forms.begin(), report.forms.end(),
                      QuadraticForm{1, 0, d}) != report.forms.end());
  }
}

TEST_CASE("is_theorem_applicable") {
  using conic::ApplicabilityIssue;
  const auto ok = conic::is_theorem_applicable(105);
  CHECK(ok.applicable);
  CHECK(ok.issues.empty());

  CHECK(conic::is_theorem_applicable(1).applicable);

  const auto r3 = conic::is_theorem_applicable(3);
  CHECK(!r3.applicable);
  CHECK(r3.issues == std::vector{ApplicabilityIssue::WrongResidueMod4});

  const auto r12 = conic::is_theorem_applicable(12);
  CHECK(!r12.applicable);
  CHECK(r12.issues == std::vector{ApplicabilityIssue::NotSquarefree,
                                  ApplicabilityIssue::WrongResidueMod4});

  const auto r14 = conic::is_theorem_applicable(14);
  CHECK(!r14.applicable);
  CHECK(r14.issues == std::vector{ApplicabilityIssue::ClassGroupNotElementaryTwo});

  // 8 is convenient but fails both filter legs
  const auto r8 = conic::is_theorem_applicable(8);
  CHECK(!r8.applicable);
  CHECK(conic::class_group_report(8).is_elementary_two);
}
