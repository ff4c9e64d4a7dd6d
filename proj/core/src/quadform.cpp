#include "conic/quadform.hpp"

#include <algorithm>
#include <stdexcept>

#include "conic/errors.hpp"

namespace conic {

Int discriminant(const QuadraticForm& f) {
  return f.b * f.b - 4 * f.a * f.c;
}

bool is_positive_definite(const QuadraticForm& f) {
  return f.a > 0 && discriminant(f) < 0;
}

bool is_primitive(const QuadraticForm& f) {
  return gcd(gcd(f.a, f.b), f.c) == 1;
}

bool is_reduced(const QuadraticForm& f) {
  const Int ab = abs(f.b);
  if (!(ab <= f.a && f.a <= f.c)) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

std::vector<QuadraticForm> enumerate_reduced_forms(const Int& disc) {
  if (disc >= 0)
    throw std::invalid_argument("enumerate_reduced_forms: discriminant must be negative");
  const Int residue = ((disc % 4) + 4) % 4;
  if (residue != 0 && residue != 1)
    throw std::invalid_argument("enumerate_reduced_forms: discriminant must be 0 or 1 mod 4");

  std::vector<QuadraticForm> out;
  // b runs over the parity class of disc with 3b^2 <= |disc|; each
  // divisor pair a*c = (b^2 - disc)/4 with b <= a <= c is one candidate.
  for (Int b = residue; 3 * b * b <= -disc; b += 2) {
    const Int target = (b * b - disc) / 4;
    for (Int a = (b > 1 ? b : 1); a * a <= target; ++a) {
      if (target % a != 0) continue;
      const Int c = target / a;
      if (gcd(gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadraticForm& l, const QuadraticForm& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  return out;
}

bool order_at_most_two(const QuadraticForm& f) {
  if (!is_reduced(f))
    throw std::invalid_argument("order_at_most_two: criterion is stated for reduced forms");
  return f.b == 0 || f.a == f.b || f.a == f.c;
}

std::vector<QuadraticForm> ClassGroupReport::display_forms() const {
  std::vector<QuadraticForm> out;
  for (const auto& f : forms)
    if (f.b >= 0) out.push_back(f);
  return out;
}

ClassGroupReport class_group_report(const Int& D) {
  if (D < 1) throw std::invalid_argument("class_group_report: D must be >= 1");
  ClassGroupReport report;
  report.discriminant = -4 * D;
  report.forms = enumerate_reduced_forms(report.discriminant);
  report.class_number = report.forms.size();
  report.is_elementary_two =
      std::all_of(report.forms.begin(), report.forms.end(), order_at_most_two);
  if (report.is_elementary_two) {
    // Every class of order <= 2 forces (Z_2)^k, so h must be a power of two.
    unsigned long h = report.class_number;
    if ((h & (h - 1)) != 0)
      throw theorem_violation("class_group_report: all orders <= 2 but h is not a power of two");
    unsigned rank = 0;
    while (h > 1) {
      h >>= 1;
      ++rank;
    }
    report.two_rank = rank;
  }
  return report;
}

std::string to_string(ApplicabilityIssue issue) {
  switch (issue) {
    case ApplicabilityIssue::NotSquarefree:
      return "not squarefree";
    case ApplicabilityIssue::WrongResidueMod4:
      return "wrong residue mod 4 (need 1 or 2)";
    case ApplicabilityIssue::ClassGroupNotElementaryTwo:
      return "class group is not an elementary abelian 2-group";
  }
  return "unknown";
}

ApplicabilityReport is_theorem_applicable(const Int& D) {
  if (D < 1) throw std::invalid_argument("is_theorem_applicable: D must be >= 1");
  ApplicabilityReport report;
  const auto pf = factorize(D);
  const bool squarefree =
      std::all_of(pf.factors.begin(), pf.factors.end(),
                  [](const auto& pe) { return pe.second == 1; });
  if (!squarefree) report.issues.push_back(ApplicabilityIssue::NotSquarefree);
  const Int residue = D % 4;
  if (residue != 1 && residue != 2)
    report.issues.push_back(ApplicabilityIssue::WrongResidueMod4);
  if (!class_group_report(D).is_elementary_two)
    report.issues.push_back(ApplicabilityIssue::ClassGroupNotElementaryTwo);
  report.applicable = report.issues.empty();
  return report;
}

}  // namespace conic
