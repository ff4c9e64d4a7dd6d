#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conic/arith.hpp"

namespace conic {

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm {
  Int a;
  Int b;
  Int c;

  friend bool operator==(const QuadraticForm& l, const QuadraticForm& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
};

Int discriminant(const QuadraticForm& f);

bool is_positive_definite(const QuadraticForm& f);
bool is_primitive(const QuadraticForm& f);

/// |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
bool is_reduced(const QuadraticForm& f);

/// All reduced primitive positive-definite forms of the given negative
/// discriminant (disc = 0 or 1 mod 4), one per equivalence class, sorted
/// ascending by a then b. When 0 < b < a < c both [a, b, c] and
/// [a, -b, c] appear: they are distinct classes.
std::vector<QuadraticForm> enumerate_reduced_forms(const Int& disc);

/// Class has order <= 2 iff b = 0, a = b or a = c. Stated for reduced
/// forms only; non-reduced input is rejected.
bool order_at_most_two(const QuadraticForm& f);

struct ClassGroupReport {
  Int discriminant;
  std::vector<QuadraticForm> forms;  // canonical order, one per class
  unsigned long class_number = 0;
  bool is_elementary_two = false;
  std::optional<unsigned> two_rank;  // present iff is_elementary_two

  /// The b >= 0 representatives, the way class lists are usually
  /// displayed; collapses each {[a,b,c], [a,-b,c]} pair to one entry.
  std::vector<QuadraticForm> display_forms() const;
};

/// Full report for discriminant -4D.
ClassGroupReport class_group_report(const Int& D);

enum class ApplicabilityIssue {
  NotSquarefree,
  WrongResidueMod4,
  ClassGroupNotElementaryTwo,
};

std::string to_string(ApplicabilityIssue issue);

struct ApplicabilityReport {
  bool applicable = false;
  std::vector<ApplicabilityIssue> issues;
};

/// D qualifies for the solution-count machinery iff D is squarefree,
/// D = 1 or 2 (mod 4), and C(-4D) is an elementary abelian 2-group.
ApplicabilityReport is_theorem_applicable(const Int& D);

}  // namespace conic
