#pragma once

#include <vector>

#include "conic/arith.hpp"
#include "conic/triple.hpp"

namespace conic {

struct SweepMismatch {
  Int c;
  std::vector<Triple> oracle_solutions;
  std::vector<Triple> group_solutions;
};

struct SweepReport {
  Int D;
  Int c_max;
  unsigned long c_checked = 0;
  unsigned long nonempty = 0;
  std::vector<SweepMismatch> mismatches;  // must stay empty

  bool clean() const { return mismatches.empty(); }
};

/// Cross-checks enumerate_normalized against brute_force_solutions and
/// the 2^(k-1)/0 count law for every c in 2..c_max.
SweepReport sweep_verify(const Int& D, const Int& c_max, bool allow_unverified_d = false);

}  // namespace conic
