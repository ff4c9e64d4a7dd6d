#include "conic/sweep.hpp"

#include <stdexcept>

#include "conic/group.hpp"
#include "conic/oracle.hpp"

namespace conic {

SweepReport sweep_verify(const Int& D, const Int& c_max, bool allow_unverified_d) {
  if (c_max < 2) throw std::invalid_argument("sweep_verify: c_max must be >= 2");
  SweepReport report;
  report.D = D;
  report.c_max = c_max;
  for (Int c = 2; c <= c_max; ++c) {
    const auto expected = brute_force_solutions(D, c);
    const auto enumerated = enumerate_normalized(D, c, allow_unverified_d);
    const Int count = count_normalized(D, c, allow_unverified_d);

    std::vector<Triple> got;
    got.reserve(enumerated.size());
    for (const auto& solution : enumerated) got.push_back(solution.triple);

    // Both sides are sorted ascending by a, so set equality is equality.
    const bool count_law = count == static_cast<long>(got.size());
    if (expected != got || !count_law)
      report.mismatches.push_back({c, expected, got});

    ++report.c_checked;
    if (!expected.empty()) ++report.nonempty;
  }
  return report;
}

}  // namespace conic
