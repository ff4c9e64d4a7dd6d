#pragma once

#include <stdexcept>

namespace conic {

/// Input breaks a theorem hypothesis or a data contract: norm relation
/// violated, a Kronecker symbol is not 1, or D fails the applicability
/// test and no override was given.
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The trivial points (+-1, 0, 1) (and (0, +-1, 1) when D = 1) carry no
/// normalized positive triple.
class trivial_point_error : public hypothesis_error {
 public:
  using hypothesis_error::hypothesis_error;
};

/// D = 1 only: the element is a unit-i multiple of a generator product,
/// so it has no exact expression of the form +-prod zeta_p^e. Orbit-level
/// entry points factor the representative of the orbit that does.
class unit_obstruction_error : public hypothesis_error {
 public:
  using hypothesis_error::hypothesis_error;
};

/// A statement guaranteed by the underlying theory failed at run time
/// (no unique prime solution, stripping stuck, duplicate triples). Under
/// a verified D this is a bug, never bad user data; under an explicit
/// unverified-D override it means the override left theorem territory.
class theorem_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace conic
