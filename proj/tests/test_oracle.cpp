#include "conic/oracle.hpp"
#include "conic/sweep.hpp"
#include "doctest.h"

using conic::Int;
using conic::Triple;

TEST_CASE("brute_force_solutions paper values") {
  const auto p11 = conic::brute_force_solutions(105, 11);
  REQUIRE(p11.size() == 1);
  CHECK(p11[0] == Triple{105, 4, 1, 11});

  const auto t2 = conic::brute_force_solutions(105, 247);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0] == Triple{105, 23, 24, 247});
  CHECK(t2[1] == Triple{105, 233, 8, 247});

  const auto d1 = conic::brute_force_solutions(1, 65);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == Triple{1, 16, 63, 65});
  CHECK(d1[1] == Triple{1, 33, 56, 65});

  CHECK(conic::brute_force_solutions(1, 5) == std::vector<Triple>{{1, 3, 4, 5}});
  CHECK(conic::brute_force_solutions(105, 1).empty());
  CHECK(conic::brute_force_solutions(105, 55).empty());
  CHECK_THROWS_AS(conic::brute_force_solutions(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(conic::brute_force_solutions(105, 0), std::invalid_argument);
}

TEST_CASE("oracle finds exactly one solution for admissible primes") {
  for (long p = 3; p < 300; p += 2) {
    if (!conic::is_prime(p) || conic::kronecker(-105, p) != 1) continue;
    CAPTURE(p);
    REQUIRE(conic::brute_force_solutions(105, p).size() == 1);
  }
}

TEST_CASE("D = 1 oracle emits each unordered pair once") {
  for (const auto& t : conic::brute_force_solutions(1, 325)) {
    REQUIRE(t.a <= t.b);
    REQUIRE(t.a * t.a + t.b * t.b == t.c * t.c);
  }
}

TEST_CASE("sweep_verify is clean at unit scale") {
  const auto r105 = conic::sweep_verify(105, 300);
  CHECK(r105.c_checked == 299);
  CHECK(r105.clean());
  CHECK(r105.nonempty > 0);

  const auto r1 = conic::sweep_verify(1, 200);
  CHECK(r1.clean());

  const auto r6 = conic::sweep_verify(6, 150);
  CHECK(r6.clean());
}
