#include <doctest.h>

#include "lag2/identities.hpp"

using namespace lag2;

TEST_CASE("perron formula") {
  const VerificationReport r = verify_perron(500, 1);
  CHECK(r.checks.size() == 500);
  CHECK(r.ok());
}

TEST_CASE("difference of expansions with a common prefix") {
  const VerificationReport r = verify_difference_formula(500, 2);
  CHECK(r.checks.size() == 500);
  CHECK(r.ok());
}

TEST_CASE("continuant split") {
  const VerificationReport r = verify_continuant_split(500, 3);
  CHECK(r.checks.size() == 500);
  CHECK(r.ok());
}

TEST_CASE("round trip") {
  const VerificationReport r = verify_round_trip(500, 4);
  CHECK(r.checks.size() == 500);
  CHECK(r.ok());
}

TEST_CASE("suites are reproducible from the seed") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 20; ++i) CHECK(random_periodic_cf(a) == random_periodic_cf(b));
  CHECK_THROWS_AS(verify_perron(-1, 0), std::invalid_argument);
  CHECK(verify_round_trip(0, 0).checks.empty());
}
