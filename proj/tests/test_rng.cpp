#include <cstdint>

#include "doctest.h"
#include "perpsim/rng.hpp"

using namespace perpsim;

TEST_SUITE("rng") {

// Reference outputs computed independently from the published xoshiro256++
// and splitmix64 definitions. These pin the generator: any change to the
// seeding or scrambling breaks this test, which is the point.
TEST_CASE("golden vector for seed 1") {
  RngStream rng(1);
  CHECK(rng.next_bits() == UINT64_C(0xcfc5d07f6f03c29b));
  CHECK(rng.next_bits() == UINT64_C(0xbf424132963fe08d));
  CHECK(rng.next_bits() == UINT64_C(0x19a37d5757aaf520));
  CHECK(rng.next_bits() == UINT64_C(0xbf08119f05cd56d6));

  RngStream again(1);
  CHECK(again.next() == doctest::Approx(0.81161215888188476).epsilon(1e-16));
  CHECK(again.next() == doctest::Approx(0.74710471615821872).epsilon(1e-16));
  CHECK(again.next() == doctest::Approx(0.10015090353378375).epsilon(1e-16));
  CHECK(again.next() == doctest::Approx(0.74621687061681041).epsilon(1e-16));
}

TEST_CASE("same seed gives an identical sequence") {
  RngStream a(42);
  RngStream b(42);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_bits() == b.next_bits());
}

TEST_CASE("values lie in the unit interval") {
  RngStream rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("draw count tracks every draw") {
  RngStream rng(3);
  CHECK(rng.draw_count() == 0);
  rng.next();
  rng.next_bits();
  rng.next();
  CHECK(rng.draw_count() == 3);
}

TEST_CASE("seed 0 is usable") {
  RngStream rng(0);
  CHECK(rng.next() == doctest::Approx(0.32457526803140668).epsilon(1e-16));
}

TEST_CASE("worker streams are derived deterministically") {
  RngStream w0 = RngStream::for_worker(1, 0);
  CHECK(w0.next() == doctest::Approx(0.43855862665058964).epsilon(1e-16));

  // Worker 0's seed is the first splitmix64 output for master seed 1.
  RngStream direct(UINT64_C(0x910a2dec89025cc1));
  RngStream w0_again = RngStream::for_worker(1, 0);
  for (int i = 0; i < 100; ++i)
    REQUIRE(direct.next_bits() == w0_again.next_bits());
}

TEST_CASE("distinct workers get distinct streams") {
  RngStream w0 = RngStream::for_worker(9, 0);
  RngStream w1 = RngStream::for_worker(9, 1);
  int equal = 0;
  for (int i = 0; i < 100; ++i)
    if (w0.next_bits() == w1.next_bits()) ++equal;
  CHECK(equal == 0);
}

TEST_CASE("uniform mean is near one half") {
  RngStream rng(11);
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += rng.next();
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.002));
}

}  // TEST_SUITE
