#include "detrendcorr/rng.hpp"

#include <doctest.h>

#include <cmath>

using detrendcorr::CounterRng;

TEST_CASE("counter rng: identical seeds reproduce the sequence") {
  CounterRng a(42, 3), b(42, 3);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("counter rng: streams and seeds decorrelate") {
  CounterRng a(42, 0), b(42, 1), c(43, 0);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    same_ab += (x == b.next_u64());
    same_ac += (x == c.next_u64());
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("counter rng: at() indexes the stream without state") {
  CounterRng a(7, 9);
  for (std::uint64_t k = 0; k < 20; ++k) {
    REQUIRE(a.next_u64() == CounterRng::at(7, 9, k));
  }
}

TEST_CASE("counter rng: uniforms stay inside (0, 1)") {
  CounterRng rng(1, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_unit();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("counter rng: normal moments within CLT bands") {
  CounterRng rng(5, 0);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(double(n)));
  CHECK(std::abs(var - 1.0) < 0.02);
}
