#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "qseries/error.hpp"
#include "qseries/qcore.hpp"

using namespace qseries;
using qseries::testing::random_base;
using qseries::testing::random_complex;
using qseries::testing::random_index;

namespace {

QComplex dec(const char* re, const char* im = "0") { return QComplex::parse(re, im); }

Errc error_code(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::invalid_config;
}

}  // namespace

TEST_SUITE("qcore") {

TEST_CASE("qpoch_finite examples") {
  CHECK(qpoch_finite(dec("0.7"), dec("0.5"), 0) == QComplex(1L));
  CHECK(relative_error(qpoch_finite(dec("0.5"), dec("0.5"), 2), dec("0.375")) < 1e-36);
  const QComplex v = qpoch_finite(dec("0.3", "0.1"), dec("0.4"), 5);
  CHECK(relative_error(v, dec(testing::oracle::kQpochFiniteRe, testing::oracle::kQpochFiniteIm)) < 1e-35);
  CHECK(error_code([] { qpoch_finite(dec("0.3"), dec("0.4"), -1); }) == Errc::invalid_parameters);
}

TEST_CASE("qpoch_infinite examples") {
  CHECK(relative_error(qpoch_infinite(QComplex(0L), dec("0.5")), QComplex(1L)) == 0.0);
  CHECK(relative_error(qpoch_infinite(dec("0.6"), QComplex(0L)), dec("0.4")) < 1e-36);
  CHECK(relative_error(qpoch_infinite(dec("0.3"), dec("0.5"), 1e-30), dec(testing::oracle::kQpochInfinite)) < 1e-29);
  CHECK(relative_error(qpoch_infinite(dec("0.3"), dec("0.5"), 1e-36), dec(testing::oracle::kQpochInfinite)) < 1e-35);
  CHECK(error_code([] { qpoch_infinite(dec("0.3"), dec("1.0")); }) == Errc::non_convergent_base);
  CHECK(error_code([] { qpoch_infinite(dec("0.3"), dec("0.6", "0.9")); }) == Errc::non_convergent_base);
}

TEST_CASE("qpoch_scaled examples") {
  CHECK(relative_error(qpoch_scaled(dec("0.2"), dec("0.5"), dec("0.5"), 3), qpoch_finite(dec("0.2"), dec("0.5"), 3)) <
        1e-29);
  CHECK(qpoch_scaled(dec("0.2"), dec("0.5"), dec("0.3"), 0) == QComplex(1L));
  const QComplex step = principal_power(dec("0.5"), dec("1.7"));
  CHECK(relative_error(qpoch_scaled(dec("0.2"), dec("0.5"), step, 2), dec(testing::oracle::kQpochScaled)) < 1e-29);
  // 2 * 0.5^1 * 0.5^0 = 1 makes the shifted product vanish.
  CHECK(error_code([] { qpoch_scaled(dec("2"), dec("0.5"), dec("0.5"), 1); }) == Errc::division_by_zero);
}

TEST_CASE("e2 and dot examples") {
  CHECK(e2(MultiIndex{5}) == 0);
  CHECK(e2(MultiIndex{1, 1}) == 1);
  CHECK(e2(MultiIndex{2, 1}) == 2);
  CHECK(relative_error(dot({QComplex(1L), QComplex(1L)}, MultiIndex{2, 3}), QComplex(5L)) == 0.0);
  CHECK(dot({dec("2"), dec("0.5")}, MultiIndex{0, 0}).is_zero());
  CHECK(relative_error(dot({dec("1.5"), dec("2.5"), dec("1")}, MultiIndex{1, 2, 3}), dec("9.5")) < 1e-36);
  CHECK(error_code([] { dot({QComplex(1L)}, MultiIndex{1, 2}); }) == Errc::length_mismatch);
}

TEST_CASE("base system derives its powers once") {
  const BaseSystem B(dec("0.3"), dec("1.5"), dec("0.8"), {dec("2"), dec("0.5")});
  CHECK(relative_error(B.qh(), principal_power(dec("0.3"), dec("1.5"))) < 1e-36);
  CHECK(relative_error(B.qt(), principal_power(dec("0.3"), dec("0.8"))) < 1e-36);
  CHECK(relative_error(B.qht(), principal_power(dec("0.3"), dec("1.2"))) < 1e-35);
  CHECK(relative_error(B.block_base(0), dec("0.09")) < 1e-36);
  CHECK(relative_error(B.block_step(1), principal_power(dec("0.3"), dec("0.4"))) < 1e-35);
  CHECK(B.block_count() == 2);
  CHECK(error_code([] { BaseSystem(dec("1.2")); }) == Errc::non_convergent_base);
  CHECK(error_code([] { BaseSystem(dec("0.5"), dec("-1")); }) == Errc::non_convergent_base);
  CHECK(error_code([] { BaseSystem(QComplex(0L)); }) == Errc::non_convergent_base);
}

TEST_CASE("integer exponents are exact") {
  const QComplex q = dec("0.3", "0.2");
  CHECK(principal_power(q, QComplex(3L)) == q * q * q);
  CHECK(relative_error(ipow(q, -2) * q * q, QComplex(1L)) < 1e-36);
}

TEST_CASE("precision scopes nest and restore") {
  const long outer = working_precision();
  {
    PrecisionScope scope(256);
    CHECK(working_precision() == 256);
    CHECK(Real(1.0).precision() == 256);
    {
      PrecisionScope inner(96);
      CHECK(working_precision() == 96);
    }
    CHECK(working_precision() == 256);
  }
  CHECK(working_precision() == outer);
  CHECK(error_code([] { PrecisionScope too_small(32); }) == Errc::invalid_config);
}

TEST_CASE("checked_div reports poles") {
  CHECK(error_code([] { checked_div(QComplex(1L), QComplex(0L)); }) == Errc::pole_encountered);
  CHECK(relative_error(checked_div(QComplex(1L), dec("4")), dec("0.25")) == 0.0);
}

TEST_CASE("memo tables agree with direct products") {
  const QComplex a = dec("0.4", "-0.2"), q = dec("0.55");
  PochTable table(a, q);
  // Read a low entry, then force growth and read it again.
  const QComplex& low = table(2);
  const QComplex low_copy = low;
  CHECK(relative_error(table(30), qpoch_finite(a, q, 30)) < 1e-34);
  CHECK(low == low_copy);
  ScaledPoch scaled(a, q, principal_power(q, dec("1.3")));
  CHECK(relative_error(scaled(4), qpoch_scaled(a, q, principal_power(q, dec("1.3")), 4)) < 1e-34);
  PowerTable powers(q);
  CHECK(relative_error(powers(17), ipow(q, 17)) < 1e-35);
}

// Properties over randomized inputs; criterion-level counts live in the
// acceptance binary.

TEST_CASE("functional equation") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const QComplex a = random_complex(rng, 0.0, 2.0), q = random_base(rng);
    const long k = rng.integer(0, 25);
    const QComplex lhs = qpoch_finite(a, q, k + 1);
    const QComplex rhs = qpoch_finite(a, q, k) * (QComplex(1L) - a * ipow(q, k));
    CHECK(relative_error(lhs, rhs) < 1e-30);
  }
}

TEST_CASE("splitting of the infinite product") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const QComplex a = random_complex(rng, 0.0, 0.9), q = random_base(rng);
    const long k = rng.integer(0, 20);
    const QComplex lhs = qpoch_infinite(a, q);
    const QComplex rhs = qpoch_finite(a, q, k) * qpoch_infinite(a * ipow(q, k), q);
    CHECK(relative_error(lhs, rhs) < 10 * kDefaultProductTol);
  }
}

TEST_CASE("duplication") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const QComplex a = random_complex(rng, 0.0, 1.5), q = random_base(rng);
    const long n = rng.integer(1, 4), k = rng.integer(0, 8);
    QComplex rhs(1L);
    for (long r = 0; r < n; ++r) rhs *= qpoch_finite(a * ipow(q, r), ipow(q, n), k);
    CHECK(relative_error(qpoch_finite(a, q, n * k), rhs) < 1e-30);
  }
}

TEST_CASE("scaled symbol matches the finite one at integer steps") {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const QComplex a = random_complex(rng, 0.0, 0.9), q = random_base(rng);
    const long c = rng.integer(1, 3), k = rng.integer(0, 10);
    CHECK(relative_error(qpoch_scaled(a, q, ipow(q, c), k), qpoch_finite(a, q, c * k)) < 10 * kDefaultProductTol);
  }
}

TEST_CASE("e2 is symmetric and non-negative") {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 5));
    MultiIndex k = random_index(rng, n, 9);
    std::vector<long> c = k.components();
    const long value = e2(k);
    CHECK(value >= 0);
    for (std::size_t r = c.size(); r > 1; --r) std::swap(c[r - 1], c[static_cast<std::size_t>(rng.integer(0, static_cast<long>(r) - 1))]);
    CHECK(e2(MultiIndex(c)) == value);
    long pairs = 0;
    for (std::size_t r = 0; r < c.size(); ++r)
      for (std::size_t s = r + 1; s < c.size(); ++s) pairs += c[r] * c[s];
    CHECK(value == pairs);
  }
}

}  // TEST_SUITE
