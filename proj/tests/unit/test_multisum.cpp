#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "qseries/error.hpp"
#include "qseries/multisum.hpp"

using namespace qseries;
using qseries::testing::random_base;
using qseries::testing::random_index;
using qseries::testing::random_variables;

namespace {

QComplex dec(const char* re, const char* im = "0") { return QComplex::parse(re, im); }

long binomial(long n, long k) {
  long v = 1;
  for (long i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

/// prod_r z_r^{k_r} with z_r taken from the parameter vector "z".
SeriesSide geometric(int n) {
  SeriesSide side;
  side.dimension = n;
  side.prefactor = [](const ParameterSet&, const BaseSystem&) { return QComplex(1L); };
  side.term = [](const ParameterSet& P, const BaseSystem&) {
    return TermFn([z = P.vec("z")](IndexView k) {
      QComplex t(1L);
      for (std::size_t r = 0; r < k.size(); ++r) t *= ipow(z[r], k[r]);
      return t;
    });
  };
  return side;
}

ParameterSet geometric_params(std::vector<QComplex> z) {
  ParameterSet P;
  P.set("z", std::move(z));
  return P;
}

}  // namespace

TEST_SUITE("multisum") {

TEST_CASE("multi-index weight") {
  MultiIndex k{3, 0, 4};
  CHECK(k.weight() == 7);
  CHECK(weight(k.view()) == 7);
  CHECK_THROWS_AS(MultiIndex({1, -1}), Error);
}

TEST_CASE("enumerate_shell examples") {
  CHECK(enumerate_shell(1, 5) == std::vector<MultiIndex>{MultiIndex{5}});
  CHECK(enumerate_shell(2, 2) == std::vector<MultiIndex>{MultiIndex{0, 2}, MultiIndex{1, 1}, MultiIndex{2, 0}});
  CHECK(enumerate_shell(3, 4).size() == 15);
  CHECK_THROWS_AS(enumerate_shell(0, 1), Error);
}

TEST_CASE("shells partition the bounded simplex") {
  for (int n = 1; n <= 4; ++n) {
    const long N = 7;
    std::set<MultiIndex> seen;
    long total = 0;
    for (long w = 0; w <= N; ++w) {
      const auto shell = enumerate_shell(n, w);
      CHECK(static_cast<long>(shell.size()) == binomial(w + n - 1, n - 1));
      CHECK(std::is_sorted(shell.begin(), shell.end()));
      for (const auto& k : shell) {
        CHECK(k.weight() == w);
        CHECK(static_cast<int>(k.size()) == n);
        seen.insert(k);
      }
      total += static_cast<long>(shell.size());
    }
    CHECK(static_cast<long>(seen.size()) == total);
    CHECK(total == binomial(N + n, n));
  }
}

TEST_CASE("vandermonde_factor examples") {
  const QComplex s = dec("0.3");
  CHECK(vandermonde_factor({dec("0.7")}, MultiIndex{4}, s) == QComplex(1L));
  CHECK(relative_error(vandermonde_factor({dec("1"), dec("0.5")}, MultiIndex{0, 0}, s), QComplex(1L)) == 0.0);
  CHECK(relative_error(vandermonde_factor({dec("1"), dec("0.5")}, MultiIndex{1, 0}, s), dec("-0.4")) < 1e-36);
  CHECK_THROWS_AS(vandermonde_factor({dec("0.5"), dec("0.5")}, MultiIndex{1, 0}, s), Error);
  try {
    vandermonde_factor({dec("0.5"), dec("0.5")}, MultiIndex{1, 0}, s);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_variables);
  }
}

TEST_CASE("vandermonde_factor is invariant under simultaneous swaps") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 4));
    auto x = random_variables(rng, n);
    MultiIndex k = random_index(rng, n, 6);
    const QComplex s = random_base(rng);
    const QComplex before = vandermonde_factor(x, k, s);
    auto c = k.components();
    const auto r = static_cast<std::size_t>(rng.integer(0, n - 1));
    const auto t = static_cast<std::size_t>(rng.integer(0, n - 1));
    std::swap(x[r], x[t]);
    std::swap(c[r], c[t]);
    CHECK(relative_error(vandermonde_factor(x, MultiIndex(c), s), before) < 1e-30);
  }
}

TEST_CASE("homogeneous and ratio Vandermonde forms differ by a power of the step") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 4));
    const auto x = random_variables(rng, n);
    const MultiIndex k = random_index(rng, n, 6);
    const QComplex s = random_base(rng);
    long shift = 0;
    for (int r = 0; r < n; ++r) shift += r * k[static_cast<std::size_t>(r)];
    CHECK(relative_error(vandermonde_factor(x, k, s), type_a_vandermonde(x, k, s) * ipow(s, shift)) < 1e-30);
  }
}

TEST_CASE("geometric series") {
  const BaseSystem B(dec("0.5"));
  // 0.5^k needs about 90 shells to reach 1e-25.
  const TruncationPolicy policy{120, 1e-30, 4};
  auto one = evaluate(geometric(1), geometric_params({dec("0.5")}), B, policy);
  CHECK(relative_error(one.value, QComplex(2L)) < 1e-25);
  CHECK(one.diagnostics.converged);
  auto two = evaluate(geometric(2), geometric_params({dec("0.5"), dec("0.5")}), B, policy);
  CHECK(relative_error(two.value, QComplex(4L)) < 1e-25);
  CHECK(two.diagnostics.terms > 0);
}

TEST_CASE("q-binomial side against the product oracle") {
  SeriesSide side;
  side.dimension = 1;
  side.term = [](const ParameterSet& P, const BaseSystem& B) {
    return TermFn([a = P.scalar("a"), z = P.scalar("z"), q = B.q()](IndexView k) {
      return qpoch_finite(a, q, k[0]) / qpoch_finite(q, q, k[0]) * ipow(z, k[0]);
    });
  };
  ParameterSet P;
  P.set("a", dec("0.2"));
  P.set("z", dec("0.3"));
  TruncationPolicy policy;
  policy.max_shell = 80;
  policy.tail_ratio_tol = 1e-34;
  const auto r = evaluate(side, P, BaseSystem(dec("0.5")), policy);
  CHECK(relative_error(r.value, dec(testing::oracle::kQBinomialProduct)) < 1e-30);
}

TEST_CASE("dimension zero is the prefactor") {
  SeriesSide side;
  side.prefactor = [](const ParameterSet&, const BaseSystem&) { return QComplex(3L); };
  const auto r = evaluate(side, ParameterSet(), BaseSystem(dec("0.5")));
  CHECK(r.value == QComplex(3L));
  CHECK(r.diagnostics.shells == 0);
}

TEST_CASE("stopping rule and diagnostics") {
  const BaseSystem B(dec("0.5"));
  TruncationPolicy policy;
  policy.max_shell = 200;
  policy.tail_ratio_tol = 1e-10;
  policy.min_shells = 4;
  const auto fast = evaluate(geometric(1), geometric_params({dec("0.1")}), B, policy);
  CHECK(fast.diagnostics.converged);
  // 0.1^w / sum < 1e-10 first at w = 10; the second small shell is w = 11.
  CHECK(fast.diagnostics.shells == 12);
  CHECK(fast.diagnostics.tail_bound < 1e-10);

  policy.max_shell = 5;
  const auto slow = evaluate(geometric(1), geometric_params({dec("0.9")}), B, policy);
  CHECK_FALSE(slow.diagnostics.converged);
  CHECK(slow.diagnostics.shells == 6);
  CHECK(slow.diagnostics.tail_bound > slow.diagnostics.last_shell_ratio);

  policy.max_shell = 200;
  policy.min_shells = 30;
  CHECK(evaluate(geometric(1), geometric_params({dec("0.1")}), B, policy).diagnostics.shells == 30);
}

TEST_CASE("increasing the shell budget stays within the tail bound") {
  Rng rng(23);
  const BaseSystem B(dec("0.5"));
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 2));
    std::vector<QComplex> z;
    for (int r = 0; r < n; ++r) z.push_back(testing::random_complex(rng, 0.05, 0.6));
    const auto P = geometric_params(z);
    TruncationPolicy small;
    small.max_shell = static_cast<int>(rng.integer(10, 40));
    const auto a = evaluate(geometric(n), P, B, small);
    TruncationPolicy big{2 * small.max_shell, 0.0, small.min_shells};
    const auto b = evaluate(geometric(n), P, B, big);
    CHECK(relative_error(a.value, b.value) <= a.diagnostics.tail_bound);
  }
}

TEST_CASE("errors from evaluate") {
  const BaseSystem B(dec("0.5"));
  SeriesSide side = geometric(1);
  side.domain = [](const ParameterSet&, const BaseSystem&) { return false; };
  CHECK_THROWS_WITH_AS(evaluate(side, geometric_params({dec("0.1")}), B), doctest::Contains("domain"), Error);

  SeriesSide pole;
  pole.dimension = 1;
  pole.term = [](const ParameterSet&, const BaseSystem&) {
    return TermFn([](IndexView k) { return k[0] == 2 ? QComplex(1L) / QComplex(0L) : QComplex(1L); });
  };
  try {
    evaluate(pole, ParameterSet(), B);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole_encountered);
  }
}

TEST_CASE("parameter sets and schemas") {
  std::vector<ParamSpec> schema{make_param("a", ParamKind::coefficient, "n"), make_param("x", ParamKind::variable, "n"),
                                make_param("z", ParamKind::argument)};
  ParameterSet P(Dims{{"n", 2}});
  P.set("a", std::vector<QComplex>{dec("0.1"), dec("0.2")});
  P.set("x", std::vector<QComplex>{dec("1"), dec("-1")});
  P.set("z", dec("0.1"));
  CHECK_NOTHROW(validate_schema(schema, P));

  auto code_of = [&](ParameterSet bad) {
    try {
      validate_schema(schema, bad);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_config;
  };
  ParameterSet extra = P;
  extra.set("w", dec("0.1"));
  CHECK(code_of(extra) == Errc::invalid_parameters);
  ParameterSet short_vec = P;
  short_vec.set("a", std::vector<QComplex>{dec("0.1")});
  CHECK(code_of(short_vec) == Errc::invalid_parameters);
  ParameterSet repeated = P;
  repeated.set("x", std::vector<QComplex>{dec("1"), dec("1")});
  CHECK(code_of(repeated) == Errc::degenerate_variables);
  ParameterSet missing(Dims{{"n", 2}});
  missing.set("a", P.vec("a"));
  missing.set("x", P.vec("x"));
  CHECK(code_of(missing) == Errc::invalid_parameters);
}

}  // TEST_SUITE
