#include "cross_check.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "qseries/engine.hpp"
#include "qseries/error.hpp"

using namespace qseries;
using namespace qseries::engine;

namespace {

Dims uniform_dims(const std::vector<std::string>& names, int value) {
  Dims d;
  for (const auto& name : names) d[name] = value;
  return d;
}

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

TEST_SUITE("engine") {

TEST_CASE("shipped blocks are homogeneous in their argument") {
  const auto& blocks = shipped_blocks();
  REQUIRE(blocks.size() == 5);
  for (const auto& b : blocks) {
    const auto r = check_property_H(b, 10, 3);
    CHECK_MESSAGE(r.pass, b.name << " deviation " << r.max_deviation);
    CHECK(r.trials == 10);
    CHECK(r.max_deviation < 1e-20);
  }
}

TEST_CASE("the planted block is caught") {
  const auto r = check_property_H(planted_counterexample(), 10, 3);
  CHECK_FALSE(r.pass);
  CHECK(r.max_deviation > 1e-3);
}

TEST_CASE("blocks are self-consistent") {
  for (const auto* b : {&shipped_blocks()[0], &shipped_blocks()[1], &shipped_blocks()[2], &shipped_blocks()[3],
                        &shipped_blocks()[4], &planted_counterexample()}) {
    const Identity id = block_identity(*b);
    for (int value : {1, 2}) {
      const Dims dims = uniform_dims(id.dim_names, value);
      for (const auto& s : sample_domain(id, dims, 4, 3)) {
        const auto r = verify(id, s.params, s.bases, {}, 1e-20);
        CHECK_MESSAGE(r.pass, b->name << " " << dims_to_string(dims) << " rel " << r.rel_error);
      }
    }
  }
}

TEST_CASE("block lookup") {
  CHECK(find_block("milne_lilly").name == "milne_lilly");
  CHECK(find_block("planted_counterexample").name == "planted_counterexample");
  CHECK(error_code([] { find_block("nope"); }) == Errc::invalid_config);
  CHECK(find_block("kajihara").is_transformation());
  CHECK_FALSE(find_block("q_binomial").is_transformation());
}

TEST_CASE("Q-function cocycle") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const QComplex base = testing::random_complex(rng, 0.1, 0.6);
    const QComplex a = testing::random_complex(rng, 0.0, 0.9);
    const QComplex z = testing::random_complex(rng, 0.02, 0.5);
    const QComplex step = pow(base, QComplex(rng.uniform(0.5, 2.5)));
    const long k1 = rng.integer(0, 8), k2 = rng.integer(0, 8);
    auto product = [&](const QComplex& v) { return qpoch_infinite(a * v, base) / qpoch_infinite(v, base); };
    const QComplex whole = q_function(product, z, step, k1 + k2);
    const QComplex split = q_function(product, z, step, k1) * q_function(product, z * ipow(step, k1), step, k2);
    CHECK(relative_error(whole, split) < 1e-28);
  }
}

TEST_CASE("composition with a non-homogeneous block is refused") {
  BlockAssignment a{{{planted_counterexample(), {}}}, {find_block("q_binomial"), {}}};
  CHECK(error_code([&] { compose(a); }) == Errc::property_h_violation);
  BlockAssignment b{{{find_block("q_binomial"), {}}}, {planted_counterexample(), {}}};
  CHECK(error_code([&] { compose(b); }) == Errc::property_h_violation);
  CHECK(error_code([] { compose(BlockAssignment{{}, {find_block("q_binomial"), {}}}); }) == Errc::invalid_config);
}

TEST_CASE("composed identities verify") {
  const char* assignments[] = {
      R"({"blocks":[{"block":"q_binomial"}],"base":{"block":"q_binomial"}})",
      R"({"blocks":[{"block":"milne_lilly","dims":{"n":2}},{"block":"gustafson_krattenthaler"}],"base":{"block":"extra_c"}})",
      R"({"blocks":[{"block":"kajihara","dims":{"n":1,"m":2}}],"base":{"block":"q_binomial"}})",
      R"({"blocks":[{"block":"q_binomial"}],"base":{"block":"kajihara","dims":{"n":2,"m":1}}})",
  };
  for (const char* text : assignments) {
    const auto composed = compose(parse_assignment(text));
    CHECK(composed.certificates.size() == composed.identity.base.fixed_blocks + 1u);
    for (const auto& s : sample_domain(composed.identity, composed.dims, 6, 2)) {
      const auto r = verify(composed.identity, s.params, s.bases, {}, 1e-18);
      CHECK_MESSAGE(r.pass, composed.identity.id << " rel " << r.rel_error);
    }
  }
}

TEST_CASE("engine reproduces catalog entries pointwise") {
  const std::pair<const char*, Dims> cases[] = {
      {"bibasic_heine", {}},
      {"master_instance_big", {{"n1", 1}, {"n2", 2}, {"m", 1}}},
      {"master_instance_lauricella", {{"n", 1}, {"p", 2}, {"m", 1}}},
      {"bibasic_euler", {}},
  };
  for (const auto& [id, dims] : cases) {
    const auto counterpart = testing::engine_counterpart(id, dims);
    const Identity& entry = lookup(id);
    for (const auto& s : sample_domain(entry, dims, 13, 2)) {
      const auto point = counterpart.map(s);
      const auto d = testing::compare_sides(counterpart.composed.identity, counterpart.composed.dims, point.params,
                                            point.bases, entry, dims, s.params, s.bases);
      CHECK_MESSAGE(d.worst() < 1e-18, id << " lhs " << d.lhs << " rhs " << d.rhs);
    }
  }
}

TEST_CASE("Kajihara blocks compose to the double Kajihara transformation") {
  const Dims dims{{"n", 2}, {"nu", 1}, {"m", 1}, {"mu", 2}};
  const Identity& entry = lookup("kajihara_double");
  const auto composed = compose(parse_assignment(
      R"({"blocks":[{"block":"kajihara","dims":{"n":2,"m":2}}],"base":{"block":"kajihara","dims":{"n":1,"m":1}}})"));
  for (const auto& s : sample_domain(entry, dims, 14, 1)) {
    const auto& S = s.params;
    ParameterSet P(composed.dims);
    P.set("b1.a", S.vec("a"));
    P.set("b1.b", S.vec("b"));
    P.set("b1.c", S.scalar("c"));
    P.set("b1.x", S.vec("x"));
    P.set("b1.y", S.vec("X"));
    P.set("b1.z", S.scalar("z"));
    P.set("base.a", S.vec("d"));
    P.set("base.b", S.vec("e"));
    P.set("base.c", S.scalar("f"));
    P.set("base.x", S.vec("y"));
    P.set("base.y", S.vec("Y"));
    P.set("base.z", S.scalar("w"));
    const BaseSystem B(s.bases.q(), QComplex(1L), s.bases.t(), {s.bases.h()});
    const auto d = testing::compare_sides(composed.identity, composed.dims, P, B, entry, dims, S, s.bases);
    CHECK_MESSAGE(d.worst() < 1e-18, "lhs " << d.lhs << " rhs " << d.rhs);
  }
}

TEST_CASE("assignments parse and serialize") {
  const auto a = parse_assignment(
      R"({"blocks":[{"block":"milne_lilly","dims":{"n":2}},{"block":"q_binomial"}],"base":{"block":"extra_c"}})");
  REQUIRE(a.blocks.size() == 2);
  CHECK(a.blocks[0].dims.at("n") == 2);
  CHECK(a.base.dims.at("n") == 1);
  const auto again = parse_assignment(assignment_to_json(a));
  CHECK(again.blocks[1].block.name == "q_binomial");
  CHECK(again.base.block.name == "extra_c");

  CHECK(error_code([] { parse_assignment("{"); }) == Errc::invalid_config);
  CHECK(error_code([] { parse_assignment(R"({"blocks":[{"block":"zzz"}],"base":{"block":"q_binomial"}})"); }) ==
        Errc::invalid_config);
  CHECK(error_code([] {
          parse_assignment(R"({"blocks":[{"block":"q_binomial","dims":{"n":2}}],"base":{"block":"q_binomial"}})");
        }) == Errc::invalid_config);
  CHECK(error_code([] {
          parse_assignment(R"({"blocks":[{"block":"milne_lilly","dims":{"n":9}}],"base":{"block":"q_binomial"}})");
        }) == Errc::invalid_config);
}

TEST_CASE("compose_with_transformation needs a transformation block") {
  CHECK(error_code([] {
          compose_with_transformation({find_block("q_binomial"), {}}, {find_block("q_binomial"), {}});
        }) == Errc::invalid_config);
  const auto c = compose_with_transformation({find_block("kajihara"), {{"n", 1}, {"m", 1}}}, {find_block("extra_c"), {{"n", 1}}});
  CHECK(c.identity.lhs(c.dims).dimension == 1);
  CHECK(c.identity.rhs(c.dims).dimension == 2);
}

}  // TEST_SUITE
