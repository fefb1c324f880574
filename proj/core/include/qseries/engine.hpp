#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/catalog.hpp"

namespace qseries::engine {

/// Read access to the parameters of one block inside a composed parameter
/// set, where every name carries the block's prefix ("b1.a", "base.w").
class BlockParams {
 public:
  BlockParams(const ParameterSet& params, std::string prefix) : params_(&params), prefix_(std::move(prefix)) {}

  const QComplex& scalar(const std::string& name) const { return params_->scalar(prefix_ + name); }
  const std::vector<QComplex>& vec(const std::string& name) const { return params_->vec(prefix_ + name); }
  int dim(const std::string& name) const { return params_->dim(prefix_ + name); }
  const std::string& prefix() const noexcept { return prefix_; }

 private:
  const ParameterSet* params_;
  std::string prefix_;
};

/// Summand factory: the term function of the block at a fixed base and
/// argument z.
using BlockTermFactory = std::function<TermFn(const BlockParams&, const QComplex& base, const QComplex& z)>;
using BlockProduct = std::function<QComplex(const BlockParams&, const QComplex& base, const QComplex& z)>;
/// Convergence condition as a modulus that must stay below 1.
struct BlockConstraint {
  std::string label;
  std::function<double(const BlockParams&, const QComplex& z)> modulus;
};

/// A q-binomial theorem sum_k S(z, k) = P(z) in one base, or a
/// transformation sum_k S(z, k) = P(z) sum_j R(z, j). The argument is the
/// parameter named "z".
struct QBinomialBlock {
  std::string name;
  std::string label;
  std::vector<std::string> dim_names;
  /// Parameters other than the argument z.
  std::vector<ParamSpec> schema;
  double argument_min = 0.02;
  double argument_max = 0.12;
  std::function<int(const Dims&)> dimension;
  BlockTermFactory summand;
  BlockProduct product;
  std::vector<BlockConstraint> constraints;
  /// Set for transformation blocks only.
  std::function<int(const Dims&)> rest_dimension;
  BlockTermFactory rest;

  bool is_transformation() const noexcept { return static_cast<bool>(rest); }
};

/// The five shipped blocks: q_binomial, milne_lilly, gustafson_krattenthaler,
/// extra_c and kajihara.
const std::vector<QBinomialBlock>& shipped_blocks();

/// A self-consistent block whose summand is not homogeneous in z:
/// S = (z; q)_k / (q; q)_k a^k, P = (az; q)_inf / (a; q)_inf.
const QBinomialBlock& planted_counterexample();

/// Shipped blocks and the planted counterexample by name. Throws
/// Error(invalid_config) for other names.
const QBinomialBlock& find_block(const std::string& name);

/// The block's own identity sum_k S = P (sum_j R), unprefixed, for
/// self-consistency checks and for sampling block parameters.
Identity block_identity(const QBinomialBlock& block);

struct PropertyHResult {
  bool pass = false;
  double max_deviation = 0.0;
  int trials = 0;
};

/// Randomized test of S(zH, k) = H^{|k|} S(z, k) (and the same for R of a
/// transformation block) at sampled block parameters.
PropertyHResult check_property_H(const QBinomialBlock& block, int trials, std::uint64_t seed, double tol = 1e-20);

/// Q(z; base; k) = P(z base^k) / P(z) with base^k = step^k for a step power
/// such as q^{t h}.
QComplex q_function(const std::function<QComplex(const QComplex&)>& product, const QComplex& z,
                    const QComplex& step, long k);

struct BlockInstance {
  QBinomialBlock block;
  Dims dims;
};

/// Blocks 1..p in bases q^{h_r} with arguments z_r, and a base block in
/// base q^t with argument w.
struct BlockAssignment {
  std::vector<BlockInstance> blocks;
  BlockInstance base;
};

struct ComposedIdentity {
  Identity identity;
  /// Dimension assignment of the composed sides ("b1.n", "base.m", ...).
  Dims dims;
  std::vector<PropertyHResult> certificates;  // blocks 1..p, then base
};

/// Parameter prefix of block r (0-based) and of the base block.
std::string block_prefix(std::size_t r);
inline constexpr const char* kBasePrefix = "base.";

/// Builds both sides of the master transformation. Throws
/// Error(property_h_violation) if a block fails check_property_H and
/// Error(domain_empty) if no admissible sample point exists.
ComposedIdentity compose(const BlockAssignment& assignment);

/// Single transformation block composed with a base block.
ComposedIdentity compose_with_transformation(const BlockInstance& transformation, const BlockInstance& base);

/// Parses {"blocks": [{"block": name, "dims": {...}}, ...], "base": {...}}.
BlockAssignment parse_assignment(const std::string& json_text);
std::string assignment_to_json(const BlockAssignment& assignment);

}  // namespace qseries::engine
