#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qseries/multisum.hpp"

namespace qseries {

/// A convergence condition written as a modulus that must stay below 1.
struct Constraint {
  std::string label;
  std::function<double(const ParameterSet&, const BaseSystem&)> modulus;
};

/// How the bases of an identity are drawn by the sampler.
struct BaseProfile {
  double q_min = 0.1;
  double q_max = 0.6;
  bool uses_h = false;
  bool uses_t = false;
  /// Number of block exponents h_1..h_p: either the value of `block_dim` or
  /// `fixed_blocks` when `block_dim` is empty.
  std::string block_dim;
  int fixed_blocks = 0;

  int block_count(const Dims& dims) const;
};

/// A transformation or summation identity lhs = rhs. Both sides are built
/// for a concrete dimension assignment.
struct Identity {
  std::string id;
  std::string title;
  std::vector<std::string> dim_names;
  std::vector<ParamSpec> schema;
  std::vector<Constraint> constraints;
  BaseProfile base;
  std::function<SeriesSide(const Dims&)> lhs;
  std::function<SeriesSide(const Dims&)> rhs;

  /// Throws Error(invalid_parameters) unless `dims` assigns exactly the
  /// declared dimensions, each in 1..kMaxDimension.
  void check_dims(const Dims& dims) const;
  /// Schema, block count and every constraint below `bound`.
  bool in_domain(const ParameterSet& params, const BaseSystem& bases, double bound = 1.0) const;
};

inline constexpr int kMaxDimension = 4;

/// Every registered identity, in a fixed order.
const std::vector<Identity>& register_all();

/// Throws Error(unknown_identity) for an unregistered id.
const Identity& lookup(const std::string& id);

struct VerificationResult {
  std::string identity_id;
  ParameterSet params;
  BaseSystem bases;
  QComplex lhs;
  QComplex rhs;
  double abs_error = 0.0;
  double rel_error = 0.0;
  Diagnostics lhs_diagnostics;
  Diagnostics rhs_diagnostics;
  double tolerance = 0.0;
  bool pass = false;
};

/// Evaluates both sides and compares them. Throws Error(domain_violation)
/// outside the identity's domain; evaluation errors are rethrown with the
/// failing side named in the message.
VerificationResult verify(const Identity& identity, const ParameterSet& params, const BaseSystem& bases,
                          const TruncationPolicy& policy, double tolerance);

struct Sample {
  ParameterSet params;
  BaseSystem bases;
};

/// Sampling bound applied to every constraint modulus.
inline constexpr double kSamplingMargin = 0.7;
inline constexpr int kMaxConsecutiveRejections = 10'000;

/// Deterministic pseudo-random points with every constraint modulus at most
/// kSamplingMargin. Throws Error(domain_exhausted) after
/// kMaxConsecutiveRejections rejected candidates in a row.
std::vector<Sample> sample_domain(const Identity& identity, const Dims& dims, std::uint64_t seed, int count);

/// Machine-readable description of the catalog (JSON).
std::string export_catalog_json();

/// "n=2,m=1"
std::string dims_to_string(const Dims& dims);

}  // namespace qseries
