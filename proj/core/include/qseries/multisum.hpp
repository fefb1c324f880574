#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qseries/multi_index.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

/// Dimension assignment such as {n: 2, m: 1}.
using Dims = std::map<std::string, int>;

/// Named scalars and vectors of an identity instance together with the
/// dimensions that fixed the vector lengths.
class ParameterSet {
 public:
  ParameterSet() = default;
  explicit ParameterSet(Dims dims) : dims_(std::move(dims)) {}

  void set(const std::string& name, QComplex value);
  void set(const std::string& name, std::vector<QComplex> values);
  void set_dim(const std::string& name, int value) { dims_[name] = value; }

  bool has_scalar(const std::string& name) const { return scalars_.count(name) != 0; }
  bool has_vector(const std::string& name) const { return vectors_.count(name) != 0; }
  const QComplex& scalar(const std::string& name) const;
  const std::vector<QComplex>& vec(const std::string& name) const;
  int dim(const std::string& name) const;

  const Dims& dims() const noexcept { return dims_; }
  const std::map<std::string, QComplex>& scalars() const noexcept { return scalars_; }
  const std::map<std::string, std::vector<QComplex>>& vectors() const noexcept { return vectors_; }

 private:
  Dims dims_;
  std::map<std::string, QComplex> scalars_;
  std::map<std::string, std::vector<QComplex>> vectors_;
};

/// Sampling role of a parameter.
enum class ParamKind {
  coefficient,  // free numerator/denominator parameter
  variable,     // Vandermonde variable, sampled near the unit circle
  argument,     // series argument, sampled small
};

/// One declared parameter. An empty `dim` marks a scalar; otherwise the
/// vector length is the value of that dimension.
struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::coefficient;
  std::string dim;
  double min_modulus = 0.0;
  double max_modulus = 0.0;
};

/// Default modulus range for a kind.
ParamSpec make_param(std::string name, ParamKind kind, std::string dim = {});
ParamSpec make_param(std::string name, ParamKind kind, std::string dim, double min_modulus, double max_modulus);

/// Throws Error(invalid_parameters) unless `params` holds exactly the declared
/// names with the declared lengths, and Error(degenerate_variables) if a
/// variable vector repeats a component.
void validate_schema(const std::vector<ParamSpec>& schema, const ParameterSet& params);

/// Shell truncation settings.
struct TruncationPolicy {
  int max_shell = 40;
  double tail_ratio_tol = 1e-26;
  int min_shells = 4;
};

/// Convergence report for one evaluated side.
struct Diagnostics {
  int shells = 0;                 // shells summed, |k| = 0 .. shells - 1
  long terms = 0;                 // indices evaluated
  double last_shell_ratio = 0.0;  // |last shell| / |partial sum|
  double tail_bound = 0.0;        // estimated relative size of the omitted tail
  bool converged = true;          // stopping rule met before max_shell
};

using TermFn = std::function<QComplex(IndexView)>;

/// One side of an identity: prefactor times a sum over Z_{>=0}^dimension.
/// A side of dimension 0 is the prefactor alone.
///
/// `term` is called once per evaluation and returns the summand for that
/// parameter point, so it may precompute factor tables.
struct SeriesSide {
  int dimension = 0;
  std::function<QComplex(const ParameterSet&, const BaseSystem&)> prefactor;
  std::function<TermFn(const ParameterSet&, const BaseSystem&)> term;
  std::function<bool(const ParameterSet&, const BaseSystem&)> domain;
};

struct EvalResult {
  QComplex value;
  Diagnostics diagnostics;
};

/// All compositions of w into n non-negative parts in lexicographic order.
std::vector<MultiIndex> enumerate_shell(int n, long w);

/// prod_{r<s} (x_r s^{k_r} - x_s s^{k_s}) / (x_r - x_s).
QComplex vandermonde_factor(const std::vector<QComplex>& x, IndexView k, const QComplex& step_power);

/// prod_{r<s} (1 - s^{k_r - k_s} x_r / x_s) / (1 - x_r / x_s), the form used in
/// the series of the catalog. Equals vandermonde_factor divided by
/// s^{sum_r (r-1) k_r}.
QComplex type_a_vandermonde(const std::vector<QComplex>& x, IndexView k, const QComplex& step_power);

/// Sums the side shell by shell. Throws Error(domain_violation) if the side's
/// domain predicate fails and Error(pole_encountered) if a term is not finite.
EvalResult evaluate(const SeriesSide& side, const ParameterSet& params, const BaseSystem& bases,
                    const TruncationPolicy& policy = {});

}  // namespace qseries
