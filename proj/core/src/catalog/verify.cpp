#include "qseries/catalog.hpp"
#include "qseries/error.hpp"

namespace qseries {

namespace {

EvalResult evaluate_side(const char* which, const SeriesSide& side, const ParameterSet& params,
                         const BaseSystem& bases, const TruncationPolicy& policy) {
  try {
    return evaluate(side, params, bases, policy);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(which) + " side: " + e.detail());
  }
}

}  // namespace

VerificationResult verify(const Identity& identity, const ParameterSet& params, const BaseSystem& bases,
                          const TruncationPolicy& policy, double tolerance) {
  identity.check_dims(params.dims());
  validate_schema(identity.schema, params);
  if (!identity.in_domain(params, bases)) {
    throw Error(Errc::domain_violation, identity.id + ": parameters violate a convergence condition");
  }
  const Dims& dims = params.dims();
  EvalResult lhs = evaluate_side("left", identity.lhs(dims), params, bases, policy);
  EvalResult rhs = evaluate_side("right", identity.rhs(dims), params, bases, policy);
  const double rel = relative_error(lhs.value, rhs.value);
  VerificationResult result{identity.id,
                            params,
                            bases,
                            lhs.value,
                            rhs.value,
                            abs(lhs.value - rhs.value).to_double(),
                            rel,
                            lhs.diagnostics,
                            rhs.diagnostics,
                            tolerance,
                            rel <= tolerance};
  return result;
}

}  // namespace qseries
