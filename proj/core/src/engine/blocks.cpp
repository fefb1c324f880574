#include <algorithm>
#include <memory>

#include "qseries/engine.hpp"
#include "qseries/error.hpp"

namespace qseries::engine {

namespace {

using Vec = std::vector<QComplex>;

QComplex prod_of(const Vec& v) {
  QComplex p(1L);
  for (const auto& x : v) p *= x;
  return p;
}

QComplex infinite_ratio(const QComplex& num, const QComplex& den, const QComplex& base) {
  return checked_div(qpoch_infinite(num, base), qpoch_infinite(den, base));
}

/// Rows of (num; base)_k / (den; base)_k factors, each indexed by its own
/// component of the multi-index or by the total weight.
struct PochPairs {
  struct Pair {
    PochTable num, den;
    std::size_t row;  // index component feeding this pair; npos for |k|
  };
  std::vector<Pair> pairs;

  void add(const QComplex& num, const QComplex& den, const QComplex& base, std::size_t row) {
    pairs.push_back({PochTable(num, base), PochTable(den, base), row});
  }
  QComplex operator()(IndexView k, long total) {
    QComplex v(1L);
    for (auto& p : pairs) {
      const long idx = p.row == std::string::npos ? total : k[p.row];
      v = checked_div(v * p.num(idx), p.den(idx));
    }
    return v;
  }
};

/// State shared by the A_n summands: Vandermonde variables, base, the pair
/// table, the argument and an optional extra power of the base.
struct AnSummand {
  Vec x;
  QComplex base;
  PochPairs pairs;
  QComplex z;
  bool quadratic = false;  // q^{e_2(k)} prod x_r^{-k_r}
  QComplex operator()(IndexView k) {
    const long total = weight(k);
    QComplex t = vandermonde_factor(x, k, base) * pairs(k, total) * ipow(z, total);
    if (quadratic) {
      t *= ipow(base, e2(k));
      for (std::size_t r = 0; r < x.size(); ++r) t = checked_div(t, ipow(x[r], k[r]));
    }
    return t;
  }
};

template <typename F>
TermFn wrap(F f) {
  auto state = std::make_shared<F>(std::move(f));
  return [state](IndexView k) { return (*state)(k); };
}

BlockConstraint argument_modulus() {
  return {"|z|", [](const BlockParams&, const QComplex& z) { return z.magnitude(); }};
}

int dim_n(const Dims& d) { return d.at("n"); }

QBinomialBlock q_binomial_block() {
  QBinomialBlock b;
  b.name = "q_binomial";
  b.label = "classical q-binomial theorem";
  b.schema = {make_param("a", ParamKind::coefficient)};
  b.dimension = [](const Dims&) { return 1; };
  b.summand = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    struct Term {
      PochTable a, qq;
      QComplex z;
      QComplex operator()(IndexView k) { return checked_div(a(k[0]), qq(k[0])) * ipow(z, k[0]); }
    };
    return wrap(Term{PochTable(P.scalar("a"), q), PochTable(q, q), z});
  };
  b.product = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    return infinite_ratio(P.scalar("a") * z, z, q);
  };
  b.constraints = {argument_modulus()};
  return b;
}

QBinomialBlock milne_lilly_block() {
  QBinomialBlock b;
  b.name = "milne_lilly";
  b.label = "Milne-Lilly A_n q-binomial theorem";
  b.dim_names = {"n"};
  b.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("x", ParamKind::variable, "n")};
  b.dimension = dim_n;
  b.summand = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    const Vec &a = P.vec("a"), &x = P.vec("x");
    AnSummand s{x, q, {}, z, true};
    for (std::size_t r = 0; r < x.size(); ++r) {
      for (std::size_t u = 0; u < x.size(); ++u) s.pairs.add(a[u] * x[r] / x[u], q * x[r] / x[u], q, r);
    }
    return wrap(std::move(s));
  };
  b.product = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    const Vec &a = P.vec("a"), &x = P.vec("x");
    QComplex p(1L);
    for (std::size_t r = 0; r < x.size(); ++r) p *= infinite_ratio(a[r] * z / x[r], z / x[r], q);
    return p;
  };
  b.constraints = {{"max_r |z/x_r|", [](const BlockParams& P, const QComplex& z) {
                      double worst = 0.0;
                      for (const auto& xr : P.vec("x")) worst = std::max(worst, (z / xr).magnitude());
                      return worst;
                    }}};
  return b;
}

QBinomialBlock gustafson_krattenthaler_block() {
  QBinomialBlock b;
  b.name = "gustafson_krattenthaler";
  b.label = "Gustafson-Krattenthaler A_n q-binomial sum";
  b.dim_names = {"n"};
  b.schema = {make_param("a", ParamKind::coefficient), make_param("x", ParamKind::variable, "n")};
  b.dimension = dim_n;
  b.summand = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    const Vec& x = P.vec("x");
    AnSummand s{x, q, {}, z, false};
    for (std::size_t r = 0; r < x.size(); ++r) s.pairs.add(P.scalar("a"), q, q, r);
    return wrap(std::move(s));
  };
  b.product = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    QComplex p(1L), zr = z;
    for (std::size_t r = 0; r < P.vec("x").size(); ++r, zr *= q) p *= infinite_ratio(P.scalar("a") * zr, zr, q);
    return p;
  };
  b.constraints = {argument_modulus()};
  return b;
}

QBinomialBlock extra_c_block() {
  QBinomialBlock b;
  b.name = "extra_c";
  b.label = "A_n q-binomial theorem with an extra parameter c";
  b.dim_names = {"n"};
  b.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("x", ParamKind::variable, "n"),
              make_param("c", ParamKind::coefficient, "", 0.02, 0.06)};
  b.dimension = dim_n;
  b.summand = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    const Vec &a = P.vec("a"), &x = P.vec("x");
    const QComplex& c = P.scalar("c");
    const QComplex A = prod_of(a);
    AnSummand s{x, q, {}, z, false};
    for (std::size_t r = 0; r < x.size(); ++r) {
      for (std::size_t u = 0; u < x.size(); ++u) s.pairs.add(a[u] * x[r] / x[u], q * x[r] / x[u], q, r);
      s.pairs.add(c * x[r] / A, c * x[r], q, r);
      s.pairs.add(c * x[r], c * x[r] / a[r], q, std::string::npos);
    }
    return wrap(std::move(s));
  };
  b.product = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    return infinite_ratio(prod_of(P.vec("a")) * z, z, q);
  };
  b.constraints = {argument_modulus()};
  return b;
}

/// prod a prod b z / c^m
QComplex kajihara_image(const BlockParams& P, const QComplex& z) {
  return prod_of(P.vec("a")) * prod_of(P.vec("b")) * z / ipow(P.scalar("c"), static_cast<long>(P.vec("b").size()));
}

QBinomialBlock kajihara_block() {
  QBinomialBlock b;
  b.name = "kajihara";
  b.label = "Kajihara A_n-A_m transformation";
  b.dim_names = {"n", "m"};
  b.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("b", ParamKind::coefficient, "m"),
              make_param("c", ParamKind::coefficient, "", 0.3, 0.6), make_param("x", ParamKind::variable, "n"),
              make_param("y", ParamKind::variable, "m")};
  b.dimension = dim_n;
  b.summand = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    const Vec &a = P.vec("a"), &b = P.vec("b"), &x = P.vec("x"), &y = P.vec("y");
    const QComplex& c = P.scalar("c");
    AnSummand s{x, q, {}, z, false};
    for (std::size_t r = 0; r < x.size(); ++r) {
      for (std::size_t u = 0; u < x.size(); ++u) s.pairs.add(a[u] * x[r] / x[u], q * x[r] / x[u], q, r);
      for (std::size_t u = 0; u < y.size(); ++u) s.pairs.add(b[u] * x[r] * y[u], c * x[r] * y[u], q, r);
    }
    return wrap(std::move(s));
  };
  b.product = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    return infinite_ratio(kajihara_image(P, z), z, q);
  };
  b.constraints = {argument_modulus(),
                   {"|prod a prod b z / c^m|",
                    [](const BlockParams& P, const QComplex& z) { return kajihara_image(P, z).magnitude(); }}};
  b.rest_dimension = [](const Dims& d) { return d.at("m"); };
  b.rest = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    const Vec &a = P.vec("a"), &b = P.vec("b"), &x = P.vec("x"), &y = P.vec("y");
    const QComplex& c = P.scalar("c");
    AnSummand s{y, q, {}, kajihara_image(P, z), false};
    for (std::size_t r = 0; r < y.size(); ++r) {
      for (std::size_t u = 0; u < y.size(); ++u) s.pairs.add(c * y[r] / (b[u] * y[u]), q * y[r] / y[u], q, r);
      for (std::size_t u = 0; u < x.size(); ++u) s.pairs.add(c * x[u] * y[r] / a[u], c * x[u] * y[r], q, r);
    }
    return wrap(std::move(s));
  };
  return b;
}

QBinomialBlock planted_block() {
  QBinomialBlock b;
  b.name = "planted_counterexample";
  b.label = "q-binomial theorem with the argument moved into the Pochhammer symbol";
  b.schema = {make_param("a", ParamKind::coefficient, "", 0.05, 0.2)};
  b.dimension = [](const Dims&) { return 1; };
  b.summand = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    struct Term {
      PochTable zz, qq;
      QComplex a;
      QComplex operator()(IndexView k) { return checked_div(zz(k[0]), qq(k[0])) * ipow(a, k[0]); }
    };
    return wrap(Term{PochTable(z, q), PochTable(q, q), P.scalar("a")});
  };
  b.product = [](const BlockParams& P, const QComplex& q, const QComplex& z) {
    return infinite_ratio(P.scalar("a") * z, P.scalar("a"), q);
  };
  b.constraints = {{"|a|", [](const BlockParams& P, const QComplex&) { return P.scalar("a").magnitude(); }}};
  return b;
}

}  // namespace

const std::vector<QBinomialBlock>& shipped_blocks() {
  static const std::vector<QBinomialBlock> blocks = {q_binomial_block(), milne_lilly_block(),
                                                     gustafson_krattenthaler_block(), extra_c_block(),
                                                     kajihara_block()};
  return blocks;
}

const QBinomialBlock& planted_counterexample() {
  static const QBinomialBlock block = planted_block();
  return block;
}

const QBinomialBlock& find_block(const std::string& name) {
  for (const auto& b : shipped_blocks()) {
    if (b.name == name) return b;
  }
  if (name == planted_counterexample().name) return planted_counterexample();
  throw Error(Errc::invalid_config, "unknown block '" + name + "'");
}

Identity block_identity(const QBinomialBlock& block) {
  Identity id;
  id.id = "block:" + block.name;
  id.title = block.label;
  id.dim_names = block.dim_names;
  id.schema = block.schema;
  id.schema.push_back(make_param("z", ParamKind::argument, "", block.argument_min, block.argument_max));
  for (const auto& c : block.constraints) {
    id.constraints.push_back({c.label, [m = c.modulus](const ParameterSet& P, const BaseSystem&) {
                                return m(BlockParams(P, ""), P.scalar("z"));
                              }});
  }
  id.lhs = [block](const Dims& d) {
    SeriesSide side;
    side.dimension = block.dimension(d);
    side.prefactor = [](const ParameterSet&, const BaseSystem&) { return QComplex(1L); };
    side.term = [block](const ParameterSet& P, const BaseSystem& B) {
      return block.summand(BlockParams(P, ""), B.q(), P.scalar("z"));
    };
    return side;
  };
  id.rhs = [block](const Dims& d) {
    SeriesSide side;
    side.dimension = block.is_transformation() ? block.rest_dimension(d) : 0;
    side.prefactor = [block](const ParameterSet& P, const BaseSystem& B) {
      return block.product(BlockParams(P, ""), B.q(), P.scalar("z"));
    };
    if (block.is_transformation()) {
      side.term = [block](const ParameterSet& P, const BaseSystem& B) {
        return block.rest(BlockParams(P, ""), B.q(), P.scalar("z"));
      };
    }
    return side;
  };
  return id;
}

}  // namespace qseries::engine
