#include "catalog/detail.hpp"

namespace qseries::catalog_detail {

namespace {

// (n1; b)_k (n2; b)_k / ((d1; b)_k (d2; b)_k)
struct DoubleRatio {
  RatioTable first, second;
  DoubleRatio(const QComplex& n1, const QComplex& n2, const QComplex& d1, const QComplex& d2, const QComplex& base)
      : first(n1, d1, base), second(n2, d2, base) {}
  QComplex operator()(long k) { return first(k) * second(k); }
};

Constraint derived_modulus(const char* label, std::function<QComplex(const ParameterSet&)> f) {
  return {label, [f = std::move(f)](const ParameterSet& P, const BaseSystem&) { return mod(f(P)); }};
}

QComplex euler_Z(const ParameterSet& P) { return P.scalar("a") * P.scalar("b") * P.scalar("z") / P.scalar("c"); }
QComplex euler_W(const ParameterSet& P) { return P.scalar("d") * P.scalar("e") * P.scalar("w") / P.scalar("f"); }

Identity q_euler() {
  Identity id;
  id.id = "q_euler";
  id.title = "q-analogue of Euler's transformation";
  id.schema = {make_param("a", ParamKind::coefficient), make_param("b", ParamKind::coefficient),
               make_param("c", ParamKind::coefficient, "", 0.3, 0.6), make_param("z", ParamKind::argument)};
  id.constraints = {modulus_of("z"), derived_modulus("|abz/c|", euler_Z)};
  id.lhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet& P, const BaseSystem& B) {
      const auto& q = B.q();
      return TermFn([r = DoubleRatio(P.scalar("a"), P.scalar("b"), q, P.scalar("c"), q),
                     z = PowerTable(P.scalar("z"))](IndexView k) mutable { return r(k[0]) * z(k[0]); });
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1, [](const ParameterSet& P, const BaseSystem& B) { return inf_ratio(euler_Z(P), P.scalar("z"), B.q()); },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto& q = B.q();
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c");
          return TermFn([r = DoubleRatio(c / a, c / b, q, c, q), Z = PowerTable(euler_Z(P))](IndexView j) mutable {
            return r(j[0]) * Z(j[0]);
          });
        });
  };
  return id;
}

Identity bibasic_euler() {
  Identity id;
  id.id = "bibasic_euler";
  id.title = "bibasic double-sum extension of Euler's transformation";
  id.schema = {make_param("a", ParamKind::coefficient), make_param("b", ParamKind::coefficient),
               make_param("c", ParamKind::coefficient, "", 0.3, 0.6), make_param("d", ParamKind::coefficient),
               make_param("e", ParamKind::coefficient), make_param("f", ParamKind::coefficient, "", 0.3, 0.6),
               make_param("z", ParamKind::argument), make_param("w", ParamKind::argument)};
  id.constraints = {modulus_of("z"), modulus_of("w"), derived_modulus("|abz/c|", euler_Z),
                    derived_modulus("|dew/f|", euler_W)};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims&) {
    return series_side(2, unit, [](const ParameterSet& P, const BaseSystem& B) {
      const auto &qh = B.qh(), &qt = B.qt();
      const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d"), &e = P.scalar("e"),
                 &f = P.scalar("f"), &w = P.scalar("w");
      QComplex W = euler_W(P);
      return TermFn([outer = DoubleRatio(a, b, qh, c, qh), inner = DoubleRatio(f / d, f / e, qt, f, qt),
                     q_ratio = ScaledRatio(w, W, qt, B.qht()), z = PowerTable(P.scalar("z")), W,
                     qht = B.qht()](IndexView k) mutable {
        return outer(k[0]) * q_ratio(k[0]) * z(k[0]) * inner(k[1]) * ipow(W * ipow(qht, k[0]), k[1]);
      });
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        2,
        [](const ParameterSet& P, const BaseSystem& B) {
          return inf_ratio(P.scalar("w"), euler_W(P), B.qt()) * inf_ratio(euler_Z(P), P.scalar("z"), B.qh());
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &qh = B.qh(), &qt = B.qt();
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d"),
                     &e = P.scalar("e"), &f = P.scalar("f"), &z = P.scalar("z");
          QComplex Z = euler_Z(P);
          return TermFn([outer = DoubleRatio(d, e, qt, f, qt), inner = DoubleRatio(c / a, c / b, qh, c, qh),
                         q_ratio = ScaledRatio(z, Z, qh, B.qht()), w = PowerTable(P.scalar("w")), Z,
                         qht = B.qht()](IndexView j) mutable {
            return outer(j[0]) * q_ratio(j[0]) * w(j[0]) * inner(j[1]) * ipow(Z * ipow(qht, j[0]), j[1]);
          });
        });
  };
  return id;
}

// prod a prod b z / c^m
QComplex kajihara_argument(const Vec& a, const Vec& b, const QComplex& c, const QComplex& z) {
  return product(a) * product(b) * z / ipow(c, static_cast<long>(b.size()));
}

Identity kajihara() {
  Identity id;
  id.id = "kajihara";
  id.title = "Kajihara's A_n-A_m transformation";
  id.dim_names = {"n", "m"};
  id.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("b", ParamKind::coefficient, "m"),
               make_param("c", ParamKind::coefficient, "", 0.3, 0.6), make_param("x", ParamKind::variable, "n"),
               make_param("y", ParamKind::variable, "m"), make_param("z", ParamKind::argument)};
  id.constraints = {modulus_of("z"), derived_modulus("|prod a prod b z / c^m|", [](const ParameterSet& P) {
                      return kajihara_argument(P.vec("a"), P.vec("b"), P.scalar("c"), P.scalar("z"));
                    })};
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      return TermFn([s = KajiharaLeftTerm(P.vec("x"), P.vec("y"), P.vec("a"), P.vec("b"), P.scalar("c"), B.q()),
                     z = P.scalar("z")](IndexView k) mutable { return s(k) * ipow(z, weight(k)); });
    });
  };
  id.rhs = [](const Dims& d) {
    return series_side(
        d.at("m"),
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto& z = P.scalar("z");
          return inf_ratio(kajihara_argument(P.vec("a"), P.vec("b"), P.scalar("c"), z), z, B.q());
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          return TermFn([s = KajiharaRightTerm(P.vec("x"), P.vec("y"), P.vec("a"), P.vec("b"), P.scalar("c"), B.q()),
                         Z = kajihara_argument(P.vec("a"), P.vec("b"), P.scalar("c"), P.scalar("z"))](
                            IndexView j) mutable { return s(j) * ipow(Z, weight(j)); });
        });
  };
  return id;
}

QComplex double_Z(const ParameterSet& P) { return kajihara_argument(P.vec("a"), P.vec("b"), P.scalar("c"), P.scalar("z")); }
QComplex double_W(const ParameterSet& P) { return kajihara_argument(P.vec("d"), P.vec("e"), P.scalar("f"), P.scalar("w")); }

Identity kajihara_double() {
  Identity id;
  id.id = "kajihara_double";
  id.title = "bibasic double multiple-sum transformation built from two Kajihara transformations";
  id.dim_names = {"n", "nu", "m", "mu"};
  id.schema = {make_param("a", ParamKind::coefficient, "n"),  make_param("b", ParamKind::coefficient, "mu"),
               make_param("c", ParamKind::coefficient, "", 0.3, 0.6),
               make_param("x", ParamKind::variable, "n"),     make_param("X", ParamKind::variable, "mu"),
               make_param("d", ParamKind::coefficient, "m"),  make_param("e", ParamKind::coefficient, "nu"),
               make_param("f", ParamKind::coefficient, "", 0.3, 0.6),
               make_param("y", ParamKind::variable, "m"),     make_param("Y", ParamKind::variable, "nu"),
               make_param("z", ParamKind::argument),          make_param("w", ParamKind::argument)};
  id.constraints = {modulus_of("z"), modulus_of("w"), derived_modulus("|prod a prod b z / c^mu|", double_Z),
                    derived_modulus("|prod d prod e w / f^nu|", double_W)};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& dims) {
    const int n = dims.at("n"), nu = dims.at("nu");
    return series_side(n + nu, unit, [n, nu](const ParameterSet& P, const BaseSystem& B) {
      return TermFn([n, nu,
                     left = KajiharaLeftTerm(P.vec("x"), P.vec("X"), P.vec("a"), P.vec("b"), P.scalar("c"), B.qh()),
                     right = KajiharaRightTerm(P.vec("y"), P.vec("Y"), P.vec("d"), P.vec("e"), P.scalar("f"), B.qt()),
                     q_ratio = ScaledRatio(P.scalar("w"), double_W(P), B.qt(), B.qht()), z = P.scalar("z"),
                     W = double_W(P), qht = B.qht()](IndexView kk) mutable {
        IndexView k = kk.first(static_cast<std::size_t>(n));
        IndexView kt = kk.subspan(static_cast<std::size_t>(n), static_cast<std::size_t>(nu));
        long K = weight(k);
        return left(k) * ipow(z, K) * q_ratio(K) * right(kt) * ipow(W * ipow(qht, K), weight(kt));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const int m = dims.at("m"), mu = dims.at("mu");
    return series_side(
        m + mu,
        [](const ParameterSet& P, const BaseSystem& B) {
          return inf_ratio(P.scalar("w"), double_W(P), B.qt()) * inf_ratio(double_Z(P), P.scalar("z"), B.qh());
        },
        [m, mu](const ParameterSet& P, const BaseSystem& B) {
          return TermFn([m, mu,
                         left = KajiharaLeftTerm(P.vec("y"), P.vec("Y"), P.vec("d"), P.vec("e"), P.scalar("f"), B.qt()),
                         right = KajiharaRightTerm(P.vec("x"), P.vec("X"), P.vec("a"), P.vec("b"), P.scalar("c"), B.qh()),
                         q_ratio = ScaledRatio(P.scalar("z"), double_Z(P), B.qh(), B.qht()), w = P.scalar("w"),
                         Z = double_Z(P), qht = B.qht()](IndexView jj) mutable {
            IndexView j = jj.first(static_cast<std::size_t>(m));
            IndexView jt = jj.subspan(static_cast<std::size_t>(m), static_cast<std::size_t>(mu));
            long J = weight(j);
            return left(j) * ipow(w, J) * q_ratio(J) * right(jt) * ipow(Z * ipow(qht, J), weight(jt));
          });
        });
  };
  return id;
}

}  // namespace

void register_euler(std::vector<Identity>& out) {
  out.push_back(q_euler());
  out.push_back(bibasic_euler());
  out.push_back(kajihara());
  out.push_back(kajihara_double());
}

}  // namespace qseries::catalog_detail
