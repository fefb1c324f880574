#include "catalog/detail.hpp"

namespace qseries::catalog_detail {

namespace {

Identity q_binomial() {
  Identity id;
  id.id = "q_binomial";
  id.title = "q-binomial theorem";
  id.schema = {make_param("a", ParamKind::coefficient), make_param("z", ParamKind::argument)};
  id.constraints = {{"|z|", [](const ParameterSet& P, const BaseSystem&) { return mod(P.scalar("z")); }}};
  id.lhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        RatioTable ratio;
        PowerTable z;
        QComplex operator()(IndexView k) { return ratio(k[0]) * z(k[0]); }
      };
      return share(Term{RatioTable(P.scalar("a"), B.q(), B.q()), PowerTable(P.scalar("z"))});
    });
  };
  id.rhs = [](const Dims&) {
    return product_side([](const ParameterSet& P, const BaseSystem& B) {
      const auto& z = P.scalar("z");
      return checked_div(qpoch_infinite(P.scalar("a") * z, B.q()), qpoch_infinite(z, B.q()));
    });
  };
  return id;
}

Identity heine_2phi1() {
  Identity id;
  id.id = "heine_2phi1";
  id.title = "Heine transformation of the 2phi1 series";
  id.schema = {make_param("a", ParamKind::coefficient), make_param("b", ParamKind::coefficient, "", 0.05, 0.2),
               make_param("c", ParamKind::coefficient), make_param("z", ParamKind::argument)};
  id.constraints = {{"|z|", [](const ParameterSet& P, const BaseSystem&) { return mod(P.scalar("z")); }},
                    {"|b|", [](const ParameterSet& P, const BaseSystem&) { return mod(P.scalar("b")); }}};
  id.lhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        RatioTable ab, cq;
        PowerTable z;
        QComplex operator()(IndexView k) { return ab(k[0]) * cq(k[0]) * z(k[0]); }
      };
      const auto& q = B.q();
      // (a)_k (b)_k / ((c)_k (q)_k): pair a with c and b with q.
      return share(Term{RatioTable(P.scalar("a"), P.scalar("c"), q), RatioTable(P.scalar("b"), q, q),
                        PowerTable(P.scalar("z"))});
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1,
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto& q = B.q();
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &z = P.scalar("z");
          return checked_div(qpoch_infinite(b, q) * qpoch_infinite(a * z, q), qpoch_infinite(c, q) * qpoch_infinite(z, q));
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          struct Term {
            RatioTable cb_az, z_q;
            PowerTable b;
            QComplex operator()(IndexView j) { return cb_az(j[0]) * z_q(j[0]) * b(j[0]); }
          };
          const auto& q = B.q();
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &z = P.scalar("z");
          return share(Term{RatioTable(c / b, a * z, q), RatioTable(z, q, q), PowerTable(b)});
        });
  };
  return id;
}

Identity bibasic_heine() {
  Identity id;
  id.id = "bibasic_heine";
  id.title = "bibasic Heine transformation";
  id.schema = {make_param("a", ParamKind::coefficient), make_param("b", ParamKind::coefficient),
               make_param("w", ParamKind::argument), make_param("z", ParamKind::argument)};
  id.constraints = {{"|z|", [](const ParameterSet& P, const BaseSystem&) { return mod(P.scalar("z")); }},
                    {"|w|", [](const ParameterSet& P, const BaseSystem&) { return mod(P.scalar("w")); }}};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        RatioTable a_q;
        ScaledRatio w_bw;
        PowerTable z;
        QComplex operator()(IndexView k) { return a_q(k[0]) * w_bw(k[0]) * z(k[0]); }
      };
      const auto &w = P.scalar("w"), &b = P.scalar("b");
      return share(Term{RatioTable(P.scalar("a"), B.qh(), B.qh()), ScaledRatio(w, b * w, B.qt(), B.qht()),
                        PowerTable(P.scalar("z"))});
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1,
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &w = P.scalar("w"), &z = P.scalar("z");
          return checked_div(qpoch_infinite(w, B.qt()) * qpoch_infinite(a * z, B.qh()),
                             qpoch_infinite(b * w, B.qt()) * qpoch_infinite(z, B.qh()));
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          struct Term {
            RatioTable b_q;
            ScaledRatio z_az;
            PowerTable w;
            QComplex operator()(IndexView j) { return b_q(j[0]) * z_az(j[0]) * w(j[0]); }
          };
          const auto &a = P.scalar("a"), &z = P.scalar("z");
          return share(Term{RatioTable(P.scalar("b"), B.qt(), B.qt()), ScaledRatio(z, a * z, B.qh(), B.qht()),
                            PowerTable(P.scalar("w"))});
        });
  };
  return id;
}

}  // namespace

void register_classical(std::vector<Identity>& out) {
  out.push_back(q_binomial());
  out.push_back(heine_2phi1());
  out.push_back(bibasic_heine());
}

}  // namespace qseries::catalog_detail
