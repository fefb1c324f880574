#include "catalog/detail.hpp"

namespace qseries::catalog_detail {

namespace {

Identity milne_lilly() {
  Identity id;
  id.id = "an_qbin_milne_lilly";
  id.title = "A_n q-binomial theorem of Milne and Lilly";
  id.dim_names = {"n"};
  id.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("x", ParamKind::variable, "n"),
               make_param("z", ParamKind::argument)};
  id.constraints = {z_over_x("z", "x")};
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        MilneLillyTerm s;
        QComplex z;
        QComplex operator()(IndexView k) { return s(k) * ipow(z, weight(k)); }
      };
      return share(Term{MilneLillyTerm(P.vec("x"), P.vec("a"), B.q()), P.scalar("z")});
    });
  };
  id.rhs = [](const Dims&) {
    return product_side([](const ParameterSet& P, const BaseSystem& B) {
      const auto& x = P.vec("x");
      Vec z_x = divided(P.scalar("z"), x);
      return product_ratio(times(P.vec("a"), z_x), z_x, B.q());
    });
  };
  return id;
}

Identity gustafson_krattenthaler() {
  Identity id;
  id.id = "an_qbin_gk";
  id.title = "A_n q-binomial sum of Gustafson and Krattenthaler";
  id.dim_names = {"n"};
  id.schema = {make_param("a", ParamKind::coefficient), make_param("x", ParamKind::variable, "n"),
               make_param("z", ParamKind::argument)};
  id.constraints = {modulus_of("z")};
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        GustafsonKrattenthalerTerm s;
        QComplex z;
        QComplex operator()(IndexView k) { return s(k) * ipow(z, weight(k)); }
      };
      return share(Term{GustafsonKrattenthalerTerm(P.vec("x"), P.scalar("a"), B.q()), P.scalar("z")});
    });
  };
  id.rhs = [](const Dims& d) {
    const int n = d.at("n");
    return product_side([n](const ParameterSet& P, const BaseSystem& B) {
      const auto &a = P.scalar("a"), &z = P.scalar("z");
      QComplex p(1L);
      for (int r = 0; r < n; ++r) {
        QComplex zr = z * ipow(B.q(), r);
        p *= checked_div(qpoch_infinite(a * zr, B.q()), qpoch_infinite(zr, B.q()));
      }
      return p;
    });
  };
  return id;
}

Identity extra_parameter() {
  Identity id;
  id.id = "an_qbin_extra_c";
  id.title = "A_n q-binomial theorem with an extra parameter c";
  id.dim_names = {"n"};
  id.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("x", ParamKind::variable, "n"),
               make_param("c", ParamKind::coefficient, "", 0.02, 0.06), make_param("z", ParamKind::argument)};
  id.constraints = {modulus_of("z")};
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        ExtraParameterTerm s;
        QComplex z;
        QComplex operator()(IndexView k) { return s(k) * ipow(z, weight(k)); }
      };
      return share(Term{ExtraParameterTerm(P.vec("x"), P.vec("a"), P.scalar("c"), B.q()), P.scalar("z")});
    });
  };
  id.rhs = [](const Dims&) {
    return product_side([](const ParameterSet& P, const BaseSystem& B) {
      const auto& z = P.scalar("z");
      return checked_div(qpoch_infinite(product(P.vec("a")) * z, B.q()), qpoch_infinite(z, B.q()));
    });
  };
  return id;
}

// Shared schema pieces of the four bibasic A_n theorems.
std::vector<ParamSpec> an_schema(bool b_vector) {
  return {make_param("a", ParamKind::coefficient, "n"),
          b_vector ? make_param("b", ParamKind::coefficient, "m") : make_param("b", ParamKind::coefficient),
          make_param("x", ParamKind::variable, "n"),
          make_param("y", ParamKind::variable, "m"),
          make_param("z", ParamKind::argument),
          make_param("w", ParamKind::argument)};
}

Identity heine7() {
  Identity id;
  id.id = "thm_heine7";
  id.title = "A_n bibasic Heine transformation from two Milne-Lilly sums";
  id.dim_names = {"n", "m"};
  id.schema = an_schema(true);
  id.constraints = {z_over_x("z", "x"), z_over_x("w", "y")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        MilneLillyTerm s;
        ScaledRatioProduct q_ratio;
        QComplex z;
        QComplex operator()(IndexView k) {
          long K = weight(k);
          return s(k) * ipow(z, K) * q_ratio(K);
        }
      };
      Term t{MilneLillyTerm(P.vec("x"), P.vec("a"), B.qh()), {}, P.scalar("z")};
      const auto &b = P.vec("b"), &y = P.vec("y");
      const auto& w = P.scalar("w");
      for (std::size_t r = 0; r < y.size(); ++r) t.q_ratio.add(w / y[r], b[r] * w / y[r], B.qt(), B.qht());
      return share(std::move(t));
    });
  };
  id.rhs = [](const Dims& d) {
    return series_side(
        d.at("m"),
        [](const ParameterSet& P, const BaseSystem& B) {
          Vec w_y = divided(P.scalar("w"), P.vec("y"));
          Vec z_x = divided(P.scalar("z"), P.vec("x"));
          return product_ratio(w_y, times(P.vec("b"), w_y), B.qt()) * product_ratio(times(P.vec("a"), z_x), z_x, B.qh());
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          struct Term {
            MilneLillyTerm s;
            ScaledRatioProduct q_ratio;
            QComplex w;
            QComplex operator()(IndexView j) {
              long J = weight(j);
              return s(j) * ipow(w, J) * q_ratio(J);
            }
          };
          Term t{MilneLillyTerm(P.vec("y"), P.vec("b"), B.qt()), {}, P.scalar("w")};
          const auto &a = P.vec("a"), &x = P.vec("x");
          const auto& z = P.scalar("z");
          for (std::size_t r = 0; r < x.size(); ++r) t.q_ratio.add(z / x[r], a[r] * z / x[r], B.qh(), B.qht());
          return share(std::move(t));
        });
  };
  return id;
}

Identity heine8() {
  Identity id;
  id.id = "thm_heine8";
  id.title = "A_n bibasic Heine transformation from Milne-Lilly and Gustafson-Krattenthaler sums";
  id.dim_names = {"n", "m"};
  id.schema = an_schema(false);
  id.constraints = {z_over_x("z", "x"), modulus_of("w")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& d) {
    const int m = d.at("m");
    return series_side(d.at("n"), unit, [m](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        MilneLillyTerm s;
        ScaledRatioProduct q_ratio;
        QComplex z;
        QComplex operator()(IndexView k) {
          long K = weight(k);
          return s(k) * ipow(z, K) * q_ratio(K);
        }
      };
      Term t{MilneLillyTerm(P.vec("x"), P.vec("a"), B.qh()), {}, P.scalar("z")};
      const auto &b = P.scalar("b"), &w = P.scalar("w");
      for (int r = 0; r < m; ++r) {
        QComplex wr = w * ipow(B.qt(), r);
        t.q_ratio.add(wr, b * wr, B.qt(), B.qht());
      }
      return share(std::move(t));
    });
  };
  id.rhs = [](const Dims& d) {
    const int m = d.at("m");
    return series_side(
        m,
        [m](const ParameterSet& P, const BaseSystem& B) {
          const auto &b = P.scalar("b"), &w = P.scalar("w");
          QComplex p(1L);
          for (int r = 0; r < m; ++r) {
            QComplex wr = w * ipow(B.qt(), r);
            p *= checked_div(qpoch_infinite(wr, B.qt()), qpoch_infinite(b * wr, B.qt()));
          }
          Vec z_x = divided(P.scalar("z"), P.vec("x"));
          return p * product_ratio(times(P.vec("a"), z_x), z_x, B.qh());
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          struct Term {
            GustafsonKrattenthalerTerm s;
            ScaledRatioProduct q_ratio;
            QComplex w;
            QComplex operator()(IndexView j) {
              long J = weight(j);
              return s(j) * ipow(w, J) * q_ratio(J);
            }
          };
          Term t{GustafsonKrattenthalerTerm(P.vec("y"), P.scalar("b"), B.qt()), {}, P.scalar("w")};
          const auto &a = P.vec("a"), &x = P.vec("x");
          const auto& z = P.scalar("z");
          for (std::size_t r = 0; r < x.size(); ++r) t.q_ratio.add(z / x[r], a[r] * z / x[r], B.qh(), B.qht());
          return share(std::move(t));
        });
  };
  return id;
}

Identity heine1() {
  Identity id;
  id.id = "thm_heine1";
  id.title = "A_n bibasic Heine transformation from two sums with extra parameters";
  id.dim_names = {"n", "m"};
  id.schema = an_schema(true);
  id.schema.push_back(make_param("c", ParamKind::coefficient, "", 0.02, 0.06));
  id.schema.push_back(make_param("d", ParamKind::coefficient, "", 0.02, 0.06));
  id.constraints = {modulus_of("z"), modulus_of("w")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        ExtraParameterTerm s;
        ScaledRatioProduct q_ratio;
        QComplex z;
        QComplex operator()(IndexView k) {
          long K = weight(k);
          return s(k) * ipow(z, K) * q_ratio(K);
        }
      };
      Term t{ExtraParameterTerm(P.vec("x"), P.vec("a"), P.scalar("c"), B.qh()), {}, P.scalar("z")};
      const auto& w = P.scalar("w");
      t.q_ratio.add(w, product(P.vec("b")) * w, B.qt(), B.qht());
      return share(std::move(t));
    });
  };
  id.rhs = [](const Dims& d) {
    return series_side(
        d.at("m"),
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &w = P.scalar("w"), &z = P.scalar("z");
          return checked_div(qpoch_infinite(w, B.qt()), qpoch_infinite(product(P.vec("b")) * w, B.qt())) *
                 checked_div(qpoch_infinite(product(P.vec("a")) * z, B.qh()), qpoch_infinite(z, B.qh()));
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          struct Term {
            ExtraParameterTerm s;
            ScaledRatioProduct q_ratio;
            QComplex w;
            QComplex operator()(IndexView j) {
              long J = weight(j);
              return s(j) * ipow(w, J) * q_ratio(J);
            }
          };
          Term t{ExtraParameterTerm(P.vec("y"), P.vec("b"), P.scalar("d"), B.qt()), {}, P.scalar("w")};
          const auto& z = P.scalar("z");
          t.q_ratio.add(z, product(P.vec("a")) * z, B.qh(), B.qht());
          return share(std::move(t));
        });
  };
  return id;
}

Identity heine2() {
  Identity id;
  id.id = "thm_heine2";
  id.title = "A_n bibasic Heine transformation mixing the Milne and Milne-Lilly sums";
  id.dim_names = {"n", "m"};
  id.schema = an_schema(true);
  id.constraints = {modulus_of("z"), z_over_x("w", "y")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& d) {
    return series_side(d.at("n"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        ExtraParameterTerm s;
        ScaledRatioProduct q_ratio;
        QComplex z;
        QComplex operator()(IndexView k) {
          long K = weight(k);
          return s(k) * ipow(z, K) * q_ratio(K);
        }
      };
      Term t{ExtraParameterTerm(P.vec("x"), P.vec("a"), QComplex(0L), B.qh()), {}, P.scalar("z")};
      const auto &b = P.vec("b"), &y = P.vec("y");
      const auto& w = P.scalar("w");
      for (std::size_t r = 0; r < y.size(); ++r) t.q_ratio.add(w / y[r], b[r] * w / y[r], B.qt(), B.qht());
      return share(std::move(t));
    });
  };
  id.rhs = [](const Dims& d) {
    return series_side(
        d.at("m"),
        [](const ParameterSet& P, const BaseSystem& B) {
          Vec w_y = divided(P.scalar("w"), P.vec("y"));
          const auto& z = P.scalar("z");
          return product_ratio(w_y, times(P.vec("b"), w_y), B.qt()) *
                 checked_div(qpoch_infinite(product(P.vec("a")) * z, B.qh()), qpoch_infinite(z, B.qh()));
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          struct Term {
            MilneLillyTerm s;
            ScaledRatioProduct q_ratio;
            QComplex w;
            QComplex operator()(IndexView j) {
              long J = weight(j);
              return s(j) * ipow(w, J) * q_ratio(J);
            }
          };
          Term t{MilneLillyTerm(P.vec("y"), P.vec("b"), B.qt()), {}, P.scalar("w")};
          const auto& z = P.scalar("z");
          t.q_ratio.add(z, product(P.vec("a")) * z, B.qh(), B.qht());
          return share(std::move(t));
        });
  };
  return id;
}

}  // namespace

void register_an_theorems(std::vector<Identity>& out) {
  out.push_back(milne_lilly());
  out.push_back(gustafson_krattenthaler());
  out.push_back(extra_parameter());
  out.push_back(heine7());
  out.push_back(heine8());
  out.push_back(heine1());
  out.push_back(heine2());
}

}  // namespace qseries::catalog_detail
