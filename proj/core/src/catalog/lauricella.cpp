#include <algorithm>
#include <map>
#include <utility>

#include "catalog/detail.hpp"

namespace qseries::catalog_detail {

namespace {

Constraint vector_modulus(const char* name) {
  return {std::string("max_r |") + name + "_r|", [n = std::string(name)](const ParameterSet& P, const BaseSystem&) {
            double worst = 0.0;
            for (const auto& v : P.vec(n)) worst = std::max(worst, mod(v));
            return worst;
          }};
}

/// (w; b)_inf (c w s; b)_inf / ((w s; b)_inf (c w; b)_inf) for a step s that
/// need not be an integer power of b.
QComplex shifted_ratio(const QComplex& w, const QComplex& cw, const QComplex& s, const QComplex& base) {
  return inf_ratio(w, cw, base) * inf_ratio(cw * s, w * s, base);
}

Identity qlauricella_bibasic() {
  Identity id;
  id.id = "qlauricella_bibasic";
  id.title = "multibasic transformation of a q-Lauricella series";
  id.dim_names = {"p"};
  id.schema = {make_param("a", ParamKind::coefficient, "p"), make_param("z", ParamKind::argument, "p"),
               make_param("b", ParamKind::coefficient), make_param("w", ParamKind::argument)};
  id.constraints = {vector_modulus("z"), modulus_of("w")};
  id.base.uses_t = true;
  id.base.block_dim = "p";
  id.lhs = [](const Dims& d) {
    return series_side(d.at("p"), unit, [](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        std::vector<RatioTable> ratios;
        std::vector<PowerTable> z, steps;
        QComplex w, bw, qt;
        QComplex operator()(IndexView k) {
          QComplex t(1L), s(1L);
          for (std::size_t r = 0; r < k.size(); ++r) {
            t *= ratios[r](k[r]) * z[r](k[r]);
            s *= steps[r](k[r]);
          }
          return t * shifted_ratio(w, bw, s, qt);
        }
      };
      const auto& a = P.vec("a");
      const auto& z = P.vec("z");
      Term term{{}, {}, {}, P.scalar("w"), P.scalar("b") * P.scalar("w"), B.qt()};
      for (std::size_t r = 0; r < a.size(); ++r) {
        term.ratios.emplace_back(a[r], B.block_base(r), B.block_base(r));
        term.z.emplace_back(z[r]);
        term.steps.emplace_back(B.block_step(r));
      }
      return share(std::move(term));
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1,
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.vec("a"), &z = P.vec("z");
          QComplex pre = inf_ratio(P.scalar("w"), P.scalar("b") * P.scalar("w"), B.qt());
          for (std::size_t r = 0; r < a.size(); ++r) pre *= inf_ratio(a[r] * z[r], z[r], B.block_base(r));
          return pre;
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.vec("a"), &z = P.vec("z");
          ScaledRatioProduct shifted;
          for (std::size_t r = 0; r < a.size(); ++r)
            shifted.add(z[r], a[r] * z[r], B.block_base(r), B.block_step(r));
          return TermFn([b_q = RatioTable(P.scalar("b"), B.qt(), B.qt()), shifted = std::move(shifted),
                         w = PowerTable(P.scalar("w"))](IndexView j) mutable {
            return b_q(j[0]) * shifted(j[0]) * w(j[0]);
          });
        });
  };
  return id;
}

Identity master_instance_big() {
  Identity id;
  id.id = "master_instance_big";
  id.title = "two-block multibasic transformation with Milne-Lilly and Gustafson-Krattenthaler blocks";
  id.dim_names = {"n1", "n2", "m"};
  id.schema = {make_param("a1", ParamKind::coefficient, "n1"), make_param("x1", ParamKind::variable, "n1"),
               make_param("a2", ParamKind::coefficient),       make_param("x2", ParamKind::variable, "n2"),
               make_param("z1", ParamKind::argument),          make_param("z2", ParamKind::argument),
               make_param("b", ParamKind::coefficient, "m"),   make_param("y", ParamKind::variable, "m"),
               make_param("c", ParamKind::coefficient, "", 0.02, 0.06),
               make_param("w", ParamKind::argument)};
  id.constraints = {z_over_x("z1", "x1"), modulus_of("z2"), modulus_of("w")};
  id.base.uses_t = true;
  id.base.fixed_blocks = 2;
  id.lhs = [](const Dims& d) {
    const int n1 = d.at("n1"), n2 = d.at("n2");
    return series_side(n1 + n2, unit, [n1, n2](const ParameterSet& P, const BaseSystem& B) {
      return TermFn([n1, n2, ml = MilneLillyTerm(P.vec("x1"), P.vec("a1"), B.block_base(0)),
                     gk = GustafsonKrattenthalerTerm(P.vec("x2"), P.scalar("a2"), B.block_base(1)),
                     z1 = PowerTable(P.scalar("z1")), z2 = PowerTable(P.scalar("z2")),
                     s1 = PowerTable(B.block_step(0)), s2 = PowerTable(B.block_step(1)), w = P.scalar("w"),
                     bw = product(P.vec("b")) * P.scalar("w"), qt = B.qt(),
                     shifted = std::map<std::pair<long, long>, QComplex>()](IndexView kk) mutable {
        IndexView k1 = kk.first(static_cast<std::size_t>(n1));
        IndexView k2 = kk.subspan(static_cast<std::size_t>(n1), static_cast<std::size_t>(n2));
        const long K1 = weight(k1), K2 = weight(k2);
        auto it = shifted.find({K1, K2});
        if (it == shifted.end()) it = shifted.emplace(std::pair{K1, K2}, shifted_ratio(w, bw, s1(K1) * s2(K2), qt)).first;
        return ml(k1) * z1(K1) * gk(k2) * z2(K2) * it->second;
      });
    });
  };
  id.rhs = [](const Dims& d) {
    return series_side(
        d.at("m"),
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a1 = P.vec("a1"), &x1 = P.vec("x1");
          const auto &z1 = P.scalar("z1"), &z2 = P.scalar("z2"), &a2 = P.scalar("a2");
          const auto &q1 = B.block_base(0), &q2 = B.block_base(1);
          QComplex pre = inf_ratio(P.scalar("w"), product(P.vec("b")) * P.scalar("w"), B.qt());
          for (std::size_t r = 0; r < x1.size(); ++r) pre *= inf_ratio(a1[r] * z1 / x1[r], z1 / x1[r], q1);
          for (std::size_t r = 0; r < P.vec("x2").size(); ++r) {
            QComplex zr = z2 * ipow(q2, static_cast<long>(r));
            pre *= inf_ratio(a2 * zr, zr, q2);
          }
          return pre;
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a1 = P.vec("a1"), &x1 = P.vec("x1");
          const auto &z1 = P.scalar("z1"), &z2 = P.scalar("z2"), &a2 = P.scalar("a2");
          ScaledRatioProduct shifted;
          for (std::size_t r = 0; r < x1.size(); ++r)
            shifted.add(z1 / x1[r], a1[r] * z1 / x1[r], B.block_base(0), B.block_step(0));
          for (std::size_t r = 0; r < P.vec("x2").size(); ++r) {
            QComplex zr = z2 * ipow(B.block_base(1), static_cast<long>(r));
            shifted.add(zr, a2 * zr, B.block_base(1), B.block_step(1));
          }
          return TermFn([s = ExtraParameterTerm(P.vec("y"), P.vec("b"), P.scalar("c"), B.qt()),
                         shifted = std::move(shifted), w = PowerTable(P.scalar("w"))](IndexView j) mutable {
            const long J = weight(j);
            return s(j) * w(J) * shifted(J);
          });
        });
  };
  return id;
}

Identity master_instance_lauricella() {
  Identity id;
  id.id = "master_instance_lauricella";
  id.title = "bibasic transformation of an A_n series with Lauricella-type extra sums";
  id.dim_names = {"n", "p", "m"};
  id.schema = {make_param("a", ParamKind::coefficient, "n"), make_param("x", ParamKind::variable, "n"),
               make_param("c", ParamKind::coefficient, "p"), make_param("u", ParamKind::argument, "p"),
               make_param("z", ParamKind::argument),         make_param("b", ParamKind::coefficient, "m"),
               make_param("y", ParamKind::variable, "m"),    make_param("w", ParamKind::argument)};
  id.constraints = {modulus_of("z"), vector_modulus("u"), modulus_of("w")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& d) {
    const int n = d.at("n"), p = d.at("p");
    return series_side(p + n, unit, [n, p](const ParameterSet& P, const BaseSystem& B) {
      struct Term {
        std::size_t n, p;
        ExtraParameterTerm s;
        PowerTable z;
        std::vector<RatioTable> ratios;
        std::vector<PowerTable> u;
        ScaledRatio shifted;
        QComplex operator()(IndexView kk) {
          IndexView l = kk.first(p);
          IndexView k = kk.subspan(p, n);
          const long K = weight(k);
          QComplex t = s(k) * z(K);
          for (std::size_t r = 0; r < p; ++r) t *= ratios[r](l[r]) * u[r](l[r]);
          return t * shifted(K + weight(l));
        }
      };
      const auto &c = P.vec("c"), &u = P.vec("u");
      const auto& w = P.scalar("w");
      Term term{static_cast<std::size_t>(n),
                static_cast<std::size_t>(p),
                ExtraParameterTerm(P.vec("x"), P.vec("a"), QComplex(0L), B.qh()),
                PowerTable(P.scalar("z")),
                {},
                {},
                ScaledRatio(w, product(P.vec("b")) * w, B.qt(), B.qht())};
      for (std::size_t r = 0; r < c.size(); ++r) {
        term.ratios.emplace_back(c[r], B.qh(), B.qh());
        term.u.emplace_back(u[r]);
      }
      return share(std::move(term));
    });
  };
  id.rhs = [](const Dims& d) {
    return series_side(
        d.at("m"),
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &c = P.vec("c"), &u = P.vec("u");
          const auto &w = P.scalar("w"), &z = P.scalar("z");
          QComplex pre = inf_ratio(w, product(P.vec("b")) * w, B.qt()) * inf_ratio(product(P.vec("a")) * z, z, B.qh());
          return pre * product_ratio(times(c, u), u, B.qh());
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &c = P.vec("c"), &u = P.vec("u");
          const auto& z = P.scalar("z");
          ScaledRatioProduct shifted;
          shifted.add(z, product(P.vec("a")) * z, B.qh(), B.qht());
          for (std::size_t r = 0; r < c.size(); ++r) shifted.add(u[r], c[r] * u[r], B.qh(), B.qht());
          return TermFn([s = ExtraParameterTerm(P.vec("y"), P.vec("b"), QComplex(0L), B.qt()),
                         shifted = std::move(shifted), w = PowerTable(P.scalar("w"))](IndexView j) mutable {
            const long J = weight(j);
            return s(j) * w(J) * shifted(J);
          });
        });
  };
  return id;
}

}  // namespace

void register_lauricella(std::vector<Identity>& out) {
  out.push_back(qlauricella_bibasic());
  out.push_back(master_instance_big());
  out.push_back(master_instance_lauricella());
}

}  // namespace qseries::catalog_detail
