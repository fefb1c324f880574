#include "catalog/detail.hpp"

namespace qseries::catalog_detail {

namespace {

// Exponent 2n sum (r-1)k_r - n(n-1)|k| + sum_r C(n k_r + 1, 2) of the
// quadratic factor shared by several entries.
long quadratic_exponent(IndexView k, long n) {
  long e = 2 * n * power_exponent(k) - n * (n - 1) * weight(k);
  for (long kr : k) e += binom_plus(n * kr);
  return e;
}

long sum_binom_plus(IndexView k) {
  long e = 0;
  for (long kr : k) e += binom_plus(kr);
  return e;
}

// prod_r 1 / (b^{r}; b)_{n k_r}, r = 1..len, from a table of (b; b)_j:
// (b^r; b)_j = (b; b)_{j+r-1} / (b; b)_{r-1}.
QComplex staggered_inverse(PochTable& qq, IndexView k, long n) {
  QComplex p(1L);
  for (std::size_t r = 0; r < k.size(); ++r) {
    long shift = static_cast<long>(r);
    p *= checked_div(qq(shift), qq(n * k[r] + shift));
  }
  return p;
}

// prod_{r=1}^{m} (c b^{m r}; b^m)_inf
QComplex staggered_infinite(const QComplex& c, const QComplex& b, long m) {
  QComplex bm = ipow(b, m);
  QComplex p(1L);
  for (long r = 1; r <= m; ++r) p *= qpoch_infinite(c * ipow(b, m * r), bm);
  return p;
}

Constraint base_scaled(const char* label, const char* param, bool use_h, const char* dim) {
  return {label, [param = std::string(param), use_h, dim = std::string(dim)](const ParameterSet& P, const BaseSystem& B) {
            long e = dim.empty() ? 1 : P.dim(dim);
            return mod(P.scalar(param) * ipow(use_h ? B.qh() : B.qt(), e));
          }};
}

Identity ram_core() {
  Identity id;
  id.id = "ram_core";
  id.title = "bibasic extension of Ramanujan's central 2phi1 identity";
  id.schema = {make_param("a", ParamKind::coefficient, "", 0.05, 0.25), make_param("b", ParamKind::coefficient),
               make_param("c", ParamKind::coefficient), make_param("d", ParamKind::coefficient, "", 0.05, 0.25)};
  id.constraints = {base_scaled("|a q^t|", "a", false, ""), base_scaled("|d q^h|", "d", true, "")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims&) {
    return series_side(
        1,
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d");
          const auto &q = B.q(), &qh = B.qh(), &qt = B.qt();
          return checked_div(qpoch_infinite(a * qt, qt) * qpoch_infinite(c * q * qh, qh),
                             qpoch_infinite(-b * q * qt, qt) * qpoch_infinite(d * qh, qh));
        },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d");
          const auto &q = B.q(), &qh = B.qh(), &qt = B.qt();
          return TermFn([r1 = RatioTable(-b * q / a, qt, qt), r2 = ScaledRatio(d * qh, c * q * qh, qh, B.qht()),
                         arg = PowerTable(a * qt)](IndexView j) mutable { return r1(j[0]) * r2(j[0]) * arg(j[0]); });
        });
  };
  id.rhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet& P, const BaseSystem& B) {
      const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d");
      const auto &q = B.q(), &qh = B.qh(), &qt = B.qt();
      return TermFn([r1 = RatioTable(c * q / d, qh, qh), r2 = ScaledRatio(a * qt, -b * q * qt, qt, B.qht()),
                     arg = PowerTable(d * qh)](IndexView k) mutable { return r1(k[0]) * r2(k[0]) * arg(k[0]); });
    });
  };
  return id;
}

Identity ram_anm() {
  Identity id;
  id.id = "ram_1_4_1_anm";
  id.title = "A_n-A_m extension of the bibasic Ramanujan 2phi1 identity";
  id.dim_names = {"n", "m"};
  id.schema = {make_param("a", ParamKind::coefficient, "", 0.05, 0.25), make_param("b", ParamKind::coefficient),
               make_param("c", ParamKind::coefficient), make_param("d", ParamKind::coefficient, "", 0.05, 0.25)};
  id.constraints = {base_scaled("|a q^{tm}|", "a", false, "m"), base_scaled("|d q^{hn}|", "d", true, "n")};
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [m](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d");
          const auto &q = B.q(), &qh = B.qh(), &qt = B.qt();
          return checked_div(staggered_infinite(a, qt, m) * qpoch_infinite(c * q * qh, qh),
                             staggered_infinite(-b * q, qt, m) * qpoch_infinite(d * qh, qh));
        },
        [n, m](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d");
          const auto &q = B.q(), &qh = B.qh(), &qt = B.qt();
          QComplex qtm = ipow(qt, m);
          return TermFn([n, m, qt = B.qt(), qtm, r1 = RatioTable(-b * q / a, qtm, qtm),
                         r2 = ScaledRatio(d * qh, c * q * qh, qh, ipow(B.qht(), m * n)),
                         arg = a * qtm](IndexView j) mutable {
            long J = weight(j);
            QComplex t = special_vandermonde(j, m, qt);
            for (long jr : j) t *= r1(jr);
            return t * r2(J) * ipow(arg, J) * ipow(qtm, power_exponent(j));
          });
        });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(static_cast<int>(n), unit, [n, m](const ParameterSet& P, const BaseSystem& B) {
      const auto &a = P.scalar("a"), &b = P.scalar("b"), &c = P.scalar("c"), &d = P.scalar("d");
      const auto &q = B.q(), &qh = B.qh(), &qt = B.qt();
      QComplex qtm = ipow(qt, m);
      QComplex step = ipow(B.qht(), m * n);
      std::vector<RatioTable> rows;
      for (long r = 1; r <= n; ++r) rows.emplace_back(c * q * ipow(qh, r - n) / d, ipow(qh, r), qh);
      ScaledRatioProduct mixed;
      for (long r = 1; r <= m; ++r) {
        QComplex s = ipow(qt, m * r);
        mixed.add(a * s, -b * q * s, qtm, step);
      }
      return TermFn([n, qh = B.qh(), rows = std::move(rows), mixed = std::move(mixed),
                     arg = d * ipow(qh, n)](IndexView k) mutable {
        long K = weight(k);
        QComplex t = special_vandermonde(k, n, qh);
        for (std::size_t r = 0; r < k.size(); ++r) t *= rows[r](n * k[r]);
        return t * mixed(K) * ipow(arg, K) * ipow(qh, (n - 1) * power_exponent(k) + n * e2(k));
      });
    });
  };
  return id;
}

Identity ram_1_4_10_anm() {
  Identity id;
  id.id = "ram_1_4_10_anm";
  id.title = "A_n-A_m generalization of a Ramanujan identity with (q;q)_k^2";
  id.dim_names = {"n", "m"};
  id.base.q_min = 0.1;
  id.base.q_max = 0.2;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(static_cast<int>(n), unit, [n, m](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      QComplex qm = ipow(q, m);
      std::vector<PochTable> outer;
      for (long r = 1; r <= m; ++r) outer.emplace_back(ipow(q, m * r), qm);
      return TermFn([n, q, qq = PochTable(q, q), outer = std::move(outer)](IndexView k) mutable {
        long K = weight(k);
        QComplex t = special_vandermonde(k, n, q) * staggered_inverse(qq, k, n);
        for (auto& o : outer) t = checked_div(t, o(n * K));
        return t * ipow(q, n * K + (n - 1) * power_exponent(k) + n * e2(k));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [m](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          return checked_div(QComplex(1L), qpoch_infinite(q, q) * staggered_infinite(QComplex(1L), q, m));
        },
        [n, m](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          QComplex qm = ipow(q, m);
          return TermFn([n, m, q, qq = PochTable(q, q), qmqm = PochTable(qm, qm)](IndexView j) mutable {
            long J = weight(j);
            QComplex t = special_vandermonde(j, m, q) * qq(m * n * J);
            for (long jr : j) t = checked_div(t, qmqm(jr));
            return t * sign_power(J) * ipow(q, m * power_exponent(j) + m * sum_binom_plus(j));
          });
        });
  };
  return id;
}

Identity ram_1_4_10_m1() {
  Identity id;
  id.id = "ram_1_4_10_m1";
  id.title = "A_n generalization of a Ramanujan identity with (q;q)_k^2, m = 1";
  id.dim_names = {"n"};
  id.base.q_min = 0.1;
  id.base.q_max = 0.2;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n");
    return series_side(static_cast<int>(n), unit, [n](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      return TermFn([n, q, qq = PochTable(q, q)](IndexView k) mutable {
        long K = weight(k);
        QComplex t = checked_div(special_vandermonde(k, n, q) * staggered_inverse(qq, k, n), qq(n * K));
        return t * ipow(q, n * K + (n - 1) * power_exponent(k) + n * e2(k));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n");
    return series_side(
        1,
        [](const ParameterSet&, const BaseSystem& B) {
          QComplex p = qpoch_infinite(B.q(), B.q());
          return checked_div(QComplex(1L), p * p);
        },
        [n](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          return TermFn([n, q, qq = PochTable(q, q)](IndexView j) mutable {
            return checked_div(qq(n * j[0]), qq(j[0])) * sign_power(j[0]) * ipow(q, binom_plus(j[0]));
          });
        });
  };
  return id;
}

Identity ram_1_4_10() {
  Identity id;
  id.id = "ram_1_4_10";
  id.title = "Ramanujan's identity with (q;q)_k^2 in the denominator";
  id.base.q_min = 0.1;
  id.base.q_max = 0.2;
  id.lhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      return TermFn([q, qq = PochTable(q, q)](IndexView k) mutable {
        const QComplex& p = qq(k[0]);
        return checked_div(ipow(q, k[0]), p * p);
      });
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1,
        [](const ParameterSet&, const BaseSystem& B) {
          QComplex p = qpoch_infinite(B.q(), B.q());
          return checked_div(QComplex(1L), p * p);
        },
        [](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          return TermFn([q](IndexView j) { return sign_power(j[0]) * ipow(q, binom_plus(j[0])); });
        });
  };
  return id;
}

// Sum over k in Z^n of V (q;q)_{m n |k|} / prod_r (q^r;q)_{n k_r} (-1)^{n|k|} q^{quadratic}.
TermFn alternating_an_term(long n, long m, const QComplex& q) {
  return TermFn([n, m, q, qq = PochTable(q, q)](IndexView k) mutable {
    long K = weight(k);
    QComplex t = special_vandermonde(k, n, q) * qq(m * n * K) * staggered_inverse(qq, k, n);
    return t * sign_power(n * K) * ipow(q, quadratic_exponent(k, n));
  });
}

Identity ram_1_4_10_c() {
  Identity id;
  id.id = "ram_1_4_10_c";
  id.title = "A_m-A_n companion of the (q;q)_k^2 identity";
  id.dim_names = {"n", "m"};
  id.base.q_min = 0.1;
  id.base.q_max = 0.2;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(static_cast<int>(m), unit, [n, m](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      QComplex qn = ipow(q, n);
      return TermFn([m, q, qq = PochTable(q, q), qnqn = PochTable(qn, qn)](IndexView j) mutable {
        long J = weight(j);
        QComplex t = checked_div(special_vandermonde(j, m, q) * staggered_inverse(qq, j, m), qnqn(m * J));
        return t * ipow(q, m * J + (m - 1) * power_exponent(j) + m * e2(j));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(n),
        [n](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          QComplex qn = ipow(q, n);
          return checked_div(QComplex(1L), qpoch_infinite(q, q) * qpoch_infinite(qn, qn));
        },
        [n, m](const ParameterSet&, const BaseSystem& B) { return alternating_an_term(n, m, B.q()); });
  };
  return id;
}

Identity ram_1_4_10_n_single() {
  Identity id;
  id.id = "ram_1_4_10_n_single";
  id.title = "A_n companion of the (q;q)_k^2 identity, m = 1";
  id.dim_names = {"n"};
  id.base.q_min = 0.1;
  id.base.q_max = 0.2;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n");
    return series_side(1, unit, [n](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      QComplex qn = ipow(q, n);
      return TermFn([q, qq = PochTable(q, q), qnqn = PochTable(qn, qn)](IndexView j) mutable {
        return checked_div(ipow(q, j[0]), qq(j[0]) * qnqn(j[0]));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n");
    return series_side(
        static_cast<int>(n),
        [n](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          QComplex qn = ipow(q, n);
          return checked_div(QComplex(1L), qpoch_infinite(q, q) * qpoch_infinite(qn, qn));
        },
        [n](const ParameterSet&, const BaseSystem& B) { return alternating_an_term(n, 1, B.q()); });
  };
  return id;
}

std::vector<ParamSpec> wide_ab() {
  return {make_param("a", ParamKind::coefficient, "", 0.3, 0.9), make_param("b", ParamKind::coefficient, "", 0.3, 0.9)};
}

Identity ram_eq26_a2() {
  Identity id;
  id.id = "ram_eq26_a2";
  id.title = "A_m bibasic extension of Ramanujan's symmetric identity, n = 1";
  id.dim_names = {"m"};
  id.schema = wide_ab();
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [](const ParameterSet& P, const BaseSystem& B) { return qpoch_infinite(-P.scalar("a") * B.qh(), B.qh()); },
        [m](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b");
          QComplex qtm = ipow(B.qt(), m);
          return TermFn([m, qt = B.qt(), qtm, b, qq = PochTable(qtm, qtm),
                         den = ScaledPoch(-a * B.qh(), B.qh(), ipow(B.qht(), m))](IndexView j) mutable {
            long J = weight(j);
            QComplex t = special_vandermonde(j, m, qt) * ipow(b, J);
            for (long jr : j) t = checked_div(t, qq(jr));
            t = checked_div(t, den(J));
            return t * ipow(qtm, power_exponent(j) + sum_binom_plus(j));
          });
        });
  };
  id.rhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(
        1, [m](const ParameterSet& P, const BaseSystem& B) { return staggered_infinite(-P.scalar("b"), B.qt(), m); },
        [m](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b");
          QComplex qtm = ipow(B.qt(), m);
          ScaledRatioProduct den;
          QComplex step = ipow(B.qht(), m);
          // Reciprocal products: numerator 0 gives (0; b)_inf = 1.
          for (long r = 1; r <= m; ++r) den.add(QComplex(0L), -b * ipow(B.qt(), m * r), qtm, step);
          return TermFn([qh = B.qh(), a, qq = PochTable(B.qh(), B.qh()), den = std::move(den)](IndexView k) mutable {
            return checked_div(ipow(a, k[0]) * ipow(qh, binom_plus(k[0])), qq(k[0])) * den(k[0]);
          });
        });
  };
  return id;
}

Identity ram_1_4_12() {
  Identity id;
  id.id = "ram_1_4_12";
  id.title = "bibasic form of Ramanujan's symmetric identity";
  id.schema = wide_ab();
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims&) {
    return series_side(
        1, [](const ParameterSet& P, const BaseSystem& B) { return qpoch_infinite(-P.scalar("a") * B.qh(), B.qh()); },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b");
          return TermFn([qt = B.qt(), b, qq = PochTable(B.qt(), B.qt()),
                         den = ScaledPoch(-a * B.qh(), B.qh(), B.qht())](IndexView j) mutable {
            return checked_div(ipow(b, j[0]) * ipow(qt, binom_plus(j[0])), qq(j[0]) * den(j[0]));
          });
        });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1, [](const ParameterSet& P, const BaseSystem& B) { return qpoch_infinite(-P.scalar("b") * B.qt(), B.qt()); },
        [](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b");
          return TermFn([qh = B.qh(), a, qq = PochTable(B.qh(), B.qh()),
                         den = ScaledPoch(-b * B.qt(), B.qt(), B.qht())](IndexView k) mutable {
            return checked_div(ipow(a, k[0]) * ipow(qh, binom_plus(k[0])), qq(k[0]) * den(k[0]));
          });
        });
  };
  return id;
}

Identity ram_eq26_a3() {
  Identity id;
  id.id = "ram_eq26_a3";
  id.title = "A_m extension of Ramanujan's symmetric identity in base q";
  id.dim_names = {"m"};
  id.schema = wide_ab();
  id.base.uses_t = true;
  id.lhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [](const ParameterSet& P, const BaseSystem& B) { return qpoch_infinite(-P.scalar("a") * B.q(), B.q()); },
        [m](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b");
          const auto& q = B.q();
          QComplex qm = ipow(q, m);
          return TermFn([m, q, qm, b, qq = PochTable(qm, qm),
                         den = ScaledPoch(-a * q, q, ipow(B.qt(), m))](IndexView j) mutable {
            long J = weight(j);
            QComplex t = special_vandermonde(j, m, q) * ipow(b, J);
            for (long jr : j) t = checked_div(t, qq(jr));
            t = checked_div(t, den(J));
            return t * ipow(qm, power_exponent(j) + sum_binom_plus(j));
          });
        });
  };
  id.rhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(
        1, [m](const ParameterSet& P, const BaseSystem& B) { return staggered_infinite(-P.scalar("b"), B.q(), m); },
        [m](const ParameterSet& P, const BaseSystem& B) {
          const auto &a = P.scalar("a"), &b = P.scalar("b");
          const auto& q = B.q();
          QComplex qm = ipow(q, m);
          ScaledRatioProduct den;
          QComplex step = ipow(B.qt(), m);
          for (long r = 1; r <= m; ++r) den.add(QComplex(0L), -b * ipow(q, m * r), qm, step);
          return TermFn([q, a, qq = PochTable(q, q), den = std::move(den)](IndexView k) mutable {
            return checked_div(ipow(a, k[0]) * ipow(q, binom_plus(k[0])), qq(k[0])) * den(k[0]);
          });
        });
  };
  return id;
}

// Sum over j in Z^m of V prod_r 1/(b^r; b)_{m j_r} c^{m|j|} / (A; b_n)_{t |j|} b^{quadratic}.
TermFn quadratic_side_term(long m, const QComplex& base, const QComplex& coeff, const QComplex& A,
                           const QComplex& A_base, const QComplex& A_step) {
  return TermFn([m, base, cm = ipow(coeff, m), bb = PochTable(base, base),
                 den = ScaledPoch(A, A_base, A_step)](IndexView j) mutable {
    long J = weight(j);
    QComplex t = special_vandermonde(j, m, base) * staggered_inverse(bb, j, m) * ipow(cm, J);
    t = checked_div(t, den(J));
    return t * ipow(base, quadratic_exponent(j, m));
  });
}

Identity ram_eq26_b() {
  Identity id;
  id.id = "ram_eq26_b";
  id.title = "A_n-A_m bibasic symmetric identity quadratic in the indices";
  id.dim_names = {"n", "m"};
  id.schema = wide_ab();
  id.base.uses_h = id.base.uses_t = true;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [n](const ParameterSet& P, const BaseSystem& B) {
          return qpoch_infinite(ipow(-P.scalar("a") * B.qh(), n), ipow(B.qh(), n));
        },
        [n, m](const ParameterSet& P, const BaseSystem& B) {
          return quadratic_side_term(m, B.qt(), P.scalar("b"), ipow(-P.scalar("a") * B.qh(), n), ipow(B.qh(), n),
                                     ipow(B.qht(), n * m));
        });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(n),
        [m](const ParameterSet& P, const BaseSystem& B) {
          return qpoch_infinite(ipow(-P.scalar("b") * B.qt(), m), ipow(B.qt(), m));
        },
        [n, m](const ParameterSet& P, const BaseSystem& B) {
          return quadratic_side_term(n, B.qh(), P.scalar("a"), ipow(-P.scalar("b") * B.qt(), m), ipow(B.qt(), m),
                                     ipow(B.qht(), n * m));
        });
  };
  return id;
}

Identity ram_1_4_17_anm() {
  Identity id;
  id.id = "ram_1_4_17_anm";
  id.title = "A_n-A_m extension of Ramanujan's symmetric identity";
  id.dim_names = {"n", "m"};
  id.schema = wide_ab();
  id.base.uses_t = true;
  id.lhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [n](const ParameterSet& P, const BaseSystem& B) {
          return qpoch_infinite(ipow(-P.scalar("a") * B.q(), n), ipow(B.q(), n));
        },
        [n, m](const ParameterSet& P, const BaseSystem& B) {
          return quadratic_side_term(m, B.q(), P.scalar("b"), ipow(-P.scalar("a") * B.q(), n), ipow(B.q(), n),
                                     ipow(B.qt(), n * m));
        });
  };
  id.rhs = [](const Dims& dims) {
    const long n = dims.at("n"), m = dims.at("m");
    return series_side(
        static_cast<int>(n),
        [m](const ParameterSet& P, const BaseSystem& B) {
          return qpoch_infinite(ipow(-P.scalar("b") * B.q(), m), ipow(B.q(), m));
        },
        [n, m](const ParameterSet& P, const BaseSystem& B) {
          return quadratic_side_term(n, B.q(), P.scalar("a"), ipow(-P.scalar("b") * B.q(), m), ipow(B.q(), m),
                                     ipow(B.qt(), n * m));
        });
  };
  return id;
}

Identity ram_1_4_17() {
  Identity id;
  id.id = "ram_1_4_17";
  id.title = "Ramanujan's symmetric identity";
  id.schema = wide_ab();
  id.base.uses_t = true;
  auto side = [](const char* coeff, const char* other) {
    return [coeff, other](const Dims&) {
      return series_side(
          1,
          [other](const ParameterSet& P, const BaseSystem& B) { return qpoch_infinite(-P.scalar(other) * B.q(), B.q()); },
          [coeff, other](const ParameterSet& P, const BaseSystem& B) {
            const auto& q = B.q();
            return TermFn([q, c = P.scalar(coeff), qq = PochTable(q, q),
                           den = ScaledPoch(-P.scalar(other) * q, q, B.qt())](IndexView j) mutable {
              return checked_div(ipow(c, j[0]) * ipow(q, binom_plus(j[0])), qq(j[0]) * den(j[0]));
            });
          });
    };
  };
  id.lhs = side("b", "a");
  id.rhs = side("a", "b");
  return id;
}

Identity ram_1_4_9a() {
  Identity id;
  id.id = "ram_1_4_9a";
  id.title = "A_m extension of a Ramanujan identity with (-q;q)_k";
  id.dim_names = {"m"};
  id.lhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(static_cast<int>(m), unit, [m](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      QComplex qm = ipow(q, m);
      return TermFn([m, q, qq = PochTable(q, q), qmqm = PochTable(qm, qm)](IndexView j) mutable {
        long J = weight(j);
        QComplex t = checked_div(special_vandermonde(j, m, q) * staggered_inverse(qq, j, m), qmqm(m * J));
        return t * ipow(q, quadratic_exponent(j, m));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(
        static_cast<int>(m),
        [m](const ParameterSet&, const BaseSystem& B) {
          QComplex qm = ipow(B.q(), m);
          return inf_ratio(ipow(-B.q(), m), qm, qm);
        },
        [m](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          QComplex qm = ipow(q, m);
          return TermFn([m, q, qq = PochTable(q, q), am = PochTable(ipow(-q, m), qm)](IndexView k) mutable {
            long K = weight(k);
            QComplex t = checked_div(special_vandermonde(k, m, q) * staggered_inverse(qq, k, m), am(m * K));
            return t * sign_power(m * K) * ipow(q, quadratic_exponent(k, m));
          });
        });
  };
  return id;
}

Identity ram_1_4_9() {
  Identity id;
  id.id = "ram_1_4_9";
  id.title = "Ramanujan's identity with (-q;q)_k";
  id.lhs = [](const Dims&) {
    return series_side(1, unit, [](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      return TermFn([q, qq = PochTable(q, q)](IndexView j) mutable {
        const QComplex& p = qq(j[0]);
        return checked_div(ipow(q, binom_plus(j[0])), p * p);
      });
    });
  };
  id.rhs = [](const Dims&) {
    return series_side(
        1, [](const ParameterSet&, const BaseSystem& B) { return inf_ratio(-B.q(), B.q(), B.q()); },
        [](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          return TermFn([q, qq = PochTable(q, q), mq = PochTable(-q, q)](IndexView k) mutable {
            return checked_div(sign_power(k[0]) * ipow(q, binom_plus(k[0])), qq(k[0]) * mq(k[0]));
          });
        });
  };
  return id;
}

Identity ram_1_4_9b() {
  Identity id;
  id.id = "ram_1_4_9b";
  id.title = "A_m extension of a Ramanujan identity with (-q;q)_k, single sum on the right";
  id.dim_names = {"m"};
  id.lhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(static_cast<int>(m), unit, [m](const ParameterSet&, const BaseSystem& B) {
      const auto& q = B.q();
      return TermFn([m, q, qq = PochTable(q, q)](IndexView j) mutable {
        long J = weight(j);
        QComplex t = checked_div(special_vandermonde(j, m, q) * staggered_inverse(qq, j, m), qq(m * J));
        return t * ipow(q, quadratic_exponent(j, m));
      });
    });
  };
  id.rhs = [](const Dims& dims) {
    const long m = dims.at("m");
    return series_side(
        1,
        [m](const ParameterSet&, const BaseSystem& B) {
          return checked_div(qpoch_infinite(ipow(-B.q(), m), ipow(B.q(), m)), qpoch_infinite(B.q(), B.q()));
        },
        [m](const ParameterSet&, const BaseSystem& B) {
          const auto& q = B.q();
          return TermFn([q, qq = PochTable(q, q), am = PochTable(ipow(-q, m), ipow(q, m))](IndexView k) mutable {
            return checked_div(sign_power(k[0]) * ipow(q, binom_plus(k[0])), qq(k[0]) * am(k[0]));
          });
        });
  };
  return id;
}

}  // namespace

void register_ramanujan(std::vector<Identity>& out) {
  out.push_back(ram_core());
  out.push_back(ram_anm());
  out.push_back(ram_1_4_10_anm());
  out.push_back(ram_1_4_10_m1());
  out.push_back(ram_1_4_10());
  out.push_back(ram_1_4_10_c());
  out.push_back(ram_1_4_10_n_single());
  out.push_back(ram_eq26_a2());
  out.push_back(ram_1_4_12());
  out.push_back(ram_eq26_a3());
  out.push_back(ram_eq26_b());
  out.push_back(ram_1_4_17_anm());
  out.push_back(ram_1_4_17());
  out.push_back(ram_1_4_9a());
  out.push_back(ram_1_4_9());
  out.push_back(ram_1_4_9b());
}

}  // namespace qseries::catalog_detail
