// Implementation of the verification suites.  Exact checks compare
// polynomials and forms term-by-term over the rationals; numeric checks use
// the closed-form integrators and spectral routines and report relative
// residuals against their stated tolerances.
#include "qma/suites.hpp"

#include <chrono>
#include <set>

#include "qma/fundamental.hpp"
#include "qma/linear_solve.hpp"
#include "qma/mean_value.hpp"
#include "qma/measures.hpp"
#include "qma/mollify.hpp"
#include "qma/parser.hpp"

namespace qma {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

int count_or(const RunConfig& cfg, int dflt) {
  return cfg.samples > 0 ? cfg.samples : dflt;
}

std::string fmt(double v) { return ScalarTraits<double>::to_string(v); }

std::string fmt_count(const char* what, int k) {
  return std::string(what) + " over " + std::to_string(k) + " trials";
}

// Random form of the given degree with polynomial coefficients.
template <class T>
PolyForm<T> random_form(Rng& rng, int n, int degree, int form_terms, int coeff_degree,
                        int coeff_terms) {
  PolyForm<T> f(n, degree);
  if (degree > 2 * n) return f;
  for (int s = 0; s < form_terms; ++s) {
    std::set<int> letters;
    while (static_cast<int>(letters.size()) < degree)
      letters.insert(static_cast<int>(rng.int_in(0, 2 * n - 1)));
    MultiIndex idx(letters.begin(), letters.end());
    f.add_term(idx, rng.poly<T>(n, coeff_degree, coeff_terms, false));
  }
  return f;
}

double form_abs(const PolyForm<Rational>& f) { return f.is_zero() ? 0.0 : f.max_coeff_abs(); }
double form_abs(const PolyForm<double>& f) { return f.max_coeff_abs(); }

}  // namespace

double relative_residual(double lhs, double rhs) {
  return std::fabs(lhs - rhs) / (1.0 + std::max(std::fabs(lhs), std::fabs(rhs)));
}

Polynomial<Rational> random_real_poly(Rng& rng, int n, int max_degree, int terms) {
  return rng.poly<Rational>(n, max_degree, terms, true);
}

namespace {

// sum_i c_i (v_i . x)^2 + mu |x|^2 + linear + alpha t   with c_i, mu >= 0:
// the Hessian is sum_i 2 c_i w_i w_i^* + 8 mu Id (psd by construction)
// because linear terms and the vertical coordinate have zero Hessian.
template <class T>
Polynomial<T> psh_quadratic(Rng& rng, int n) {
  const int nv = space_vars(n);
  Polynomial<T> u(nv);
  const int blocks = 2 * n;
  for (int i = 0; i < blocks; ++i) {
    Polynomial<T> lin(nv);
    for (int v = 0; v < 4 * n; ++v) {
      const T cv = rng.scalar<T>(2, 2);
      if (!ScalarTraits<T>::is_zero(cv))
        lin += Polynomial<T>::variable(nv, v).scaled(Complex<T>(cv));
    }
    T ci = rng.scalar<T>(3, 3);
    ci = ScalarTraits<T>::abs(ci);
    u += (lin * lin).scaled(Complex<T>(ci));
  }
  T mu = ScalarTraits<T>::abs(rng.scalar<T>(2, 2)) + ScalarTraits<T>::from_ratio(1, 4);
  u += squared_horizontal_norm<T>(n).scaled(Complex<T>(mu));
  for (int v = 0; v < nv; ++v) {
    const T cv = rng.scalar<T>(2, 2);
    if (!ScalarTraits<T>::is_zero(cv))
      u += Polynomial<T>::variable(nv, v).scaled(Complex<T>(cv));
  }
  return u;
}

}  // namespace

Polynomial<double> random_psh_quadratic(Rng& rng, int n) {
  return psh_quadratic<double>(rng, n);
}

Polynomial<Rational> random_psh_quadratic_exact(Rng& rng, int n) {
  return psh_quadratic<Rational>(rng, n);
}

// ---------------------------------------------------------------------------
// identities suite
// ---------------------------------------------------------------------------

namespace {

template <class T>
void identities_trials(const RunConfig& cfg, int trials, std::vector<CheckResult>& checks,
                       double tol) {
  Rng rng(cfg.seed);
  const int n = cfg.n;
  double r_square = 0.0, r_anti = 0.0, r_leibniz = 0.0, r_chain = 0.0, r_closed = 0.0,
         r_telescope = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    // differentials square to zero and anticommute, on functions...
    Polynomial<T> u = rng.poly<T>(n, 3, 3, false);
    const PolyForm<T> d0u = d_alpha(u, 0), d1u = d_alpha(u, 1);
    r_square = std::max({r_square, form_abs(d_alpha(d0u, 0)), form_abs(d_alpha(d1u, 1))});
    r_anti = std::max(r_anti, form_abs(d_alpha(d1u, 0) + d_alpha(d0u, 1)));

    // ...and on forms of every degree.
    const int p = static_cast<int>(rng.int_in(0, std::max(0, 2 * n - 2)));
    PolyForm<T> F = random_form<T>(rng, n, p, 2, 2, 2);
    r_square = std::max(
        {r_square, form_abs(d_alpha(d_alpha(F, 0), 0)), form_abs(d_alpha(d_alpha(F, 1), 1))});
    r_anti = std::max(r_anti,
                      form_abs(d_alpha(d_alpha(F, 1), 0) + d_alpha(d_alpha(F, 0), 1)));

    // graded Leibniz rule for both differentials.
    const int q = static_cast<int>(rng.int_in(0, std::max(0, 2 * n - 1 - p)));
    PolyForm<T> G = random_form<T>(rng, n, q, 2, 2, 2);
    for (int alpha = 0; alpha < 2; ++alpha) {
      PolyForm<T> lhs = d_alpha(wedge(F, G), alpha);
      PolyForm<T> rhs = wedge(d_alpha(F, alpha), G);
      PolyForm<T> tail = wedge(F, d_alpha(G, alpha));
      rhs = (p % 2 == 0) ? rhs + tail : rhs - tail;
      r_leibniz = std::max(r_leibniz, form_abs(lhs - rhs));
    }

    // chain rule for products of second differentials, all four routes.
    Polynomial<T> u1 = rng.poly<T>(n, 2, 3, false);
    Polynomial<T> u2 = rng.poly<T>(n, 2, 3, false);
    const PolyForm<T> lap2 = second_differential(u2);
    const PolyForm<T> route0 = wedge(second_differential(u1), lap2);
    const PolyForm<T> route1 = d_alpha(wedge(d_alpha(u1, 1), lap2), 0);
    const PolyForm<T> route2 = -d_alpha(wedge(d_alpha(u1, 0), lap2), 1);
    const PolyForm<T> route3 =
        d_alpha(d_alpha(lap2.map_coeffs([&](const Polynomial<T>& c) { return u1 * c; }), 1), 0);
    r_chain = std::max({r_chain, form_abs(route0 - route1), form_abs(route0 - route2),
                        form_abs(route0 - route3)});

    // closedness of products of second differentials.
    r_closed = std::max(
        {r_closed, form_abs(d_alpha(second_differential(u1), 0)),
         form_abs(d_alpha(second_differential(u1), 1)), form_abs(d_alpha(route0, 0)),
         form_abs(d_alpha(route0, 1))});

    // telescoping decomposition of density differences.
    if (trial % 8 == 0) {
      Polynomial<T> v1 = rng.poly<T>(n, 2, 2, true);
      Polynomial<T> v2 = rng.poly<T>(n, 2, 2, true);
      r_telescope = std::max(r_telescope, form_abs(telescoping_residual(v1, v2)));
    }
  }
  checks.push_back(make_check("d-squared-zero", "differential-complex",
                              fmt_count("max |d_a d_a F|", trials), "0", r_square, tol));
  checks.push_back(make_check("d0-d1-anticommute", "differential-anticommutation",
                              fmt_count("max |d0 d1 F + d1 d0 F|", trials), "0", r_anti, tol));
  checks.push_back(make_check("graded-leibniz", "leibniz-rule",
                              fmt_count("max |d(F^G) - dF^G -+ F^dG|", trials), "0",
                              r_leibniz, tol));
  checks.push_back(make_check("second-differential-chain", "chain-rule",
                              fmt_count("max spread of the four chain routes", trials), "0",
                              r_chain, tol));
  checks.push_back(make_check("closedness", "closed-products",
                              fmt_count("max |d (Lap u ^ ...)|", trials), "0", r_closed, tol));
  checks.push_back(make_check("telescoping", "telescoping-decomposition",
                              fmt_count("max telescoping residual", trials), "0", r_telescope,
                              tol));
}

// Solve for all regular pairs of quadratics (d_1 f0 = d_0 f1) and verify
// both components of every solution are annihilated by the second
// differential.
void regular_pair_certificate(int n, std::vector<CheckResult>& checks) {
  const int nv = space_vars(n);
  // quadratic monomial basis
  std::vector<Expo> basis;
  {
    Expo e(nv, 0);
    basis.push_back(e);  // constant
    for (int i = 0; i < nv; ++i) {
      Expo e1(nv, 0);
      e1[i] = 1;
      basis.push_back(e1);
      for (int j = i; j < nv; ++j) {
        Expo e2(nv, 0);
        e2[i] += 1;
        e2[j] += 1;
        basis.push_back(e2);
      }
    }
  }
  const int m = static_cast<int>(basis.size());
  using F = Complex<Rational>;
  // residual(f0, f1) = d1 f0 - d0 f1, linear in the coefficients: build the
  // column forms once per basis monomial.
  std::vector<PolyForm<Rational>> col0(m, PolyForm<Rational>(n, 1));
  std::vector<PolyForm<Rational>> col1(m, PolyForm<Rational>(n, 1));
  for (int k = 0; k < m; ++k) {
    Polynomial<Rational> mono(nv);
    mono.add_term(basis[k], Complex<Rational>(Rational(1)));
    col0[k] = d_alpha(mono, 1);
    col1[k] = -d_alpha(mono, 0);
  }
  // row space: (letter, monomial) pairs present in any column
  std::map<std::pair<MultiIndex, Expo>, int> rows;
  auto note_rows = [&](const PolyForm<Rational>& f) {
    for (const auto& [idx, coeff] : f.terms())
      for (const auto& [e, c] : coeff.terms()) {
        const auto key = std::make_pair(idx, e);
        if (!rows.count(key)) {
          const int next = static_cast<int>(rows.size());
          rows.emplace(key, next);
        }
      }
  };
  for (int k = 0; k < m; ++k) {
    note_rows(col0[k]);
    note_rows(col1[k]);
  }
  const int nrows = static_cast<int>(rows.size());
  DenseMatrix<F> sys(nrows, 2 * m, F(Rational(0)));
  auto fill = [&](const std::vector<PolyForm<Rational>>& cols, int offset) {
    for (int k = 0; k < m; ++k)
      for (const auto& [idx, coeff] : cols[k].terms())
        for (const auto& [e, c] : coeff.terms())
          sys(rows.at(std::make_pair(idx, e)), offset + k) = c;
  };
  fill(col0, 0);
  fill(col1, m);
  const auto null_basis = nullspace_basis(sys, F(Rational(0)), F(Rational(1)));

  double worst = 0.0;
  int nontrivial = 0;
  for (const auto& vec : null_basis) {
    Polynomial<Rational> f0(nv), f1(nv);
    for (int k = 0; k < m; ++k) {
      if (!vec[k].is_zero()) f0.add_term(basis[k], vec[k]);
      if (!vec[m + k].is_zero()) f1.add_term(basis[k], vec[m + k]);
    }
    if (!is_regular_pair(f0, f1))
      throw std::runtime_error("nullspace vector fails the defining equation");
    const double r0 = form_abs(second_differential(f0));
    const double r1 = form_abs(second_differential(f1));
    worst = std::max({worst, r0, r1});
    if (f0.total_degree() >= 2 || f1.total_degree() >= 2) ++nontrivial;
  }
  checks.push_back(make_check(
      "regular-pair-components", "one-sided-regularity",
      "max |Lap component| over the full quadratic solution space (dim " +
          std::to_string(null_basis.size()) + ", " + std::to_string(nontrivial) +
          " nontrivial)",
      "0", worst, 0.0));
}

}  // namespace

SuiteReport run_identities_suite(const RunConfig& cfg) {
  const auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "identities";
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.seed = cfg.seed;
  const int trials = count_or(cfg, cfg.n == 1 ? 100 : cfg.n == 2 ? 60 : 40);
  if (cfg.mode == "rational") {
    identities_trials<Rational>(cfg, trials, rep.checks, 0.0);
  } else {
    identities_trials<double>(cfg, trials, rep.checks, cfg.tol);
  }
  if (cfg.n <= 2) regular_pair_certificate(cfg.n, rep.checks);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// brackets suite (always exact: the claims are symbolic)
// ---------------------------------------------------------------------------

namespace {

// Apply a first-order operator expression to every coordinate function; a
// first-order operator is zero iff it kills all of them.
double first_order_defect(int n, const std::function<PolyQ(const PolyQ&)>& op) {
  const int nv = space_vars(n);
  double worst = 0.0;
  for (int v = 0; v < nv; ++v) {
    const PolyQ c = op(PolyQ::variable(nv, v));
    worst = std::max(worst, c.is_zero() ? 0.0 : c.coeff_sup());
  }
  return worst;
}

// Basis for identifying second-order operators: coordinates, their pairwise
// products, and products with the vertical coordinate.
std::vector<PolyQ> second_order_basis(int n) {
  const int nv = space_vars(n);
  std::vector<PolyQ> fs;
  for (int v = 0; v < nv; ++v) fs.push_back(PolyQ::variable(nv, v));
  for (int v = 0; v < nv; ++v)
    for (int w = v; w < nv; ++w) fs.push_back(PolyQ::variable(nv, v) * PolyQ::variable(nv, w));
  return fs;
}

}  // namespace

SuiteReport run_brackets_suite(const RunConfig& cfg) {
  const auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "brackets";
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.seed = cfg.seed;
  const int n = cfg.n;
  const Complex<Rational> i8 = Complex<Rational>::i() * Complex<Rational>(Rational(8));

  // horizontal fields: [X_{2l-1}, X_{2l}] = 4 dt, all other pairs commute,
  // and everything commutes with dt.
  double r_x = 0.0;
  for (int a = 1; a <= 4 * n; ++a) {
    for (int b = 1; b <= 4 * n; ++b) {
      const bool partners = (a % 2 == 1 && b == a + 1);
      const bool partners_rev = (b % 2 == 1 && a == b + 1);
      r_x = std::max(r_x, first_order_defect(n, [&](const PolyQ& f) {
        PolyQ r = apply_x_field(apply_x_field(f, b), a) - apply_x_field(apply_x_field(f, a), b);
        if (partners) r -= apply_t_field(f).scaled(Complex<Rational>(Rational(4)));
        if (partners_rev) r += apply_t_field(f).scaled(Complex<Rational>(Rational(4)));
        return r;
      }));
    }
    r_x = std::max(r_x, first_order_defect(n, [&](const PolyQ& f) {
      return apply_x_field(apply_t_field(f), a) - apply_t_field(apply_x_field(f, a));
    }));
  }
  rep.checks.push_back(make_check("horizontal-brackets", "bracket-table-horizontal",
                                  "[X_a, X_b] on all coordinate functions",
                                  "4 dt on partner pairs, else 0", r_x, 0.0));

  // complex combinations: [W_j, Wbar_k] = 8 i delta_jk dt, [W_j, W_k] = 0.
  double r_w = 0.0;
  for (int j = 1; j <= 2 * n; ++j)
    for (int k = 1; k <= 2 * n; ++k) {
      r_w = std::max(r_w, first_order_defect(n, [&](const PolyQ& f) {
        PolyQ r = apply_w_field(apply_wbar_field(f, k), j) -
                  apply_wbar_field(apply_w_field(f, j), k);
        if (j == k) r -= apply_t_field(f).scaled(i8);
        return r;
      }));
      r_w = std::max(r_w, first_order_defect(n, [&](const PolyQ& f) {
        return apply_w_field(apply_w_field(f, j), k) - apply_w_field(apply_w_field(f, k), j);
      }));
    }
  rep.checks.push_back(make_check("complex-brackets", "bracket-table-complex",
                                  "[W_j, Wbar_k] on all coordinate functions",
                                  "8 i delta_jk dt", r_w, 0.0));

  // the doubled row fields: same-column fields commute; cross-column pairs
  // commute except [Z_{A,0}, Z_{A+-n,1}] = -8 i dt.
  double r_z = 0.0;
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      for (int col = 0; col < 2; ++col)
        r_z = std::max(r_z, first_order_defect(n, [&](const PolyQ& f) {
          return apply_z_field(apply_z_field(f, b, col), a, col) -
                 apply_z_field(apply_z_field(f, a, col), b, col);
        }));
      r_z = std::max(r_z, first_order_defect(n, [&](const PolyQ& f) {
        PolyQ r = apply_z_field(apply_z_field(f, b, 1), a, 0) -
                  apply_z_field(apply_z_field(f, a, 0), b, 1);
        if (b == a + n || b == a - n) r += apply_t_field(f).scaled(i8);
        return r;
      }));
    }
  rep.checks.push_back(make_check("doubled-brackets", "bracket-table-doubled",
                                  "[Z_{A,0}, Z_{B,1}] on all coordinate functions",
                                  "-8 i dt when |A-B| = n, else 0", r_z, 0.0));

  // block sub-Laplacians: 2 D_{l, n+l} = sum_j X_{4l+j}^2.
  double r_lap = 0.0;
  const auto basis = second_order_basis(n);
  for (int l = 0; l < n; ++l)
    for (const auto& f : basis) {
      PolyQ lhs = second_differential_entry(f, l, n + l).scaled(Complex<Rational>(Rational(2)));
      PolyQ rhs(f.nvars());
      for (int j = 1; j <= 4; ++j)
        rhs += apply_x_field(apply_x_field(f, 4 * l + j), 4 * l + j);
      const PolyQ d = lhs - rhs;
      r_lap = std::max(r_lap, d.is_zero() ? 0.0 : d.coeff_sup());
    }
  rep.checks.push_back(make_check("block-sublaplacian", "entry-sublaplacian",
                                  "2 D_{l,n+l} on a second-order basis",
                                  "sum_j X_{4l+j}^2", r_lap, 0.0));

  // left invariance of the horizontal and doubled fields.
  Rng rng(cfg.seed);
  double r_inv = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = rng.group_point<Rational>(n);
    const PolyQ u = rng.poly<Rational>(n, 3, 3, false);
    for (int a = 1; a <= 4 * n; ++a) {
      const PolyQ d = left_translate(apply_x_field(u, a), g) -
                      apply_x_field(left_translate(u, g), a);
      r_inv = std::max(r_inv, d.is_zero() ? 0.0 : d.coeff_sup());
    }
    for (int a = 0; a < 2 * n; ++a)
      for (int col = 0; col < 2; ++col) {
        const PolyQ d = left_translate(apply_z_field(u, a, col), g) -
                        apply_z_field(left_translate(u, g), a, col);
        r_inv = std::max(r_inv, d.is_zero() ? 0.0 : d.coeff_sup());
      }
  }
  rep.checks.push_back(make_check("left-invariance", "field-invariance",
                                  "X_a(u o L_g) vs (X_a u) o L_g, 5 random g",
                                  "equal as polynomials", r_inv, 0.0));

  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// hessian / density suite
// ---------------------------------------------------------------------------

namespace {

// Moore determinant of a quaternionic-polynomial matrix via the cycle
// expansion, for the polynomial-level density bridge.
Polynomial<Rational> moore_det_poly(const QuatPolyMatrix<Rational>& h, int nvars) {
  const int n = h.size();
  QuatMatrix<Polynomial<Rational>> m(n, n, Quaternion<Polynomial<Rational>>{
                                               Polynomial<Rational>::zero(nvars),
                                               Polynomial<Rational>::zero(nvars),
                                               Polynomial<Rational>::zero(nvars),
                                               Polynomial<Rational>::zero(nvars)});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const QuatPoly<Rational>& q = h(r, c);
      m(r, c) = Quaternion<Polynomial<Rational>>{q.a.real_part(), q.a.imag_part(),
                                                 q.b.real_part(), q.b.imag_part()};
    }
  const Quaternion<Polynomial<Rational>> det = moore_det_expansion(m);
  if (!det.i.is_zero() || !det.j.is_zero() || !det.k.is_zero())
    throw std::runtime_error("determinant of a self-adjoint matrix must be real");
  return det.re;
}

double rational_factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational exact_factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

SuiteReport run_hessian_suite(const RunConfig& cfg) {
  const auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "hessian";
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.seed = cfg.seed;
  const int n = cfg.n;
  const int nv = space_vars(n);
  const int trials = count_or(cfg, 50);
  Rng rng(cfg.seed);

  if (cfg.mode == "rational") {
    // polynomial-level bridge: the volume coefficient of (Lap u)^n equals
    // n! times the Moore determinant of the Hessian, identically in the
    // coordinates.
    double r_bridge = 0.0, r_dual = 0.0, r_hh = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const Polynomial<Rational> u = rng.poly<Rational>(n, 3, 4, true);
      const auto h = horizontal_hessian(u);
      // dual route: genuine operator composition.
      const auto h2 = horizontal_hessian_by_operators(u);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const auto d = h(r, c) - h2(r, c);
          r_dual = std::max(r_dual, d.coeff_sup());
        }
      // self-adjointness: H_lm = conj(H_ml).
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const auto d = h(r, c) - h2(c, r).conj();
          r_hh = std::max(r_hh, d.coeff_sup());
        }
      const auto vc = density_form(u).volume_coefficient();
      Polynomial<Rational> lhs = vc ? *vc : Polynomial<Rational>::zero(nv);
      Polynomial<Rational> rhs =
          moore_det_poly(h, nv).scaled(Complex<Rational>(exact_factorial(n)));
      const auto diff = lhs - rhs;
      r_bridge = std::max(r_bridge, diff.is_zero() ? 0.0 : diff.coeff_sup());
    }
    rep.checks.push_back(make_check("density-bridge-exact", "density-determinant-bridge",
                                    fmt_count("(Lap u)^n volume coefficient", trials),
                                    "n! Moore-det(Hessian), identically", r_bridge, 0.0));
    rep.checks.push_back(make_check("hessian-dual-route", "hessian-operator-composition",
                                    fmt_count("entry formula vs operator composition", trials),
                                    "equal as quaternion polynomials", r_dual, 0.0));
    rep.checks.push_back(make_check("hessian-self-adjoint", "hessian-hyperhermitian",
                                    fmt_count("H_lm vs conj(H_ml)", trials), "equal", r_hh,
                                    0.0));

    // the standard quadratic: Hessian 8 Id, density 8^n, volume coefficient
    // n! 8^n.
    const Polynomial<Rational> q = squared_horizontal_norm<Rational>(n);
    GroupPoint<Rational> origin;
    origin.x.assign(4 * n, Rational(0));
    origin.t = Rational(0);
    const Rational dens = density_at_exact(q, origin);
    Rational pw = 1;
    for (int k = 0; k < n; ++k) pw *= 8;
    const double r_std =
        std::fabs(ScalarTraits<Rational>::to_double(dens - pw)) +
        std::fabs(ScalarTraits<Rational>::to_double(density_bridge_residual_exact(q, origin)));
    rep.checks.push_back(make_check("standard-quadratic-exact", "standard-quadratic-density",
                                    "density of |x|^2 at 0 (exact)", "8^n", r_std, 0.0));
  } else {
    double r_bridge = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const Polynomial<Rational> ur = rng.poly<Rational>(n, 3, 4, true);
      const Polynomial<double> u = to_double_poly(ur);
      const GroupPoint<double> p = rng.group_point<double>(n);
      r_bridge = std::max(r_bridge, density_bridge_residual(u, p));
    }
    rep.checks.push_back(make_check("density-bridge-float", "density-determinant-bridge",
                                    fmt_count("pointwise |coeff - n! det|/(1+scale)", trials),
                                    "0 within 1e-8", r_bridge, 1e-8));

    const Polynomial<double> q = squared_horizontal_norm<double>(n);
    GroupPoint<double> origin;
    origin.x.assign(4 * n, 0.0);
    origin.t = 0.0;
    const double dens = density_at(q, origin);
    const double r_std = relative_residual(dens, std::pow(8.0, n));
    rep.checks.push_back(make_check("standard-quadratic-float", "standard-quadratic-density",
                                    "density of |x|^2 at 0 (spectral)", "8^n", r_std, 1e-10));
  }

  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// positivity / determinant suite
// ---------------------------------------------------------------------------

namespace {

QuatMatD random_complex_hermitian(Rng& rng, int n) {
  QuatMatD m(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = QuatD::real(rng.scalar<double>(4, 3));
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = QuatD(rng.scalar<double>(4, 3), rng.scalar<double>(4, 3), 0.0, 0.0);
      m(c, r) = m(r, c).conj();
    }
  }
  return m;
}

Eigen::MatrixXcd complex_part(const QuatMatD& m) {
  Eigen::MatrixXcd c(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int col = 0; col < m.cols(); ++col)
      c(r, col) = std::complex<double>(m(r, col).re, m(r, col).i);
  return c;
}

// Delta_n(A_1, ..., A_n): wedge the two-forms of the A_i and read the volume
// coefficient.
double wedge_volume(const std::vector<Eigen::MatrixXcd>& as) {
  std::vector<Form<Complex<double>>> fs;
  fs.reserve(as.size());
  for (const auto& a : as) fs.push_back(two_form_from_matrix(a));
  const auto vc = wedge_all(fs).volume_coefficient();
  return vc ? vc->re : 0.0;
}

}  // namespace

SuiteReport run_positivity_suite(const RunConfig& cfg) {
  const auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "positivity";
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.seed = cfg.seed;
  const int n = cfg.n;
  const int nv = space_vars(n);
  Rng rng(cfg.seed);

  // Moore vs classical on complex hermitian matrices.
  {
    const int trials = count_or(cfg, 100);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const QuatMatD m = random_complex_hermitian(rng, n);
      const double lhs = moore_det(m);
      const double rhs = complex_part(m).determinant().real();
      worst = std::max(worst, relative_residual(lhs, rhs));
    }
    rep.checks.push_back(make_check("moore-complex-agreement", "moore-classical-restriction",
                                    fmt_count("Moore det of complex hermitian", trials),
                                    "classical complex determinant", worst, 1e-10));
  }

  // product rule det(C* M C) = det(M) det(C* C).
  {
    const int trials = count_or(cfg, 100);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const QuatMatrix<double> m = rng.hyperhermitian<double>(n);
      QuatMatrix<double> c(n, n);
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) c(r, col) = rng.quaternion<double>(2, 2);
      const double lhs = moore_det(c.adjoint() * m * c);
      const double rhs = moore_det(m) * moore_det(c.adjoint() * c);
      worst = std::max(worst, relative_residual(lhs, rhs));
    }
    rep.checks.push_back(make_check("moore-product-rule", "moore-congruence-rule",
                                    fmt_count("det(C* M C)", trials), "det(M) det(C* C)",
                                    worst, 1e-8));
  }

  // exact fixtures for the expansion route.
  {
    QuatMatrix<Rational> fix(2, 2);
    fix(0, 0) = Quaternion<Rational>::real(Rational(1));
    fix(1, 1) = Quaternion<Rational>::real(Rational(1));
    fix(0, 1) = Quaternion<Rational>::unit_j();
    fix(1, 0) = -Quaternion<Rational>::unit_j();
    const auto det = moore_det_expansion(fix);
    double r_fix = std::fabs(ScalarTraits<Rational>::to_double(det.re)) + abs_double(det - Quaternion<Rational>::real(det.re));
    // [[1, j], [-j, 1]] is singular: det = 1*1 - |j|^2 = 0.
    rep.checks.push_back(make_check("moore-rank-one-fixture", "moore-expansion-fixtures",
                                    "Moore det of [[1, j], [-j, 1]]", "0", r_fix, 0.0));

    Rng rng2(cfg.seed + 1);
    double r_2x2 = 0.0, r_agree = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
      const auto m = rng2.hyperhermitian<Rational>(2);
      const auto d = moore_det_expansion(m);
      const Rational byhand =
          m(0, 0).re * m(1, 1).re - m(0, 1).norm_sq();  // a b - |q|^2
      r_2x2 = std::max(r_2x2,
                       std::fabs(ScalarTraits<Rational>::to_double(d.re - byhand)) +
                           abs_double(d - Quaternion<Rational>::real(d.re)));
      // expansion agrees with the spectral route after rounding
      const auto md = to_double_matrix(m);
      r_agree = std::max(r_agree, relative_residual(moore_det(md),
                                                    ScalarTraits<Rational>::to_double(d.re)));
    }
    rep.checks.push_back(make_check("moore-2x2-closed-form", "moore-expansion-fixtures",
                                    "expansion on random 2x2 self-adjoint", "a d - |q|^2",
                                    r_2x2, 0.0));
    rep.checks.push_back(make_check("moore-expansion-vs-spectral", "moore-route-agreement",
                                    "cycle expansion (exact)", "spectral route (float)",
                                    r_agree, 1e-10));
  }

  // bridge to the volume coefficient: 2^n n! det(M_1, ..., M_n) equals the
  // wedge volume of the associated two-forms, for n up to 4.
  {
    double worst = 0.0;
    for (int dim = 1; dim <= 4; ++dim) {
      const Eigen::MatrixXcd js = symplectic_form(dim);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<QuatMatrix<double>> ms;
        std::vector<Eigen::MatrixXcd> as;
        for (int i = 0; i < dim; ++i) {
          ms.push_back(rng.hyperhermitian<double>(dim, 3, 2));
          as.push_back(complex_adjoint(ms.back()) * js);
        }
        const double lhs =
            std::pow(2.0, dim) * rational_factorial(dim) * mixed_discriminant(ms);
        const double rhs = wedge_volume(as);
        worst = std::max(worst, relative_residual(lhs, rhs));
        // single-matrix specialization: all arguments equal
        const double lhs1 =
            std::pow(2.0, dim) * rational_factorial(dim) * moore_det(ms[0]);
        std::vector<Eigen::MatrixXcd> rep_as(dim, as[0]);
        worst = std::max(worst, relative_residual(lhs1, wedge_volume(rep_as)));
      }
    }
    rep.checks.push_back(make_check("mixed-discriminant-bridge", "determinant-form-bridge",
                                    "2^n n! mixed discriminant, n <= 4",
                                    "volume coefficient of the wedge of two-forms", worst,
                                    1e-8));
  }

  // exact mixed-discriminant diagnostics.
  {
    std::vector<QuatMatrix<Rational>> ds;
    for (int i = 0; i < 2; ++i) {
      QuatMatrix<Rational> d(2, 2);
      d(0, 0) = Quaternion<Rational>::real(Rational(2 + i));
      d(1, 1) = Quaternion<Rational>::real(Rational(5 - i));
      ds.push_back(d);
    }
    // diag(a1, a2), diag(b1, b2) -> (a1 b2 + a2 b1) / 2
    const Complex<Rational> mixed = mixed_discriminant_symbolic(ds);
    const Rational expect = (Rational(2) * Rational(4) + Rational(5) * Rational(3)) / 2;
    const double r_diag =
        std::fabs(ScalarTraits<Rational>::to_double(mixed.re - expect)) +
        std::fabs(ScalarTraits<Rational>::to_double(mixed.im));
    rep.checks.push_back(make_check("mixed-discriminant-diagonal", "mixed-discriminant-fixtures",
                                    "mixed discriminant of diag(2,5), diag(3,4)", "23/2",
                                    r_diag, 0.0));
  }

  // the gradient square d0 u ^ d1 u is strongly positive at every point.
  {
    const int trials = count_or(cfg, 50);
    double min_eig = 0.0;
    double r_linear = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      Polynomial<double> u = to_double_poly(rng.poly<Rational>(n, 2, 4, true));
      u += Polynomial<double>::variable(nv, static_cast<int>(rng.int_in(0, 4 * n - 1)));
      const PolyForm<double> gs = wedge(d_alpha(u, 0), d_alpha(u, 1));
      const GroupPoint<double> p = rng.group_point<double>(n);
      const auto at = eval_form(gs, p);
      if (at.is_zero()) continue;
      const auto sp = strong_positivity_test(at);
      min_eig = std::min(min_eig, sp.min_eigenvalue / (1.0 + at.max_coeff_abs()));
    }
    // for linear u the gradient square equals an elementary strongly
    // positive form exactly.
    for (int trial = 0; trial < 10; ++trial) {
      QuatMatrix<Rational> row(1, n);
      for (int l = 0; l < n; ++l) row(0, l) = rng.quaternion<Rational>(3, 2);
      Polynomial<Rational> u(nv);
      for (int l = 0; l < n; ++l) {
        const auto& q = row(0, l);
        // row q = a + b j pairs with the linear function whose horizontal
        // gradient blocks are conj-structured: (Re a, Im a, -Re b, Im b).
        u += Polynomial<Rational>::variable(nv, 4 * l + 0).scaled(Complex<Rational>(q.re));
        u += Polynomial<Rational>::variable(nv, 4 * l + 1).scaled(Complex<Rational>(q.i));
        u -= Polynomial<Rational>::variable(nv, 4 * l + 2).scaled(Complex<Rational>(q.j));
        u += Polynomial<Rational>::variable(nv, 4 * l + 3).scaled(Complex<Rational>(q.k));
      }
      const PolyForm<Rational> gs = wedge(d_alpha(u, 0), d_alpha(u, 1));
      GroupPoint<Rational> origin;
      origin.x.assign(4 * n, Rational(0));
      origin.t = Rational(0);
      Form<Complex<Rational>> at = eval_form(gs, origin);
      const Form<Complex<Rational>> esp = elementary_strongly_positive(row);
      const auto diff = at - esp;
      r_linear = std::max(r_linear, diff.is_zero() ? 0.0 : diff.max_coeff_abs());
    }
    rep.checks.push_back(make_check("gradient-square-positive", "gradient-square-positivity",
                                    fmt_count("min eigenvalue of d0 u ^ d1 u at a point", trials),
                                    ">= 0", std::max(0.0, -min_eig), 1e-9));
    rep.checks.push_back(make_check("gradient-square-elementary", "gradient-square-positivity",
                                    "d0 u ^ d1 u for linear u (exact)",
                                    "elementary strongly positive form of the gradient row",
                                    r_linear, 0.0));
  }

  // Hessians of constructed quadratics are nonnegative; the negated
  // standard form is rejected.
  {
    const int trials = count_or(cfg, 50);
    double min_eig = 0.0;
    GroupPoint<double> origin;
    origin.x.assign(4 * n, 0.0);
    origin.t = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const Polynomial<double> u = random_psh_quadratic(rng, n);
      const auto h = hessian_at(u, origin);
      const auto eig = eigen_hyperhermitian(h);
      const double scale = 1.0 + max_abs(h);
      min_eig = std::min(min_eig, eig.nu.minCoeff() / scale);
    }
    rep.checks.push_back(make_check("psh-hessian-nonneg", "psh-hessian-positivity",
                                    fmt_count("min Hessian eigenvalue of constructed quadratics",
                                              trials),
                                    ">= 0", std::max(0.0, -min_eig), 1e-9));

    const auto beta = standard_positive_two_form<Complex<double>>(n);
    const auto neg = strong_positivity_test(-beta);
    const auto pos = strong_positivity_test(beta);
    const double r_beta = (neg.nonneg ? 1.0 : 0.0) + (pos.nonneg ? 0.0 : 1.0);
    rep.checks.push_back(make_check("negated-standard-form-rejected", "positivity-rejection",
                                    "strong positivity of -beta and of beta",
                                    "rejected and accepted respectively", r_beta, 0.0));
  }

  // structure involution: gradient squares and beta are real forms; the
  // involution squares to (-1)^p on p-forms.
  {
    double r_real = 0.0;
    const auto beta = standard_positive_two_form<Complex<double>>(n);
    r_real = std::max(r_real, reality_defect(beta));
    Polynomial<double> u = to_double_poly(rng.poly<Rational>(n, 2, 3, true));
    const PolyForm<double> gs = wedge(d_alpha(u, 0), d_alpha(u, 1));
    const GroupPoint<double> p = rng.group_point<double>(n);
    r_real = std::max(r_real, reality_defect(eval_form(gs, p)));
    rep.checks.push_back(make_check("structure-involution-reality", "real-forms",
                                    "involution fixes beta and gradient squares", "fixed",
                                    r_real, 1e-12));
  }

  // pullback functoriality (g h)* = h* g* on random 2-forms, exact.
  {
    double r_fun = 0.0;
    Rng rng3(cfg.seed + 2);
    for (int trial = 0; trial < 10; ++trial) {
      QuatMatrix<Rational> g(n, n), h(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          g(r, c) = rng3.quaternion<Rational>(2, 2);
          h(r, c) = rng3.quaternion<Rational>(2, 2);
        }
      Form<Complex<Rational>> f(n, 2);
      for (int s = 0; s < 3; ++s) {
        const int a = static_cast<int>(rng3.int_in(0, 2 * n - 1));
        const int b = static_cast<int>(rng3.int_in(0, 2 * n - 1));
        if (a == b) continue;
        MultiIndex letters{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
        f.add_term_letters(letters, rng3.complex_scalar<Rational>());
      }
      const auto lhs = pullback(g * h, f);
      const auto rhs = pullback(h, pullback(g, f));
      const auto diff = lhs - rhs;
      r_fun = std::max(r_fun, diff.is_zero() ? 0.0 : diff.max_coeff_abs());
    }
    rep.checks.push_back(make_check("pullback-functoriality", "pullback-composition",
                                    "(g h)* on random 2-forms (exact)", "h* g*", r_fun, 0.0));
  }

  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// lines suite
// ---------------------------------------------------------------------------

namespace {

LineFrame<Rational> random_exact_frame(Rng& rng, int n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Quaternion<Rational>> q;
    for (int l = 0; l < n; ++l) q.push_back(rng.quaternion<Rational>(3, 2));
    LineFrame<Rational> f = make_line_frame(q);
    if (!f.is_degenerate()) return f;
  }
  throw std::runtime_error("could not draw a nondegenerate frame");
}

LineFrame<double> to_double_frame(const LineFrame<Rational>& f) {
  std::vector<Quaternion<double>> q;
  for (const auto& ql : f.q)
    q.push_back(Quaternion<double>(
        ScalarTraits<Rational>::to_double(ql.re), ScalarTraits<Rational>::to_double(ql.i),
        ScalarTraits<Rational>::to_double(ql.j), ScalarTraits<Rational>::to_double(ql.k)));
  return make_line_frame(q);
}

}  // namespace

SuiteReport run_lines_suite(const RunConfig& cfg) {
  const auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "lines";
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.seed = cfg.seed;
  const int n = cfg.n;
  const int nv = space_vars(n);
  Rng rng(cfg.seed);

  const int frame_count = count_or(cfg, 5);
  std::vector<LineFrame<Rational>> frames;
  for (int i = 0; i < frame_count; ++i) frames.push_back(random_exact_frame(rng, n));

  // frame invariants: B^T B = Lambda^2 Id, exactly.
  {
    double worst = 0.0;
    for (const auto& f : frames) worst = std::max(worst, frame_invariant_defect(f));
    rep.checks.push_back(make_check("frame-invariant", "pairing-matrix-invariant",
                                    "B^T B over random frames", "Lambda^2 Id", worst, 0.0));
  }

  // harmonicity of the gauge power: the sub-Laplacian of -1/gauge^4 has an
  // identically zero numerator (exact), and evaluates to ~0 in floats.
  {
    double r_exact = 0.0, r_float = 0.0;
    for (const auto& f : frames) {
      const auto num = fundamental_residual_numerator(f);
      r_exact = std::max(r_exact, num.is_zero() ? 0.0 : num.coeff_sup());

      const auto fd = to_double_frame(f);
      const auto lap = fundamental_shape_laplacian(fd);
      for (int trial = 0; trial < 20; ++trial) {
        LinePoint<double> p;
        double norm = 0.0;
        for (int a = 0; a < 4; ++a) {
          p.lam[a] = rng.in(-2.0, 2.0);
          norm += p.lam[a] * p.lam[a];
        }
        p.t = rng.in(-2.0, 2.0);
        if (norm < 0.25) p.lam[0] += 1.0;
        r_float = std::max(r_float, fs_residual_at(lap, p));
      }
    }
    rep.checks.push_back(make_check("fundamental-harmonic-exact", "fundamental-solution",
                                    "numerator of SubLap(-1/gauge^4) (exact)",
                                    "0 identically", r_exact, 0.0));
    rep.checks.push_back(make_check("fundamental-harmonic-points", "fundamental-solution",
                                    "|SubLap(-1/gauge^4)| at 20 points x 5 frames",
                                    "0 within 1e-9", r_float, 1e-9));
  }

  // regularized identity: SubLap(-1/(gauge^4 + eps)) equals
  // 32 Lambda^2 |lambda|^2 eps / (gauge^4 + eps)^3 as rational functions.
  {
    double worst = 0.0;
    for (const auto& f : frames) {
      const auto [lhs, rhs] = regularized_identity_sides(f);
      if (!same_function(lhs, rhs)) worst = std::max(worst, 1.0);
    }
    rep.checks.push_back(make_check("regularized-identity", "fundamental-solution-regularized",
                                    "SubLap(-1/(gauge^4+eps)) (exact rational function)",
                                    "32 Lambda^2 |lambda|^2 eps/(gauge^4+eps)^3", worst, 0.0));
  }

  // normalization constant: grid-stable, scales like Lambda, and matches the
  // closed form Lambda / (4 pi^3).
  {
    double r_stab = 0.0, r_scale = 0.0, r_closed = 0.0;
    for (const auto& f : frames) {
      const double lambda = to_double_frame(f).lambda();
      const auto table = fs_constant_table(lambda, 32, 4);
      const double c = table.richardson();
      r_stab = std::max(r_stab, table.last_diff() / std::fabs(c));
      // scaling the frame quaternions by s scales Lambda by s^2.
      const double s = 1.0 + rng.unit();
      const double cs = fs_constant(lambda * s * s);
      r_scale = std::max(r_scale, std::fabs(cs - s * s * c) / std::fabs(cs));
      r_closed = std::max(r_closed,
                          std::fabs(c - fs_constant_closed_form(lambda)) / std::fabs(c));
    }
    rep.checks.push_back(make_check("constant-grid-stability", "fundamental-constant",
                                    "relative change of C under one refinement",
                                    "<= 1e-4", r_stab, 1e-4));
    rep.checks.push_back(make_check("constant-scaling", "fundamental-constant",
                                    "C at scaled Lambda", "scales linearly in Lambda",
                                    r_scale, 1e-3));
    rep.checks.push_back(make_check("constant-closed-form", "fundamental-constant",
                                    "quadrature C", "Lambda / (4 pi^3)", r_closed, 1e-3));
  }

  // intertwining: the line fields push forward to quaternion-weighted
  // combinations of the ambient fields, exactly on polynomials.
  {
    double r_x = 0.0, r_sand = 0.0;
    for (const auto& f : frames) {
      const auto eta = rng.group_point<Rational>(n);
      const Polynomial<Rational> u = rng.poly<Rational>(n, 3, 3, true);
      const Polynomial<Rational> pulled = pullback_to_line(u, f, eta);
      for (int j = 0; j < 4; ++j) {
        Polynomial<Rational> lhs = line_apply_x(f, pulled, j);
        Polynomial<Rational> rhs(5);
        for (int l = 0; l < n; ++l) {
          const auto rep_bar = f.q[l].conj().real_rep();
          for (int r = 1; r <= 4; ++r) {
            const Rational w = rep_bar[j][r - 1];
            if (ScalarTraits<Rational>::is_zero(w)) continue;
            rhs += pullback_to_line(apply_x_field(u, 4 * l + r), f, eta)
                       .scaled(Complex<Rational>(w));
          }
        }
        const auto d = lhs - rhs;
        r_x = std::max(r_x, d.is_zero() ? 0.0 : d.coeff_sup());
      }

      // sandwich: SubLap~(u o iota) = (sum_lm conj(q_l) H_lm(u) q_m) o iota.
      const auto h = horizontal_hessian(u);
      QuatPoly<Rational> acc = QuatPoly<Rational>::zero(nv);
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          QuatPoly<Rational> term = f.q[l].conj() * h(l, m);
          term = term * QuatPoly<Rational>::constant(nv, f.q[m]);
          acc += term;
        }
      if (!acc.b.is_zero() || !acc.a.imag_part().is_zero())
        throw std::runtime_error("quaternion sandwich of a Hessian must be real");
      const Polynomial<Rational> lhs = line_sublaplacian(f, pulled);
      const Polynomial<Rational> rhs = pullback_to_line(acc.a.real_part(), f, eta);
      const auto d = lhs - rhs;
      r_sand = std::max(r_sand, d.is_zero() ? 0.0 : d.coeff_sup());
    }
    rep.checks.push_back(make_check("intertwining-fields", "line-intertwining",
                                    "line fields on pullbacks (exact)",
                                    "quaternion-weighted ambient fields", r_x, 0.0));
    rep.checks.push_back(make_check("intertwining-sandwich", "line-intertwining",
                                    "line sub-Laplacian of a pullback (exact)",
                                    "conj(q) Hessian q, pulled back", r_sand, 0.0));
  }

  // sub-mean-value property and exact normalization of the kernel mean.
  {
    const int psh_count = count_or(cfg, 20);
    const int frame_count_mv = 10;
    double worst_gap = 0.0, worst_norm = 0.0;
    std::vector<LineFrame<double>> dframes;
    for (int i = 0; i < frame_count_mv; ++i)
      dframes.push_back(to_double_frame(random_exact_frame(rng, n)));
    const Polynomial<double> one = Polynomial<double>::constant(nv, Complex<double>(1.0));
    // normalization once per frame and radius; the inequality over the full
    // product of functions, frames, and radii.
    GroupPoint<double> base;
    base.x.assign(4 * n, 0.0);
    base.t = 0.0;
    for (const auto& f : dframes)
      for (double r : {0.1, 0.5}) {
        const MeanValue mo = mean_value(one, f, base, r);
        worst_norm = std::max(worst_norm, std::fabs(mo.value - 1.0));
      }
    for (int i = 0; i < psh_count; ++i) {
      const Polynomial<double> u = random_psh_quadratic(rng, n);
      const GroupPoint<double> eta = rng.group_point<double>(n);
      for (const auto& f : dframes)
        for (double r : {0.1, 0.5}) {
          const MeanValue mv = mean_value(u, f, eta, r);
          worst_gap = std::max(worst_gap, mv.base_value - mv.value);
        }
    }
    rep.checks.push_back(make_check("sub-mean-value", "kernel-mean-inequality",
                                    fmt_count("max u(eta) - M_r(u)(eta)",
                                              psh_count * frame_count_mv * 2),
                                    "<= 1e-4", std::max(0.0, worst_gap), 1e-4));
    rep.checks.push_back(make_check("mean-normalization", "kernel-mean-normalization",
                                    "M_r(1)", "1 within 1e-6", worst_norm, 1e-6));
  }

  // kernel mass of the unit ball matches its closed form.
  {
    double worst = 0.0;
    for (const auto& f : frames) {
      const double lambda = to_double_frame(f).lambda();
      const Polynomial<double> one2(2);
      const auto [num, den] =
          line_ball_kernel_integrals(Polynomial<double>::constant(2, Complex<double>(1.0)),
                                     lambda, 256);
      (void)num;
      worst = std::max(worst, std::fabs(den - line_ball_kernel_mass_closed_form(lambda)) /
                                  den);
      (void)one2;
    }
    rep.checks.push_back(make_check("kernel-mass-closed-form", "kernel-mean-normalization",
                                    "grid mass of the unit line ball", "pi^3 / (6 Lambda)",
                                    worst, 1e-3));
  }

  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// measures suite
// ---------------------------------------------------------------------------

SuiteReport run_measures_suite(const RunConfig& cfg) {
  const auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "measures";
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.seed = cfg.seed;
  const int n = cfg.n;
  const int nv = space_vars(n);
  Rng rng(cfg.seed);
  const GaugeBall ball = unit_gauge_ball(n);

  // pointwise superadditivity of the Moore determinant on psd pairs.
  {
    const int trials = count_or(cfg, 200);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const auto a = rng.psd<double>(n);
      const auto b = rng.psd<double>(n);
      const double defect = superadditivity_defect(a, b);
      const double scale = 1.0 + std::fabs(moore_det(a + b));
      worst = std::min(worst, defect / scale);
    }
    rep.checks.push_back(make_check("superadditivity-pointwise", "determinant-superadditivity",
                                    fmt_count("min (det(A+B) - det A - det B)/(1+scale)",
                                              trials),
                                    ">= 0", std::max(0.0, -worst), 1e-9));
  }

  // integral superadditivity on constructed quadratics.
  {
    const int trials = count_or(cfg, 20);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const auto u = random_psh_quadratic(rng, n);
      const auto v = random_psh_quadratic(rng, n);
      const double defect = integral_superadditivity_defect(u, v, ball);
      const double scale = 1.0 + std::fabs(density_integral_ball(u + v, ball));
      worst = std::min(worst, defect / scale);
    }
    rep.checks.push_back(make_check("superadditivity-integral", "density-superadditivity",
                                    fmt_count("min relative integral defect", trials), ">= 0",
                                    std::max(0.0, -worst), 1e-9));
  }

  // comparison: u = (1 - eps) v against the gauge potential v, ratio
  // (1 - eps)^n.
  {
    double worst = 0.0;
    bool all_pass = true;
    for (double eps : {0.1, 0.3, 0.5}) {
      const Polynomial<double> v = gauge_potential(ball, n);
      const Polynomial<double> u = v.scaled(Complex<double>(1.0 - eps));
      const auto cmp = comparison_check(u, v, ball, rng, 100);
      all_pass = all_pass && cmp.pass;
      const double ratio = cmp.mass_u / cmp.mass_v;
      worst = std::max(worst, std::fabs(ratio - std::pow(1.0 - eps, n)));
    }
    rep.checks.push_back(make_check("comparison-scaling-family", "mass-comparison",
                                    "mass ratio of (1-eps) v to v, eps in {.1,.3,.5}",
                                    "(1-eps)^n within 1e-3", worst + (all_pass ? 0.0 : 1.0),
                                    1e-3));
  }

  // minimum principle on the three constructed families.
  {
    const int per_family = count_or(cfg, 10);
    int failures = 0, total = 0;
    for (int trial = 0; trial < per_family; ++trial) {
      // (a) equal densities, constant offset
      {
        const auto v = random_psh_quadratic(rng, n);
        const Polynomial<double> u =
            v + Polynomial<double>::constant(nv, Complex<double>(rng.in(-2.0, 2.0)));
        const auto mp = min_principle_check(u, v, ball, rng);
        ++total;
        if (!mp.pass) ++failures;
      }
      // (b) u = alpha v for the gauge potential v <= 0
      {
        const Polynomial<double> v = gauge_potential(ball, n);
        const double alpha = 0.2 + 0.6 * rng.unit();
        const Polynomial<double> u = v.scaled(Complex<double>(alpha));
        const auto mp = min_principle_check(u, v, ball, rng);
        ++total;
        if (!mp.pass) ++failures;
      }
      // (c) v random PSH, u = v + beta (r^4 - gauge^4) with beta small
      // enough to keep the Hessian of u nonnegative.
      {
        const auto v = random_psh_quadratic(rng, n);
        const double beta = 0.01 + 0.02 * rng.unit();
        const Polynomial<double> u = v - gauge_potential(ball, n).scaled(Complex<double>(beta));
        const auto mp = min_principle_check(u, v, ball, rng);
        ++total;
        if (!mp.pass) ++failures;
      }
    }
    rep.checks.push_back(make_check("minimum-principle-families", "minimum-principle",
                                    "failures over " + std::to_string(total) +
                                        " constructed pairs",
                                    "0", static_cast<double>(failures), 0.0));
  }

  // Stokes-type residual with cutoffs vanishing on the boundary sphere.
  {
    const int trials = count_or(cfg, 10);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const Polynomial<double> g = to_double_poly(rng.poly<Rational>(n, 2, 2, true));
      const Polynomial<double> h = boundary_cutoff(ball, n, g);
      PolyForm<double> t(n, 2 * n - 1);
      {
        // a handful of monomial-coefficient terms
        PolyForm<Rational> tr = random_form<Rational>(rng, n, 2 * n - 1, 2, 2, 1);
        t = tr.map_coeffs([](const Polynomial<Rational>& c) { return to_double_poly(c); });
      }
      if (t.is_zero()) continue;
      // the halves of the identity have complex coefficients; measure one of
      // them through its real/imaginary volume parts for the residual scale
      auto half_mass = [&](const PolyForm<double>& f) {
        const auto vc = f.volume_coefficient();
        if (!vc) return 0.0;
        return std::hypot(integrate_poly_gauge_ball(vc->real_part(), ball),
                          integrate_poly_gauge_ball(vc->imag_part(), ball));
      };
      for (int alpha = 0; alpha < 2; ++alpha) {
        const double resid = stokes_residual(h, t, alpha, ball);
        const double scale = 1.0 + half_mass(scale_form_by_poly(h, d_alpha(t, alpha)));
        worst = std::max(worst, std::fabs(resid) / scale);
      }
    }
    rep.checks.push_back(make_check("stokes-residual", "boundary-integration-by-parts",
                                    fmt_count("relative |int h dT + int dh ^ T|", trials),
                                    "0", worst, 1e-9));
  }

  // mass / sup-norm reports: scalar-family invariance of the ratio.
  {
    const GaugeBall outer(ball.center, 2.0);
    double worst_spread = 0.0, worst_ratio = 0.0;
    const int trials = count_or(cfg, 20);
    std::vector<Polynomial<double>> us;
    for (int trial = 0; trial < trials; ++trial) us.push_back(random_psh_quadratic(rng, n));
    for (const auto& u : us) {
      const auto rep_i = cln_check({u}, ball, outer, rng);
      worst_spread = std::max(worst_spread, rep_i.family_spread);
      worst_ratio = std::max(worst_ratio, rep_i.ratio);
    }
    // pairs exercise the genuinely mixed wedge when n >= 2
    if (n >= 2) {
      const auto r2 = cln_check({us[0], us[1 % us.size()]}, ball, outer, rng);
      worst_spread = std::max(worst_spread, r2.family_spread);
    }
    rep.checks.push_back(make_check("cln-scaling-invariance", "mass-sup-estimate",
                                    "ratio drift under the scalar family {1,2,5}",
                                    "0 within 1e-10", worst_spread, 1e-10));
    rep.checks.push_back(make_check("cln-constant", "mass-sup-estimate",
                                    "max mass/sup^k ratio over " + std::to_string(trials) +
                                        " potentials",
                                    "finite (reported: " + fmt(worst_ratio) + ")",
                                    worst_ratio > 0.0 ? 0.0 : 1.0, 0.5));
  }

  // convergence of regularized densities.
  {
    double worst_gap = 0.0, worst_direct = 0.0;
    bool cauchy = true;
    const int trials = count_or(cfg, 5);
    for (int trial = 0; trial < trials; ++trial) {
      const auto u = random_psh_quadratic(rng, n);
      const auto conv = ma_convergence_check(u, ball);
      cauchy = cauchy && conv.cauchy;
      worst_gap = std::max(worst_gap, conv.limit_gap / (1.0 + std::fabs(conv.direct)));
      worst_direct = std::max(
          worst_direct, std::fabs(conv.limit1 - conv.direct) / (1.0 + std::fabs(conv.direct)));
    }
    // closed form for the standard quadratic: density of (1+s)|x|^2 is
    // n! 8^n (1+s)^n, so each table entry is that times the weight mass.
    const Polynomial<double> q = squared_horizontal_norm<double>(n);
    const auto conv = ma_convergence_check(q, ball);
    const double wmass = integrate_poly_gauge_ball(-gauge_potential(ball, n), ball);
    double r_closed = 0.0;
    for (std::size_t j = 0; j < conv.seq1.size(); ++j) {
      const double s = 1.0 / static_cast<double>(j + 1);
      const double expect = rational_factorial(n) * std::pow(8.0 * (1.0 + s), n) * wmass;
      r_closed = std::max(r_closed, relative_residual(conv.seq1[j], expect));
    }
    cauchy = cauchy && conv.cauchy;
    rep.checks.push_back(make_check("ma-convergence-cauchy", "density-convergence",
                                    "gaps of both regularizing sequences", "nonincreasing",
                                    cauchy ? 0.0 : 1.0, 0.0));
    rep.checks.push_back(make_check("ma-convergence-limits", "density-convergence",
                                    "two extrapolated limits and the direct value",
                                    "agree within 1e-6", std::max(worst_gap, worst_direct),
                                    1e-6));
    rep.checks.push_back(make_check("ma-convergence-standard", "density-convergence",
                                    "table for |x|^2", "n! (8 + 8/j)^n x weight mass",
                                    r_closed, 1e-10));
  }

  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "brackets", "hessian",
                                              "positivity", "lines",    "measures"};
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& which, const RunConfig& cfg) {
  std::vector<SuiteReport> out;
  auto run_one = [&](const std::string& name) {
    if (name == "identities") return run_identities_suite(cfg);
    if (name == "brackets") return run_brackets_suite(cfg);
    if (name == "hessian") return run_hessian_suite(cfg);
    if (name == "positivity") return run_positivity_suite(cfg);
    if (name == "lines") return run_lines_suite(cfg);
    if (name == "measures") return run_measures_suite(cfg);
    throw std::invalid_argument("unknown suite: " + name);
  };
  if (which == "all") {
    for (const auto& name : suite_names()) out.push_back(run_one(name));
  } else {
    out.push_back(run_one(which));
  }
  return out;
}

}  // namespace qma
