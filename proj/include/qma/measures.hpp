// Measure-level certificates: integration of top-degree forms over gauge
// balls, pairing with powers of the standard positive form, a divergence
// (Stokes-type) residual against cutoffs vanishing on the boundary, mass /
// sup-norm estimates, comparison of density masses under ordering
// hypotheses, the minimum principle, Moore determinant superadditivity, and
// convergence of densities along quadratic regularizations (polynomial in
// the regularization strength, so extrapolation to zero is exact).
#pragma once

#include "qma/domains.hpp"
#include "qma/hessian.hpp"
#include "qma/real_forms.hpp"

namespace qma {

// integral over the ball of f, where F = f * (interleaved volume form).
inline double integrate_top_form_ball(const PolyForm<double>& F, const GaugeBall& ball) {
  if (F.degree() != 2 * F.n()) throw std::invalid_argument("not a top-degree form");
  const auto vc = F.volume_coefficient();
  if (!vc) return 0.0;
  return integrate_poly_gauge_ball(*vc, ball);
}

// Pairing of a 2p-form with beta^{n-p}: integral of T wedge beta^{n-p}.
// For positive T this is its mass on the ball.
inline double beta_mass_ball(const PolyForm<double>& T, const GaugeBall& ball) {
  const int n = T.n();
  if (T.degree() % 2 != 0) throw std::invalid_argument("even degree required");
  const int p = T.degree() / 2;
  if (p > n) throw std::invalid_argument("degree exceeds the top degree");
  if (p == n) return integrate_top_form_ball(T, ball);
  Form<Polynomial<double>> top = T;
  const auto beta_c = standard_positive_two_form<Complex<double>>(n);
  Form<Polynomial<double>> beta(n, 2);
  const int nv = 4 * n + 1;
  for (const auto& [idx, c] : beta_c.terms())
    beta.add_term(idx, Polynomial<double>::constant(nv, c));
  for (int k = 0; k < n - p; ++k) top = wedge(top, beta);
  return integrate_top_form_ball(top, ball);
}

// Multiply every coefficient of a form by a scalar polynomial.
template <class T>
Form<Polynomial<T>> scale_form_by_poly(const Polynomial<T>& h, const Form<Polynomial<T>>& f) {
  return f.map_coeffs([&](const Polynomial<T>& c) { return h * c; });
}

// Residual of integration by parts for a cutoff h vanishing on the boundary:
//   int_B ( h d_a T + d_a h wedge T )  should vanish for any (2n-1)-form T.
// The integrand is complex (the fields carry i); both parts must vanish.
inline double stokes_residual(const Polynomial<double>& h, const PolyForm<double>& T,
                              int alpha, const GaugeBall& ball) {
  if (T.degree() != 2 * T.n() - 1)
    throw std::invalid_argument("expected a form of degree one below the top");
  const PolyForm<double> lhs = scale_form_by_poly(h, d_alpha(T, alpha));
  const PolyForm<double> rhs = wedge(d_alpha(as_zero_form(h), alpha), T);
  const auto vc = (lhs + rhs).volume_coefficient();
  if (!vc) return 0.0;
  const double re = integrate_poly_gauge_ball(vc->real_part(), ball);
  const double im = integrate_poly_gauge_ball(vc->imag_part(), ball);
  return std::hypot(re, im);
}

// The gauge potential of a ball: gauge^4(center^{-1} xi) - r^4, negative
// inside, zero on the boundary sphere.
inline Polynomial<double> gauge_potential(const GaugeBall& ball, int n) {
  const int nv = 4 * n + 1;
  return left_translate(gauge4_poly<double>(n), group_inverse(ball.center)) -
         Polynomial<double>::constant(nv, Complex<double>(std::pow(ball.radius, 4)));
}

// A polynomial cutoff vanishing on the boundary sphere: h = -potential * g.
inline Polynomial<double> boundary_cutoff(const GaugeBall& ball, int n,
                                          const Polynomial<double>& g) {
  return -gauge_potential(ball, n) * g;
}

// integral over the ball of the density of (second differential of u)^n,
// optionally against a polynomial weight.
inline double density_integral_ball(const Polynomial<double>& u, const GaugeBall& ball) {
  return integrate_top_form_ball(density_form(u), ball);
}

inline double weighted_density_integral_ball(const Polynomial<double>& u,
                                             const Polynomial<double>& weight,
                                             const GaugeBall& ball) {
  const auto vc = density_form(u).volume_coefficient();
  if (!vc) return 0.0;
  return integrate_poly_gauge_ball(weight * *vc, ball);
}

// density of (second differential of u)^n over a box (exact for polynomials).
inline double density_integral_box(const Polynomial<double>& u, const Box& box) {
  const auto vc = density_form(u).volume_coefficient();
  if (!vc) return 0.0;
  return integrate_poly_box(*vc, box);
}

namespace detail {

inline std::string point_string(const GroupPoint<double>& p) {
  std::string s = "(";
  for (double xi : p.x) s += ScalarTraits<double>::to_string(xi) + ",";
  s += ScalarTraits<double>::to_string(p.t) + ")";
  return s;
}

inline double eval_real(const CompiledRealPoly& u, const GroupPoint<double>& p) {
  std::vector<double> coords = p.x;
  coords.push_back(p.t);
  return u.eval(coords);
}

}  // namespace detail

// ---- mass / sup-norm estimate ------------------------------------------------

struct ClnReport {
  double mass = 0.0;      // mass of the wedge of second differentials on the inner ball
  double bound = 0.0;     // product of sup-norms over the outer ball samples
  double ratio = 0.0;     // mass / bound
  double family_spread = 0.0;  // relative drift of the ratio under scalar scaling
};

// Mass of (second differential of u_1) ^ ... ^ (second differential of u_k)
// over the inner ball, against the product of sampled sup-norms on the outer
// ball.  The scalar family c * u_i multiplies both sides by c^k, so the
// ratio is invariant; the spread over {1, 2, 5} is reported.
inline ClnReport cln_check(const std::vector<Polynomial<double>>& us, const GaugeBall& inner,
                           const GaugeBall& outer, Rng& rng, int samples = 256) {
  if (us.empty()) throw std::invalid_argument("need at least one potential");
  const int nv = us.front().nvars();
  const int n = (nv - 1) / 4;
  const int k = static_cast<int>(us.size());
  if (k > n) throw std::invalid_argument("more potentials than the top degree allows");
  for (const auto& u : us)
    if (u.nvars() != nv) throw std::invalid_argument("mixed variable counts");
  if (inner.center.x != outer.center.x || inner.center.t != outer.center.t ||
      !(inner.radius < outer.radius))
    throw std::invalid_argument("inner ball must sit strictly inside the outer ball");

  auto wedge_of = [&](double scale) {
    PolyForm<double> acc = second_differential(us[0].scaled(Complex<double>(scale)));
    for (int i = 1; i < k; ++i)
      acc = wedge(acc, second_differential(us[i].scaled(Complex<double>(scale))));
    return acc;
  };
  auto sup_of = [&](double scale) {
    double prod = 1.0;
    Rng local = rng;  // same sample set for every scale
    std::vector<CompiledRealPoly> cs;
    for (const auto& u : us) cs.emplace_back(u, 1e-9 * (1.0 + u.coeff_sup()));
    std::vector<double> sups(k, 0.0);
    for (int s = 0; s < samples; ++s) {
      const GroupPoint<double> p = s % 4 == 0 ? random_boundary_point(local, outer, n)
                                              : random_interior_point(local, outer, n);
      for (int i = 0; i < k; ++i)
        sups[i] = std::max(sups[i], std::fabs(detail::eval_real(cs[i], p)));
    }
    for (int i = 0; i < k; ++i) prod *= scale * sups[i];
    return prod;
  };

  ClnReport rep;
  rep.mass = beta_mass_ball(wedge_of(1.0), inner);
  rep.bound = sup_of(1.0);
  rep.ratio = rep.bound > 0.0 ? rep.mass / rep.bound : 0.0;
  double lo = rep.ratio, hi = rep.ratio;
  for (double c : {2.0, 5.0}) {
    const double m = beta_mass_ball(wedge_of(c), inner);
    const double b = sup_of(c);
    const double r = b > 0.0 ? m / b : 0.0;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  rep.family_spread = rep.ratio != 0.0 ? (hi - lo) / std::fabs(rep.ratio) : 0.0;
  return rep;
}

// ---- comparison of density masses ---------------------------------------------

struct ComparisonReport {
  double mass_u = 0.0;
  double mass_v = 0.0;
  bool pass = false;  // mass_u <= mass_v (+ slack)
};

// Hypotheses (u = v on the boundary sphere, u >= v inside) are verified on
// samples; a violation throws with the offending point.  The conclusion
// compares the exact density integrals.
inline ComparisonReport comparison_check(const Polynomial<double>& u,
                                         const Polynomial<double>& v, const GaugeBall& ball,
                                         Rng& rng, int samples = 200, double tol = 1e-8) {
  const int n = (u.nvars() - 1) / 4;
  const CompiledRealPoly cu(u, 1e-9 * (1.0 + u.coeff_sup()));
  const CompiledRealPoly cv(v, 1e-9 * (1.0 + v.coeff_sup()));
  double scale = 1.0 + u.coeff_sup() + v.coeff_sup();
  for (int s = 0; s < samples; ++s) {
    const GroupPoint<double> bd = random_boundary_point(rng, ball, n);
    if (std::fabs(detail::eval_real(cu, bd) - detail::eval_real(cv, bd)) > tol * scale)
      throw std::runtime_error("boundary equality fails at " + detail::point_string(bd));
    const GroupPoint<double> in = random_interior_point(rng, ball, n);
    if (detail::eval_real(cu, in) < detail::eval_real(cv, in) - tol * scale)
      throw std::runtime_error("ordering hypothesis fails at " + detail::point_string(in));
  }
  ComparisonReport rep;
  rep.mass_u = density_integral_ball(u, ball);
  rep.mass_v = density_integral_ball(v, ball);
  rep.pass = rep.mass_u <= rep.mass_v + tol * (1.0 + std::fabs(rep.mass_v));
  return rep;
}

// ---- minimum principle ----------------------------------------------------------

struct MinPrincipleReport {
  double closure_min = 0.0;   // min of u - v over interior and boundary samples
  double boundary_min = 0.0;  // min of u - v over boundary samples
  bool pass = false;
};

// Hypothesis: density(u) <= density(v) pointwise (verified on samples; a
// violation throws with the offending point).  Conclusion: the minimum of
// u - v over the closure is attained on the boundary, up to tol.
inline MinPrincipleReport min_principle_check(const Polynomial<double>& u,
                                              const Polynomial<double>& v,
                                              const GaugeBall& ball, Rng& rng,
                                              int interior_samples = 300,
                                              int boundary_samples = 300,
                                              double tol = 1e-7) {
  const int n = (u.nvars() - 1) / 4;
  const CompiledRealPoly cu(u, 1e-9 * (1.0 + u.coeff_sup()));
  const CompiledRealPoly cv(v, 1e-9 * (1.0 + v.coeff_sup()));
  auto diff_at = [&](const GroupPoint<double>& p) {
    return detail::eval_real(cu, p) - detail::eval_real(cv, p);
  };
  MinPrincipleReport rep;
  rep.closure_min = std::numeric_limits<double>::infinity();
  rep.boundary_min = std::numeric_limits<double>::infinity();
  double density_scale = 1.0;
  // build the symbolic Hessians once; per-sample work is then evaluation
  const QuatPolyMatrix<double> hu = horizontal_hessian(u);
  const QuatPolyMatrix<double> hv = horizontal_hessian(v);
  std::vector<double> coords(u.nvars());
  auto density_of = [&](const QuatPolyMatrix<double>& h, const GroupPoint<double>& p) {
    for (int i = 0; i < 4 * n; ++i) coords[i] = p.x[i];
    coords[4 * n] = p.t;
    return moore_det(h.eval(coords));
  };
  for (int s = 0; s < interior_samples; ++s) {
    const GroupPoint<double> p = random_interior_point(rng, ball, n);
    const double du = density_of(hu, p);
    const double dv = density_of(hv, p);
    density_scale = std::max({density_scale, std::fabs(du), std::fabs(dv)});
    if (du > dv + 1e-7 * density_scale)
      throw std::runtime_error("density ordering fails at " + detail::point_string(p));
    rep.closure_min = std::min(rep.closure_min, diff_at(p));
  }
  for (int s = 0; s < boundary_samples; ++s) {
    const GroupPoint<double> p = random_boundary_point(rng, ball, n);
    const double d = diff_at(p);
    rep.boundary_min = std::min(rep.boundary_min, d);
    rep.closure_min = std::min(rep.closure_min, d);
  }
  const double scale = 1.0 + std::fabs(rep.boundary_min);
  rep.pass = rep.closure_min >= rep.boundary_min - tol * scale;
  return rep;
}

// ---- superadditivity -------------------------------------------------------------

// Moore determinant superadditivity defect for nonnegative hyperhermitian
// matrices: det(A + B) - det A - det B (nonnegative up to roundoff).
inline double superadditivity_defect(const QuatMatD& a, const QuatMatD& b,
                                     double tol = 1e-10) {
  return moore_det(a + b, tol) - moore_det(a, tol) - moore_det(b, tol);
}

// Integral superadditivity of densities over a ball:
//   int (density of u + v) - int (density of u) - int (density of v).
inline double integral_superadditivity_defect(const Polynomial<double>& u,
                                              const Polynomial<double>& v,
                                              const GaugeBall& ball) {
  return density_integral_ball(u + v, ball) - density_integral_ball(u, ball) -
         density_integral_ball(v, ball);
}

// ---- convergence along quadratic regularizations -----------------------------------

// Neville evaluation at x* of the interpolating polynomial through (xs, ys).
inline double neville_at(std::vector<double> xs, std::vector<double> ys, double xstar) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("bad nodes");
  const int m = static_cast<int>(xs.size());
  for (int level = 1; level < m; ++level)
    for (int i = 0; i < m - level; ++i)
      ys[i] = ((xstar - xs[i + level]) * ys[i] + (xs[i] - xstar) * ys[i + 1]) /
              (xs[i] - xs[i + level]);
  return ys[0];
}

struct MaConvergenceReport {
  std::vector<double> seq1;  // weighted masses along u + (1/j) |x|^2
  std::vector<double> seq2;  // weighted masses along u + (1/j^2) (|x|^2 + 1)
  double limit1 = 0.0;       // extrapolation of seq1 at strength 0
  double limit2 = 0.0;       // extrapolation of seq2 at strength 0
  double direct = 0.0;       // weighted mass of u itself
  bool cauchy = false;       // successive gaps of both sequences do not grow
  double limit_gap = 0.0;    // |limit1 - limit2|
};

// Masses against the nonnegative weight r^4 - gauge^4 along the two
// regularizing sequences.  The strength-to-mass map is a polynomial of
// degree n with nonnegative coefficients, so both sequences decrease, their
// gaps shrink, and interpolation through n + 1 nodes recovers the common
// limit exactly.
inline MaConvergenceReport ma_convergence_check(const Polynomial<double>& u,
                                                const GaugeBall& ball, int jmax = 0) {
  const int nv = u.nvars();
  const int n = (nv - 1) / 4;
  if (jmax <= 0) jmax = std::max(6, n + 2);
  if (jmax < n + 1) throw std::invalid_argument("need at least n + 1 sequence entries");
  const Polynomial<double> weight = -gauge_potential(ball, n);
  const Polynomial<double> quad = squared_horizontal_norm<double>(n);

  auto mass_at = [&](double s) {
    return weighted_density_integral_ball(u + quad.scaled(Complex<double>(s)), weight, ball);
  };
  MaConvergenceReport rep;
  std::vector<double> s1, s2;
  for (int j = 1; j <= jmax; ++j) {
    s1.push_back(1.0 / j);
    s2.push_back(1.0 / (static_cast<double>(j) * j));
    rep.seq1.push_back(mass_at(s1.back()));
    rep.seq2.push_back(mass_at(s2.back()));  // the +1 shift has zero Hessian
  }
  auto tail_extrapolate = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> tx(xs.end() - (n + 1), xs.end());
    std::vector<double> ty(ys.end() - (n + 1), ys.end());
    return neville_at(tx, ty, 0.0);
  };
  rep.limit1 = tail_extrapolate(s1, rep.seq1);
  rep.limit2 = tail_extrapolate(s2, rep.seq2);
  rep.direct = mass_at(0.0);
  rep.limit_gap = std::fabs(rep.limit1 - rep.limit2);
  const double scale = 1.0 + std::fabs(rep.direct);
  auto gaps_ok = [&](const std::vector<double>& seq) {
    for (std::size_t i = 2; i < seq.size(); ++i) {
      const double prev = std::fabs(seq[i - 1] - seq[i - 2]);
      const double cur = std::fabs(seq[i] - seq[i - 1]);
      if (cur > prev + 1e-9 * scale) return false;
    }
    return true;
  };
  rep.cauchy = gaps_ok(rep.seq1) && gaps_ok(rep.seq2);
  return rep;
}

}  // namespace qma
