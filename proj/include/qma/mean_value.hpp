// Kernel-weighted spherical means on a line.  For a frame q and base point
// eta, the mean at radius r of an ambient function u is
//   M_r(u) = I(u o iota o delta_r) / I(1),
//   I(g) = int_{unit line ball} K g dV,   K = Lambda^2 |lambda|^2 / gauge^2,
// computed by first averaging the lambda variables exactly over round
// spheres (rational moments) and then applying one fixed midpoint grid in
// the polar coordinates (rho, theta) to numerator and denominator alike, so
// M_r(1) = 1 holds to machine precision by construction.
#pragma once

#include "qma/quadrature.hpp"
#include "qma/ratfn.hpp"

namespace qma {

// Dilate a line function: (l, t) -> (r l, r^2 t); extra variables inert.
template <class T>
Polynomial<T> line_dilate_function(const Polynomial<T>& u, const T& r) {
  const int nv = u.nvars();
  if (nv < 5) throw std::invalid_argument("line functions need at least 5 variables");
  std::vector<Polynomial<T>> images;
  images.reserve(nv);
  for (int a = 0; a < 4; ++a)
    images.push_back(Polynomial<T>::variable(nv, a).scaled(Complex<T>(r)));
  images.push_back(Polynomial<T>::variable(nv, 4).scaled(Complex<T>(r * r)));
  for (int v = 5; v < nv; ++v) images.push_back(Polynomial<T>::variable(nv, v));
  return u.compose(images);
}

// Average the four lambda variables over round spheres: the result is a
// polynomial in (y, t) with y = |lambda|^2.  Terms with an odd exponent
// vanish; even blocks contribute their exact rational sphere moment.
template <class T>
Polynomial<T> sphere_average_line_poly(const Polynomial<T>& u) {
  if (u.nvars() != 5) throw std::invalid_argument("expected exactly the 5 line variables");
  Polynomial<T> out(2);
  for (const auto& [e, c] : u.terms()) {
    std::vector<int> exps{e[0], e[1], e[2], e[3]};
    int total = e[0] + e[1] + e[2] + e[3];
    if (total % 2 != 0) continue;
    const Rational mom = sphere_moment(4, exps);
    if (mom == 0) continue;
    const T factor = [&] {
      if constexpr (ScalarTraits<T>::exact) {
        return T(mom);
      } else {
        return ScalarTraits<Rational>::to_double(mom);
      }
    }();
    Expo e2(2, 0);
    e2[0] = static_cast<std::uint16_t>(total / 2);  // y = |lambda|^2
    e2[1] = e[4];
    out.add_term(e2, c * Complex<T>(factor));
  }
  return out;
}

struct MeanValue {
  double value = 0.0;       // M_r(u)
  double base_value = 0.0;  // u at the base point
  RefinementTable table;    // values on the doubling grids
  double kernel_mass = 0.0; // I(1) on the finest grid
};

// One grid evaluation of (I(P), I(1)) for a bivariate average P(y, t):
// I(g) = (2 pi^2 / Lambda) int_0^1 int_0^pi rho^5 sin^2 th
//        g(rho^2 sin th / Lambda, rho^2 cos th) dth drho.
inline std::pair<double, double> line_ball_kernel_integrals(
    const Polynomial<double>& bivariate, double lambda, int cells) {
  const CompiledRealPoly p(bivariate, 1e-9 * (1.0 + bivariate.coeff_sup()));
  const double hr = 1.0 / cells, hth = M_PI / cells;
  double num = 0.0, den = 0.0;
  double args[2];
  for (int ir = 0; ir < cells; ++ir) {
    const double rho = (ir + 0.5) * hr;
    const double r2 = rho * rho;
    const double w_rho = std::pow(rho, 5);
    for (int it = 0; it < cells; ++it) {
      const double th = (it + 0.5) * hth;
      const double s = std::sin(th);
      const double w = w_rho * s * s;
      args[0] = r2 * s / lambda;
      args[1] = r2 * std::cos(th);
      num += w * p.eval(args);
      den += w;
    }
  }
  const double scale = 2.0 * M_PI * M_PI / lambda * hr * hth;
  return {num * scale, den * scale};
}

// Exact oracle for the kernel mass of the unit line ball: I(1) = pi^3 / (6 Lambda).
inline double line_ball_kernel_mass_closed_form(double lambda) {
  return M_PI * M_PI * M_PI / (6.0 * lambda);
}

inline MeanValue mean_value(const Polynomial<double>& u, const LineFrame<double>& f,
                            const GroupPoint<double>& eta, double r,
                            int base_cells = 32, int levels = 3) {
  if (f.is_degenerate())
    throw std::invalid_argument("mean values require a nondegenerate line");
  const double lambda = f.lambda();
  Polynomial<double> pulled = pullback_to_line(u, f, eta);
  Polynomial<double> scaled = line_dilate_function(pulled, r);
  Polynomial<double> averaged = sphere_average_line_poly(scaled);

  MeanValue mv;
  std::vector<double> coords = eta.x;
  coords.push_back(eta.t);
  mv.base_value = u.eval(coords).re;
  double mass = 0.0;
  mv.table = refine(
      [&](int cells) {
        auto [num, den] = line_ball_kernel_integrals(averaged, lambda, cells);
        mass = den;
        return num / den;
      },
      base_cells, levels);
  mv.value = mv.table.value();
  mv.kernel_mass = mass;
  return mv;
}

}  // namespace qma
