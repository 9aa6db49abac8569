// Group mollification and sampled derivative stencils.  Smoothing uses the
// compactly supported bump (1 - gauge^4)^4 scaled by group dilations,
// discretized once on a fixed midpoint grid whose weights are normalized by
// their own sum, so constants mollify to themselves exactly.  Left
// translations commute with the smoothing because the kernel acts on the
// right.  Sampled horizontal derivatives use second-order central
// differences of the coordinate fields; on functions whose mollification is
// a polynomial of degree <= 2 in each direction the stencils are exact up
// to roundoff.
#pragma once

#include <functional>

#include "qma/heisenberg.hpp"
#include "qma/quat_matrix.hpp"

namespace qma {

using RealFn = std::function<double(const GroupPoint<double>&)>;

struct Mollifier {
  int n = 0;
  double eps = 1.0;
  std::vector<GroupPoint<double>> nodes;  // kernel sample points in D(0, eps)
  std::vector<double> weights;            // bump values, positive, sum to `total`
  double total = 0.0;
};

// Midpoint grid on [-1,1]^{4n+1} intersected with the unit gauge ball,
// then pushed to scale eps by the group dilation.
inline Mollifier make_mollifier(int n, double eps, int cells_per_dim = 9) {
  if (n < 1) throw std::invalid_argument("need at least one quaternionic block");
  if (!(eps > 0.0)) throw std::invalid_argument("mollification scale must be positive");
  if (cells_per_dim < 2) throw std::invalid_argument("grid too coarse");
  Mollifier m;
  m.n = n;
  m.eps = eps;
  const int dim = 4 * n + 1;
  const double h = 2.0 / cells_per_dim;
  std::vector<int> idx(dim, 0);
  std::vector<double> z(dim);
  while (true) {
    for (int i = 0; i < dim; ++i) z[i] = -1.0 + (idx[i] + 0.5) * h;
    GroupPoint<double> p;
    p.x.assign(z.begin(), z.end() - 1);
    p.t = z.back();
    const double g4 = gauge4(p);
    if (g4 < 1.0) {
      const double w = std::pow(1.0 - g4, 4);
      if (w > 0.0) {
        m.nodes.push_back(dilate(eps, p));
        m.weights.push_back(w);
        m.total += w;
      }
    }
    int i = 0;
    for (; i < dim; ++i) {
      if (++idx[i] < cells_per_dim) break;
      idx[i] = 0;
    }
    if (i == dim) break;
  }
  if (m.nodes.empty()) throw std::runtime_error("empty mollifier grid");
  return m;
}

// (kernel * u)(xi) = sum_i w_i u(y_i^{-1} xi) / sum_i w_i.
inline double mollify_value(const Mollifier& m, const RealFn& u,
                            const GroupPoint<double>& xi) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.nodes.size(); ++i)
    acc += m.weights[i] * u(group_mul(group_inverse(m.nodes[i]), xi));
  return acc / m.total;
}

inline RealFn mollify(const Mollifier& m, RealFn u) {
  return [m, u = std::move(u)](const GroupPoint<double>& xi) {
    return mollify_value(m, u, xi);
  };
}

inline RealFn as_real_fn(const Polynomial<double>& p) {
  CompiledRealPoly c(p, 1e-12 * (1.0 + p.coeff_sup()));
  return [c = std::move(c)](const GroupPoint<double>& g) {
    std::vector<double> coords = g.x;
    coords.push_back(g.t);
    return c.eval(coords);
  };
}

namespace detail {

inline GroupPoint<double> shifted(const GroupPoint<double>& p, int var, double h) {
  GroupPoint<double> q = p;
  if (var == static_cast<int>(p.x.size()))
    q.t += h;
  else
    q.x[var] += h;
  return q;
}

}  // namespace detail

// Central second-order stencils for coordinate partial derivatives; `var`
// counts x coordinates first (0-based) with the vertical coordinate last.
inline double sampled_partial(const RealFn& u, const GroupPoint<double>& p, int var,
                              double h = 1e-3) {
  return (u(detail::shifted(p, var, h)) - u(detail::shifted(p, var, -h))) / (2.0 * h);
}

inline double sampled_partial2(const RealFn& u, const GroupPoint<double>& p, int a,
                               int b, double h = 1e-3) {
  if (a == b) {
    return (u(detail::shifted(p, a, h)) - 2.0 * u(p) + u(detail::shifted(p, a, -h))) /
           (h * h);
  }
  const double pp = u(detail::shifted(detail::shifted(p, a, h), b, h));
  const double pm = u(detail::shifted(detail::shifted(p, a, h), b, -h));
  const double mp = u(detail::shifted(detail::shifted(p, a, -h), b, h));
  const double mm = u(detail::shifted(detail::shifted(p, a, -h), b, -h));
  return (pp - pm - mp + mm) / (4.0 * h * h);
}

namespace detail {

// Coefficient of d/dt in the horizontal field X_a (1-based a): -2 x_{a+1}
// for odd a, +2 x_{a-1} for even a.
inline double x_field_t_coeff(const GroupPoint<double>& p, int a) {
  return (a % 2 == 1) ? -2.0 * p.x[a] : 2.0 * p.x[a - 2];
}

// d/dx_c of that coefficient (1-based a, 0-based c).
inline double x_field_t_coeff_partial(int a, int c) {
  if (a % 2 == 1) return c == a ? -2.0 : 0.0;
  return c == a - 2 ? 2.0 : 0.0;
}

}  // namespace detail

// X_a u from samples (1-based a).
inline double sampled_x_field(const RealFn& u, const GroupPoint<double>& p, int a,
                              double h = 1e-3) {
  const int tv = static_cast<int>(p.x.size());
  return sampled_partial(u, p, a - 1, h) +
         detail::x_field_t_coeff(p, a) * sampled_partial(u, p, tv, h);
}

// X_a X_b u from samples (1-based a, b).  Expanding X_a X_b with
// X_a = d_a + c_a d_t gives
//   d_a d_b + c_b d_a d_t + (d_a c_b) d_t + c_a d_b d_t + c_a c_b d_t^2.
inline double sampled_xx_field(const RealFn& u, const GroupPoint<double>& p, int a,
                               int b, double h = 1e-3) {
  const int tv = static_cast<int>(p.x.size());
  const double ca = detail::x_field_t_coeff(p, a);
  const double cb = detail::x_field_t_coeff(p, b);
  return sampled_partial2(u, p, a - 1, b - 1, h) +
         cb * sampled_partial2(u, p, a - 1, tv, h) +
         detail::x_field_t_coeff_partial(b, a - 1) * sampled_partial(u, p, tv, h) +
         ca * sampled_partial2(u, p, b - 1, tv, h) +
         ca * cb * sampled_partial2(u, p, tv, tv, h);
}

// Sampled vertical derivative of u.
inline double sampled_t_field(const RealFn& u, const GroupPoint<double>& p,
                              double h = 1e-3) {
  return sampled_partial(u, p, static_cast<int>(p.x.size()), h);
}

// Horizontal quaternionic Hessian from samples:
//   H_lm = sum_{r,s} e_r conj(e_s) X_{4l+r} X_{4m+s} u + 8 delta_lm I d_t u
// with e_1..e_4 = 1, I, J, K (1-based block offsets r, s).
inline QuatMatD sampled_hessian(const RealFn& u, int n, const GroupPoint<double>& p,
                                double h = 1e-3) {
  if (static_cast<int>(p.x.size()) != 4 * n)
    throw std::invalid_argument("point dimension mismatch");
  const std::array<QuatD, 4> e{QuatD::one(), QuatD::unit_i(), QuatD::unit_j(),
                               QuatD::unit_k()};
  QuatMatD hess(n, n);
  const double ut = sampled_t_field(u, p, h);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      QuatD acc = QuatD::zero();
      for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) {
          const double d2 = sampled_xx_field(u, p, 4 * l + r, 4 * m + s, h);
          acc += (e[r - 1] * e[s - 1].conj()) * d2;
        }
      if (l == m) acc += QuatD::unit_i() * (8.0 * ut);
      hess(l, m) = acc;
    }
  return hess;
}

}  // namespace qma
