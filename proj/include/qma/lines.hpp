// Quaternionic lines: the 5-dimensional subgroups obtained by sending a line
// coordinate (lambda, t) in H x R to (q_1 lambda, ..., q_n lambda, t) and
// left-translating.  The induced group law uses the skew pairing matrix
//   B = sum_l rep(q_l)^T J rep(q_l) = -rep(mu),   mu = sum_l conj(q_l) I q_l,
// where rep is the left-multiplication matrix and J the 4x4 pairing block.
// mu is purely imaginary; Lambda = |mu| controls everything: B^T B =
// Lambda^2 Id, the line is degenerate exactly when Lambda = 0, and the
// intrinsic gauge is (Lambda^2 |lambda|^4 + t^2)^{1/4}.
//
// Functions on a line use polynomial variables (l1, l2, l3, l4, t, ...);
// variable 4 is t, extra variables are inert parameters.
#pragma once

#include <array>

#include "qma/heisenberg.hpp"
#include "qma/polynomial.hpp"
#include "qma/quat_poly.hpp"
#include "qma/quaternion.hpp"

namespace qma {

template <class T>
struct LinePoint {
  std::array<T, 4> lam{};
  T t{};
};

template <class T>
struct LineFrame {
  int n = 0;
  std::vector<Quaternion<T>> q;       // one quaternion per block
  std::array<std::array<T, 4>, 4> b;  // skew pairing matrix
  Quaternion<T> mu;                   // sum conj(q_l) I q_l, purely imaginary
  T lambda_sq{};                      // Lambda^2 = |mu|^2

  bool is_degenerate() const { return ScalarTraits<T>::is_zero(lambda_sq); }
  double lambda() const { return std::sqrt(ScalarTraits<T>::to_double(lambda_sq)); }
};

template <class T>
LineFrame<T> make_line_frame(std::vector<Quaternion<T>> q) {
  if (q.empty()) throw std::invalid_argument("at least one block quaternion required");
  LineFrame<T> f;
  f.n = static_cast<int>(q.size());
  f.q = std::move(q);
  f.mu = Quaternion<T>::zero();
  for (const auto& ql : f.q) f.mu += ql.conj() * Quaternion<T>::unit_i() * ql;
  const double re_defect = std::abs(ScalarTraits<T>::to_double(f.mu.re));
  if (re_defect > (ScalarTraits<T>::exact ? 0.0 : 1e-12 * (1.0 + abs_double(f.mu))))
    throw std::runtime_error("pairing quaternion must be purely imaginary");
  f.lambda_sq = f.mu.norm_sq();
  const auto rep = (-f.mu).real_rep();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) f.b[r][c] = rep[r][c];
  return f;
}

// B^T B - Lambda^2 Id, as a max-abs defect (exact zero for exact scalars).
template <class T>
double frame_invariant_defect(const LineFrame<T>& f) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      T acc = ScalarTraits<T>::zero();
      for (int k = 0; k < 4; ++k) acc += f.b[k][r] * f.b[k][c];
      if (r == c) acc -= f.lambda_sq;
      worst = std::max(worst, std::abs(ScalarTraits<T>::to_double(acc)));
    }
  return worst;
}

template <class T>
LinePoint<T> line_mul(const LineFrame<T>& f, const LinePoint<T>& p, const LinePoint<T>& q) {
  LinePoint<T> r;
  T pair = ScalarTraits<T>::zero();
  for (int a = 0; a < 4; ++a) {
    r.lam[a] = p.lam[a] + q.lam[a];
    for (int c = 0; c < 4; ++c) pair += f.b[a][c] * p.lam[a] * q.lam[c];
  }
  r.t = p.t + q.t + ScalarTraits<T>::from_int(2) * pair;
  return r;
}

template <class T>
LinePoint<T> line_inverse(const LinePoint<T>& p) {
  LinePoint<T> r;
  for (int a = 0; a < 4; ++a) r.lam[a] = -p.lam[a];
  r.t = -p.t;
  return r;
}

template <class T>
LinePoint<T> line_dilate(const T& r, const LinePoint<T>& p) {
  LinePoint<T> d;
  for (int a = 0; a < 4; ++a) d.lam[a] = r * p.lam[a];
  d.t = r * r * p.t;
  return d;
}

// Fourth power of the intrinsic gauge: Lambda^2 |lambda|^4 + t^2.
template <class T>
T line_gauge4(const LineFrame<T>& f, const LinePoint<T>& p) {
  T s = ScalarTraits<T>::zero();
  for (int a = 0; a < 4; ++a) s += p.lam[a] * p.lam[a];
  return f.lambda_sq * s * s + p.t * p.t;
}

// The embedding iota_{eta,q}(lambda, t) = eta . (q_1 lambda, ..., q_n lambda, t).
template <class T>
GroupPoint<T> line_embed(const LineFrame<T>& f, const GroupPoint<T>& eta,
                         const LinePoint<T>& p) {
  GroupPoint<T> base;
  base.x.resize(4 * f.n);
  const Quaternion<T> lam = Quaternion<T>::from_array(p.lam);
  for (int l = 0; l < f.n; ++l) {
    const Quaternion<T> v = f.q[l] * lam;
    const auto arr = v.to_array();
    for (int a = 0; a < 4; ++a) base.x[4 * l + a] = arr[a];
  }
  base.t = p.t;
  return group_mul(eta, base);
}

// Coordinate polynomials (in the 5 line variables) of the embedding; used to
// pull ambient functions back to the line.
template <class T>
std::vector<Polynomial<T>> line_embedding_images(const LineFrame<T>& f,
                                                 const GroupPoint<T>& eta) {
  if (static_cast<int>(eta.x.size()) != 4 * f.n)
    throw std::invalid_argument("base point dimension mismatch");
  const int nv = 5;
  std::vector<Polynomial<T>> lam_vars;
  for (int a = 0; a < 4; ++a) lam_vars.push_back(Polynomial<T>::variable(nv, a));
  Polynomial<T> tvar = Polynomial<T>::variable(nv, 4);

  // Base coordinates before translation: block l is rep(q_l) * lambda.
  std::vector<Polynomial<T>> base_x;
  base_x.reserve(4 * f.n);
  for (int l = 0; l < f.n; ++l) {
    const auto rep = f.q[l].real_rep();
    for (int r = 0; r < 4; ++r) {
      Polynomial<T> coord(nv);
      for (int c = 0; c < 4; ++c)
        coord += lam_vars[c].scaled(Complex<T>(rep[r][c]));
      base_x.push_back(std::move(coord));
    }
  }
  // Left translation by eta: x = eta_x + base_x,
  // t = eta_t + t + 2 <eta_x, base_x>.
  std::vector<Polynomial<T>> images;
  images.reserve(4 * f.n + 1);
  for (int i = 0; i < 4 * f.n; ++i)
    images.push_back(base_x[i] + Polynomial<T>::constant(nv, Complex<T>(eta.x[i])));
  Polynomial<T> tp = tvar + Polynomial<T>::constant(nv, Complex<T>(eta.t));
  const Complex<T> two(ScalarTraits<T>::from_int(2));
  for (int l = 0; l < 2 * f.n; ++l) {
    tp += base_x[2 * l + 1].scaled(two * Complex<T>(eta.x[2 * l]));
    tp -= base_x[2 * l].scaled(two * Complex<T>(eta.x[2 * l + 1]));
  }
  images.push_back(std::move(tp));
  return images;
}

// u restricted to the line through eta: a polynomial in (l1..l4, t).
template <class T>
Polynomial<T> pullback_to_line(const Polynomial<T>& u, const LineFrame<T>& f,
                               const GroupPoint<T>& eta) {
  if (u.nvars() != 4 * f.n + 1)
    throw std::invalid_argument("function does not live on the ambient group");
  return u.compose(line_embedding_images(f, eta));
}

// Intrinsic horizontal fields of the line, 0-based j in {0, 1, 2, 3}:
//   Xl_j = d/dl_j + 2 sum_k B_{kj} l_k d/dt.
// Polynomials may carry extra inert variables beyond (l1..l4, t).
template <class T>
Polynomial<T> line_apply_x(const LineFrame<T>& f, const Polynomial<T>& u, int j) {
  if (u.nvars() < 5) throw std::invalid_argument("line functions need at least 5 variables");
  if (j < 0 || j > 3) throw std::invalid_argument("field index out of range");
  Polynomial<T> r = u.derivative(j);
  Polynomial<T> ut = u.derivative(4);
  const Complex<T> two(ScalarTraits<T>::from_int(2));
  for (int k = 0; k < 4; ++k) {
    if (ScalarTraits<T>::is_zero(f.b[k][j])) continue;
    r += ut.times_var(k).scaled(two * Complex<T>(f.b[k][j]));
  }
  return r;
}

// The line's sub-Laplacian sum_j Xl_j^2.
template <class T>
Polynomial<T> line_sublaplacian(const LineFrame<T>& f, const Polynomial<T>& u) {
  Polynomial<T> acc(u.nvars());
  for (int j = 0; j < 4; ++j) acc += line_apply_x(f, line_apply_x(f, u, j), j);
  return acc;
}

// Intrinsic quaternionic conjugate operator of the line:
//   Qbar~ = Xl_1 + I Xl_2 + J Xl_3 + K Xl_4   (components act on values).
template <class T>
QuatPoly<T> line_apply_qbar(const LineFrame<T>& f, const QuatPoly<T>& u) {
  auto fx = [&](const QuatPoly<T>& v, int j) {
    return QuatPoly<T>(line_apply_x(f, v.a, j), line_apply_x(f, v.b, j));
  };
  QuatPoly<T> r = fx(u, 0);
  r += Quaternion<T>::unit_i() * fx(u, 1);
  r += Quaternion<T>::unit_j() * fx(u, 2);
  r += Quaternion<T>::unit_k() * fx(u, 3);
  return r;
}

// The (bounded, dilation-invariant) density comparing the line kernel with
// the ambient one: K = Lambda^2 |lambda|^2 / sqrt(line gauge^4).
inline double line_kernel_density(const LineFrame<double>& f, const LinePoint<double>& p) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a) s += p.lam[a] * p.lam[a];
  const double g4 = line_gauge4(f, p);
  if (g4 == 0.0) throw std::domain_error("kernel density undefined at the origin");
  return f.lambda_sq * s / std::sqrt(g4);
}

}  // namespace qma
