// Deterministic random generation.  The engine is mt19937_64 with hand-rolled
// value mappings (standard distributions are implementation-defined, which
// would break cross-platform reproducibility of the verification reports).
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qma/heisenberg.hpp"
#include "qma/quat_matrix.hpp"

namespace qma {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in {lo, ..., hi} (inclusive); modulo bias is irrelevant here and
  // the mapping is fully specified.
  long long int_in(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng_() % span);
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

  bool coin() { return (eng_() & 1u) != 0; }

  // Small exact rationals p/q, |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long long max_num = 6, long long max_den = 4) {
    const long long p = int_in(-max_num, max_num);
    const long long q = int_in(1, max_den);
    return Rational(p) / Rational(q);
  }

  template <class T>
  T scalar(long long max_num = 6, long long max_den = 4);

  template <class T>
  Complex<T> complex_scalar(long long max_num = 6, long long max_den = 4) {
    T re = scalar<T>(max_num, max_den);
    T im = scalar<T>(max_num, max_den);
    return Complex<T>(std::move(re), std::move(im));
  }

  template <class T>
  Quaternion<T> quaternion(long long max_num = 4, long long max_den = 3) {
    return Quaternion<T>(scalar<T>(max_num, max_den), scalar<T>(max_num, max_den),
                         scalar<T>(max_num, max_den), scalar<T>(max_num, max_den));
  }

  // Random polynomial on the 4n+1 coordinate space.
  template <class T>
  Polynomial<T> poly(int n, int max_degree, int terms, bool real_coeffs,
                     long long max_num = 6, long long max_den = 4) {
    const int nv = space_vars(n);
    Polynomial<T> p(nv);
    for (int s = 0; s < terms; ++s) {
      Expo e(nv, 0);
      int budget = static_cast<int>(int_in(0, max_degree));
      while (budget > 0) {
        const int v = static_cast<int>(int_in(0, nv - 1));
        const int d = static_cast<int>(int_in(1, budget));
        e[v] += static_cast<std::uint16_t>(d);
        budget -= d;
      }
      Complex<T> c = real_coeffs ? Complex<T>(scalar<T>(max_num, max_den))
                                 : complex_scalar<T>(max_num, max_den);
      p.add_term(e, c);
    }
    return p;
  }

  template <class T>
  GroupPoint<T> group_point(int n, long long max_num = 3, long long max_den = 3) {
    GroupPoint<T> g;
    g.x.resize(4 * n);
    for (auto& v : g.x) v = scalar<T>(max_num, max_den);
    g.t = scalar<T>(max_num, max_den);
    return g;
  }

  // Self-adjoint quaternionic matrix (construction, not symmetrization of
  // user data: the entries below the diagonal are defined as conjugates).
  template <class T>
  QuatMatrix<T> hyperhermitian(int n, long long max_num = 4, long long max_den = 3) {
    QuatMatrix<T> m(n, n);
    for (int r = 0; r < n; ++r) {
      m(r, r) = Quaternion<T>::real(scalar<T>(max_num, max_den));
      for (int c = r + 1; c < n; ++c) {
        m(r, c) = quaternion<T>(max_num, max_den);
        m(c, r) = m(r, c).conj();
      }
    }
    return m;
  }

  // Nonnegative self-adjoint matrix R* R.
  template <class T>
  QuatMatrix<T> psd(int n, long long max_num = 3, long long max_den = 2) {
    QuatMatrix<T> r(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r(a, b) = quaternion<T>(max_num, max_den);
    return r.adjoint() * r;
  }

 private:
  std::mt19937_64 eng_;
};

template <>
inline double Rng::scalar<double>(long long max_num, long long max_den) {
  return ScalarTraits<Rational>::to_double(rational(max_num, max_den));
}
template <>
inline Rational Rng::scalar<Rational>(long long max_num, long long max_den) {
  return rational(max_num, max_den);
}

}  // namespace qma
