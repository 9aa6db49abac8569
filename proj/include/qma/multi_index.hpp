// Strictly increasing multi-indices over the alphabet {0, ..., 2n-1} and the
// sign bookkeeping of wedge products.  The volume normalization interleaves
// the two halves of the alphabet: (0, n, 1, n+1, ..., n-1, 2n-1).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qma {

using MultiIndex = std::vector<std::uint8_t>;

// Sorts a sequence of letters, returning the permutation sign, or 0 if a
// letter repeats (the wedge of a repeated letter vanishes).
inline std::pair<MultiIndex, int> sort_letters(MultiIndex seq) {
  int sign = 1;
  for (std::size_t a = 1; a < seq.size(); ++a) {
    std::size_t b = a;
    while (b > 0 && seq[b] < seq[b - 1]) {
      std::swap(seq[b], seq[b - 1]);
      sign = -sign;
      --b;
    }
  }
  for (std::size_t a = 1; a < seq.size(); ++a)
    if (seq[a] == seq[a - 1]) return {std::move(seq), 0};
  return {std::move(seq), sign};
}

// Merges two strictly increasing index sets; returns the sign of the shuffle
// or 0 on a collision.  `out` receives the merged set.
inline int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  int sign = 1;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;
    if (a[ia] < b[ib]) {
      out.push_back(a[ia++]);
    } else {
      // b[ib] jumps over the remaining letters of a.
      if ((a.size() - ia) % 2 != 0) sign = -sign;
      out.push_back(b[ib++]);
    }
  }
  while (ia < a.size()) out.push_back(a[ia++]);
  while (ib < b.size()) out.push_back(b[ib++]);
  return sign;
}

inline MultiIndex complement_index(const MultiIndex& idx, int dim) {
  MultiIndex out;
  out.reserve(dim - idx.size());
  std::size_t p = 0;
  for (int v = 0; v < dim; ++v) {
    if (p < idx.size() && idx[p] == v) {
      ++p;
      continue;
    }
    out.push_back(static_cast<std::uint8_t>(v));
  }
  if (p != idx.size()) throw std::invalid_argument("index not sorted or out of range");
  return out;
}

// The interleaved top-degree order (0, n, 1, n+1, ..., n-1, 2n-1) fixing the
// volume form, and its sign relative to the sorted order (0, 1, ..., 2n-1).
inline MultiIndex volume_order(int n) {
  MultiIndex out;
  out.reserve(2 * n);
  for (int l = 0; l < n; ++l) {
    out.push_back(static_cast<std::uint8_t>(l));
    out.push_back(static_cast<std::uint8_t>(l + n));
  }
  return out;
}

// sign with volume_order(n) = sign * (sorted top index); equals
// (-1)^{n(n-1)/2} (each pair (l, n+l) jumps over the l' < l left behind).
inline int volume_sign(int n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

// epsilon(I): the sign making  epsilon(I) * w^I ^ w^{I^c}  the volume form.
// Both halves are sorted, so the shuffle sign of the merge is the sign of
// sorting their concatenation.
inline int epsilon_complement(const MultiIndex& idx, int n) {
  MultiIndex comp = complement_index(idx, 2 * n);
  MultiIndex merged;
  const int s = merge_sign(idx, comp, merged);
  if (s == 0) throw std::invalid_argument("repeated letter in index");
  return volume_sign(n) * s;
}

}  // namespace qma
