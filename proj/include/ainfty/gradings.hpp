#pragma once

// Monomial and exterior-mask bookkeeping plus the single sign engine:
// wedge signs for merging ordered masks, reversal signs, and Z/5 weights.

#include <array>
#include <bit>
#include <cstdint>

namespace ainf {

// Subset of {0..n-1}; canonical basis element is xi_{j_1}^...^xi_{j_p}
// (or dv_{...}) with indices strictly increasing.
using Mask = std::uint8_t;

inline int mask_size(Mask m) { return std::popcount(static_cast<unsigned>(m)); }
inline int mask_parity(Mask m) { return mask_size(m) & 1; }

// 0 if masks intersect, otherwise (-1)^{#transpositions sorting the concatenation m1,m2}.
inline int wedge_sign(Mask m1, Mask m2) {
  if (m1 & m2) return 0;
  int inv = 0;
  for (int k = 0; k < 8; ++k)
    if (m2 & (1u << k)) inv += std::popcount(static_cast<unsigned>(m1) >> (k + 1));
  return (inv & 1) ? -1 : 1;
}

// Sign of reversing a p-element wedge: (-1)^{p(p-1)/2}.
inline int reversal_sign(int p) { return ((p * (p - 1) / 2) & 1) ? -1 : 1; }

// Position (1-based) of bit k among the set bits of m; k must be in m.
inline int mask_pos(Mask m, int k) {
  return std::popcount(static_cast<unsigned>(m) & ((1u << k) - 1u)) + 1;
}

// Exponent vector of a Sym(V^dual) monomial, one byte per variable.
// Variable 0 sits in the most significant byte so that integer comparison
// equals lexicographic comparison of exponent vectors.
struct Mono {
  std::uint64_t packed = 0;

  static Mono var(int k, int e = 1) {
    Mono m;
    m.packed = static_cast<std::uint64_t>(e) << (8 * (7 - k));
    return m;
  }
  int get(int k) const { return static_cast<int>((packed >> (8 * (7 - k))) & 0xff); }
  int degree() const {
    int d = 0;
    for (int k = 0; k < 8; ++k) d += get(k);
    return d;
  }
  friend Mono operator*(Mono a, Mono b) { return Mono{a.packed + b.packed}; }
  friend bool operator==(Mono a, Mono b) { return a.packed == b.packed; }
  friend auto operator<=>(Mono a, Mono b) { return a.packed <=> b.packed; }
};

// Z/5 weight vector. v_k has weight -e_k, xi_k has weight +e_k.
using Weight = std::array<int, 8>;

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight w{};
  for (int i = 0; i < 8; ++i) w[i] = (a[i] + b[i]) % 5;
  return w;
}

inline Weight monomial_weight(Mono m) {
  Weight w{};
  for (int k = 0; k < 8; ++k) w[k] = (5 - m.get(k) % 5) % 5;
  return w;
}

inline Weight mask_weight(Mask m) {
  Weight w{};
  for (int k = 0; k < 8; ++k)
    if (m & (1u << k)) w[k] = 1;
  return w;
}

// Membership in the diagonal subgroup <(1,...,1)> of (Z/5)^n, i.e. G-invariance
// of the weight class for the diagonal determinant-one group.
inline bool weight_diagonal(const Weight& w, int n) {
  for (int k = 1; k < n; ++k)
    if (w[k] % 5 != w[0] % 5) return false;
  return true;
}

}  // namespace ainf
