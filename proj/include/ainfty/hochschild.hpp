#pragma once

// Hochschild complex of Lambda(V): differential, Gerstenhaber bracket,
// Maurer-Cartan residual, HKR map, polyvector fields with Schouten bracket,
// and invariant dimension counts.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ainfty/exterior.hpp"
#include "ainfty/transfer.hpp"

namespace ainf {

// Multilinear map component key: packed basis tuple (leftmost argument a_j at
// bits 0, as in MuTable), output mask, hbar tag.
struct CKey {
  std::uint64_t tuple = 0;
  Mask out = 0;
  int hbar = 0;

  friend auto operator<=>(const CKey&, const CKey&) = default;
};

struct Cochain {
  int arity = 0;
  std::map<CKey, Rat> c;

  void add(const CKey& k, const Rat& v) {
    if (ainf::is_zero(v)) return;
    auto it = c.find(k);
    if (it == c.end()) {
      c[k] = v;
    } else {
      it->second += v;
      if (ainf::is_zero(it->second)) c.erase(it);
    }
  }
  void add(const Cochain& o, const Rat& scale = Rat(1)) {
    for (const auto& [k, v] : o.c) add(k, v * scale);
  }
  bool is_zero() const { return c.empty(); }
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

  // Evaluate on a packed basis tuple; multi-term output with hbar tags.
  AH eval(std::uint64_t tuple) const;
};

// Z/2 Hom-degree of a component: |out| - sum |in| mod 2 (hbar is even).
int component_hom_parity(const Cochain& f, const CKey& k);
// Shifted CC-degree parity |phi| = arity + hom - 1 mod 2; requires all stored
// components to agree (checked).
int cochain_parity(const Cochain& f);

// The displayed Hochschild differential against the wedge product (arity + 1).
Cochain hochschild_d(const Cochain& f, int n);
// The displayed Gerstenhaber bracket of single-arity cochains.
Cochain gerstenhaber(const Cochain& f, const Cochain& g, int n);

using CochainSet = std::map<int, Cochain>;  // arity -> component

// d(alpha) + 1/2 [alpha, alpha], truncated to arities <= D.
CochainSet mc_residual(const CochainSet& alpha, int D, int n);

// ---- polyvector fields ----

struct PVKey {
  Mono sym;
  Mask vec = 0;
  int hbar = 0;

  friend auto operator<=>(const PVKey&, const PVKey&) = default;
};

struct PolyVector {
  std::map<PVKey, Rat> t;

  void add(const PVKey& k, const Rat& v) {
    if (ainf::is_zero(v)) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t[k] = v;
    } else {
      it->second += v;
      if (ainf::is_zero(it->second)) t.erase(it);
    }
  }
  void add(const PolyVector& o, const Rat& scale = Rat(1)) {
    for (const auto& [k, v] : o.t) add(k, v * scale);
  }
  bool is_zero() const { return t.empty(); }
  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

// HKR projection: sum over all ordered index tuples (k_i,...,k_1) of
// v_{k_i}...v_{k_1} * phi(xi_{k_i},...,xi_{k_1}).
PolyVector hkr(const Cochain& f, int n);
PolyVector hkr(const CochainSet& alpha, int n);

// Displayed two-sum Schouten bracket.
PolyVector schouten(const PolyVector& P, const PolyVector& Q, int n);

// Contraction iota_{dW} (left contraction, dv_k removes xi_k with
// (-1)^{pos-1}); lowers Lambda-degree by one.
PolyVector koszul_dW(const PolyVector& P, const Poly& W, int n);

// Dimensions of G-invariants (G the diagonal determinant-one subgroup):
// weight-balance counts on Sym^i (x) Lambda^j and on Hom^j(A^{tensor arity},A).
int invariant_dim(int i, int j, int n);
int hom_invariant_dim(int arity, int j, int n);

// Degree-summand membership tests.
struct DegreePredicates {
  bool in_g = false;   // 2i + j - 4k = 3d + 3
  bool in_h = false;   // 3i + j - 4k = 3d + 3
  bool mod4 = false;   // 2i + j + d + 1 = 0 mod 4
};
DegreePredicates degree_predicates(int d, int i, int j, int k);

}  // namespace ainf
