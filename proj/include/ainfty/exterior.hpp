#pragma once

// Elements of Lambda(V), C[V], and the Koszul dga B in tensor and matrix form,
// with the undeformed differential and its superpotential deformation.
//
// Identification used throughout: the tensor term f dv_R (x) xi_C is the
// C[V]-linear endomorphism of Omega(V) sending the basis covector dv_C to
// rev(|C|) * f dv_R and every other basis covector to zero, where
// rev(p) = (-1)^{p(p-1)/2} is the sign pairing xi_{j_p}^...^xi_{j_1} with
// dv_{j_1}^...^dv_{j_p}. Under this identification the graded commutator with
// iota_eta (resp. -gamma^.) equals the displayed termwise formulas; both
// routes are implemented and tested against each other.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ainfty/gradings.hpp"
#include "ainfty/scalars.hpp"

namespace ainf {

// ---- Lambda(V) elements ----

struct AElem {
  std::map<Mask, Rat> t;

  static AElem unit() { return basis(0); }
  static AElem basis(Mask m, Rat c = Rat(1)) {
    AElem a;
    if (!ainf::is_zero(c)) a.t[m] = std::move(c);
    return a;
  }
  void add(Mask m, const Rat& c) {
    if (ainf::is_zero(c)) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t[m] = c;
    } else {
      it->second += c;
      if (ainf::is_zero(it->second)) t.erase(it);
    }
  }
  void add(const AElem& o, const Rat& scale = Rat(1)) {
    for (const auto& [m, c] : o.t) add(m, c * scale);
  }
  bool is_zero() const { return t.empty(); }
  friend bool operator==(const AElem& a, const AElem& b) { return a.t == b.t; }
};

AElem wedge_A(const AElem& a2, const AElem& a1);
// mu^2(a2,a1) = (-1)^{|a1|} a2 ^ a1
AElem mu2_standard(const AElem& a2, const AElem& a1);

// ---- polynomials ----

struct Poly {
  std::map<Mono, Rat> t;

  static Poly mono(Mono m, Rat c = Rat(1)) {
    Poly p;
    if (!ainf::is_zero(c)) p.t[m] = std::move(c);
    return p;
  }
  void add(Mono m, const Rat& c) {
    if (ainf::is_zero(c)) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t[m] = c;
    } else {
      it->second += c;
      if (ainf::is_zero(it->second)) t.erase(it);
    }
  }
  void add(const Poly& o, const Rat& scale = Rat(1)) {
    for (const auto& [m, c] : o.t) add(m, c * scale);
  }
  bool is_zero() const { return t.empty(); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.t)
      for (const auto& [mb, cb] : b.t) r.add(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }
};

std::string poly_str(const Poly& p, int n, const char* varname = "v");

// Polynomial with hbar-power tags (hbar is a tag, not a variable).
struct PolyH {
  std::map<std::pair<Mono, int>, Rat> t;

  void add(Mono m, int hbar, const Rat& c) {
    if (ainf::is_zero(c)) return;
    auto key = std::make_pair(m, hbar);
    auto it = t.find(key);
    if (it == t.end()) {
      t[key] = c;
    } else {
      it->second += c;
      if (ainf::is_zero(it->second)) t.erase(it);
    }
  }
  bool is_zero() const { return t.empty(); }
  friend bool operator==(const PolyH& a, const PolyH& b) { return a.t == b.t; }
};

// One-form gamma = sum_k g_k dv_k; each g_k a tagged polynomial.
struct OneForm {
  int n = 3;
  std::vector<PolyH> g;  // size n

  static OneForm zero(int n) {
    OneForm f;
    f.n = n;
    f.g.resize(n);
    return f;
  }
};

// ---- B in tensor form ----

struct BKey {
  Mono sym;
  Mask dual = 0;  // Lambda(V^dual) factor, beta = dv_R
  Mask vec = 0;   // Lambda(V) factor, theta = xi_C
  int hbar = 0;

  friend auto operator<=>(const BKey&, const BKey&) = default;
};

inline int bkey_parity(const BKey& k) { return (mask_size(k.dual) + mask_size(k.vec)) & 1; }
// Regraded degree of Sym^i (x) Lambda^j(V^dual) (x) Lambda^k(V) hbar^m: 2i - j + k - 4m.
inline int bkey_degree(const BKey& k) {
  return 2 * k.sym.degree() - mask_size(k.dual) + mask_size(k.vec) - 4 * k.hbar;
}

struct BTensor {
  std::map<BKey, Rat> t;

  static BTensor term(BKey k, Rat c = Rat(1)) {
    BTensor b;
    if (!ainf::is_zero(c)) b.t[k] = std::move(c);
    return b;
  }
  void add(const BKey& k, const Rat& c) {
    if (ainf::is_zero(c)) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t[k] = c;
    } else {
      it->second += c;
      if (ainf::is_zero(it->second)) t.erase(it);
    }
  }
  void add(const BTensor& o, const Rat& scale = Rat(1)) {
    for (const auto& [k, c] : o.t) add(k, c * scale);
  }
  bool is_zero() const { return t.empty(); }
  friend bool operator==(const BTensor& a, const BTensor& b) { return a.t == b.t; }
};

// ---- B in matrix form ----

struct BEndo {
  int n = 3;
  // (row covector mask, column covector mask) -> tagged polynomial entry.
  std::map<std::pair<Mask, Mask>, PolyH> m;

  static BEndo identity(int n);
  void add(Mask row, Mask col, Mono mono, int hbar, const Rat& c) {
    if (ainf::is_zero(c)) return;
    auto& e = m[{row, col}];
    e.add(mono, hbar, c);
    if (e.is_zero()) m.erase({row, col});
  }
  bool is_zero() const {
    for (const auto& [k, e] : m)
      if (!e.is_zero()) return false;
    return true;
  }
  friend bool operator==(const BEndo& a, const BEndo& b);
};

BEndo to_endo(const BTensor& b, int n);
BTensor to_tensor(const BEndo& e);

BEndo mult_B(const BEndo& b2, const BEndo& b1);
// Composition product in tensor form (equal to to_tensor(mult_B(to_endo,to_endo))):
// nonzero on term pairs with vec(b2) == dual(b1), sign rev(|vec(b2)|).
BTensor mult_tensor(const BTensor& b2, const BTensor& b1);

// delta_0 = iota_eta and delta~ = iota_eta - gamma^. as matrices acting on Omega(V).
BEndo delta0(int n);
BEndo delta_deformed(const OneForm& gamma);

// Square of delta~ as a scalar endomorphism; fails (second = false-ish report)
// if not scalar. Returns the tagged polynomial W_eff with delta~^2 = W_eff * id.
struct MFCheck {
  bool scalar = true;
  PolyH w_eff;
};
MFCheck square_deformed(const OneForm& gamma);

// Differential and deformation, matrix route (graded commutators).
BEndo partial_endo(const BEndo& b);
BEndo deformation_endo(const OneForm& gamma, const BEndo& b);

// Same maps, termwise displayed-formula route on tensor terms.
BTensor partial_tensor(const BTensor& b, int n);
BTensor deformation_tensor(const OneForm& gamma, const BTensor& b, int n);

}  // namespace ainf
