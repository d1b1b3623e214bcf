#pragma once

// Contraction data (i, p, h) for the Koszul resolution, side-condition
// verification, and the matrix-factorization identity.

#include <string>
#include <vector>

#include "ainfty/exterior.hpp"

namespace ainf {

// Lambda(V) element split by hbar-power.
struct AH {
  std::map<std::pair<Mask, int>, Rat> t;

  void add(Mask m, int hbar, const Rat& c) {
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
  void add(const AH& o, const Rat& scale = Rat(1)) {
    for (const auto& [k, c] : o.t) add(k.first, k.second, c * scale);
  }
  bool is_zero() const { return t.empty(); }
  friend bool operator==(const AH& a, const AH& b) { return a.t == b.t; }
};

BTensor include_i(const AElem& a, int n);
// i applied maskwise, keeping hbar tags.
BTensor include_i_h(const AH& a, int n);
AH project_p(const BTensor& b);
BTensor homotopy_h(const BTensor& b, int n);

struct ContractionReport {
  bool ok = true;
  int epsilon = 0;  // sign in dh + hd = epsilon (id - i p); 0 if undetermined
  std::vector<std::string> violations;
};

// Exhaustive check of p i = id, side conditions, chain-map properties and the
// signed homotopy identity over all monomial terms of Sym-degree <= n_sym.
ContractionReport verify_contraction(int n_sym, int n);

// The printed one-forms. gamma_cubic_quintic is the superpotential one-form
// with the quartic (hbar-tagged) part; toy_gamma is v1^2 dv1 + ... for tests.
OneForm gamma_cubic_quintic(int n3_only = 3, bool flipped = false);
OneForm toy_gamma(int n);

// Flip gamma if needed so that square_deformed yields exactly w_target.
// Returns flip = +1 (unchanged) or -1 (negated); flip = 0 if neither matches.
struct NormalizedGamma {
  OneForm gamma;
  int flip = 0;
};
NormalizedGamma sign_normalize_gamma(const OneForm& gamma, const PolyH& w_target);

// W = -v1v2v3 + hbar (v1^5+v2^5+v3^5) (the quintic part carries the tag).
PolyH superpotential_tagged();

struct Conventions {
  int epsilon = 0;
  int gamma_flip = 0;
};
std::string conventions_text(const Conventions& c);

}  // namespace ainf
