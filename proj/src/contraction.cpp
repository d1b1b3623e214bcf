#include "ainfty/contraction.hpp"

namespace ainf {

BTensor include_i(const AElem& a, int n) {
  AH ah;
  for (const auto& [m, c] : a.t) ah.add(m, 0, c);
  return include_i_h(ah, n);
}

BTensor include_i_h(const AH& a, int n) {
  BTensor b;
  Mask full = static_cast<Mask>((1u << n) - 1u);
  for (const auto& [mh, c] : a.t) {
    Mask theta = mh.first;
    for (Mask j = 0;; ++j) {
      if ((j & full) == j) {
        int ws = wedge_sign(j, theta);
        if (ws)
          b.add(BKey{Mono{}, j, static_cast<Mask>(j | theta), mh.second},
                c * (ws * reversal_sign(mask_size(j))));
      }
      if (j == full) break;
    }
  }
  return b;
}

AH project_p(const BTensor& b) {
  AH a;
  for (const auto& [k, c] : b.t)
    if (k.sym.packed == 0 && k.dual == 0) a.add(k.vec, k.hbar, c);
  return a;
}

BTensor homotopy_h(const BTensor& b, int n) {
  BTensor r;
  Mask full = static_cast<Mask>((1u << n) - 1u);
  for (const auto& [k, c] : b.t) {
    int w = k.sym.degree() + mask_size(k.dual);
    if (w == 0) continue;
    for (int v = 0; v < n; ++v) {
      int e = k.sym.get(v);
      if (!e) continue;
      Mono df = k.sym;
      df.packed -= Mono::var(v).packed;
      Mask vb = static_cast<Mask>(1u << v);
      int s1 = wedge_sign(vb, k.dual);
      if (!s1) continue;
      Mask base = static_cast<Mask>(vb | k.dual);
      for (Mask j = 0; j <= full; ++j) {
        if ((j & full) != j) continue;
        if (j & base) continue;
        int s2 = wedge_sign(base, j);
        int s3 = wedge_sign(j, k.vec);
        if (!s2 || !s3) continue;
        int p = mask_size(j);
        // p! / (w (w+1) ... (w+p))
        Rat coeff(1);
        for (int q = 1; q <= p; ++q) coeff *= q;
        Rat den(1);
        for (int q = 0; q <= p; ++q) den *= (w + q);
        coeff /= den;
        r.add(BKey{df, static_cast<Mask>(base | j), static_cast<Mask>(j | k.vec), k.hbar},
              c * coeff * (e * s1 * s2 * s3 * reversal_sign(p)));
      }
    }
  }
  return r;
}

namespace {

void check(ContractionReport& rep, bool cond, const std::string& what) {
  if (!cond) {
    rep.ok = false;
    if (rep.violations.size() < 32) rep.violations.push_back(what);
  }
}

std::string key_str(const BKey& k) {
  std::string s = "sym";
  for (int v = 0; v < 8; ++v) s += std::to_string(k.sym.get(v));
  s += " dual" + std::to_string(k.dual) + " vec" + std::to_string(k.vec);
  return s;
}

}  // namespace

ContractionReport verify_contraction(int n_sym, int n) {
  ContractionReport rep;
  Mask full = static_cast<Mask>((1u << n) - 1u);

  // Section property and side conditions on the algebra basis.
  for (Mask m = 0; m <= full; ++m) {
    AElem a = AElem::basis(m);
    BTensor ia = include_i(a, n);
    AH pia = project_p(ia);
    AH want;
    want.add(m, 0, Rat(1));
    check(rep, pia == want, "p i != id on mask " + std::to_string(m));
    check(rep, homotopy_h(ia, n).is_zero(), "h i != 0 on mask " + std::to_string(m));
    check(rep, partial_tensor(ia, n).is_zero(), "d i != 0 on mask " + std::to_string(m));
  }

  // Enumerate monomial terms of bounded Sym-degree.
  std::vector<Mono> monos;
  std::vector<Mono> cur{Mono{}};
  monos.push_back(Mono{});
  for (int d = 1; d <= n_sym; ++d) {
    std::vector<Mono> next;
    for (const auto& m : cur)
      for (int v = 0; v < n; ++v) {
        Mono t = m * Mono::var(v);
        // Avoid duplicates: only bump variables >= the largest bumped so far.
        bool canonical = true;
        for (int u = v + 1; u < n; ++u)
          if (m.get(u)) canonical = false;
        if (canonical) next.push_back(t);
      }
    for (const auto& m : next) monos.push_back(m);
    cur = std::move(next);
  }

  for (const auto& mono : monos) {
    for (Mask dual = 0; dual <= full; ++dual) {
      for (Mask vec = 0; vec <= full; ++vec) {
        BKey key{mono, dual, vec, 0};
        BTensor b = BTensor::term(key);
        BTensor hb = homotopy_h(b, n);
        check(rep, homotopy_h(hb, n).is_zero(), "h^2 != 0 at " + key_str(key));
        check(rep, project_p(hb).is_zero(), "p h != 0 at " + key_str(key));
        check(rep, project_p(partial_tensor(b, n)).is_zero(), "p d != 0 at " + key_str(key));
        // dh + hd = epsilon (id - i p)
        BTensor lhs = partial_tensor(hb, n);
        lhs.add(homotopy_h(partial_tensor(b, n), n));
        BTensor rhs = b;
        rhs.add(include_i_h(project_p(b), n), Rat(-1));
        if (lhs.is_zero() && rhs.is_zero()) continue;
        int eps = 0;
        BTensor diff_plus = lhs, diff_minus = lhs;
        diff_plus.add(rhs, Rat(-1));
        diff_minus.add(rhs, Rat(1));
        if (diff_plus.is_zero()) eps = 1;
        if (diff_minus.is_zero()) eps = -1;
        check(rep, eps != 0, "homotopy identity fails at " + key_str(key));
        if (eps) {
          if (rep.epsilon == 0) rep.epsilon = eps;
          check(rep, rep.epsilon == eps, "inconsistent epsilon at " + key_str(key));
        }
      }
    }
  }
  return rep;
}

OneForm gamma_cubic_quintic(int n, bool flipped) {
  OneForm f = OneForm::zero(n);
  int s = flipped ? -1 : 1;
  // g_k = -v_i v_j / 3 + hbar v_k^4 with {i,j,k} = {0,1,2}.
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    f.g[k].add(Mono::var(i) * Mono::var(j), 0, Rat(-s, 3));
    f.g[k].add(Mono::var(k, 4), 1, Rat(s));
  }
  return f;
}

OneForm toy_gamma(int n) {
  OneForm f = OneForm::zero(n);
  for (int k = 0; k < n; ++k) f.g[k].add(Mono::var(k, 2), 0, Rat(1));
  return f;
}

NormalizedGamma sign_normalize_gamma(const OneForm& gamma, const PolyH& w_target) {
  for (int flip : {1, -1}) {
    OneForm g = gamma;
    if (flip < 0)
      for (auto& comp : g.g)
        for (auto& [mh, c] : comp.t) c = -c;
    MFCheck mf = square_deformed(g);
    if (mf.scalar && mf.w_eff == w_target) return {g, flip};
  }
  return {gamma, 0};
}

PolyH superpotential_tagged() {
  PolyH w;
  w.add(Mono::var(0) * Mono::var(1) * Mono::var(2), 0, Rat(-1));
  for (int k = 0; k < 3; ++k) w.add(Mono::var(k, 5), 1, Rat(1));
  return w;
}

std::string conventions_text(const Conventions& c) {
  std::string s;
  s += "homotopy_epsilon = " + std::string(c.epsilon >= 0 ? "+" : "") + std::to_string(c.epsilon) + "\n";
  s += "gamma_flip = " + std::string(c.gamma_flip >= 0 ? "+" : "") + std::to_string(c.gamma_flip) + "\n";
  return s;
}

}  // namespace ainf
