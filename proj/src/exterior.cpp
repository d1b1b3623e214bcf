#include "ainfty/exterior.hpp"

namespace ainf {

AElem wedge_A(const AElem& a2, const AElem& a1) {
  AElem r;
  for (const auto& [m2, c2] : a2.t)
    for (const auto& [m1, c1] : a1.t) {
      int s = wedge_sign(m2, m1);
      if (s) r.add(static_cast<Mask>(m2 | m1), c2 * c1 * s);
    }
  return r;
}

AElem mu2_standard(const AElem& a2, const AElem& a1) {
  AElem r;
  for (const auto& [m1, c1] : a1.t) {
    int s = mask_parity(m1) ? -1 : 1;
    for (const auto& [m2, c2] : a2.t) {
      int w = wedge_sign(m2, m1);
      if (w) r.add(static_cast<Mask>(m2 | m1), c2 * c1 * (s * w));
    }
  }
  return r;
}

std::string poly_str(const Poly& p, int n, const char* varname) {
  if (p.t.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p.t) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (int k = 0; k < n; ++k) {
      int e = m.get(k);
      if (e) {
        s += "*" + std::string(varname) + std::to_string(k + 1);
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
  }
  return s;
}

BEndo BEndo::identity(int n) {
  BEndo e;
  e.n = n;
  for (Mask c = 0; c < (1u << n); ++c) e.add(c, c, Mono{}, 0, Rat(1));
  return e;
}

bool operator==(const BEndo& a, const BEndo& b) {
  if (a.n != b.n) return false;
  // Stored entries never hold zero polynomials, so map equality is semantic.
  return a.m == b.m;
}

BEndo to_endo(const BTensor& b, int n) {
  BEndo e;
  e.n = n;
  for (const auto& [k, c] : b.t)
    e.add(k.dual, k.vec, k.sym, k.hbar, c * reversal_sign(mask_size(k.vec)));
  return e;
}

BTensor to_tensor(const BEndo& e) {
  BTensor b;
  for (const auto& [rc, poly] : e.m)
    for (const auto& [mh, c] : poly.t)
      b.add(BKey{mh.first, rc.first, rc.second, mh.second},
            c * reversal_sign(mask_size(rc.second)));
  return b;
}

BEndo mult_B(const BEndo& b2, const BEndo& b1) {
  BEndo r;
  r.n = b2.n;
  for (const auto& [rc2, p2] : b2.m)
    for (const auto& [rc1, p1] : b1.m) {
      if (rc2.second != rc1.first) continue;
      for (const auto& [mh2, c2] : p2.t)
        for (const auto& [mh1, c1] : p1.t)
          r.add(rc2.first, rc1.second, mh2.first * mh1.first, mh2.second + mh1.second,
                c2 * c1);
    }
  return r;
}

BTensor mult_tensor(const BTensor& b2, const BTensor& b1) {
  // Composition through the matrix identification: the left factor's vector
  // mask must match the right factor's covector mask; sign rev(|vec_2|).
  BTensor r;
  for (const auto& [k2, c2] : b2.t)
    for (const auto& [k1, c1] : b1.t) {
      if (k2.vec != k1.dual) continue;
      r.add(BKey{k2.sym * k1.sym, k2.dual, k1.vec, k2.hbar + k1.hbar},
            c2 * c1 * reversal_sign(mask_size(k2.vec)));
    }
  return r;
}

BEndo delta0(int n) {
  BEndo e;
  e.n = n;
  for (Mask d = 0; d < (1u << n); ++d)
    for (int k = 0; k < n; ++k)
      if (d & (1u << k)) {
        int s = (mask_pos(d, k) - 1) & 1 ? -1 : 1;
        e.add(static_cast<Mask>(d & ~(1u << k)), d, Mono::var(k), 0, Rat(s));
      }
  return e;
}

BEndo delta_deformed(const OneForm& gamma) {
  BEndo e = delta0(gamma.n);
  for (Mask d = 0; d < (1u << gamma.n); ++d)
    for (int k = 0; k < gamma.n; ++k) {
      int s = wedge_sign(static_cast<Mask>(1u << k), d);
      if (!s) continue;
      for (const auto& [mh, c] : gamma.g[k].t)
        e.add(static_cast<Mask>(d | (1u << k)), d, mh.first, mh.second, c * (-s));
    }
  return e;
}

MFCheck square_deformed(const OneForm& gamma) {
  BEndo d = delta_deformed(gamma);
  BEndo sq = mult_B(d, d);
  MFCheck res;
  for (const auto& [rc, p] : sq.m)
    if (rc.first != rc.second && !p.is_zero()) res.scalar = false;
  auto diag_entry = [&sq](Mask c) {
    auto it = sq.m.find({c, c});
    return it == sq.m.end() ? PolyH{} : it->second;
  };
  res.w_eff = diag_entry(0);
  for (Mask c = 1; c < (1u << gamma.n); ++c)
    if (!(diag_entry(c) == res.w_eff)) res.scalar = false;
  return res;
}

namespace {

// Split-by-parity graded commutator [d, b] = d b - (-1)^{|b|} b d.
BEndo graded_commutator(const BEndo& d, const BEndo& b) {
  BEndo even, odd;
  even.n = odd.n = b.n;
  for (const auto& [rc, p] : b.m) {
    auto& dst = ((mask_size(rc.first) + mask_size(rc.second)) & 1) ? odd : even;
    dst.m[rc] = p;
  }
  BEndo r;
  r.n = b.n;
  auto acc = [&r](const BEndo& x, int sign) {
    for (const auto& [rc, p] : x.m)
      for (const auto& [mh, c] : p.t) r.add(rc.first, rc.second, mh.first, mh.second, c * sign);
  };
  acc(mult_B(d, even), 1);
  acc(mult_B(even, d), -1);
  acc(mult_B(d, odd), 1);
  acc(mult_B(odd, d), 1);
  return r;
}

}  // namespace

BEndo partial_endo(const BEndo& b) { return graded_commutator(delta0(b.n), b); }

BEndo deformation_endo(const OneForm& gamma, const BEndo& b) {
  // Commutator with the deformation term -gamma^. alone.
  BEndo gw = delta_deformed(gamma);
  BEndo d0 = delta0(gamma.n);
  for (const auto& [rc, p] : d0.m)
    for (const auto& [mh, c] : p.t) gw.add(rc.first, rc.second, mh.first, mh.second, -c);
  return graded_commutator(gw, b);
}

BTensor partial_tensor(const BTensor& b, int n) {
  BTensor r;
  for (const auto& [k, c] : b.t) {
    int br = mask_size(k.dual);
    for (int j = 0; j < n; ++j) {
      Mask bit = static_cast<Mask>(1u << j);
      if (k.dual & bit) {
        int s = (mask_pos(k.dual, j) - 1) & 1 ? -1 : 1;
        r.add(BKey{k.sym * Mono::var(j), static_cast<Mask>(k.dual & ~bit), k.vec, k.hbar},
              c * s);
      }
      int ws = wedge_sign(bit, k.vec);
      if (ws) {
        int s = ((br - 1) & 1 ? -1 : 1) * ws;
        r.add(BKey{k.sym * Mono::var(j), k.dual, static_cast<Mask>(k.vec | bit), k.hbar},
              c * s);
      }
    }
  }
  return r;
}

BTensor deformation_tensor(const OneForm& gamma, const BTensor& b, int n) {
  BTensor r;
  for (const auto& [k, c] : b.t) {
    int br = mask_size(k.dual);
    for (int j = 0; j < n; ++j) {
      Mask bit = static_cast<Mask>(1u << j);
      int ws = wedge_sign(bit, k.dual);
      if (ws) {
        for (const auto& [mh, gc] : gamma.g[j].t)
          r.add(BKey{k.sym * mh.first, static_cast<Mask>(k.dual | bit), k.vec,
                     k.hbar + mh.second},
                c * gc * (-ws));
      }
      if (k.vec & bit) {
        int s = ((br - 1) & 1 ? -1 : 1) * ((mask_pos(k.vec, j) - 1) & 1 ? -1 : 1);
        for (const auto& [mh, gc] : gamma.g[j].t)
          r.add(BKey{k.sym * mh.first, k.dual, static_cast<Mask>(k.vec & ~bit),
                     k.hbar + mh.second},
                c * gc * s);
      }
    }
  }
  return r;
}

}  // namespace ainf
