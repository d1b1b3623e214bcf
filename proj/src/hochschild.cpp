#include "ainfty/hochschild.hpp"

#include <cassert>

namespace ainf {

namespace {

std::vector<Mask> args_of(std::uint64_t tuple, int arity) {
  std::vector<Mask> a(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) a[static_cast<std::size_t>(i)] = static_cast<Mask>((tuple >> (8 * i)) & 0xff);
  return a;
}

std::uint64_t pack_args(const std::vector<Mask>& a) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t |= static_cast<std::uint64_t>(a[i]) << (8 * i);
  return t;
}

// Iterate all basis tuples of given arity; f(tuple).
template <typename F>
void for_tuples(int arity, int n, F&& f) {
  Mask nb = static_cast<Mask>(1u << n);
  std::uint64_t count = 1;
  for (int i = 0; i < arity; ++i) count *= nb;
  for (std::uint64_t ti = 0; ti < count; ++ti) {
    std::uint64_t packed = 0;
    std::uint64_t x = ti;
    for (int i = 0; i < arity; ++i) {
      packed |= (x % nb) << (8 * i);
      x /= nb;
    }
    f(packed);
  }
}

}  // namespace

AH Cochain::eval(std::uint64_t tuple) const {
  AH out;
  for (auto it = c.lower_bound(CKey{tuple, 0, 0}); it != c.end() && it->first.tuple == tuple; ++it)
    out.add(it->first.out, it->first.hbar, it->second);
  return out;
}

int component_hom_parity(const Cochain& f, const CKey& k) {
  int in = 0;
  for (Mask m : args_of(k.tuple, f.arity)) in += mask_size(m);
  return (mask_size(k.out) + in) & 1;
}

int cochain_parity(const Cochain& f) {
  assert(!f.c.empty());
  int hom = component_hom_parity(f, f.c.begin()->first);
  for (const auto& [k, v] : f.c) assert(component_hom_parity(f, k) == hom);
  return (f.arity + hom + 1) & 1;
}

Cochain hochschild_d(const Cochain& f, int n) {
  Cochain r;
  r.arity = f.arity + 1;
  if (f.c.empty()) return r;
  int pf = cochain_parity(f);
  int j = r.arity;
  for_tuples(j, n, [&](std::uint64_t tuple) {
    auto a = args_of(tuple, j);
    auto par = [&](int m) { return mask_parity(a[static_cast<std::size_t>(j - m)]); };

    // sum_k phi(a_j,...,a_{k+1}a_k,...,a_1), sign |phi| + |a_1..a_k| + k.
    for (int k = 1; k <= j - 1; ++k) {
      Mask hi = a[static_cast<std::size_t>(j - k - 1)], lo = a[static_cast<std::size_t>(j - k)];
      int ws = wedge_sign(hi, lo);
      if (!ws) continue;
      std::vector<Mask> sub;
      for (int i = 0; i < j; ++i) {
        if (i == j - k) continue;
        sub.push_back(i == j - k - 1 ? static_cast<Mask>(hi | lo) : a[static_cast<std::size_t>(i)]);
      }
      int e = pf + k;
      for (int m = 1; m <= k; ++m) e += par(m);
      AH val = f.eval(pack_args(sub));
      for (const auto& [mk, c] : val.t)
        r.add(CKey{tuple, mk.first, mk.second}, c * (ws * ((e & 1) ? -1 : 1)));
    }

    // a_j phi(a_{j-1},...,a_1), sign |phi| + |a_1..a_{j-1}| + j.
    {
      std::vector<Mask> sub(a.begin() + 1, a.end());
      int e = pf + j;
      for (int m = 1; m <= j - 1; ++m) e += par(m);
      AH val = f.eval(pack_args(sub));
      for (const auto& [mk, c] : val.t) {
        int ws = wedge_sign(a[0], mk.first);
        if (ws)
          r.add(CKey{tuple, static_cast<Mask>(a[0] | mk.first), mk.second},
                c * (ws * ((e & 1) ? -1 : 1)));
      }
    }

    // phi(a_j,...,a_2) a_1, sign (|phi|-1)(|a_1|-1) + 1.
    {
      std::vector<Mask> sub(a.begin(), a.end() - 1);
      int e = (pf + 1) * (par(1) + 1) + 1;
      AH val = f.eval(pack_args(sub));
      for (const auto& [mk, c] : val.t) {
        int ws = wedge_sign(mk.first, a.back());
        if (ws)
          r.add(CKey{tuple, static_cast<Mask>(mk.first | a.back()), mk.second},
                c * (ws * ((e & 1) ? -1 : 1)));
      }
    }
  });
  return r;
}

Cochain gerstenhaber(const Cochain& f, const Cochain& g, int n) {
  Cochain r;
  int p = f.arity, q = g.arity;
  r.arity = p + q - 1;
  if (f.c.empty() || g.c.empty()) return r;
  int pf = cochain_parity(f), pg = cochain_parity(g);

  // One insertion direction; sign pout*(|a_1..a_k| + k) per slot, outer outside.
  auto insert_sum = [&](const Cochain& outer, const Cochain& inner, int inner_par,
                        const Rat& scale) {
    int po = outer.arity, pi = inner.arity;
    int j = po + pi - 1;
    for_tuples(j, n, [&](std::uint64_t tuple) {
      auto a = args_of(tuple, j);
      for (int k = 0; k <= po - 1; ++k) {
        // inner block a_{k+pi}..a_{k+1} sits at indices j-k-pi .. j-k-1.
        std::vector<Mask> blk(a.begin() + (j - k - pi), a.begin() + (j - k));
        AH iv = inner.eval(pack_args(blk));
        if (iv.is_zero()) continue;
        int e = 0;
        for (int m = 1; m <= k; ++m) e += mask_parity(a[static_cast<std::size_t>(j - m)]);
        e = inner_par * (e + k);
        Rat sgn = scale * ((e & 1) ? -1 : 1);
        for (const auto& [mk, ci] : iv.t) {
          std::vector<Mask> outer_args(a.begin(), a.begin() + (j - k - pi));
          outer_args.push_back(mk.first);
          outer_args.insert(outer_args.end(), a.begin() + (j - k), a.end());
          AH ov = outer.eval(pack_args(outer_args));
          for (const auto& [ok, co] : ov.t)
            r.add(CKey{tuple, ok.first, mk.second + ok.second}, ci * co * sgn);
        }
      }
    });
  };

  insert_sum(f, g, pg, Rat(1));
  insert_sum(g, f, pf, Rat(((pf * pg) & 1) ? 1 : -1));
  return r;
}

CochainSet mc_residual(const CochainSet& alpha, int D, int n) {
  CochainSet res;
  for (const auto& [d, comp] : alpha) {
    if (d + 1 <= D && !comp.is_zero()) {
      Cochain dd = hochschild_d(comp, n);
      if (!dd.is_zero()) res[d + 1].arity = d + 1, res[d + 1].add(dd);
    }
  }
  for (const auto& [p, fp] : alpha)
    for (const auto& [q, gq] : alpha) {
      int j = p + q - 1;
      if (j > D || fp.is_zero() || gq.is_zero()) continue;
      Cochain br = gerstenhaber(fp, gq, n);
      if (!br.is_zero()) res[j].arity = j, res[j].add(br, Rat(1, 2));
    }
  for (auto it = res.begin(); it != res.end();)
    it = it->second.is_zero() ? res.erase(it) : std::next(it);
  return res;
}

PolyVector hkr(const Cochain& f, int n) {
  PolyVector out;
  if (f.arity == 0) {
    AH v = f.eval(0);
    for (const auto& [mk, c] : v.t) out.add(PVKey{Mono{}, mk.first, mk.second}, c);
    return out;
  }
  // All ordered tuples of single generators.
  std::vector<int> idx(static_cast<std::size_t>(f.arity), 0);
  for (;;) {
    std::vector<Mask> a;
    Mono m;
    for (int k : idx) {
      a.push_back(static_cast<Mask>(1u << k));
      m = m * Mono::var(k);
    }
    AH v = f.eval(pack_args(a));
    for (const auto& [mk, c] : v.t) out.add(PVKey{m, mk.first, mk.second}, c);
    int pos = 0;
    while (pos < f.arity && ++idx[static_cast<std::size_t>(pos)] == n) idx[static_cast<std::size_t>(pos++)] = 0;
    if (pos == f.arity) break;
  }
  return out;
}

PolyVector hkr(const CochainSet& alpha, int n) {
  PolyVector out;
  for (const auto& [d, comp] : alpha) out.add(hkr(comp, n));
  return out;
}

namespace {

// q-th smallest set bit (1-based).
int nth_bit(Mask m, int q) {
  for (int k = 0; k < 8; ++k)
    if (m & (1u << k) && --q == 0) return k;
  return -1;
}

Mono deriv(Mono m, int k, int& coeff) {
  coeff = m.get(k);
  if (coeff == 0) return Mono{};
  Mono r = m;
  r.packed -= Mono::var(k).packed;
  return r;
}

}  // namespace

// Signs fixed so that [xi_1, v_1] = +1 (vector fields act by +derivation);
// graded antisymmetry and Jacobi are enforced by tests.
PolyVector schouten(const PolyVector& P, const PolyVector& Q, int n) {
  PolyVector r;
  for (const auto& [kp, cp] : P.t)
    for (const auto& [kq, cq] : Q.t) {
      int k = mask_size(kp.vec), l = mask_size(kq.vec);
      int h = kp.hbar + kq.hbar;
      for (int q = 1; q <= k; ++q) {
        int iq = nth_bit(kp.vec, q);
        int e;
        Mono dg = deriv(kq.sym, iq, e);
        if (!e) continue;
        Mask rest = static_cast<Mask>(kp.vec & ~(1u << iq));
        int ws = wedge_sign(rest, kq.vec);
        if (!ws) continue;
        int sgn = ((k - q) & 1) ? -1 : 1;
        r.add(PVKey{kp.sym * dg, static_cast<Mask>(rest | kq.vec), h},
              cp * cq * (e * sgn * ws));
      }
      for (int q = 1; q <= l; ++q) {
        int jq = nth_bit(kq.vec, q);
        int e;
        Mono df = deriv(kp.sym, jq, e);
        if (!e) continue;
        Mask rest = static_cast<Mask>(kq.vec & ~(1u << jq));
        int ws = wedge_sign(rest, kp.vec);
        if (!ws) continue;
        int sgn = ((l - q + 1 + (k - 1) * (l - 1)) & 1) ? -1 : 1;
        r.add(PVKey{kq.sym * df, static_cast<Mask>(rest | kp.vec), h},
              cp * cq * (e * sgn * ws));
      }
    }
  return r;
}

PolyVector koszul_dW(const PolyVector& P, const Poly& W, int n) {
  PolyVector r;
  for (const auto& [kp, cp] : P.t)
    for (int k = 0; k < n; ++k) {
      if (!(kp.vec & (1u << k))) continue;
      int sgn = (mask_pos(kp.vec, k) % 2) ? 1 : -1;
      for (const auto& [mw, cw] : W.t) {
        int e;
        Mono dm = deriv(mw, k, e);
        if (!e) continue;
        r.add(PVKey{kp.sym * dm, static_cast<Mask>(kp.vec & ~(1u << k)), kp.hbar},
              cp * cw * (e * sgn));
      }
    }
  return r;
}

namespace {
template <typename F>
void for_degree_monos(int deg, int n, F&& f) {
  // n <= 3 suffices here; general small-n recursion.
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = left;
      Mono m;
      for (int k = 0; k < n; ++k) m = m * Mono::var(k, e[static_cast<std::size_t>(k)]);
      f(m);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(var)] = x;
      self(self, var + 1, left - x);
    }
  };
  rec(rec, 0, deg);
}
}  // namespace

int invariant_dim(int i, int j, int n) {
  int count = 0;
  for_degree_monos(i, n, [&](Mono m) {
    for (Mask v = 0; v < (1u << n); ++v) {
      if (mask_size(v) != j) continue;
      if (weight_diagonal(weight_add(monomial_weight(m), mask_weight(v)), n)) ++count;
    }
  });
  return count;
}

int hom_invariant_dim(int arity, int j, int n) {
  int count = 0;
  for_tuples(arity, n, [&](std::uint64_t tuple) {
    auto a = args_of(tuple, arity);
    int in = 0;
    Weight w{};
    for (Mask m : a) {
      in += mask_size(m);
      Weight neg{};
      for (int q = 0; q < 8; ++q) neg[q] = (5 - mask_weight(m)[q]) % 5;
      w = weight_add(w, neg);
    }
    for (Mask out = 0; out < (1u << n); ++out) {
      if (mask_size(out) - in != j) continue;
      if (weight_diagonal(weight_add(w, mask_weight(out)), n)) ++count;
    }
  });
  return count;
}

DegreePredicates degree_predicates(int d, int i, int j, int k) {
  DegreePredicates r;
  r.in_g = (2 * i + j - 4 * k == 3 * d + 3);
  r.in_h = (3 * i + j - 4 * k == 3 * d + 3);
  r.mod4 = (((2 * i + j + d + 1) % 4) + 4) % 4 == 0;
  return r;
}

}  // namespace ainf
