#include "ainfty/structures.hpp"

namespace ainf {

namespace {

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

std::string tuple_str(std::uint64_t tuple, int d) {
  std::string s = "(";
  for (int i = 0; i < d; ++i) {
    if (i) s += ",";
    s += std::to_string((tuple >> (8 * i)) & 0xff);
  }
  return s + ")";
}

// Per-arity cochains with the full mu (wedge included at arity 2).
CochainSet full_mu(const AInftyStructure& mu) {
  CochainSet out;
  for (const auto& [dk, tab] : mu.mu) {
    auto& co = out[dk.first];
    co.arity = dk.first;
    for (const auto& [key, c] : tab.c) co.add(CKey{key.first, key.second, dk.second}, c);
  }
  return out;
}

}  // namespace

AInftyStructure wedge_structure(int n) {
  AInftyStructure s;
  s.n = n;
  s.d_max = 2;
  MuTable& m = s.mu[{2, 0}];
  for (Mask a2 = 0; a2 < (1u << n); ++a2)
    for (Mask a1 = 0; a1 < (1u << n); ++a1) {
      int ws = wedge_sign(a2, a1);
      if (!ws) continue;
      int sgn = mask_parity(a1) ? -ws : ws;
      m.c[{pack_tuple({a2, a1}), static_cast<Mask>(a2 | a1)}] = Rat(sgn);
    }
  return s;
}

CochainSet to_mc(const AInftyStructure& mu) {
  CochainSet alpha = full_mu(mu);
  AInftyStructure wedge = wedge_structure(mu.n);
  auto it = alpha.find(2);
  if (it == alpha.end()) {
    alpha[2].arity = 2;
    it = alpha.find(2);
  }
  for (const auto& [key, c] : wedge.mu[{2, 0}].c) it->second.add(CKey{key.first, key.second, 0}, -c);
  if (it->second.is_zero()) alpha.erase(it);
  return alpha;
}

AInftyStructure from_mc(const CochainSet& alpha, int n, int d_max) {
  AInftyStructure s;
  s.n = n;
  s.d_max = d_max;
  for (const auto& [d, co] : alpha)
    for (const auto& [k, c] : co.c) s.mu[{d, k.hbar}].c[{k.tuple, k.out}] = c;
  AInftyStructure wedge = wedge_structure(n);
  auto& m2 = s.mu[{2, 0}];
  for (const auto& [key, c] : wedge.mu[{2, 0}].c) {
    auto it = m2.c.find(key);
    if (it == m2.c.end()) {
      m2.c[key] = c;
    } else {
      it->second += c;
      if (ainf::is_zero(it->second)) m2.c.erase(it);
    }
  }
  for (auto it = s.mu.begin(); it != s.mu.end();)
    it = it->second.empty() ? s.mu.erase(it) : std::next(it);
  return s;
}

VerifyReport verify_ainfty(const AInftyStructure& mu, int D) {
  VerifyReport rep;
  CochainSet res = mc_residual(to_mc(mu), D, mu.n);
  if (!res.empty()) {
    rep.ok = false;
    const auto& [d, co] = *res.begin();
    rep.first_failure = "arity " + std::to_string(d) + " tuple " +
                        tuple_str(co.c.begin()->first.tuple, d);
  }
  return rep;
}

VerifyReport verify_ainfty_direct(const AInftyStructure& mu, int D) {
  VerifyReport rep;
  CochainSet tabs = full_mu(mu);
  for (int j = 1; j <= D && rep.ok; ++j) {
    for_tuples(j, mu.n, [&](std::uint64_t tuple) {
      if (!rep.ok) return;
      AH acc;
      for (int l = 1; l <= j; ++l) {
        auto inner_it = tabs.find(l);
        auto outer_it = tabs.find(j - l + 1);
        if (inner_it == tabs.end() || outer_it == tabs.end()) continue;
        for (int k = 0; k + l <= j; ++k) {
          // inner block a_{k+l}..a_{k+1} = indices j-k-l .. j-k-1.
          std::uint64_t blk = (tuple >> (8 * (j - k - l))) & ((std::uint64_t(1) << (8 * l)) - 1);
          AH iv = inner_it->second.eval(blk);
          if (iv.is_zero()) continue;
          int e = k;
          for (int m = 1; m <= k; ++m)
            e += mask_parity(static_cast<Mask>((tuple >> (8 * (j - m))) & 0xff));
          Rat sgn((e & 1) ? -1 : 1);
          std::uint64_t left = tuple & ((std::uint64_t(1) << (8 * (j - k - l))) - 1);
          std::uint64_t right = (j - k) < j ? (tuple >> (8 * (j - k))) : 0;
          for (const auto& [mk, ci] : iv.t) {
            std::uint64_t outer = left | (static_cast<std::uint64_t>(mk.first) << (8 * (j - k - l))) |
                                  (right << (8 * (j - k - l + 1)));
            AH ov = outer_it->second.eval(outer);
            for (const auto& [ok, co] : ov.t)
              acc.add(ok.first, ok.second + mk.second, ci * co * sgn);
          }
        }
      }
      if (!acc.is_zero()) {
        rep.ok = false;
        rep.first_failure = "arity " + std::to_string(j) + " tuple " + tuple_str(tuple, j);
      }
    });
  }
  return rep;
}

VerifyReport check_weights(const AInftyStructure& mu) {
  VerifyReport rep;
  for (const auto& [dk, tab] : mu.mu)
    for (const auto& [key, c] : tab.c) {
      Weight w = mask_weight(key.second);
      for (Mask m : unpack_tuple(key.first, dk.first)) {
        Weight neg{};
        for (int q = 0; q < 8; ++q) neg[q] = (5 - mask_weight(m)[q]) % 5;
        w = weight_add(w, neg);
      }
      if (!weight_diagonal(w, mu.n)) {
        rep.ok = false;
        rep.first_failure = "mu^" + std::to_string(dk.first) + "_" + std::to_string(dk.second) +
                            " tuple " + tuple_str(key.first, dk.first);
        return rep;
      }
    }
  return rep;
}

VerifyReport check_index_degrees(const AInftyStructure& mu) {
  VerifyReport rep;
  for (const auto& [dk, tab] : mu.mu)
    for (const auto& [key, c] : tab.c) {
      int in = 0;
      for (Mask m : unpack_tuple(key.first, dk.first)) in += mask_size(m);
      if (mask_size(key.second) - in != 6 - 3 * dk.first + 4 * dk.second) {
        rep.ok = false;
        rep.first_failure = "mu^" + std::to_string(dk.first) + "_" + std::to_string(dk.second) +
                            " tuple " + tuple_str(key.first, dk.first);
        return rep;
      }
    }
  return rep;
}

namespace {
Cyc5 scale_cyc(const Cyc5& a, const Rat& r) {
  Cyc5 x = a;
  for (auto& v : x.c) v = v * r;
  return x;
}
void acc_cyc(std::map<Mask, Cyc5>& m, Mask key, const Cyc5& v) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (!v.is_zero()) m[key] = v;
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) m.erase(it);
  }
}
}  // namespace

std::map<Mask, Cyc5> SemidirectStructure::eval(int d, int k,
                                               const std::vector<std::pair<Mask, int>>& in,
                                               int& z_out) const {
  std::map<Mask, Cyc5> out;
  const MuTable* tab = base.table(d, k);
  int zsum = 0, phase = 0;
  std::vector<Mask> masks;
  for (const auto& [m, z] : in) {
    // prefix product of earlier (lefter) z's acts on this entry
    phase = (phase + zsum * grp.charge(m)) % 5;
    zsum = (zsum + z) % 5;
    masks.push_back(m);
  }
  z_out = zsum;
  if (!tab) return out;
  std::uint64_t tuple = pack_tuple(masks);
  auto it = tab->c.lower_bound({tuple, 0});
  for (; it != tab->c.end() && it->first.first == tuple; ++it)
    acc_cyc(out, it->first.second, scale_cyc(Cyc5::zeta_pow(phase), it->second));
  return out;
}

SemidirectStructure semidirect(const AInftyStructure& mu, const GroupSpec& grp) {
  return SemidirectStructure{mu, grp};
}

VerifyReport check_semidirect_assoc(const SemidirectStructure& s) {
  VerifyReport rep;
  int n = s.base.n;
  for (Mask c = 0; c < (1u << n) && rep.ok; ++c)
    for (int zc = 0; zc < 5 && rep.ok; ++zc)
      for (Mask b = 0; b < (1u << n); ++b)
        for (int zb = 0; zb < 5; ++zb)
          for (Mask a = 0; a < (1u << n); ++a)
            for (int za = 0; za < 5; ++za) {
              // mu(c, mu(b,a)) + (-1)^{|a|+1} mu(mu(c,b), a) = 0.
              std::map<Mask, Cyc5> acc;
              int zi, zo;
              for (const auto& [mi, ci] : s.eval(2, 0, {{b, zb}, {a, za}}, zi))
                for (const auto& [mo, co] : s.eval(2, 0, {{c, zc}, {mi, zi}}, zo))
                  acc_cyc(acc, mo, cyc5_mul(ci, co));
              Rat sgn(mask_parity(a) ? 1 : -1);
              for (const auto& [mi, ci] : s.eval(2, 0, {{c, zc}, {b, zb}}, zi))
                for (const auto& [mo, co] : s.eval(2, 0, {{mi, zi}, {a, za}}, zo))
                  acc_cyc(acc, mo, scale_cyc(cyc5_mul(ci, co), sgn));
              if (!acc.empty()) {
                rep.ok = false;
                rep.first_failure = "triple masks (" + std::to_string(c) + "," +
                                    std::to_string(b) + "," + std::to_string(a) + ")";
                return rep;
              }
            }
  return rep;
}

VerifyReport verify_semidirect(const SemidirectStructure& s, int D) {
  VerifyReport rep;
  int n = s.base.n;
  // Collect present (arity, hbar) pairs.
  std::map<int, std::vector<int>> ks;
  for (const auto& [dk, tab] : s.base.mu) ks[dk.first].push_back(dk.second);

  int nb = 1 << n;
  for (int j = 1; j <= D && rep.ok; ++j) {
    std::vector<std::pair<Mask, int>> in(static_cast<std::size_t>(j));
    std::uint64_t total = 1;
    for (int i = 0; i < j; ++i) total *= static_cast<std::uint64_t>(nb * 5);
    for (std::uint64_t ti = 0; ti < total && rep.ok; ++ti) {
      std::uint64_t x = ti;
      for (int i = 0; i < j; ++i) {
        in[static_cast<std::size_t>(i)] = {static_cast<Mask>(x % nb), static_cast<int>((x / nb) % 5)};
        x /= static_cast<std::uint64_t>(nb * 5);
      }
      std::map<std::pair<Mask, int>, Cyc5> acc;
      for (const auto& [l, lks] : ks) {
        if (l > j) continue;
        auto oit = ks.find(j - l + 1);
        if (oit == ks.end()) continue;
        for (int k = 0; k + l <= j; ++k) {
          int e = k;
          for (int m = 1; m <= k; ++m) e += mask_parity(in[static_cast<std::size_t>(j - m)].first);
          Rat sgn((e & 1) ? -1 : 1);
          std::vector<std::pair<Mask, int>> blk(in.begin() + (j - k - l), in.begin() + (j - k));
          for (int ki : lks) {
            int zi;
            auto iv = s.eval(l, ki, blk, zi);
            if (iv.empty()) continue;
            for (const auto& [mi, ci] : iv) {
              std::vector<std::pair<Mask, int>> outer(in.begin(), in.begin() + (j - k - l));
              outer.push_back({mi, zi});
              outer.insert(outer.end(), in.begin() + (j - k), in.end());
              for (int ko : oit->second) {
                int zo;
                for (const auto& [mo, co] : s.eval(j - l + 1, ko, outer, zo)) {
                  auto key = std::make_pair(mo, ki + ko);
                  auto ait = acc.find(key);
                  Cyc5 add = scale_cyc(cyc5_mul(ci, co), sgn);
                  if (ait == acc.end()) {
                    if (!add.is_zero()) acc[key] = add;
                  } else {
                    ait->second = ait->second + add;
                    if (ait->second.is_zero()) acc.erase(ait);
                  }
                }
              }
            }
          }
        }
      }
      if (!acc.empty()) {
        rep.ok = false;
        rep.first_failure = "arity " + std::to_string(j);
      }
    }
  }
  return rep;
}

}  // namespace ainf
