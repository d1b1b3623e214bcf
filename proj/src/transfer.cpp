#include "ainfty/transfer.hpp"

#include <string>
#include <unordered_map>

namespace ainf {

namespace {

void split_parity(const BTensor& b, BTensor& even, BTensor& odd) {
  for (const auto& [k, c] : b.t) (bkey_parity(k) ? odd : even).t.emplace(k, c);
}

// b -> (-1)^{|b|} (deformed - undeformed)(b), termwise parity.
BTensor signed_delta(const OneForm& g, const BTensor& b, int n) {
  BTensor even, odd;
  split_parity(b, even, odd);
  BTensor r = deformation_tensor(g, even, n);
  r.add(deformation_tensor(g, odd, n), Rat(-1));
  return r;
}

// b -> (-1)^{|b|-1} h(b), termwise parity.
BTensor signed_h(const BTensor& b, int n) {
  BTensor even, odd;
  split_parity(b, even, odd);
  BTensor r = homotopy_h(odd, n);
  r.add(homotopy_h(even, n), Rat(-1));
  return r;
}

// (b2, b1) -> (-1)^{|b1|} b2 b1, termwise parity in b1.
BTensor signed_mult(const BTensor& b2, const BTensor& b1) {
  BTensor even, odd;
  split_parity(b1, even, odd);
  BTensor r = mult_tensor(b2, even);
  r.add(mult_tensor(b2, odd), Rat(-1));
  return r;
}

// A term of Sym-degree s at a k-leaf subtree cannot reach Sym-degree 0 at the
// root unless s <= d - k (h lowers by one per edge, the deformation raises by
// at least two per bivalent vertex).
void prune_sym(BTensor& b, int limit) {
  for (auto it = b.t.begin(); it != b.t.end();) {
    if (it->first.sym.degree() > limit)
      it = b.t.erase(it);
    else
      ++it;
  }
}

}  // namespace

std::vector<RibbonTree> enumerate_trees(int d, int b_max) {
  // capped[d][b]: subtrees as seen through their root edge (bare leaf included
  // for (1,0)); rooted[d][b]: trees whose root edge ends in a vertex.
  std::map<std::pair<int, int>, std::vector<RibbonTree>> capped, rooted;
  for (int len = 1; len <= d; ++len) {
    for (int b = 0; b <= b_max; ++b) {
      std::vector<RibbonTree> vr;
      for (int l = 1; l < len; ++l)
        for (int b2 = 0; b2 <= b; ++b2)
          for (const auto& left : capped[{l, b2}])
            for (const auto& right : capped[{len - l, b - b2}])
              vr.push_back(RibbonTree::tri(left, right));
      if (b >= 1)
        for (const auto& c : capped[{len, b - 1}]) vr.push_back(RibbonTree::bi(c));
      std::vector<RibbonTree> vc = vr;
      if (len == 1 && b == 0) vc.push_back(RibbonTree::leaf());
      rooted[{len, b}] = std::move(vr);
      capped[{len, b}] = std::move(vc);
    }
  }
  std::vector<RibbonTree> out;
  for (int b = 0; b <= b_max; ++b)
    for (auto& t : rooted[{d, b}]) out.push_back(std::move(t));
  return out;
}

std::uint64_t count_trees_recursive(int d, int b_max) {
  std::map<std::pair<int, int>, std::uint64_t> capped, rooted;
  for (int len = 1; len <= d; ++len)
    for (int b = 0; b <= b_max; ++b) {
      std::uint64_t v = 0;
      for (int l = 1; l < len; ++l)
        for (int b2 = 0; b2 <= b; ++b2) v += capped[{l, b2}] * capped[{len - l, b - b2}];
      if (b >= 1) v += capped[{len, b - 1}];
      rooted[{len, b}] = v;
      capped[{len, b}] = v + ((len == 1 && b == 0) ? 1 : 0);
    }
  std::uint64_t total = 0;
  for (int b = 0; b <= b_max; ++b) total += rooted[{d, b}];
  return total;
}

std::uint64_t count_trees_closed_form(int d, int b_max) {
  // Catalan(d-1) binary shapes; b identical bivalent vertices distributed over
  // the 2d-1 edges with repetition. For d = 1 there is one chain per b >= 1.
  if (d == 1) return static_cast<std::uint64_t>(b_max);
  auto binom = [](std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::uint64_t cat = binom(2 * static_cast<std::uint64_t>(d - 1), static_cast<std::uint64_t>(d - 1)) /
                      static_cast<std::uint64_t>(d);
  std::uint64_t total = 0;
  for (int b = 0; b <= b_max; ++b)
    total += cat * binom(static_cast<std::uint64_t>(b + 2 * d - 2), static_cast<std::uint64_t>(b));
  return total;
}

namespace {

BTensor eval_vertex(const RibbonTree& t, const std::vector<AElem>& inputs, std::size_t off,
                    const OneForm& gamma, int n);

BTensor eval_capped(const RibbonTree& t, const std::vector<AElem>& inputs, std::size_t off,
                    const OneForm& gamma, int n) {
  if (t.kind == RibbonTree::Leaf) return include_i(inputs[off], n);
  return signed_h(eval_vertex(t, inputs, off, gamma, n), n);
}

BTensor eval_vertex(const RibbonTree& t, const std::vector<AElem>& inputs, std::size_t off,
                    const OneForm& gamma, int n) {
  if (t.kind == RibbonTree::Bivalent)
    return signed_delta(gamma, eval_capped(t.ch[0], inputs, off, gamma, n), n);
  // Trivalent: left child takes the first block of inputs.
  const auto& l = t.ch[0];
  const auto& r = t.ch[1];
  BTensor lv = eval_capped(l, inputs, off, gamma, n);
  BTensor rv = eval_capped(r, inputs, off + static_cast<std::size_t>(l.leaves), gamma, n);
  return signed_mult(lv, rv);
}

}  // namespace

AH evaluate_tree(const RibbonTree& t, const std::vector<AElem>& inputs, const OneForm& gamma,
                 int n) {
  return project_p(eval_vertex(t, inputs, 0, gamma, n));
}

TransferResult transfer(const OneForm& gamma, int d_max, int n, std::optional<int> b_max) {
  TransferResult res;
  res.n = n;
  res.d_max = d_max;
  Mask nb = static_cast<Mask>(1u << n);

  for (int d = 1; d <= d_max; ++d) {
    int blim = b_max ? *b_max : (d == 1 ? 4 : std::max(0, d - 2));

    // capped[len][b][tuple] = sum over h-capped subtrees (plus bare i at
    // (1,0)) of the composite value, pruned by reachable Sym-degree.
    std::vector<std::vector<std::unordered_map<std::uint64_t, BTensor>>> capped(
        static_cast<std::size_t>(d), std::vector<std::unordered_map<std::uint64_t, BTensor>>(
                                         static_cast<std::size_t>(blim) + 1));

    for (int len = 1; len < d; ++len) {
      std::uint64_t count = 1;
      for (int i = 0; i < len; ++i) count *= nb;
      for (std::uint64_t ti = 0; ti < count; ++ti) {
        // Decode tuple index to packed masks.
        std::uint64_t packed = 0;
        {
          std::uint64_t x = ti;
          for (int i = 0; i < len; ++i) {
            packed |= (x % nb) << (8 * i);
            x /= nb;
          }
        }
        for (int b = 0; b <= blim; ++b) {
          BTensor v;
          for (int l = 1; l < len; ++l) {
            std::uint64_t lp = packed & ((std::uint64_t(1) << (8 * l)) - 1);
            std::uint64_t rp = packed >> (8 * l);
            for (int b2 = 0; b2 <= b; ++b2) {
              auto itl = capped[static_cast<std::size_t>(l)][static_cast<std::size_t>(b2)].find(lp);
              if (itl == capped[static_cast<std::size_t>(l)][static_cast<std::size_t>(b2)].end())
                continue;
              auto itr = capped[static_cast<std::size_t>(len - l)][static_cast<std::size_t>(b - b2)].find(rp);
              if (itr == capped[static_cast<std::size_t>(len - l)][static_cast<std::size_t>(b - b2)].end())
                continue;
              v.add(signed_mult(itl->second, itr->second));
            }
          }
          if (b >= 1) {
            auto& prev = capped[static_cast<std::size_t>(len)][static_cast<std::size_t>(b - 1)];
            auto it = prev.find(packed);
            if (it != prev.end()) v.add(signed_delta(gamma, it->second, n));
          }
          BTensor c = signed_h(v, n);
          if (len == 1 && b == 0) c.add(include_i(AElem::basis(static_cast<Mask>(packed)), n));
          prune_sym(c, d - len);
          if (!c.is_zero())
            capped[static_cast<std::size_t>(len)][static_cast<std::size_t>(b)].emplace(packed, std::move(c));
        }
      }
    }

    // Top level: only product-rooted trees survive p (a bottom bivalent vertex
    // raises Sym-degree by >= 2 before the projection). For d = 1 the chains
    // all project to zero for Sym-positive deformations; compute honestly via
    // the capped values of length 1.
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= nb;
    for (std::uint64_t ti = 0; ti < count; ++ti) {
      std::uint64_t packed = 0;
      {
        std::uint64_t x = ti;
        for (int i = 0; i < d; ++i) {
          packed |= (x % nb) << (8 * i);
          x /= nb;
        }
      }
      AH out;
      if (d == 1) {
        // mu^1 = sum_b p(delta_s(capped(1, b-1))).
        BTensor base = include_i(AElem::basis(static_cast<Mask>(packed)), n);
        BTensor cur = base;
        for (int b = 1; b <= blim; ++b) {
          BTensor v = signed_delta(gamma, cur, n);
          out.add(project_p(v));
          cur = signed_h(v, n);
          if (cur.is_zero()) break;
        }
      } else {
        for (int b = 0; b <= blim; ++b) {
          BTensor v;
          for (int l = 1; l < d; ++l) {
            std::uint64_t lp = packed & ((std::uint64_t(1) << (8 * l)) - 1);
            std::uint64_t rp = packed >> (8 * l);
            for (int b2 = 0; b2 <= b; ++b2) {
              auto& cl = capped[static_cast<std::size_t>(l)][static_cast<std::size_t>(b2)];
              auto itl = cl.find(lp);
              if (itl == cl.end()) continue;
              auto& cr = capped[static_cast<std::size_t>(d - l)][static_cast<std::size_t>(b - b2)];
              auto itr = cr.find(rp);
              if (itr == cr.end()) continue;
              v.add(signed_mult(itl->second, itr->second));
            }
          }
          out.add(project_p(v));
        }
      }
      for (const auto& [mk, c] : out.t)
        res.mu[{d, mk.second}].c[{packed, mk.first}] = c;
    }
  }
  // Drop empty tables.
  for (auto it = res.mu.begin(); it != res.mu.end();)
    it = it->second.empty() ? res.mu.erase(it) : std::next(it);
  return res;
}

namespace {

std::string shape_code(const RibbonTree& t) {
  switch (t.kind) {
    case RibbonTree::Leaf:
      return "L";
    case RibbonTree::Bivalent:
      return "B(" + shape_code(t.ch[0]) + ")";
    default:
      return "T(" + shape_code(t.ch[0]) + "," + shape_code(t.ch[1]) + ")";
  }
}

struct TreeMemo {
  std::map<std::pair<std::string, std::uint64_t>, BTensor> m;
};

BTensor eval_vertex_memo(const RibbonTree& t, std::uint64_t packed, const OneForm& gamma, int n,
                         TreeMemo& memo);

BTensor eval_capped_memo(const RibbonTree& t, std::uint64_t packed, const OneForm& gamma, int n,
                         TreeMemo& memo) {
  if (t.kind == RibbonTree::Leaf)
    return include_i(AElem::basis(static_cast<Mask>(packed)), n);
  return signed_h(eval_vertex_memo(t, packed, gamma, n, memo), n);
}

BTensor eval_vertex_memo(const RibbonTree& t, std::uint64_t packed, const OneForm& gamma, int n,
                         TreeMemo& memo) {
  auto key = std::make_pair(shape_code(t), packed);
  auto it = memo.m.find(key);
  if (it != memo.m.end()) return it->second;
  BTensor v;
  if (t.kind == RibbonTree::Bivalent) {
    v = signed_delta(gamma, eval_capped_memo(t.ch[0], packed, gamma, n, memo), n);
  } else {
    int l = t.ch[0].leaves;
    std::uint64_t lp = packed & ((std::uint64_t(1) << (8 * l)) - 1);
    std::uint64_t rp = packed >> (8 * l);
    v = signed_mult(eval_capped_memo(t.ch[0], lp, gamma, n, memo),
                    eval_capped_memo(t.ch[1], rp, gamma, n, memo));
  }
  memo.m.emplace(std::move(key), v);
  return v;
}

}  // namespace

TransferResult transfer_trees(const OneForm& gamma, int d_max, int n, std::optional<int> b_max) {
  TransferResult res;
  res.n = n;
  res.d_max = d_max;
  Mask nb = static_cast<Mask>(1u << n);
  TreeMemo memo;
  for (int d = 1; d <= d_max; ++d) {
    int blim = b_max ? *b_max : (d == 1 ? 4 : std::max(0, d - 2));
    auto trees = enumerate_trees(d, blim);
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= nb;
    for (std::uint64_t ti = 0; ti < count; ++ti) {
      std::uint64_t packed = 0;
      std::uint64_t x = ti;
      for (int i = 0; i < d; ++i) {
        packed |= (x % nb) << (8 * i);
        x /= nb;
      }
      AH out;
      for (const auto& t : trees)
        out.add(project_p(eval_vertex_memo(t, packed, gamma, n, memo)));
      for (const auto& [mk, c] : out.t) res.mu[{d, mk.second}].c[{packed, mk.first}] = c;
    }
  }
  for (auto it = res.mu.begin(); it != res.mu.end();)
    it = it->second.empty() ? res.mu.erase(it) : std::next(it);
  return res;
}

MuTable mu1_series(const OneForm& gamma, int n, int chain_cap) {
  MuTable out;
  for (Mask m = 0; m < (1u << n); ++m) {
    int sign = mask_parity(m) ? -1 : 1;
    BTensor cur = include_i(AElem::basis(m), n);
    AH acc;
    for (int step = 0; step < chain_cap; ++step) {
      BTensor t = deformation_tensor(gamma, cur, n);
      acc.add(project_p(t), Rat(sign));
      cur = homotopy_h(t, n);
      if (cur.is_zero()) break;
    }
    for (const auto& [mk, c] : acc.t) out.c[{pack_tuple({m}), mk.first}] = c;
  }
  return out;
}

}  // namespace ainf
