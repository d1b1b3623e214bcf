#pragma once

// Homological perturbation transfer: planar 2-3 ribbon trees, per-tree
// evaluation, and the memoized recursion computing the full mu^d_k tables.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ainfty/contraction.hpp"
#include "ainfty/exterior.hpp"

namespace ainf {

struct RibbonTree {
  enum Kind { Leaf, Bivalent, Trivalent } kind = Leaf;
  std::vector<RibbonTree> ch;  // 1 child for Bivalent, 2 (left, right) for Trivalent
  int leaves = 1;
  int bivalents = 0;

  static RibbonTree leaf() { return RibbonTree{}; }
  static RibbonTree bi(RibbonTree c) {
    RibbonTree t;
    t.kind = Bivalent;
    t.leaves = c.leaves;
    t.bivalents = c.bivalents + 1;
    t.ch.push_back(std::move(c));
    return t;
  }
  static RibbonTree tri(RibbonTree l, RibbonTree r) {
    RibbonTree t;
    t.kind = Trivalent;
    t.leaves = l.leaves + r.leaves;
    t.bivalents = l.bivalents + r.bivalents;
    t.ch.push_back(std::move(l));
    t.ch.push_back(std::move(r));
    return t;
  }
};

// All planar rooted 2-3 trees with d leaves, at most b_max bivalent vertices,
// and a vertex at the root (for d = 1 these are the chains of the mu^1 series).
std::vector<RibbonTree> enumerate_trees(int d, int b_max);

// Independent counters for the oracle test.
std::uint64_t count_trees_recursive(int d, int b_max);
std::uint64_t count_trees_closed_form(int d, int b_max);

// Evaluate one tree on inputs (a_d, ..., a_1) (inputs[0] = a_d, leftmost leaf).
AH evaluate_tree(const RibbonTree& t, const std::vector<AElem>& inputs,
                 const OneForm& gamma, int n);

// Structure-constant tables. Input tuples (a_d,...,a_1) are packed as basis
// masks, 8 bits per input, inputs[i] at bits 8i.
inline std::uint64_t pack_tuple(const std::vector<Mask>& masks) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < masks.size(); ++i)
    k |= static_cast<std::uint64_t>(masks[i]) << (8 * i);
  return k;
}
inline std::vector<Mask> unpack_tuple(std::uint64_t k, int d) {
  std::vector<Mask> m(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] = static_cast<Mask>((k >> (8 * i)) & 0xff);
  return m;
}

struct MuTable {
  std::map<std::pair<std::uint64_t, Mask>, Rat> c;

  bool empty() const { return c.empty(); }
  friend bool operator==(const MuTable&, const MuTable&) = default;
};

struct TransferResult {
  int n = 3;
  int d_max = 0;
  std::map<std::pair<int, int>, MuTable> mu;  // (d, hbar power k) -> table

  const MuTable* table(int d, int k) const {
    auto it = mu.find({d, k});
    return it == mu.end() ? nullptr : &it->second;
  }
};

// Memoized recursion over h-capped subtrees, grouped by (leaf count, bivalent
// count); equivalent to summing evaluate_tree over enumerate_trees (tested).
// b_max overrides the per-arity bivalent bound d - 2 when provided.
TransferResult transfer(const OneForm& gamma, int d_max, int n,
                        std::optional<int> b_max = std::nullopt);

// Direct tree-sum evaluation (enumerate + evaluate with a per-shape memo);
// the primary formulation for small arities, used as the cross-check engine.
TransferResult transfer_trees(const OneForm& gamma, int d_max, int n,
                              std::optional<int> b_max = std::nullopt);

// Direct evaluation of the alternating chain series for mu^1.
MuTable mu1_series(const OneForm& gamma, int n, int chain_cap = 8);

}  // namespace ainf
