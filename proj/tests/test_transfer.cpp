#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ainfty/contraction.hpp"
#include "ainfty/transfer.hpp"

#include "perturbation_oracle.hpp"

using namespace ainf;

namespace {

OneForm gamma_norm() {
  return sign_normalize_gamma(gamma_cubic_quintic(3), superpotential_tagged()).gamma;
}

}  // namespace

TEST_CASE("tree counts") {
  CHECK(enumerate_trees(2, 0).size() == 1);
  CHECK(enumerate_trees(3, 0).size() == 2);
  for (int d = 1; d <= 6; ++d)
    for (int b = 0; b <= 4; ++b) {
      auto rec = count_trees_recursive(d, b);
      CHECK(rec == count_trees_closed_form(d, b));
      if (d <= 5) CHECK(rec == enumerate_trees(d, b).size());
    }
}

TEST_CASE("single trivalent tree gives mu2") {
  OneForm g = gamma_norm();
  auto trees = enumerate_trees(2, 0);
  REQUIRE(trees.size() == 1);
  AH out = evaluate_tree(trees[0], {AElem::basis(0b001), AElem::basis(0b010)}, g, 3);
  AH want;
  want.add(0b011, 0, Rat(-1));
  CHECK(out == want);
}

TEST_CASE("binary trees with three leaves vanish without deformation vertices") {
  OneForm g = gamma_norm();
  for (const auto& t : enumerate_trees(3, 0))
    for (Mask a = 0; a < 8; ++a)
      for (Mask b = 0; b < 8; ++b)
        for (Mask c = 0; c < 8; ++c)
          CHECK(evaluate_tree(t, {AElem::basis(a), AElem::basis(b), AElem::basis(c)}, g, 3)
                    .is_zero());
}

TEST_CASE("evaluate_tree is multilinear") {
  OneForm g = gamma_norm();
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> cd(-2, 2), md(0, 7);
  auto trees = enumerate_trees(3, 1);
  for (int it = 0; it < 10; ++it) {
    AElem a0, a1, a2;
    AH direct_sum;
    const auto& t = trees[static_cast<std::size_t>(it) % trees.size()];
    Mask m1 = static_cast<Mask>(md(rng)), m2 = static_cast<Mask>(md(rng));
    std::vector<std::pair<Mask, Rat>> terms;
    for (int j = 0; j < 3; ++j) terms.push_back({static_cast<Mask>(md(rng)), rat(cd(rng))});
    AElem combo;
    for (const auto& [m, c] : terms) combo.add(m, c);
    AH lhs = evaluate_tree(t, {combo, AElem::basis(m1), AElem::basis(m2)}, g, 3);
    AH rhs;
    for (const auto& [m, c] : terms)
      rhs.add(evaluate_tree(t, {AElem::basis(m), AElem::basis(m1), AElem::basis(m2)}, g, 3), c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("transferred products through arity four") {
  OneForm g = gamma_norm();
  TransferResult res = transfer(g, 4, 3);

  // mu^1 vanishes identically.
  for (const auto& [dk, tab] : res.mu) CHECK(dk.first >= 2);

  // mu^2_0 is the standard signed wedge; no higher hbar parts at arity 2.
  CHECK(res.table(2, 1) == nullptr);
  const MuTable* m2 = res.table(2, 0);
  REQUIRE(m2 != nullptr);
  MuTable want2;
  for (Mask a2 = 0; a2 < 8; ++a2)
    for (Mask a1 = 0; a1 < 8; ++a1) {
      AElem w = mu2_standard(AElem::basis(a2), AElem::basis(a1));
      for (const auto& [m, c] : w.t) want2.c[{pack_tuple({a2, a1}), m}] = c;
    }
  CHECK(*m2 == want2);

  // Nonzero pieces at arity 3 and 4; no hbar part at arity 4.
  CHECK(res.table(3, 0) != nullptr);
  CHECK(res.table(3, 1) == nullptr);
  CHECK(res.table(4, 0) != nullptr);
  CHECK(res.table(4, 1) == nullptr);

  // Degree law (xi-count) and weight balance on every constant.
  for (const auto& [dk, tab] : res.mu) {
    auto [d, k] = dk;
    for (const auto& [key, c] : tab.c) {
      auto masks = unpack_tuple(key.first, d);
      int in = 0;
      Weight w = mask_weight(key.second);
      for (Mask m : masks) {
        in += mask_size(m);
        Weight neg{};
        for (int q = 0; q < 8; ++q) neg[q] = (5 - mask_weight(m)[q]) % 5;
        w = weight_add(w, neg);
      }
      CHECK(mask_size(key.second) - in == 6 - 3 * d + 4 * k);
      CHECK(weight_diagonal(w, 3));
    }
  }
}

TEST_CASE("recursion engine matches explicit tree summation") {
  OneForm g = gamma_norm();
  TransferResult a = transfer(g, 4, 3);
  TransferResult b = transfer_trees(g, 4, 3);
  CHECK(a.mu == b.mu);
}

TEST_CASE("raising the bivalent bound changes nothing") {
  OneForm g = gamma_norm();
  TransferResult a = transfer(g, 4, 3);
  TransferResult b = transfer(g, 4, 3, 4);
  CHECK(a.mu == b.mu);
}

TEST_CASE("mu1 series") {
  OneForm g = gamma_norm();
  CHECK(mu1_series(g, 3).empty());

  OneForm toy = toy_gamma(2);
  toy.n = 2;
  MuTable direct = mu1_series(toy, 2);
  TransferResult res = transfer(toy, 1, 2);
  const MuTable* t = res.table(1, 0);
  CHECK(direct == (t ? *t : MuTable{}));
  CHECK(mu1_series(OneForm::zero(3), 3).empty());
}

TEST_CASE("perturbed-contraction oracle agrees for the toy cubic in two variables") {
  OneForm toy = toy_gamma(2);
  toy.n = 2;
  MFCheck mf = square_deformed(toy);
  REQUIRE(mf.scalar);

  oracle::PerturbedOracle oracle{toy, 2, 0};
  auto want = oracle.run(4);
  TransferResult res = transfer(toy, 4, 2);
  CHECK(res.mu == want);
  // The comparison is not vacuous: arity 3 must be nonzero for a cubic.
  CHECK(res.table(3, 0) != nullptr);
}
