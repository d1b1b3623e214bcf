#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/contraction.hpp"

using namespace ainf;

namespace {
constexpr int N = 3;

// Independent left contraction on Lambda(V^dual): iota_{xi_k} removes dv_k
// with sign (-1)^{pos-1}; for theta = xi_{j_1}^...^xi_{j_p} (increasing),
// iota_theta = iota_{xi_{j_1}} o ... o iota_{xi_{j_p}} (largest index first).
BEndo iota_endo(Mask theta, int n) {
  BEndo e;
  e.n = n;
  Mask full = static_cast<Mask>((1u << n) - 1u);
  for (Mask col = 0; col <= full; ++col) {
    Mask cur = col;
    int sign = 1;
    bool alive = true;
    for (int k = n - 1; k >= 0 && alive; --k) {
      if (!(theta & (1u << k))) continue;
      if (!(cur & (1u << k))) {
        alive = false;
        break;
      }
      sign *= (mask_pos(cur, k) % 2) ? 1 : -1;
      cur = static_cast<Mask>(cur & ~(1u << k));
    }
    if (alive) e.add(cur, col, Mono{}, 0, Rat(sign));
  }
  return e;
}
}  // namespace

TEST_CASE("include_i on the unit has all 2^n diagonal terms") {
  BTensor b = include_i(AElem::unit(), N);
  CHECK(b.t.size() == 8);
  for (const auto& [k, c] : b.t) {
    CHECK(k.sym.packed == 0);
    CHECK(k.dual == k.vec);
  }
  // The identity endomorphism: fully contracting dv_J against xi-reversed J.
  CHECK(to_endo(b, N) == BEndo::identity(N));
}

TEST_CASE("include_i realizes contraction operators") {
  for (Mask theta : {Mask(0b001), Mask(0b010), Mask(0b011), Mask(0b111)}) {
    CHECK(to_endo(include_i(AElem::basis(theta), N), N) == iota_endo(theta, N));
  }
}

TEST_CASE("include_i is a dga map for the undeformed structure") {
  for (Mask a2 = 0; a2 < 8; ++a2)
    for (Mask a1 = 0; a1 < 8; ++a1) {
      BEndo prod = mult_B(to_endo(include_i(AElem::basis(a2), N), N),
                          to_endo(include_i(AElem::basis(a1), N), N));
      AElem w = wedge_A(AElem::basis(a2), AElem::basis(a1));
      CHECK(prod == to_endo(include_i(w, N), N));
    }
}

TEST_CASE("homotopy on Sym-degree zero and on v1") {
  // h(1 (x) theta) = 0.
  for (Mask theta = 0; theta < 8; ++theta)
    CHECK(homotopy_h(BTensor::term(BKey{Mono{}, 0, theta, 0}), N).is_zero());

  // h(v1 (x) 1): w = 1, terms dv1 ^ dv_J (x) xi-reversed J with p!/(1...(1+p)).
  BTensor hb = homotopy_h(BTensor::term(BKey{Mono::var(0), 0, 0, 0}), N);
  BTensor want;
  want.add(BKey{Mono{}, 0b001, 0, 0}, Rat(1));
  want.add(BKey{Mono{}, 0b011, 0b010, 0}, Rat(1, 2));
  want.add(BKey{Mono{}, 0b101, 0b100, 0}, Rat(1, 2));
  want.add(BKey{Mono{}, 0b111, 0b110, 0}, Rat(1, 3) * Rat(reversal_sign(2)));
  CHECK(hb == want);
}

TEST_CASE("exhaustive side conditions and homotopy identity") {
  ContractionReport rep = verify_contraction(4, N);
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.ok);
  CHECK(rep.epsilon != 0);
}

TEST_CASE("gamma sign normalization reproduces the superpotential") {
  NormalizedGamma ng = sign_normalize_gamma(gamma_cubic_quintic(N), superpotential_tagged());
  CHECK(ng.flip == -1);
  MFCheck mf = square_deformed(ng.gamma);
  CHECK(mf.scalar);
  CHECK(mf.w_eff == superpotential_tagged());
}
