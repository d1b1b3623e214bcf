#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ainfty/hochschild.hpp"
#include "ainfty/structures.hpp"

using namespace ainf;

namespace {

constexpr int N = 3;

// Random cochain with homogeneous Hom-parity (required by the sign formulas).
Cochain random_cochain(std::mt19937& rng, int arity, int hom_parity, int terms = 4) {
  Cochain f;
  f.arity = arity;
  std::uniform_int_distribution<int> md(0, 7), cd(-3, 3);
  int guard = 0;
  while (static_cast<int>(f.c.size()) < terms && ++guard < 200) {
    std::uint64_t tuple = 0;
    int in = 0;
    for (int i = 0; i < arity; ++i) {
      Mask m = static_cast<Mask>(md(rng));
      in += mask_size(m);
      tuple |= static_cast<std::uint64_t>(m) << (8 * i);
    }
    for (Mask out = 0; out < 8; ++out)
      if (((mask_size(out) + in) & 1) == hom_parity) {
        f.add(CKey{tuple, out, 0}, rat(cd(rng)));
        break;
      }
  }
  return f;
}

Cochain product_cochain(int n, bool signed_version) {
  Cochain m;
  m.arity = 2;
  for (Mask a2 = 0; a2 < (1u << n); ++a2)
    for (Mask a1 = 0; a1 < (1u << n); ++a1) {
      int ws = wedge_sign(a2, a1);
      if (!ws) continue;
      int sgn = (signed_version && mask_parity(a1)) ? -ws : ws;
      m.add(CKey{pack_tuple({a2, a1}), static_cast<Mask>(a2 | a1), 0}, Rat(sgn));
    }
  return m;
}

}  // namespace

TEST_CASE("hochschild differential squares to zero") {
  std::mt19937 rng(101);
  for (int arity = 1; arity <= 3; ++arity)
    for (int hp = 0; hp <= 1; ++hp)
      for (int it = 0; it < 8; ++it) {
        Cochain f = random_cochain(rng, arity, hp);
        if (f.is_zero()) continue;
        CHECK(hochschild_d(hochschild_d(f, N), N).is_zero());
      }
}

TEST_CASE("differential of the identity one-cochain") {
  Cochain id;
  id.arity = 1;
  for (Mask m = 0; m < 8; ++m) id.add(CKey{m, m, 0}, Rat(1));
  Cochain d = hochschild_d(id, N);
  // Hand evaluation at (a_2,a_1) = (xi_1,xi_2), |phi| = 0, |a_1| = 1:
  // (+1) phi(a_2 a_1) + (-1) a_2 phi(a_1) + (-1)^{(-1)(0)+1} phi(a_2) a_1
  // = xi_1 xi_2 - xi_1 xi_2 - xi_1 xi_2 = -xi_1 ^ xi_2.
  AH v = d.eval(pack_tuple({0b001, 0b010}));
  AH want;
  want.add(0b011, 0, Rat(-1));
  CHECK(v == want);
}

TEST_CASE("differential of a zero-cochain lands in the displayed arity-1 case") {
  // gamma: () -> xi_1 (constant term in A^1 would be gamma^0; here we take
  // the 0-cochain with value xi_1 and check the j = 1 boundary terms).
  Cochain g;
  g.arity = 0;
  g.add(CKey{0, 0b001, 0}, Rat(1));
  Cochain d = hochschild_d(g, N);
  // (d gamma)(a) = (-1)^{|gamma|+1} a gamma() + (-1)^{(|gamma|-1)(|a|-1)+1} gamma() a
  // with |gamma| = 0 + 1 - 1 = 0: for a = xi_2: -xi_2^xi_1 - xi_1^xi_2 = 0;
  // for a = xi_1^xi_2: -(xi_1 xi_2)xi_1 - ... both terms vanish or cancel.
  AH v = d.eval(pack_tuple({Mask(0b010)}));
  CHECK(v.is_zero());
  AH v2 = d.eval(pack_tuple({Mask(0b100)}));
  CHECK(v2.is_zero());
  // Unit argument: -1*xi_1 + (-1)*xi_1 gives -2 xi_1? signs: |a|=0:
  // (-1)^{0+0+1} a gamma + (-1)^{(0-1)(0-1)+1} gamma a = -xi_1 + xi_1 = 0.
  AH v3 = d.eval(0);
  CHECK(v3.t.size() <= 1);
}

TEST_CASE("gerstenhaber bracket graded antisymmetry") {
  std::mt19937 rng(103);
  for (int it = 0; it < 30; ++it) {
    int pa = 1 + static_cast<int>(rng() % 3), pb = 1 + static_cast<int>(rng() % 3);
    Cochain f = random_cochain(rng, pa, static_cast<int>(rng() % 2));
    Cochain g = random_cochain(rng, pb, static_cast<int>(rng() % 2));
    if (f.is_zero() || g.is_zero()) continue;
    // |phi| is the shifted CC-degree, which is the reduced degree entering
    // the antisymmetry sign: [f,g] = -(-1)^{|f||g|}[g,f].
    int pf = cochain_parity(f), pg = cochain_parity(g);
    Cochain lhs = gerstenhaber(f, g, N);
    Cochain rhs = gerstenhaber(g, f, N);
    Rat s((pf * pg) % 2 ? 1 : -1);
    Cochain diff = lhs;
    diff.add(rhs, -s);
    CHECK(diff.is_zero());
  }
}

TEST_CASE("gerstenhaber bracket graded Jacobi") {
  std::mt19937 rng(107);
  for (int it = 0; it < 10; ++it) {
    Cochain f = random_cochain(rng, 2, static_cast<int>(rng() % 2), 3);
    Cochain g = random_cochain(rng, 2, static_cast<int>(rng() % 2), 3);
    Cochain h = random_cochain(rng, 2, static_cast<int>(rng() % 2), 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    int pf = cochain_parity(f), pg = cochain_parity(g), ph = cochain_parity(h);
    // (-1)^{pf ph}[f,[g,h]] + (-1)^{pg pf}[g,[h,f]] + (-1)^{ph pg}[h,[f,g]] = 0
    Cochain acc = gerstenhaber(f, gerstenhaber(g, h, N), N);
    Cochain t2 = gerstenhaber(g, gerstenhaber(h, f, N), N);
    Cochain t3 = gerstenhaber(h, gerstenhaber(f, g, N), N);
    Cochain total;
    total.arity = acc.arity;
    total.add(acc, Rat((pf * ph) % 2 ? -1 : 1));
    total.add(t2, Rat((pg * pf) % 2 ? -1 : 1));
    total.add(t3, Rat((ph * pg) % 2 ? -1 : 1));
    CHECK(total.is_zero());
  }
}

TEST_CASE("differential is bracketing with the product cochain") {
  // Find which product normalization and global sign realize d = [m, .].
  std::mt19937 rng(109);
  std::vector<Cochain> candidates{product_cochain(N, true), product_cochain(N, false)};
  int found_m = -1, found_s = 0;
  for (int mi = 0; mi < 2 && found_m < 0; ++mi)
    for (int s : {1, -1}) {
      bool all = true;
      std::mt19937 r2(rng());
      for (int it = 0; it < 10 && all; ++it) {
        Cochain f = random_cochain(r2, 1 + static_cast<int>(r2() % 2), static_cast<int>(r2() % 2));
        if (f.is_zero()) continue;
        Cochain lhs = hochschild_d(f, N);
        Cochain rhs = gerstenhaber(candidates[static_cast<std::size_t>(mi)], f, N);
        Cochain diff = lhs;
        diff.add(rhs, Rat(-s));
        if (!diff.is_zero()) all = false;
      }
      if (all) {
        found_m = mi;
        found_s = s;
        break;
      }
    }
  CHECK(found_m >= 0);
  MESSAGE("product form ", std::string(found_m == 0 ? "signed" : "plain"), ", global sign ",
          found_s);
}

TEST_CASE("maurer-cartan residual basics") {
  CHECK(mc_residual({}, 6, N).empty());

  // Odd arity-3 cochain whose self-bracket survives at arity 5.
  Cochain c;
  c.arity = 3;
  c.add(CKey{pack_tuple({0b001, 0b001, 0b001}), 0, 0}, Rat(1));
  c.add(CKey{pack_tuple({0b001, 0, 0b001}), 0b010, 0}, Rat(1));
  CHECK(cochain_parity(c) == 1);
  CochainSet alpha;
  alpha[3] = c;
  CochainSet res = mc_residual(alpha, 5, N);
  CHECK(res.count(5) == 1);
}

TEST_CASE("hkr examples") {
  Cochain f;
  f.arity = 3;
  f.add(CKey{pack_tuple({0b100, 0b010, 0b001}), 0, 0}, Rat(-1));
  PolyVector p = hkr(f, N);
  PolyVector want;
  want.add(PVKey{Mono::var(0) * Mono::var(1) * Mono::var(2), 0, 0}, Rat(-1));
  CHECK(p == want);

  Cochain diag;
  diag.arity = 5;
  std::vector<Mask> five(5, Mask(0b001));
  diag.add(CKey{pack_tuple(five), 0, 0}, Rat(1));
  PolyVector p5 = hkr(diag, N);
  PolyVector want5;
  want5.add(PVKey{Mono::var(0, 5), 0, 0}, Rat(1));
  CHECK(p5 == want5);

  CHECK(hkr(product_cochain(N, true), N).is_zero());
  CHECK(hkr(product_cochain(N, false), N).is_zero());
}

TEST_CASE("hkr kills coboundaries") {
  std::mt19937 rng(113);
  for (int hp = 0; hp <= 1; ++hp)
    for (int it = 0; it < 10; ++it) {
      Cochain g = random_cochain(rng, 2, hp);
      if (g.is_zero()) continue;
      CHECK(hkr(hochschild_d(g, N), N).is_zero());
    }
}

namespace {
PolyVector random_pv(std::mt19937& rng, int terms = 4) {
  PolyVector p;
  std::uniform_int_distribution<int> md(0, 7), ed(0, 2), cd(-3, 3);
  for (int i = 0; i < terms; ++i) {
    Mono m;
    for (int k = 0; k < 3; ++k) m = m * Mono::var(k, ed(rng));
    p.add(PVKey{m, static_cast<Mask>(md(rng)), 0}, rat(cd(rng)));
  }
  return p;
}
PolyVector random_pv_pure(std::mt19937& rng, int lambda_deg, int terms = 3) {
  PolyVector p;
  std::uniform_int_distribution<int> md(0, 7), ed(0, 2), cd(-3, 3);
  int guard = 0;
  while (static_cast<int>(p.t.size()) < terms && ++guard < 100) {
    Mask v = static_cast<Mask>(md(rng));
    if (mask_size(v) != lambda_deg) continue;
    Mono m;
    for (int k = 0; k < 3; ++k) m = m * Mono::var(k, ed(rng));
    p.add(PVKey{m, v, 0}, rat(cd(rng)));
  }
  return p;
}
}  // namespace

TEST_CASE("schouten bracket") {
  PolyVector xi1, v1;
  xi1.add(PVKey{Mono{}, 0b001, 0}, Rat(1));
  v1.add(PVKey{Mono::var(0), 0, 0}, Rat(1));
  PolyVector b = schouten(xi1, v1, N);
  PolyVector one;
  one.add(PVKey{Mono{}, 0, 0}, Rat(1));
  CHECK(b == one);

  // Graded antisymmetry on homogeneous pairs.
  std::mt19937 rng(127);
  for (int it = 0; it < 20; ++it) {
    int dp = static_cast<int>(rng() % 4), dq = static_cast<int>(rng() % 4);
    PolyVector P = random_pv_pure(rng, dp), Q = random_pv_pure(rng, dq);
    PolyVector lhs = schouten(P, Q, N), rhs = schouten(Q, P, N);
    Rat s(((dp - 1) * (dq - 1)) % 2 ? 1 : -1);
    PolyVector diff = lhs;
    diff.add(rhs, -s);
    CHECK(diff.is_zero());
  }

  // Koszul composition: [W, iota_dW gamma3] = 0.
  Poly W;
  W.add(Mono::var(0) * Mono::var(1) * Mono::var(2), Rat(-1));
  for (int k = 0; k < 3; ++k) W.add(Mono::var(k, 5), Rat(1));
  PolyVector Wpv;
  for (const auto& [m, c] : W.t) Wpv.add(PVKey{m, 0, 0}, c);
  for (int it = 0; it < 10; ++it) {
    PolyVector g3 = random_pv_pure(rng, 3);
    PolyVector contracted = koszul_dW(g3, W, N);
    CHECK(schouten(Wpv, contracted, N).is_zero());
  }
}

TEST_CASE("koszul contraction") {
  Poly W;
  W.add(Mono::var(0) * Mono::var(1) * Mono::var(2), Rat(-1));
  for (int k = 0; k < 3; ++k) W.add(Mono::var(k, 5), Rat(1));

  PolyVector top;
  top.add(PVKey{Mono{}, 0b111, 0}, Rat(1));
  CHECK(koszul_dW(koszul_dW(top, W, N), W, N).is_zero());

  PolyVector xi1;
  xi1.add(PVKey{Mono{}, 0b001, 0}, Rat(1));
  PolyVector d1 = koszul_dW(xi1, W, N);
  PolyVector want;
  want.add(PVKey{Mono::var(1) * Mono::var(2), 0, 0}, Rat(-1));
  want.add(PVKey{Mono::var(0, 4), 0, 0}, Rat(5));
  CHECK(d1 == want);

  // iota_dW(xi_2 ^ xi_3) = d2W xi_3 - d3W xi_2.
  PolyVector x23;
  x23.add(PVKey{Mono{}, 0b110, 0}, Rat(1));
  PolyVector d23 = koszul_dW(x23, W, N);
  PolyVector want23;
  want23.add(PVKey{Mono::var(0) * Mono::var(2), 0b100, 0}, Rat(-1));
  want23.add(PVKey{Mono::var(1, 4), 0b100, 0}, Rat(5));
  want23.add(PVKey{Mono::var(0) * Mono::var(1), 0b010, 0}, Rat(1));
  want23.add(PVKey{Mono::var(2, 4), 0b010, 0}, Rat(-5));
  CHECK(d23 == want23);
}

TEST_CASE("invariant dimensions") {
  CHECK(invariant_dim(3, 0, N) == 1);
  CHECK(invariant_dim(4, 2, N) == 3);
  CHECK(invariant_dim(5, 0, N) == 3);
  CHECK(hom_invariant_dim(3, 1, N) == 0);
  CHECK(hom_invariant_dim(3, -2, N) == 0);

  // Character-sum oracle over the 25 diagonal determinant-one group elements.
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 3; ++j) {
      Cyc5 total = Cyc5::zero();
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          int cexp = ((-(a + b)) % 5 + 5) % 5;
          std::array<int, 3> g{a, b, cexp};
          // chi(g) = sum over basis of zeta^{<g, weight>}
          for (int e0 = 0; e0 <= i; ++e0)
            for (int e1 = 0; e1 + e0 <= i; ++e1) {
              int e2 = i - e0 - e1;
              Mono m = Mono::var(0, e0) * Mono::var(1, e1) * Mono::var(2, e2);
              for (Mask v = 0; v < 8; ++v) {
                if (mask_size(v) != j) continue;
                Weight w = weight_add(monomial_weight(m), mask_weight(v));
                int ph = 0;
                for (int q = 0; q < 3; ++q) ph += g[static_cast<std::size_t>(q)] * w[static_cast<std::size_t>(q)];
                total = total + Cyc5::zeta_pow(ph);
              }
            }
        }
      Cyc5 want = Cyc5::from_rat(Rat(25 * invariant_dim(i, j, N)));
      CHECK(total == want);
    }
}

TEST_CASE("degree predicates") {
  CHECK(degree_predicates(1, 3, 0, 0).in_g);
  CHECK(!degree_predicates(1, 3, 0, 0).in_h);
  CHECK(degree_predicates(1, 3, -3, 0).in_h);
  CHECK(degree_predicates(1, 3, 0, 0).mod4);
}
