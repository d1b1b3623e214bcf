#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ainfty/gradings.hpp"
#include "ainfty/scalars.hpp"

using namespace ainf;

TEST_CASE("wedge_sign basics") {
  CHECK(wedge_sign(0b001, 0b001) == 0);
  CHECK(wedge_sign(0b010, 0b001) == -1);
  // {1,3} then {2}: one transposition moves 2 past 3.
  CHECK(wedge_sign(0b101, 0b010) == -1);
  CHECK(wedge_sign(0, 0b111) == 1);
  CHECK(wedge_sign(0b111, 0) == 1);
}

TEST_CASE("wedge_sign associativity cocycle") {
  for (Mask a = 0; a < 8; ++a)
    for (Mask b = 0; b < 8; ++b)
      for (Mask c = 0; c < 8; ++c) {
        if ((a & b) || (a & c) || (b & c)) continue;
        CHECK(wedge_sign(a, b) * wedge_sign(static_cast<Mask>(a | b), c) ==
              wedge_sign(b, c) * wedge_sign(a, static_cast<Mask>(b | c)));
      }
}

TEST_CASE("cyc5 examples") {
  CHECK(cyc5_mul(Cyc5::zeta_pow(2), Cyc5::zeta_pow(3)) == Cyc5::one());
  CHECK(cyc5_mul(Cyc5::zeta_pow(1), Cyc5::zeta_pow(4)) == Cyc5::one());
  Cyc5 s;
  for (int i = 0; i < 4; ++i) s.c[static_cast<std::size_t>(i)] = 1;
  CHECK(cyc5_mul(s, Cyc5::one()) == s);
  // zeta^4 in canonical form equals -(1 + z + z^2 + z^3).
  CHECK(Cyc5::zeta_pow(4) == (Cyc5::zero() - s));
}

namespace {
Cyc5 random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Cyc5 x;
  for (auto& v : x.c) v = rat(d(rng), 1 + (d(rng) & 3));
  return x;
}
}  // namespace

TEST_CASE("cyc5 ring laws on random triples") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    Cyc5 a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK(cyc5_mul(a, b) == cyc5_mul(b, a));
    CHECK(cyc5_mul(cyc5_mul(a, b), c) == cyc5_mul(a, cyc5_mul(b, c)));
    CHECK(cyc5_mul(a, b + c) == cyc5_mul(a, b) + cyc5_mul(a, c));
  }
}

TEST_CASE("monomial weights") {
  Mono m = Mono::var(0) * Mono::var(1) * Mono::var(2);
  Weight w = monomial_weight(m);
  CHECK(w[0] == 4);
  CHECK(w[1] == 4);
  CHECK(w[2] == 4);
  Weight wx = mask_weight(0b011);
  CHECK(wx[0] == 1);
  CHECK(wx[1] == 1);
  CHECK(wx[2] == 0);
  CHECK(monomial_weight(Mono::var(0, 5)) == Weight{});
}

TEST_CASE("weight is a homomorphism") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 6);
  for (int it = 0; it < 100; ++it) {
    Mono a, b;
    for (int k = 0; k < 3; ++k) {
      a = a * Mono::var(k, e(rng));
      b = b * Mono::var(k, e(rng));
    }
    CHECK(monomial_weight(a * b) == weight_add(monomial_weight(a), monomial_weight(b)));
  }
}

TEST_CASE("reversal sign and mask positions") {
  CHECK(reversal_sign(0) == 1);
  CHECK(reversal_sign(1) == 1);
  CHECK(reversal_sign(2) == -1);
  CHECK(reversal_sign(3) == -1);
  CHECK(reversal_sign(4) == 1);
  CHECK(mask_pos(0b101, 0) == 1);
  CHECK(mask_pos(0b101, 2) == 2);
}
