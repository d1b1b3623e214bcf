#pragma once

// Exact coefficient arithmetic: rationals (GMP) and the cyclotomic field Q(zeta_5).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace ainf {

using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Element of Q(zeta_5), stored as a + b z + c z^2 + d z^3 with z = exp(2 pi i/5).
// Canonical representative of degree <= 3 under 1 + z + z^2 + z^3 + z^4 = 0.
struct Cyc5 {
  std::array<Rat, 4> c{};

  static Cyc5 zero() { return {}; }
  static Cyc5 one() { return from_rat(1); }
  static Cyc5 from_rat(const Rat& r) {
    Cyc5 x;
    x.c[0] = r;
    return x;
  }
  // zeta^k, any integer k.
  static Cyc5 zeta_pow(long k) {
    k %= 5;
    if (k < 0) k += 5;
    Cyc5 x;
    if (k < 4) {
      x.c[static_cast<std::size_t>(k)] = 1;
    } else {
      for (auto& v : x.c) v = -1;  // z^4 = -(1 + z + z^2 + z^3)
    }
    return x;
  }

  bool is_zero() const {
    for (const auto& v : c)
      if (sgn(v) != 0) return false;
    return true;
  }

  friend bool operator==(const Cyc5& a, const Cyc5& b) { return a.c == b.c; }

  friend Cyc5 operator+(const Cyc5& a, const Cyc5& b) {
    Cyc5 r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Cyc5 operator-(const Cyc5& a, const Cyc5& b) {
    Cyc5 r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Cyc5 operator-(const Cyc5& a) {
    Cyc5 r;
    for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
    return r;
  }
};

Cyc5 cyc5_mul(const Cyc5& a, const Cyc5& b);
std::string cyc5_str(const Cyc5& a);

}  // namespace ainf
