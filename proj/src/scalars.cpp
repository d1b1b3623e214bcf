#include "ainfty/scalars.hpp"

namespace ainf {

Cyc5 cyc5_mul(const Cyc5& a, const Cyc5& b) {
  // Convolve into exponents 0..6, fold z^5 = 1, then eliminate z^4.
  std::array<Rat, 7> raw{};
  for (int i = 0; i < 4; ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) raw[i + j] += a.c[i] * b.c[j];
  }
  std::array<Rat, 5> folded{};
  for (int e = 0; e < 7; ++e) folded[e % 5] += raw[e];
  Cyc5 r;
  for (int e = 0; e < 4; ++e) r.c[e] = folded[e] - folded[4];
  return r;
}

std::string cyc5_str(const Cyc5& a) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += a.c[i].get_str();
  }
  return s + "]";
}

}  // namespace ainf
