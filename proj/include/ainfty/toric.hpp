#pragma once

// Lattice computations for the crepant resolution charts: dual-cone
// generator validation, chart transitions, and pullbacks of W with
// prefactor and strict transform.

#include <string>

#include "ainfty/determinacy.hpp"

namespace ainf {

using IVec3 = std::array<long, 3>;
using IMat3 = std::array<IVec3, 3>;  // rows

// M = {m : m1 + m2 + 3 m3 = 0 mod 5}, the dual of Z^3 + (1,1,3)/5.
inline bool in_lattice_M(const IVec3& m) {
  return ((m[0] + m[1] + 3 * m[2]) % 5 + 5) % 5 == 0;
}

struct ChartSpec {
  int index = 0;                 // 1..5, printed order
  std::array<IVec3, 3> ineqs{};  // inner normals of the dual cone
  std::array<IVec3, 3> gens{};   // semigroup generators, printed order
};

const std::array<ChartSpec, 5>& chart_specs();

struct ToricReport {
  bool ok = true;
  std::string witness;
};

// (a) generators lie in M and satisfy the inequalities; (b) they form a
// lattice basis of M (unimodular over a reference basis); (c) every lattice
// point of the dual cone with |m_i| <= 6 is a nonnegative integer
// combination.
ToricReport dual_generators(const ChartSpec& chart);

// Exponent matrix expressing chart-i generators in chart-j coordinates;
// as a point map it sends chart-j coordinates to chart-i coordinates.
// transition(i,j) * transition(j,k) = transition(i,k); transition(i,i) = id.
IMat3 transition(int i, int j);

struct Laurent {
  std::map<IVec3, Rat> t;

  void add(const IVec3& e, const Rat& c) {
    if (ainf::is_zero(c)) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t[e] = c;
    } else {
      it->second += c;
      if (ainf::is_zero(it->second)) t.erase(it);
    }
  }
  friend bool operator==(const Laurent&, const Laurent&) = default;
};

// Exponent substitution e -> e * E, sending a chart-i Laurent polynomial to
// chart-j coordinates when E = transition(i,j).
Laurent apply_transition(const IMat3& E, const Laurent& p);

struct PullbackResult {
  bool ok = false;
  IVec3 prefactor{};
  Laurent strict;  // polynomial part, sign-normalized
  std::string message;
};

// Full pullback as a Laurent polynomial in chart coordinates; requires every
// monomial exponent of W to lie in M.
PullbackResult chart_laurent(const ChartSpec& chart, const Poly& W);
// Factor the pullback into a monomial prefactor and the strict transform,
// normalized so the lexicographically largest monomial has a negative
// coefficient.
PullbackResult pullback_W(const ChartSpec& chart, const Poly& W);

// Stable text dump of generators, the four printed transitions, and the five
// H equations, diffable against the vendored golden file.
std::string toric_text();

}  // namespace ainf
