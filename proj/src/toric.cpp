#include "ainfty/toric.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {
namespace {

long dot(const IVec3& a, const IVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

long det3(const IMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// adj(m) with m * adj(m) = det(m) * id.
IMat3 adj3(const IMat3& m) {
  IMat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r1 = (j + 1) % 3, r2 = (j + 2) % 3, c1 = (i + 1) % 3, c2 = (i + 2) % 3;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] *
              m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] -
          m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] *
              m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)];
    }
  return a;
}

IMat3 matmul(const IMat3& a, const IMat3& b) {
  IMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
            b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  return r;
}

// Row vector v times matrix m.
IVec3 rowmul(const IVec3& v, const IMat3& m) {
  IVec3 r{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      r[static_cast<std::size_t>(j)] +=
          v[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  return r;
}

// Solve e = c * G over the integers; false if non-integral.
bool decompose(const IVec3& e, const IMat3& G, IVec3& c) {
  long d = det3(G);
  IVec3 num = rowmul(e, adj3(G));
  for (int i = 0; i < 3; ++i) {
    if (num[static_cast<std::size_t>(i)] % d != 0) return false;
    c[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(i)] / d;
  }
  return true;
}

// A reference lattice basis of M.
const IMat3 kBasisM = {{{1, -1, 0}, {0, 1, -2}, {0, 0, 5}}};

}  // namespace

const std::array<ChartSpec, 5>& chart_specs() {
  static const std::array<ChartSpec, 5> charts = {{
      {1,
       {{{0, 1, 0}, {1, 1, 3}, {2, 2, 1}}},
       {{{3, 0, -1}, {-1, 0, 2}, {-1, 1, 0}}}},
      {2,
       {{{1, 0, 0}, {1, 1, 3}, {2, 2, 1}}},
       {{{0, 3, -1}, {0, -1, 2}, {1, -1, 0}}}},
      {3,
       {{{0, 1, 0}, {0, 0, 1}, {1, 1, 3}}},
       {{{5, 0, 0}, {-3, 0, 1}, {-1, 1, 0}}}},
      {4,
       {{{1, 0, 0}, {0, 0, 1}, {1, 1, 3}}},
       {{{0, 5, 0}, {0, -3, 1}, {1, -1, 0}}}},
      {5,
       {{{1, 0, 0}, {0, 1, 0}, {2, 2, 1}}},
       {{{0, 1, -2}, {1, 0, -2}, {0, 0, 5}}}},
  }};
  return charts;
}

ToricReport dual_generators(const ChartSpec& chart) {
  ToricReport rep;
  auto fail = [&](const std::string& w) {
    if (rep.ok) {
      rep.ok = false;
      rep.witness = w;
    }
  };
  for (const IVec3& g : chart.gens) {
    if (!in_lattice_M(g)) fail("generator outside M");
    for (const IVec3& q : chart.ineqs)
      if (dot(g, q) < 0) fail("generator violates an inequality");
  }
  // Unimodular over the reference basis of M.
  IVec3 c;
  IMat3 C{};
  for (int r = 0; r < 3; ++r) {
    if (!decompose(chart.gens[static_cast<std::size_t>(r)], kBasisM, c)) {
      fail("generator not in the lattice span");
      return rep;
    }
    C[static_cast<std::size_t>(r)] = c;
  }
  long d = det3(C);
  if (d != 1 && d != -1) fail("generators are not a lattice basis of M");
  // Bounded decomposition scan.
  for (long m1 = -6; m1 <= 6; ++m1)
    for (long m2 = -6; m2 <= 6; ++m2)
      for (long m3 = -6; m3 <= 6; ++m3) {
        IVec3 m{m1, m2, m3};
        if (!in_lattice_M(m)) continue;
        bool inside = true;
        for (const IVec3& q : chart.ineqs)
          if (dot(m, q) < 0) inside = false;
        if (!inside) continue;
        if (!decompose(m, chart.gens, c) || c[0] < 0 || c[1] < 0 || c[2] < 0) {
          std::ostringstream os;
          os << "no nonnegative decomposition for (" << m1 << "," << m2 << "," << m3 << ")";
          fail(os.str());
        }
      }
  return rep;
}

IMat3 transition(int i, int j) {
  const auto& charts = chart_specs();
  const IMat3& Gi = charts[static_cast<std::size_t>(i - 1)].gens;
  const IMat3& Gj = charts[static_cast<std::size_t>(j - 1)].gens;
  IMat3 num = matmul(Gi, adj3(Gj));
  long d = det3(Gj);
  IMat3 E{};
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      long v = num[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (v % d != 0) throw std::runtime_error("non-integral transition");
      E[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = v / d;
    }
  return E;
}

Laurent apply_transition(const IMat3& E, const Laurent& p) {
  Laurent r;
  for (const auto& [e, c] : p.t) r.add(rowmul(e, E), c);
  return r;
}

PullbackResult chart_laurent(const ChartSpec& chart, const Poly& W) {
  PullbackResult res;
  for (const auto& [m, c] : W.t) {
    IVec3 e{m.get(0), m.get(1), m.get(2)};
    if (!in_lattice_M(e)) {
      res.message = "monomial exponent outside M";
      return res;
    }
    IVec3 cexp;
    if (!decompose(e, chart.gens, cexp)) {
      res.message = "monomial exponent not in the generator lattice";
      return res;
    }
    res.strict.add(cexp, c);
  }
  res.ok = true;
  return res;
}

PullbackResult pullback_W(const ChartSpec& chart, const Poly& W) {
  PullbackResult res = chart_laurent(chart, W);
  if (!res.ok || res.strict.t.empty()) return res;
  IVec3 mn = res.strict.t.begin()->first;
  for (const auto& [e, c] : res.strict.t)
    for (int i = 0; i < 3; ++i)
      mn[static_cast<std::size_t>(i)] = std::min(mn[static_cast<std::size_t>(i)],
                                                 e[static_cast<std::size_t>(i)]);
  Laurent shifted;
  IVec3 lexmax{};
  bool first = true;
  for (const auto& [e, c] : res.strict.t) {
    IVec3 s{e[0] - mn[0], e[1] - mn[1], e[2] - mn[2]};
    if (first || s > lexmax) {
      lexmax = s;
      first = false;
    }
    shifted.add(s, c);
  }
  // Sign normalization: the lexicographically largest monomial is negative.
  if (shifted.t.at(lexmax) > 0) {
    Laurent neg;
    for (const auto& [e, c] : shifted.t) neg.add(e, -c);
    shifted = neg;
  }
  res.prefactor = mn;
  res.strict = shifted;
  return res;
}

std::string toric_text() {
  std::ostringstream os;
  os << "toric-data v1\n";
  for (const ChartSpec& ch : chart_specs()) {
    os << "chart " << ch.index << "\n";
    for (const IVec3& q : ch.ineqs)
      os << "  ineq " << q[0] << " " << q[1] << " " << q[2] << "\n";
    for (const IVec3& g : ch.gens)
      os << "  gen " << g[0] << " " << g[1] << " " << g[2] << "\n";
  }
  const int pairs[4][2] = {{1, 2}, {2, 4}, {3, 4}, {4, 5}};
  for (const auto& pr : pairs) {
    IMat3 E = transition(pr[0], pr[1]);
    os << "transition " << pr[1] << " -> " << pr[0] << "\n";
    for (const IVec3& r : E) os << "  row " << r[0] << " " << r[1] << " " << r[2] << "\n";
  }
  const Poly W = superpotential_poly();
  for (const ChartSpec& ch : chart_specs()) {
    PullbackResult pb = pullback_W(ch, W);
    os << "H " << ch.index << "\n";
    os << "  prefactor " << pb.prefactor[0] << " " << pb.prefactor[1] << " " << pb.prefactor[2]
       << "\n";
    for (const auto& [e, c] : pb.strict.t)
      os << "  term " << c.get_str() << " " << e[0] << " " << e[1] << " " << e[2] << "\n";
  }
  return os.str();
}

}  // namespace ainf
