#include "ainfty/determinacy.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace ainf {
namespace {

// All monomials in n variables of total degree d, ascending packed order.
void monos_of_degree(int n, int d, Mono prefix, int k, std::vector<Mono>& out) {
  if (k == n - 1) {
    out.push_back(prefix * Mono::var(k, d));
    return;
  }
  for (int e = 0; e <= d; ++e) monos_of_degree(n, d - e, prefix * Mono::var(k, e), k + 1, out);
}

std::vector<Mono> monos_in_range(int n, int dmin, int dmax) {
  std::vector<Mono> out;
  for (int d = std::max(dmin, 0); d <= dmax; ++d) {
    std::vector<Mono> layer;
    monos_of_degree(n, d, Mono{}, 0, layer);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Exact sparse Gaussian elimination over Q. Rows are processed in order;
// each surviving row pivots on its leading column (smallest index), so the
// pivot choice is the first admissible column in canonical order. Free
// unknowns are set to zero.
struct SparseSolver {
  struct Row {
    std::map<int, Rat> a;
    Rat b = Rat(0);
  };
  int ncols = 0;
  std::vector<Row> rows;

  std::optional<std::vector<Rat>> solve(int* bad_row) {
    std::map<int, Row> pivots;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      Row r = rows[ri];
      while (!r.a.empty()) {
        auto lead = r.a.begin();
        auto pit = pivots.find(lead->first);
        if (pit == pivots.end()) break;
        Rat c = lead->second;
        r.a.erase(lead);
        for (auto it = std::next(pit->second.a.begin()); it != pit->second.a.end(); ++it) {
          auto jt = r.a.find(it->first);
          if (jt == r.a.end()) {
            r.a[it->first] = -c * it->second;
          } else {
            jt->second -= c * it->second;
            if (ainf::is_zero(jt->second)) r.a.erase(jt);
          }
        }
        r.b -= c * pit->second.b;
      }
      if (r.a.empty()) {
        if (!ainf::is_zero(r.b)) {
          if (bad_row) *bad_row = static_cast<int>(ri);
          return std::nullopt;
        }
        continue;
      }
      Rat lead = r.a.begin()->second;
      for (auto& [c, v] : r.a) v /= lead;
      r.b /= lead;
      pivots.emplace(r.a.begin()->first, std::move(r));
    }
    std::vector<Rat> x(static_cast<std::size_t>(ncols), Rat(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rat v = it->second.b;
      for (auto jt = std::next(it->second.a.begin()); jt != it->second.a.end(); ++jt)
        v -= jt->second * x[static_cast<std::size_t>(jt->first)];
      x[static_cast<std::size_t>(it->first)] = v;
    }
    return x;
  }
};

}  // namespace

Poly superpotential_poly() {
  Poly w;
  w.add(Mono::var(0) * Mono::var(1) * Mono::var(2), Rat(-1));
  for (int k = 0; k < 3; ++k) w.add(Mono::var(k, 5), Rat(1));
  return w;
}

Poly poly_partial(const Poly& p, int k) {
  Poly r;
  for (const auto& [m, c] : p.t) {
    int e = m.get(k);
    if (e == 0) continue;
    Mono q;
    q.packed = m.packed - Mono::var(k).packed;
    r.add(q, c * e);
  }
  return r;
}

Poly poly_truncate(const Poly& p, int N) {
  Poly r;
  for (const auto& [m, c] : p.t)
    if (m.degree() < N) r.add(m, c);
  return r;
}

int poly_min_order(const Poly& p) {
  int d = INT_MAX;
  for (const auto& [m, c] : p.t) d = std::min(d, m.degree());
  return d;
}

TruncatedSeries substitute(const TruncatedSeries& s, const CoordChange& c) {
  // Cached truncated powers of the substituted coordinates.
  std::vector<std::vector<TruncatedSeries>> pw(static_cast<std::size_t>(c.n));
  for (int k = 0; k < c.n; ++k) {
    TruncatedSeries one = TruncatedSeries::make(Poly::mono(Mono{}, Rat(1)), s.N);
    pw[static_cast<std::size_t>(k)].push_back(one);
    Poly img = c.f[static_cast<std::size_t>(k)];
    img.add(Mono::var(k), Rat(1));
    pw[static_cast<std::size_t>(k)].push_back(TruncatedSeries::make(img, s.N));
  }
  TruncatedSeries out;
  out.N = s.N;
  out.discarded = s.discarded;
  for (const auto& [m, coef] : s.poly.t) {
    TruncatedSeries term = pw[0][0];
    for (int k = 0; k < c.n; ++k) {
      auto& powers = pw[static_cast<std::size_t>(k)];
      int e = m.get(k);
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * powers[1]);
      term = term * powers[static_cast<std::size_t>(e)];
    }
    out.discarded = out.discarded || term.discarded;
    out.add(term, coef);
  }
  return out;
}

CoordChange compose(const CoordChange& c1, const CoordChange& c2) {
  CoordChange out = CoordChange::identity(c1.n, c1.N);
  for (int k = 0; k < c1.n; ++k) {
    Poly comp = c1.f[static_cast<std::size_t>(k)];
    comp.add(Mono::var(k), Rat(1));
    Poly img = substitute(TruncatedSeries::make(comp, c1.N), c2).poly;
    img.add(Mono::var(k), Rat(-1));
    out.f[static_cast<std::size_t>(k)] = img;
  }
  return out;
}

CoordChange equivariant_average(const CoordChange& c) {
  CoordChange out = CoordChange::identity(c.n, c.N);
  for (int k = 0; k < c.n; ++k) {
    Weight wk = monomial_weight(Mono::var(k));
    for (const auto& [m, coef] : c.f[static_cast<std::size_t>(k)].t) {
      Weight wm = monomial_weight(m);
      Weight diff{};
      for (int i = 0; i < 8; ++i) diff[i] = ((wm[i] - wk[i]) % 5 + 5) % 5;
      if (weight_diagonal(diff, c.n)) out.f[static_cast<std::size_t>(k)].add(m, coef);
    }
  }
  return out;
}

MembershipResult ideal_membership(const TruncatedSeries& f, const Poly& W, int N, int n,
                                  int q_min_degree, int q_max_degree) {
  std::vector<Poly> dW;
  int dmin = INT_MAX;
  for (int k = 0; k < n; ++k) {
    dW.push_back(poly_partial(W, k));
    dmin = std::min(dmin, poly_min_order(dW.back()));
  }
  if (q_max_degree < 0) q_max_degree = N - 1 - dmin;

  // Unknowns: (k, monomial) in canonical order, degree-major.
  std::vector<std::pair<int, Mono>> unknowns;
  for (int d = std::max(q_min_degree, 0); d <= q_max_degree; ++d) {
    std::vector<Mono> layer = monos_in_range(n, d, d);
    for (int k = 0; k < n; ++k)
      for (Mono m : layer) unknowns.push_back({k, m});
  }

  // Equations: one per monomial of degree < N occurring in f or in any
  // admissible product q-monomial times a d_kW term.
  std::map<Mono, std::size_t> eq_index;
  auto touch = [&](Mono m) {
    if (m.degree() < N) eq_index.emplace(m, 0);
  };
  for (const auto& [m, c] : f.poly.t) touch(m);
  for (const auto& [k, m] : unknowns)
    for (const auto& [mw, cw] : dW[static_cast<std::size_t>(k)].t) touch(m * mw);
  std::size_t idx = 0;
  for (auto& [m, i] : eq_index) i = idx++;

  SparseSolver sys;
  sys.ncols = static_cast<int>(unknowns.size());
  sys.rows.resize(eq_index.size());
  for (const auto& [m, c] : f.poly.t)
    if (m.degree() < N) sys.rows[eq_index[m]].b = c;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [k, m] = unknowns[u];
    for (const auto& [mw, cw] : dW[static_cast<std::size_t>(k)].t) {
      Mono prod = m * mw;
      if (prod.degree() >= N) continue;
      sys.rows[eq_index[prod]].a[static_cast<int>(u)] += cw;
    }
  }

  // Keep the row-to-monomial map for failure reporting.
  std::vector<Mono> row_mono(eq_index.size());
  for (const auto& [m, i] : eq_index) row_mono[i] = m;

  MembershipResult res;
  res.q.resize(static_cast<std::size_t>(n));
  int bad = -1;
  auto sol = sys.solve(&bad);
  if (!sol) {
    res.ok = false;
    res.infeasible_degree = row_mono[static_cast<std::size_t>(bad)].degree();
    return res;
  }
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    res.q[static_cast<std::size_t>(unknowns[u].first)].add(unknowns[u].second,
                                                           (*sol)[u]);
  res.remainder = f.poly;
  for (int k = 0; k < n; ++k)
    res.remainder.add(res.q[static_cast<std::size_t>(k)] * dW[static_cast<std::size_t>(k)],
                      Rat(-1));
  res.ok = poly_min_order(res.remainder) >= N;
  return res;
}

ReductionResult reduce_to_W(const TruncatedSeries& w_prime, int N, int n) {
  ReductionResult out;
  const Poly W = superpotential_poly();
  for (const auto& [m, c] : w_prime.poly.t) {
    if (m.degree() % 2 == 0) {
      out.message = "perturbed series is not odd";
      return out;
    }
    if (!weight_diagonal(monomial_weight(m), n)) {
      out.message = "perturbed series is not invariant";
      return out;
    }
  }
  Poly err0 = w_prime.poly;
  err0.add(W, Rat(-1));
  if (poly_min_order(poly_truncate(err0, N)) < 7) {
    out.message = "perturbed series does not agree with W mod F_7";
    return out;
  }

  CoordChange total = CoordChange::identity(n, N);
  TruncatedSeries wr = TruncatedSeries::make(w_prime.poly, N);
  for (int r = 7; r < N; r += 2) {
    Poly err = wr.poly;
    err.add(W, Rat(-1));
    err = poly_truncate(err, N);
    if (err.is_zero()) break;
    MembershipResult mem = ideal_membership(
        TruncatedSeries::make(poly_truncate(err, r + 2), r + 2), W, r + 2, n, r - 2, r - 1);
    if (!mem.ok) {
      out.message = "membership infeasible at step r = " + std::to_string(r) +
                    ", degree " + std::to_string(mem.infeasible_degree);
      return out;
    }
    CoordChange step = CoordChange::identity(n, N);
    for (int k = 0; k < n; ++k)
      step.f[static_cast<std::size_t>(k)].add(mem.q[static_cast<std::size_t>(k)], Rat(-1));
    step = equivariant_average(step);
    wr = substitute(wr, step);
    total = compose(total, step);
    Poly check = poly_truncate(wr.poly, r + 2);
    check.add(poly_truncate(W, r + 2), Rat(-1));
    if (!check.is_zero()) {
      out.message = "step r = " + std::to_string(r) + " failed to improve agreement";
      return out;
    }
  }

  // Verify the residual by an independent substitution of the accumulated
  // change into the original series.
  TruncatedSeries redo = substitute(TruncatedSeries::make(w_prime.poly, N), total);
  out.residual = redo.poly;
  out.residual.add(poly_truncate(W, N), Rat(-1));
  out.c = total;
  out.ok = out.residual.is_zero();
  if (!out.ok) out.message = "nonzero residual after substitution";
  return out;
}

TwoFormResult solve_two_form(const PolyVector& a2, const Poly& W, int N, int n) {
  TwoFormResult out;
  // Cocycle precondition.
  PolyVector coc = koszul_dW(a2, W, n);
  for (const auto& [k, c] : coc.t)
    if (k.sym.degree() < N) {
      out.message = "cocycle condition violated";
      return out;
    }

  const Mask top = static_cast<Mask>((1u << n) - 1);
  std::vector<int> hbars;
  for (const auto& [k, c] : a2.t)
    if (std::find(hbars.begin(), hbars.end(), k.hbar) == hbars.end()) hbars.push_back(k.hbar);
  std::sort(hbars.begin(), hbars.end());

  for (int h : hbars) {
    std::vector<Mono> unknowns = monos_in_range(n, 0, N - 3);
    std::map<std::pair<Mono, Mask>, std::size_t> eq_index;
    std::vector<PolyVector> cols(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      PolyVector g;
      g.add(PVKey{unknowns[u], top, h}, Rat(1));
      cols[u] = koszul_dW(g, W, n);
      for (const auto& [k, c] : cols[u].t)
        if (k.sym.degree() < N) eq_index.emplace(std::make_pair(k.sym, k.vec), 0);
    }
    for (const auto& [k, c] : a2.t)
      if (k.hbar == h && k.sym.degree() < N) eq_index.emplace(std::make_pair(k.sym, k.vec), 0);
    std::size_t idx = 0;
    for (auto& [k, i] : eq_index) i = idx++;

    SparseSolver sys;
    sys.ncols = static_cast<int>(unknowns.size());
    sys.rows.resize(eq_index.size());
    for (const auto& [k, c] : a2.t)
      if (k.hbar == h && k.sym.degree() < N)
        sys.rows[eq_index[{k.sym, k.vec}]].b = -c;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (const auto& [k, c] : cols[u].t)
        if (k.sym.degree() < N) sys.rows[eq_index[{k.sym, k.vec}]].a[static_cast<int>(u)] += c;

    int bad = -1;
    auto sol = sys.solve(&bad);
    if (!sol) {
      out.message = "no solution in hbar layer " + std::to_string(h);
      return out;
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      out.gamma3.add(PVKey{unknowns[u], top, h}, (*sol)[u]);
  }

  out.residual = koszul_dW(out.gamma3, W, n);
  out.residual.add(a2);
  PolyVector low;
  for (const auto& [k, c] : out.residual.t)
    if (k.sym.degree() < N) low.add(k, c);
  out.residual = low;
  out.ok = out.residual.is_zero();
  if (!out.ok) out.message = "nonzero residual";
  return out;
}

}  // namespace ainf
