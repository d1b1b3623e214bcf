#pragma once

// Truncated power series arithmetic, Jacobian ideal membership by exact
// linear algebra, and the constructive reduction of a perturbed W back to W
// by iterated coordinate changes.

#include <optional>
#include <string>
#include <vector>

#include "ainfty/hochschild.hpp"

namespace ainf {

// W = -v_1 v_2 v_3 + v_1^5 + v_2^5 + v_3^5 as an untagged polynomial (n = 3);
// the n = 2 variant -v_1 v_2 ... is not used and not provided.
Poly superpotential_poly();
Poly poly_partial(const Poly& p, int k);
Poly poly_truncate(const Poly& p, int N);
// Smallest degree of a nonzero term; INT_MAX for zero.
int poly_min_order(const Poly& p);

// Power series known modulo F_N; terms of degree >= N are discarded on
// construction and through arithmetic, with the discard recorded.
struct TruncatedSeries {
  Poly poly;
  int N = 0;
  bool discarded = false;

  static TruncatedSeries make(const Poly& p, int N) {
    TruncatedSeries s;
    s.N = N;
    s.poly = poly_truncate(p, N);
    s.discarded = s.poly.t.size() != p.t.size();
    return s;
  }
  // Membership in F_r: no terms of order < r.
  bool in_filtration(int r) const { return poly_min_order(poly) >= r; }
  void add(const TruncatedSeries& o, const Rat& scale = Rat(1)) {
    for (const auto& [m, c] : o.poly.t)
      if (m.degree() < N) poly.add(m, c * scale);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r;
    r.N = a.N;
    for (const auto& [ma, ca] : a.poly.t)
      for (const auto& [mb, cb] : b.poly.t)
        if ((ma * mb).degree() < r.N)
          r.poly.add(ma * mb, ca * cb);
        else
          r.discarded = true;
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.poly == b.poly && a.N == b.N;
  }
};

// Formal coordinate change v_k -> v_k + f_k with f_k in F_2, working mod F_N.
struct CoordChange {
  int n = 3;
  int N = 0;
  std::vector<Poly> f;  // size n

  static CoordChange identity(int n, int N) {
    CoordChange c;
    c.n = n;
    c.N = N;
    c.f.resize(static_cast<std::size_t>(n));
    return c;
  }
  bool is_identity() const {
    for (const auto& p : f)
      if (!p.is_zero()) return false;
    return true;
  }
};

// s composed with c, i.e. substitute v_k -> v_k + f_k, mod F_N.
TruncatedSeries substitute(const TruncatedSeries& s, const CoordChange& c);
// Composite change with substitute(s, compose(c1, c2)) == substitute(substitute(s, c1), c2).
CoordChange compose(const CoordChange& c1, const CoordChange& c2);

// Projection of each f_k to the terms whose weight class matches v_k mod the
// diagonal; equals the group average over the diagonal determinant-one group.
CoordChange equivariant_average(const CoordChange& c);

struct MembershipResult {
  bool ok = false;
  std::vector<Poly> q;  // size n
  Poly remainder;       // f - sum q_k d_kW, exact
  int infeasible_degree = -1;
};

// Solve f = sum_k q_k d_kW + remainder with remainder in F_N, degreewise by
// exact Gaussian elimination over Q (first admissible column in canonical
// monomial order, free unknowns zero). q_k monomial degrees are restricted to
// [q_min_degree, q_max_degree]; q_max_degree < 0 means N - 1 - min order of
// the d_kW. On failure reports the smallest monomial degree of an
// inconsistent equation.
MembershipResult ideal_membership(const TruncatedSeries& f, const Poly& W, int N, int n = 3,
                                  int q_min_degree = 0, int q_max_degree = -1);

struct ReductionResult {
  bool ok = false;
  CoordChange c;
  Poly residual;  // substitute(W', c) - W mod F_N, recomputed from scratch
  std::string message;
};

// Iterated reduction W' -> W mod F_N for odd G-invariant W' with W' = W mod
// F_7. Each step r = 7, 9, ... solves the degree-(r, r+1) membership problem
// with q in F_{r-2}, averages the step to its equivariant part, and
// substitutes; the final residual is verified by an independent substitution.
ReductionResult reduce_to_W(const TruncatedSeries& w_prime, int N, int n = 3);

struct TwoFormResult {
  bool ok = false;
  PolyVector gamma3;
  PolyVector residual;  // iota_{dW} gamma3 + a2 mod F_N
  std::string message;
};

// Solve iota_{dW} gamma3 = -a2 mod F_N for gamma3 in Sym (x) Lambda^3, given
// a two-form a2 with iota_{dW} a2 = 0 mod F_N. Each hbar layer is solved
// independently.
TwoFormResult solve_two_form(const PolyVector& a2, const Poly& W, int N, int n = 3);

}  // namespace ainf
