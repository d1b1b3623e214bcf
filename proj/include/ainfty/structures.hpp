#pragma once

// A-infinity structure container, Maurer-Cartan glue, grading and weight
// checks, and the semidirect product with a diagonal cyclic group.

#include <string>

#include "ainfty/hochschild.hpp"
#include "ainfty/transfer.hpp"

namespace ainf {

struct AInftyStructure {
  int n = 3;
  int d_max = 0;
  std::map<std::pair<int, int>, MuTable> mu;  // (arity d, hbar power k)

  static AInftyStructure from_transfer(const TransferResult& t) {
    return AInftyStructure{t.n, t.d_max, t.mu};
  }
  const MuTable* table(int d, int k) const {
    auto it = mu.find({d, k});
    return it == mu.end() ? nullptr : &it->second;
  }
  friend bool operator==(const AInftyStructure&, const AInftyStructure&) = default;
};

// The structure with mu^2 the signed wedge and nothing else.
AInftyStructure wedge_structure(int n);

// alpha^d = mu^d for d != 2; alpha^2 = mu^2 - mu2_standard. Cochain hbar tags
// carry the k-split.
CochainSet to_mc(const AInftyStructure& mu);
AInftyStructure from_mc(const CochainSet& alpha, int n, int d_max);

struct VerifyReport {
  bool ok = true;
  std::string first_failure;
};

// Maurer-Cartan route: mc_residual(to_mc(mu)) = 0 at all arities <= D.
VerifyReport verify_ainfty(const AInftyStructure& mu, int D);
// Independent route: the curved A-infinity relations
// sum_{k,l} (-1)^{|a_1|+...+|a_k|-k} mu(a_j,..,mu(a_{k+l},..,a_{k+1}),..,a_1) = 0
// evaluated directly on the full tables (wedge part included).
VerifyReport verify_ainfty_direct(const AInftyStructure& mu, int D);

// Equivariance: sum of input weights minus output weight lies in the diagonal.
VerifyReport check_weights(const AInftyStructure& mu);
// Index law: |out| - sum |in| = 6 - 3d + 4k on every constant (n = 3).
VerifyReport check_index_degrees(const AInftyStructure& mu);

// Diagonal cyclic subgroup of order 5, given by a character exponent per
// coordinate; xi_k has charge gen[k].
struct GroupSpec {
  int n = 3;
  std::array<int, 8> gen{};  // trivial group: all zero

  static GroupSpec cyclic_113() {
    GroupSpec g;
    g.gen = {1, 1, 3};
    return g;
  }
  int charge(Mask m) const {
    int c = 0;
    for (int k = 0; k < n; ++k)
      if (m & (1u << k)) c += gen[static_cast<std::size_t>(k)];
    return ((c % 5) + 5) % 5;
  }
};

// Semidirect basis element (a, z) with z in Z/5; products follow
// mu^d((a_d,z_d),...) = (mu^d(a_d, z_d.a_{d-1}, (z_d z_{d-1}).a_{d-2}, ...),
// z_d...z_1), where z scales xi_k by zeta^{z gen_k}.
struct SemidirectStructure {
  AInftyStructure base;
  GroupSpec grp;

  // Value of the twisted mu^d_k on ((a_d,z_d),...,(a_1,z_1)); output group
  // element is the product of the z's; returns coefficient per output mask.
  std::map<Mask, Cyc5> eval(int d, int k, const std::vector<std::pair<Mask, int>>& in,
                            int& z_out) const;
};

SemidirectStructure semidirect(const AInftyStructure& mu, const GroupSpec& grp);

// Exhaustive arity-3 associativity relation for the twisted mu^2 over Cyc5.
VerifyReport check_semidirect_assoc(const SemidirectStructure& s);
// Curved relations for the semidirect structure through arity D (flat case).
VerifyReport verify_semidirect(const SemidirectStructure& s, int D);

}  // namespace ainf
