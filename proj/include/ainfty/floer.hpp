#pragma once

// Static genus-two Floer data (eight generators, partial mu tables), its
// dictionary into Lambda(V), and cross-validation of the transported
// constants against the algebraic structure.

#include <string>
#include <vector>

#include "ainfty/structures.hpp"

namespace ainf {

std::string default_data_dir();

struct FloerBasis {
  std::array<int, 8> index{};                 // 0..3; parity = index mod 2
  std::array<std::array<int, 3>, 8> weight{};  // representative in (Z/5)^3
};

struct Dictionary {
  std::array<int, 8> sign{};  // +1 or -1
  std::array<Mask, 8> mask{};
};

// A defined table entry: value coeff * generator, or a defined zero
// (gen = -1). Tuples are stored leftmost-first, (a_d, ..., a_1).
struct FloerEntry {
  Rat coeff;
  int gen = -1;
};

struct FloerTables {
  std::map<std::pair<int, int>, std::map<std::vector<int>, FloerEntry>> mu;
};

struct FloerData {
  FloerBasis basis;
  Dictionary dict;
  FloerTables tables;
  std::array<std::string, 8> names;
};

// Parses the versioned text table; throws std::runtime_error on bad input.
FloerData load_floer(const std::string& path);

// Transported structure constants on the Lambda(V) basis (partial tables;
// defined zeros contribute no entries).
AInftyStructure transport(const FloerData& fd);

// (a) dictionary consistency (parity, Lambda-degree, weight class);
// (b) transported mu^2 equals the signed wedge on every defined pair;
// (c) weight balance and the index law 6 - 3d + 4k on every nonzero entry;
// (d) HKR of the transported (3,0) and (5,1) tables equal -v1v2v3 and
//     v1^5 + v2^5 + v3^5.
VerifyReport validate_floer(const FloerData& fd);

}  // namespace ainf
