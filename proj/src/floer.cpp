#include "ainfty/floer.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ainf {
namespace {

int gen_id(const FloerData& fd, const std::string& name) {
  for (int g = 0; g < 8; ++g)
    if (fd.names[static_cast<std::size_t>(g)] == name) return g;
  throw std::runtime_error("unknown generator " + name);
}

Mask parse_mask(const std::string& s) {
  if (s == ".") return 0;
  Mask m = 0;
  for (char ch : s) {
    if (ch < '1' || ch > '3') throw std::runtime_error("bad mask " + s);
    m |= static_cast<Mask>(1u << (ch - '1'));
  }
  return m;
}

}  // namespace

std::string default_data_dir() { return AINFTY_DATA_DIR; }

FloerData load_floer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  FloerData fd;
  int n_gen = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "version") {
      int v;
      ls >> v;
      if (v != 1) throw std::runtime_error("unsupported table version");
    } else if (tag == "generator") {
      if (n_gen >= 8) throw std::runtime_error("too many generators");
      std::string name;
      int idx, w1, w2, w3;
      if (!(ls >> name >> idx >> w1 >> w2 >> w3)) throw std::runtime_error("bad generator line");
      fd.names[static_cast<std::size_t>(n_gen)] = name;
      fd.basis.index[static_cast<std::size_t>(n_gen)] = idx;
      fd.basis.weight[static_cast<std::size_t>(n_gen)] = {w1, w2, w3};
      ++n_gen;
    } else if (tag == "dict") {
      std::string name, sign, mask;
      if (!(ls >> name >> sign >> mask)) throw std::runtime_error("bad dict line");
      int g = gen_id(fd, name);
      fd.dict.sign[static_cast<std::size_t>(g)] = sign == "-" ? -1 : 1;
      fd.dict.mask[static_cast<std::size_t>(g)] = parse_mask(mask);
    } else if (tag == "mu") {
      int d, k;
      if (!(ls >> d >> k)) throw std::runtime_error("bad mu line");
      std::vector<int> tuple;
      std::string tok;
      while (ls >> tok && tok != "=") tuple.push_back(gen_id(fd, tok));
      if (tok != "=" || static_cast<int>(tuple.size()) != d)
        throw std::runtime_error("bad mu line arity");
      std::string sign;
      if (!(ls >> sign)) throw std::runtime_error("bad mu value");
      FloerEntry e;
      if (sign == "0") {
        e.gen = -1;
      } else {
        std::string out;
        if (!(ls >> out)) throw std::runtime_error("bad mu value");
        e.coeff = Rat(sign == "-" ? -1 : 1);
        e.gen = gen_id(fd, out);
      }
      fd.tables.mu[{d, k}][tuple] = e;
    } else if (tag == "default") {
      int d, k;
      std::string cls, val;
      if (!(ls >> d >> k >> cls >> val) || cls != "x" || val != "0")
        throw std::runtime_error("bad default line");
      std::vector<int> xs = {gen_id(fd, "x1"), gen_id(fd, "x2"), gen_id(fd, "x3")};
      std::vector<int> tuple(static_cast<std::size_t>(d), 0);
      long total = 1;
      for (int i = 0; i < d; ++i) total *= 3;
      auto& tab = fd.tables.mu[{d, k}];
      for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < d; ++i) {
          tuple[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(c % 3)];
          c /= 3;
        }
        tab.emplace(tuple, FloerEntry{});
      }
    } else {
      throw std::runtime_error("unknown tag " + tag);
    }
  }
  if (n_gen != 8) throw std::runtime_error("expected 8 generators");
  return fd;
}

AInftyStructure transport(const FloerData& fd) {
  AInftyStructure out;
  out.n = 3;
  for (const auto& [dk, tab] : fd.tables.mu) {
    out.d_max = std::max(out.d_max, dk.first);
    for (const auto& [tuple, e] : tab) {
      if (e.gen < 0 || ainf::is_zero(e.coeff)) continue;
      Rat c = e.coeff * fd.dict.sign[static_cast<std::size_t>(e.gen)];
      std::vector<Mask> masks;
      for (int g : tuple) {
        c *= fd.dict.sign[static_cast<std::size_t>(g)];
        masks.push_back(fd.dict.mask[static_cast<std::size_t>(g)]);
      }
      out.mu[dk].c[{pack_tuple(masks), fd.dict.mask[static_cast<std::size_t>(e.gen)]}] += c;
    }
  }
  return out;
}

VerifyReport validate_floer(const FloerData& fd) {
  VerifyReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_failure = msg;
    }
  };

  // Dictionary consistency.
  for (int g = 0; g < 8; ++g) {
    auto gu = static_cast<std::size_t>(g);
    if (mask_size(fd.dict.mask[gu]) != fd.basis.index[gu])
      fail("dict degree mismatch for " + fd.names[gu]);
    Weight wm = mask_weight(fd.dict.mask[gu]);
    Weight diff{};
    for (int i = 0; i < 3; ++i)
      diff[i] = ((wm[i] - fd.basis.weight[gu][static_cast<std::size_t>(i)]) % 5 + 5) % 5;
    if (!weight_diagonal(diff, 3)) fail("dict weight mismatch for " + fd.names[gu]);
  }

  // Transported mu^2 equals the signed wedge on defined pairs.
  if (auto it = fd.tables.mu.find({2, 0}); it != fd.tables.mu.end()) {
    for (const auto& [tuple, e] : it->second) {
      auto a2 = static_cast<std::size_t>(tuple[0]), a1 = static_cast<std::size_t>(tuple[1]);
      AElem lhs = mu2_standard(AElem::basis(fd.dict.mask[a2], Rat(fd.dict.sign[a2])),
                               AElem::basis(fd.dict.mask[a1], Rat(fd.dict.sign[a1])));
      AElem rhs;
      if (e.gen >= 0) {
        auto go = static_cast<std::size_t>(e.gen);
        rhs = AElem::basis(fd.dict.mask[go], e.coeff * fd.dict.sign[go]);
      }
      if (!(lhs == rhs))
        fail("mu^2 disagrees with the signed wedge at (" + fd.names[a2] + "," + fd.names[a1] + ")");
    }
  }
  for (const auto& [dk, tab] : fd.tables.mu)
    if (dk.first == 2 && dk.second > 0 && !tab.empty()) fail("mu^2 has an hbar tail");

  // Index and weight laws on nonzero entries.
  for (const auto& [dk, tab] : fd.tables.mu)
    for (const auto& [tuple, e] : tab) {
      if (e.gen < 0 || ainf::is_zero(e.coeff)) continue;
      int deg = fd.basis.index[static_cast<std::size_t>(e.gen)];
      Weight w{};
      for (int i = 0; i < 3; ++i)
        w[i] = ((-fd.basis.weight[static_cast<std::size_t>(e.gen)][static_cast<std::size_t>(i)]) %
                    5 +
                5) %
               5;
      for (int g : tuple) {
        deg -= fd.basis.index[static_cast<std::size_t>(g)];
        for (int i = 0; i < 3; ++i)
          w[i] = (w[i] + fd.basis.weight[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)]) %
                 5;
      }
      if (deg != 6 - 3 * dk.first + 4 * dk.second) fail("index law fails");
      if (!weight_diagonal(w, 3)) fail("weight balance fails");
    }

  // HKR targets of the transported higher tables.
  AInftyStructure tr = transport(fd);
  auto hkr_of = [&](int d, int k) {
    Cochain c;
    c.arity = d;
    if (const MuTable* tab = tr.table(d, k))
      for (const auto& [key, v] : tab->c) c.add(CKey{key.first, key.second, k}, v);
    return hkr(c, 3);
  };
  PolyVector cubic;
  cubic.add(PVKey{Mono::var(0) * Mono::var(1) * Mono::var(2), 0, 0}, Rat(-1));
  if (!(hkr_of(3, 0) == cubic)) fail("HKR of the (3,0) table is not -v1v2v3");
  PolyVector quintic;
  for (int k = 0; k < 3; ++k) quintic.add(PVKey{Mono::var(k, 5), 0, 1}, Rat(1));
  if (!(hkr_of(5, 1) == quintic)) fail("HKR of the (5,1) table is not v1^5+v2^5+v3^5");

  return rep;
}

}  // namespace ainf
