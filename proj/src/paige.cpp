#include "paige.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace paige {

namespace {

struct CoordsHash {
  size_t operator()(const zorn::Coords& c) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t w : c) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return size_t(h);
  }
};

using CoordsMap = std::unordered_map<zorn::Coords, uint32_t, CoordsHash>;

}  // namespace

Generators standard_generators(const gf::Field& f) {
  const uint64_t q = f.order();
  if (!(q == 2 || (q % 2 == 1 && q != 9))) throw UnsupportedQ(q);

  const uint32_t one = f.one_code();
  const uint32_t u = f.primitive().code();
  const uint32_t minus_u_inv = f.neg_code(f.inv_code(u));

  const zorn::VectorMatrix g1(f, {one, one, 0, 0, 0, 0, 0, one});
  const zorn::VectorMatrix g2(f, {one, 0, one, 0, 0, 0, 0, one});
  const zorn::VectorMatrix g3(f, {0, 0, 0, u, 0, 0, minus_u_inv, one});

  return Generators{project(g1),
                    project(g2),
                    project(g3),
                    project(zorn_mul(g3, g1)),
                    project(zorn_mul(g3, g2)),
                    f.primitive()};
}

bool Closure::contains(const zorn::PaigeElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

size_t Closure::index_of(const zorn::PaigeElement& x) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x))
    throw std::out_of_range("element not in closure");
  return size_t(it - elements_.begin());
}

Closure close(const gf::Field& f, const std::vector<zorn::PaigeElement>& gens,
              uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  for (const auto& g : gens)
    if (!g.field().same_field(f)) throw gf::FieldMismatch();

  const uint64_t q = f.order();
  const bool use_bitmap = q <= 8;  // q^8 <= 16.7M slots
  std::vector<uint8_t> bitmap;
  std::unordered_set<zorn::Coords, CoordsHash> set;
  if (use_bitmap) {
    uint64_t slots = 1;
    for (int i = 0; i < 8; ++i) slots *= q;
    bitmap.assign(slots, 0);
  } else {
    set.reserve(4096);
  }

  std::vector<zorn::Coords> elems;
  auto try_insert = [&](const zorn::Coords& c) {
    if (use_bitmap) {
      uint64_t k = 0;
      for (int i = 0; i < 8; ++i) k = k * q + c[i];
      if (bitmap[k]) return;
      bitmap[k] = 1;
    } else {
      if (!set.insert(c).second) return;
    }
    elems.push_back(c);
    if (elems.size() > cap) throw CapExceeded(elems.size(), cap);
  };

  try_insert(zorn::canonical_raw(f, zorn::identity_raw(f)));
  {
    std::vector<zorn::Coords> seeds;
    seeds.reserve(gens.size());
    for (const auto& g : gens) seeds.push_back(g.coords());
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    for (const auto& s : seeds) try_insert(s);
  }

  // Every ordered pair (i, j) is multiplied exactly once, when max(i, j) is
  // processed; elements discovered along the way join the queue.
  for (size_t w = 0; w < elems.size(); ++w) {
    const zorn::Coords xw = elems[w];
    try_insert(zorn::canonical_raw(f, zorn::adjugate_raw(f, xw)));
    for (size_t j = 0; j <= w; ++j) {
      const zorn::Coords xj = elems[j];
      try_insert(zorn::canonical_raw(f, zorn::mul_raw(f, xw, xj)));
      if (j != w)
        try_insert(zorn::canonical_raw(f, zorn::mul_raw(f, xj, xw)));
    }
  }

  std::sort(elems.begin(), elems.end());
  std::vector<zorn::PaigeElement> out;
  out.reserve(elems.size());
  for (const auto& c : elems)
    out.push_back(zorn::PaigeElement::from_canonical(f, c));
  return Closure(f, std::move(out), gens);
}

CayleyTable CayleyTable::build(const Closure& c) {
  const size_t n = c.size();
  if (n > kMaxSize)
    throw std::invalid_argument("closure too large for a Cayley table");
  const gf::Field& f = c.field();

  CoordsMap index;
  index.reserve(2 * n);
  for (size_t i = 0; i < n; ++i)
    index.emplace(c.elements()[i].coords(), uint32_t(i));

  CayleyTable t;
  t.n_ = uint32_t(n);
  t.mul_.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    const zorn::Coords& a = c.elements()[i].coords();
    for (size_t j = 0; j < n; ++j) {
      const zorn::Coords p =
          zorn::canonical_raw(f, zorn::mul_raw(f, a, c.elements()[j].coords()));
      const auto it = index.find(p);
      if (it == index.end())
        throw std::logic_error("product escapes the closure; set is not closed");
      t.mul_[i * n + j] = it->second;
    }
  }
  return t;
}

MoufangReport verify_moufang_table(const CayleyTable& t, const CheckMode& mode,
                                   uint64_t triple_budget) {
  const uint64_t n = t.size();
  MoufangReport r;
  auto violates = [&](uint32_t x, uint32_t y, uint32_t z) {
    const uint32_t lhs = t.at(t.at(x, y), t.at(z, x));
    const uint32_t rhs = t.at(t.at(x, t.at(y, z)), x);
    return lhs != rhs;
  };
  if (mode.exhaustive) {
    const unsigned __int128 total = (unsigned __int128)n * n * n;
    if (total > triple_budget)
      throw CapExceeded(uint64_t(total > ~uint64_t{0} ? ~uint64_t{0} : total),
                        triple_budget);
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y)
        for (uint32_t z = 0; z < n; ++z) {
          ++r.triples_checked;
          if (violates(x, y, z)) {
            r.witness = {{x, y, z}};
            return r;
          }
        }
  } else {
    std::mt19937_64 rng(mode.seed);
    for (uint64_t i = 0; i < mode.samples; ++i) {
      const uint32_t x = uint32_t(rng() % n);
      const uint32_t y = uint32_t(rng() % n);
      const uint32_t z = uint32_t(rng() % n);
      ++r.triples_checked;
      if (violates(x, y, z)) {
        r.witness = {{x, y, z}};
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

MoufangReport verify_moufang(const Closure& c, const CheckMode& mode,
                             uint64_t triple_budget) {
  const gf::Field& f = c.field();
  const auto& els = c.elements();
  const uint64_t n = els.size();

  if (n <= CayleyTable::kMaxSize)
    return verify_moufang_table(CayleyTable::build(c), mode, triple_budget);

  auto mul = [&](const zorn::Coords& a, const zorn::Coords& b) {
    return zorn::canonical_raw(f, zorn::mul_raw(f, a, b));
  };
  auto violates = [&](size_t xi, size_t yi, size_t zi) {
    const zorn::Coords& x = els[xi].coords();
    const zorn::Coords& y = els[yi].coords();
    const zorn::Coords& z = els[zi].coords();
    return mul(mul(x, y), mul(z, x)) != mul(mul(x, mul(y, z)), x);
  };

  MoufangReport r;
  if (mode.exhaustive) {
    const unsigned __int128 total = (unsigned __int128)n * n * n;
    if (total > triple_budget)
      throw CapExceeded(uint64_t(total > ~uint64_t{0} ? ~uint64_t{0} : total),
                        triple_budget);
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        for (size_t z = 0; z < n; ++z) {
          ++r.triples_checked;
          if (violates(x, y, z)) {
            r.witness = {{x, y, z}};
            return r;
          }
        }
  } else {
    std::mt19937_64 rng(mode.seed);
    for (uint64_t i = 0; i < mode.samples; ++i) {
      const size_t x = size_t(rng() % n);
      const size_t y = size_t(rng() % n);
      const size_t z = size_t(rng() % n);
      ++r.triples_checked;
      if (violates(x, y, z)) {
        r.witness = {{x, y, z}};
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

GenerationReport verify_generation(const gf::Field& f, uint64_t cap) {
  const Generators g = standard_generators(f);
  const uint64_t expected = zorn::paige_loop_order(f.order());
  if (expected > cap) throw CapExceeded(expected, cap);

  const Closure c = close(f, {g.g3, g.g4, g.g5}, cap);
  GenerationReport r;
  r.q = f.order();
  r.closure_size = c.size();
  r.expected_size = expected;
  r.generator_orders = {element_order(g.g3), element_order(g.g4),
                        element_order(g.g5)};
  r.ok = r.closure_size == expected &&
         r.generator_orders == std::array<uint64_t, 3>{3, 3, 3};
  return r;
}

}  // namespace paige
