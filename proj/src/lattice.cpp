#include "lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace lattice {

namespace {

using cox::Letter;
using cox::Word;

// E(p) on element codes, with a full multiplication table for small sizes.
struct CodedGroup {
  static constexpr uint32_t kTableMax = 4096;

  cox::Group g;
  uint32_t size;
  std::vector<uint16_t> tab;

  explicit CodedGroup(uint32_t n) : g(n), size(uint32_t(g.size())) {
    if (size <= kTableMax) {
      const auto all = g.enumerate();
      tab.resize(size_t(size) * size);
      for (uint32_t i = 0; i < size; ++i)
        for (uint32_t j = 0; j < size; ++j)
          tab[size_t(i) * size + j] =
              uint16_t(g.code(cox::mul(all[i], all[j])));
    }
  }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!tab.empty()) return tab[size_t(a) * size + b];
    return g.code(cox::mul(g.from_code(a), g.from_code(b)));
  }
};

// Subgroup generated by `gens`: the orbit of the identity under right
// multiplication (inverses are powers in a finite group). Returns sorted codes.
std::vector<uint32_t> orbit(const CodedGroup& G,
                            const std::vector<uint32_t>& gens) {
  std::vector<uint8_t> seen(G.size, 0);
  std::vector<uint32_t> work;
  work.reserve(64);
  const uint32_t e = G.g.code(G.g.identity());
  seen[e] = 1;
  work.push_back(e);
  for (size_t i = 0; i < work.size(); ++i) {
    for (uint32_t gen : gens) {
      const uint32_t z = G.mul(work[i], gen);
      if (!seen[z]) {
        seen[z] = 1;
        work.push_back(z);
      }
    }
  }
  std::vector<uint32_t> out;
  out.reserve(work.size());
  for (uint32_t c = 0; c < G.size; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

uint32_t mod_inv(uint32_t x, uint32_t p) {
  uint32_t result = 1, base = x % p;
  uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = uint32_t(uint64_t(result) * base % p);
    base = uint32_t(uint64_t(base) * base % p);
    e >>= 1;
  }
  return result;
}

bool is_solution(const HIndex& i, const std::vector<uint32_t>& sols) {
  return !i.is_infinity() &&
         std::find(sols.begin(), sols.end(), i.value()) != sols.end();
}

Tag join_tag(const Tag& a, const Tag& b, uint32_t p,
             const std::vector<uint32_t>& sols) {
  using K = Tag::Kind;
  if (a == b) return a;
  if (a.kind == K::Trivial) return b;
  if (b.kind == K::Trivial) return a;
  if (a.kind == K::Full || b.kind == K::Full) return Tag::full();

  if (a.kind == K::SylowP || b.kind == K::SylowP) {
    const Tag& other = a.kind == K::SylowP ? b : a;
    return other.kind == K::Hline ? Tag::sylow_p() : Tag::full();
  }

  if (a.kind == K::Hline && b.kind == K::Hline) return Tag::sylow_p();

  if ((a.kind == K::Hline && b.kind == K::Gpoint) ||
      (a.kind == K::Gpoint && b.kind == K::Hline)) {
    const Tag& h = a.kind == K::Hline ? a : b;
    const Tag& g = a.kind == K::Hline ? b : a;
    if (!is_solution(h.h, sols)) return Tag::full();
    const uint32_t i = h.h.value();
    const uint32_t l = uint32_t((g.l + uint64_t(p) * p - uint64_t(i) * g.k) % p);
    return Tag::kmax(i, l);
  }

  if ((a.kind == K::Hline && b.kind == K::Kmax) ||
      (a.kind == K::Kmax && b.kind == K::Hline)) {
    const Tag& h = a.kind == K::Hline ? a : b;
    const Tag& km = a.kind == K::Hline ? b : a;
    return h.h == km.h ? km : Tag::full();
  }

  if (a.kind == K::Gpoint && b.kind == K::Gpoint) {
    if (a.k == b.k) return Tag::full();  // distinct l on the same vertical
    const uint32_t dk = uint32_t((b.k + p - a.k) % p);
    const uint32_t dl = uint32_t((b.l + p - a.l) % p);
    const uint32_t i = uint32_t(uint64_t(dl) * mod_inv(dk, p) % p);
    if (std::find(sols.begin(), sols.end(), i) == sols.end())
      return Tag::full();
    const uint32_t l = uint32_t((a.l + uint64_t(p) * p - uint64_t(i) * a.k) % p);
    return Tag::kmax(i, l);
  }

  if ((a.kind == K::Gpoint && b.kind == K::Kmax) ||
      (a.kind == K::Kmax && b.kind == K::Gpoint)) {
    const Tag& g = a.kind == K::Gpoint ? a : b;
    const Tag& km = a.kind == K::Gpoint ? b : a;
    const uint32_t i = km.h.value();
    const bool inside = (g.l % p) == (km.l + uint64_t(i) * g.k) % p;
    return inside ? km : Tag::full();
  }

  // two distinct maximal subgroups of order 3p
  return Tag::full();
}

const Subgroup& find_by_tag(const std::vector<Subgroup>& family,
                            const Tag& tag) {
  for (const Subgroup& s : family)
    if (s.tag == tag) return s;
  throw UnmatchedSubgroup();
}

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t w : v) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return size_t(h);
  }
};

}  // namespace

std::string Tag::label() const {
  switch (kind) {
    case Kind::Trivial:
      return "1";
    case Kind::Full:
      return "G";
    case Kind::SylowP:
      return "H";
    case Kind::Hline:
      return h.is_infinity() ? "H(inf)" : "H(" + std::to_string(h.value()) + ")";
    case Kind::Gpoint:
      return "G(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case Kind::Kmax:
      return "K(" + std::to_string(h.value()) + "," + std::to_string(l) + ")";
  }
  return "?";
}

Word h_word(HIndex i) {
  const Word x2y{Letter::x, Letter::x, Letter::y};
  const Word xy2{Letter::x, Letter::y, Letter::y};
  if (i.is_infinity()) return xy2;
  return cox::concat(x2y, cox::word_pow(xy2, int64_t(i.value())));
}

Word g_word(int64_t k, int64_t l) {
  const Word x2y{Letter::x, Letter::x, Letter::y};
  const Word xy2{Letter::x, Letter::y, Letter::y};
  Word w = cox::concat(cox::word_pow(x2y, -k), cox::word_pow(xy2, -l));
  w.push_back(Letter::x);
  w = cox::concat(w, cox::word_pow(x2y, k));
  return cox::concat(w, cox::word_pow(xy2, l));
}

std::vector<uint32_t> solve_congruence(uint32_t p) {
  if (!gf::is_prime(p)) throw gf::NotPrime(p);
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < p; ++i) {
    if ((uint64_t(i) * i + i + 1) % p == 0) out.push_back(i);
  }
  return out;
}

std::vector<Subgroup> named_subgroups(uint32_t p) {
  if (!gf::is_prime(p)) throw gf::NotPrime(p);
  if (p <= 3) throw UnsupportedP(p);

  const CodedGroup G(p);
  auto make = [&](Tag tag, std::vector<Word> words) {
    std::vector<uint32_t> gens;
    gens.reserve(words.size());
    for (const Word& w : words) gens.push_back(G.g.code(eval_word(G.g, w)));
    Subgroup s;
    s.p = p;
    s.tag = tag;
    s.generator_words = std::move(words);
    s.elements = orbit(G, gens);
    return s;
  };

  std::vector<Subgroup> out;
  out.push_back(make(Tag::trivial(), {}));
  out.push_back(make(Tag::full(), {Word{Letter::x}, Word{Letter::y}}));
  out.push_back(make(Tag::sylow_p(), {h_word(HIndex::at(0)), h_word(HIndex::infinity())}));
  for (uint32_t i = 0; i < p; ++i)
    out.push_back(make(Tag::hline(HIndex::at(i)), {h_word(HIndex::at(i))}));
  out.push_back(make(Tag::hline(HIndex::infinity()), {h_word(HIndex::infinity())}));
  for (uint32_t k = 0; k < p; ++k)
    for (uint32_t l = 0; l < p; ++l)
      out.push_back(make(Tag::gpoint(k, l), {g_word(k, l)}));
  for (uint32_t i : solve_congruence(p))
    for (uint32_t l = 0; l < p; ++l)
      out.push_back(make(Tag::kmax(i, l), {h_word(HIndex::at(i)), g_word(0, l)}));
  return out;
}

const Subgroup& join(const Subgroup& a, const Subgroup& b,
                     const std::vector<Subgroup>& family) {
  if (a.p != b.p) throw cox::GroupMismatch();
  return find_by_tag(family, join_tag(a.tag, b.tag, a.p, solve_congruence(a.p)));
}

const Subgroup& join_oracle(const Subgroup& a, const Subgroup& b,
                            const std::vector<Subgroup>& family) {
  if (a.p != b.p) throw cox::GroupMismatch();
  const CodedGroup G(a.p);
  std::vector<uint32_t> gens = a.elements;
  gens.insert(gens.end(), b.elements.begin(), b.elements.end());
  const std::vector<uint32_t> closure = orbit(G, gens);
  for (const Subgroup& s : family)
    if (s.elements == closure) return s;
  throw UnmatchedSubgroup();
}

std::vector<std::vector<uint32_t>> brute_force_subgroups(uint32_t p,
                                                         uint64_t max_elements) {
  if (!gf::is_prime(p)) throw gf::NotPrime(p);
  const uint64_t n = 3ull * p * p;
  if (n > max_elements) throw BudgetExceeded(n, max_elements);

  const CodedGroup G(p);
  std::unordered_set<std::vector<uint32_t>, VecHash> found;

  found.insert(orbit(G, {}));  // the trivial subgroup
  for (uint32_t c = 0; c < G.size; ++c) found.insert(orbit(G, {c}));
  for (uint32_t c1 = 0; c1 < G.size; ++c1)
    for (uint32_t c2 = c1 + 1; c2 < G.size; ++c2)
      found.insert(orbit(G, {c1, c2}));
  {
    std::vector<uint32_t> all(G.size);
    for (uint32_t c = 0; c < G.size; ++c) all[c] = c;
    found.insert(orbit(G, all));
  }

  std::vector<std::vector<uint32_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

LatticeGraph build_lattice(uint32_t p) {
  LatticeGraph graph;
  graph.p = p;
  graph.nodes = named_subgroups(p);
  std::sort(graph.nodes.begin(), graph.nodes.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.tag < b.tag;
            });

  const size_t n = graph.nodes.size();
  const uint32_t universe = 3u * p * p;
  const size_t words = (universe + 63) / 64;
  std::vector<std::vector<uint64_t>> bits(n, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < n; ++i)
    for (uint32_t c : graph.nodes[i].elements) bits[i][c / 64] |= 1ull << (c % 64);

  auto proper_subset = [&](size_t i, size_t j) {
    if (graph.nodes[i].order() >= graph.nodes[j].order()) return false;
    for (size_t w = 0; w < words; ++w)
      if ((bits[i][w] & ~bits[j][w]) != 0) return false;
    return true;
  };

  std::vector<std::vector<uint8_t>> lt(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && proper_subset(i, j)) lt[i][j] = 1;

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool covering = true;
      for (size_t m = 0; m < n && covering; ++m)
        if (lt[i][m] && lt[m][j]) covering = false;
      if (covering) graph.edges.emplace_back(uint32_t(i), uint32_t(j));
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

ConjugationReport conjugation_check(uint32_t p) {
  if (!gf::is_prime(p)) throw gf::NotPrime(p);
  if (p <= 3) throw UnsupportedP(p);

  const cox::Group g(p);
  std::vector<cox::Element> h(p);
  for (uint32_t i = 0; i < p; ++i) h[i] = eval_word(g, h_word(HIndex::at(i)));
  std::vector<std::vector<cox::Element>> gp(p, std::vector<cox::Element>(p));
  for (uint32_t k = 0; k < p; ++k)
    for (uint32_t l = 0; l < p; ++l) gp[k][l] = eval_word(g, g_word(k, l));

  ConjugationReport r;
  for (uint32_t i = 0; i < p; ++i) {
    for (uint32_t k = 0; k < p; ++k) {
      for (uint32_t l = 0; l < p; ++l) {
        ++r.triples_checked;
        const cox::Element lhs = mul(mul(inv(h[i]), gp[k][l]), h[i]);
        if (!(lhs == gp[(k + 1) % p][(l + i) % p])) {
          r.first_failure = {{i, k, l}};
          return r;
        }
      }
    }
  }
  r.ok = true;
  return r;
}

}  // namespace lattice
