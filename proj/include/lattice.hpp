#pragma once

#include "cox.hpp"
#include "gf.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lattice {

struct UnsupportedP : std::runtime_error {
  explicit UnsupportedP(uint32_t p)
      : std::runtime_error("p = " + std::to_string(p) +
                           " is not supported by the closed-form subgroup "
                           "rules, which require a prime p > 3") {}
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(uint64_t needed, uint64_t budget)
      : std::runtime_error("enumeration needs " + std::to_string(needed) +
                           " elements, over the budget of " +
                           std::to_string(budget)) {}
};

struct UnmatchedSubgroup : std::runtime_error {
  UnmatchedSubgroup()
      : std::runtime_error(
            "closure does not equal any named subgroup; the classification "
            "or the implementation is wrong") {}
};

inline constexpr uint64_t kDefaultMaxElements = 507;  // 3 * 13^2

// Index of an order-p line subgroup H(i): a residue in [0, p) or infinity.
struct HIndex {
  static HIndex at(uint32_t i) { return HIndex{false, i}; }
  static HIndex infinity() { return HIndex{true, 0}; }
  bool is_infinity() const { return infinite_; }
  uint32_t value() const { return i_; }

  friend bool operator==(const HIndex&, const HIndex&) = default;
  friend bool operator<(const HIndex& a, const HIndex& b) {
    if (a.infinite_ != b.infinite_) return !a.infinite_;  // finite first
    return a.i_ < b.i_;
  }

 private:
  HIndex(bool inf, uint32_t i) : infinite_(inf), i_(i) {}
  bool infinite_;
  uint32_t i_;
};

struct Tag {
  enum class Kind : uint8_t { Trivial, Gpoint, Hline, Kmax, SylowP, Full };

  Kind kind = Kind::Trivial;
  HIndex h = HIndex::at(0);  // Hline, Kmax
  uint32_t k = 0;            // Gpoint
  uint32_t l = 0;            // Gpoint, Kmax

  static Tag trivial() { return Tag{Kind::Trivial, HIndex::at(0), 0, 0}; }
  static Tag full() { return Tag{Kind::Full, HIndex::at(0), 0, 0}; }
  static Tag sylow_p() { return Tag{Kind::SylowP, HIndex::at(0), 0, 0}; }
  static Tag hline(HIndex i) { return Tag{Kind::Hline, i, 0, 0}; }
  static Tag gpoint(uint32_t k, uint32_t l) {
    return Tag{Kind::Gpoint, HIndex::at(0), k, l};
  }
  static Tag kmax(uint32_t i, uint32_t l) {
    return Tag{Kind::Kmax, HIndex::at(i), 0, l};
  }

  std::string label() const;

  friend bool operator==(const Tag&, const Tag&) = default;
  friend bool operator<(const Tag& a, const Tag& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (!(a.h == b.h)) return a.h < b.h;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  }
};

// A named subgroup of E(p) with its generator words and full element set.
struct Subgroup {
  uint32_t p = 0;
  Tag tag;
  std::vector<cox::Word> generator_words;
  std::vector<uint32_t> elements;  // sorted E(p) codes
  uint32_t order() const { return uint32_t(elements.size()); }
};

// Generator words from the closed-form rules.
cox::Word h_word(HIndex i);                  // x^2 y (x y^2)^i; infinity: x y^2
cox::Word g_word(int64_t k, int64_t l);      // (x^2y)^-k (xy^2)^-l x (x^2y)^k (xy^2)^l

// Residues i in [0, p) with i^2 + i + 1 = 0 (mod p), by exhaustive scan.
std::vector<uint32_t> solve_congruence(uint32_t p);

// Trivial, Full, the Sylow p-subgroup H, the p+1 lines H(i), the p^2 points
// G(k,l), and (when the congruence has solutions) the 2p maximal K(i,l).
std::vector<Subgroup> named_subgroups(uint32_t p);

// Join by the closed-form rules; returns a member of `family`.
const Subgroup& join(const Subgroup& a, const Subgroup& b,
                     const std::vector<Subgroup>& family);

// Join by closing the union of the element sets in E(p), matched back to a
// member of `family` by element-set equality.
const Subgroup& join_oracle(const Subgroup& a, const Subgroup& b,
                            const std::vector<Subgroup>& family);

// Every subgroup of E(p), found by closing all subsets of size <= 2 plus the
// full group. Returns sorted element-code sets, deduplicated, ordered by
// (size, content). Works for any prime p with 3p^2 within budget.
std::vector<std::vector<uint32_t>> brute_force_subgroups(
    uint32_t p, uint64_t max_elements = kDefaultMaxElements);

struct LatticeGraph {
  uint32_t p = 0;
  std::vector<Subgroup> nodes;  // sorted by (order, tag)
  // Hasse covering pairs (child index, parent index), sorted.
  std::vector<std::pair<uint32_t, uint32_t>> edges;
};

LatticeGraph build_lattice(uint32_t p);

struct ConjugationReport {
  bool ok = false;
  uint64_t triples_checked = 0;
  std::optional<std::array<uint32_t, 3>> first_failure;  // (i, k, l)
};

// h(i)^-1 g(k,l) h(i) = g(k+1, l+i) for all i, k, l in [0, p).
ConjugationReport conjugation_check(uint32_t p);

}  // namespace lattice
