#pragma once

#include "zorn.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace paige {

struct UnsupportedQ : std::runtime_error {
  explicit UnsupportedQ(uint64_t q)
      : std::runtime_error(
            "q = " + std::to_string(q) +
            " is not supported: the generator construction requires q odd "
            "with q != 9, or q = 2") {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(uint64_t reached_, uint64_t cap_)
      : std::runtime_error("closure exceeded cap " + std::to_string(cap_) +
                           " (reached " + std::to_string(reached_) + ")"),
        reached(reached_),
        cap(cap_) {}
  uint64_t reached;
  uint64_t cap;
};

inline constexpr uint64_t kDefaultClosureCap = 1'000'000;

// The five generators of M*(q) built from the designated primitive element u:
// g1 = (1,e1,0,1), g2 = (1,e2,0,1), g3 = (0,u e3,-u^-1 e3,1),
// g4 = g3 g1, g5 = g3 g2.
struct Generators {
  zorn::PaigeElement g1, g2, g3, g4, g5;
  gf::Element u;
};

Generators standard_generators(const gf::Field& f);

// A subset of M*(q) closed under product and inverse, with its generators.
class Closure {
 public:
  Closure(const gf::Field& f, std::vector<zorn::PaigeElement> elements,
          std::vector<zorn::PaigeElement> generators)
      : field_(&f),
        elements_(std::move(elements)),
        generators_(std::move(generators)) {}

  const gf::Field& field() const { return *field_; }
  size_t size() const { return elements_.size(); }
  // Sorted by canonical coordinate order.
  const std::vector<zorn::PaigeElement>& elements() const { return elements_; }
  const std::vector<zorn::PaigeElement>& generators() const {
    return generators_;
  }
  bool contains(const zorn::PaigeElement& x) const;
  // Index into elements(); requires membership.
  size_t index_of(const zorn::PaigeElement& x) const;

 private:
  const gf::Field* field_;
  std::vector<zorn::PaigeElement> elements_;
  std::vector<zorn::PaigeElement> generators_;
};

// Breadth-first closure of {e} u gens under products of all ordered pairs
// and inverses. Deterministic; throws CapExceeded past cap.
Closure close(const gf::Field& f, const std::vector<zorn::PaigeElement>& gens,
              uint64_t cap = kDefaultClosureCap);

// Full multiplication table of a closure, indexed by element position.
class CayleyTable {
 public:
  static constexpr size_t kMaxSize = 4096;
  static CayleyTable build(const Closure& c);

  uint32_t size() const { return n_; }
  uint32_t at(uint32_t i, uint32_t j) const { return mul_[size_t(i) * n_ + j]; }
  void set(uint32_t i, uint32_t j, uint32_t v) { mul_[size_t(i) * n_ + j] = v; }

 private:
  uint32_t n_ = 0;
  std::vector<uint32_t> mul_;
};

struct CheckMode {
  bool exhaustive = false;
  uint64_t samples = 0;
  uint64_t seed = 0;
  static CheckMode Exhaustive() { return {true, 0, 0}; }
  static CheckMode Sampled(uint64_t n, uint64_t seed) {
    return {false, n, seed};
  }
};

inline constexpr uint64_t kDefaultMoufangTripleBudget = 2'000'000'000;

struct MoufangReport {
  bool ok = false;
  uint64_t triples_checked = 0;
  std::optional<std::array<size_t, 3>> witness;  // indices of first violation
};

// Checks (x y)(z x) = (x (y z)) x over all triples or over seeded samples.
MoufangReport verify_moufang(const Closure& c, const CheckMode& mode,
                             uint64_t triple_budget = kDefaultMoufangTripleBudget);
MoufangReport verify_moufang_table(const CayleyTable& t, const CheckMode& mode,
                                   uint64_t triple_budget = kDefaultMoufangTripleBudget);

struct GenerationReport {
  uint64_t q = 0;
  uint64_t closure_size = 0;
  uint64_t expected_size = 0;
  std::array<uint64_t, 3> generator_orders{};
  bool ok = false;
};

// Asserts that {g3,g4,g5} generates the whole loop and that each generator
// has order 3.
GenerationReport verify_generation(const gf::Field& f,
                                   uint64_t cap = kDefaultClosureCap);

}  // namespace paige
