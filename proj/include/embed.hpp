#pragma once

#include "cox.hpp"
#include "paige.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace embed {

enum class GenPair : uint8_t { g34, g35, g45 };

std::string pair_name(GenPair pair);  // "34", "35", "45"

struct RelationResult {
  std::string word;
  uint64_t exponent = 0;     // the power that must reach the identity
  uint64_t order_found = 0;  // actual order of the base element
  bool holds = false;
};

struct EmbeddingReport {
  uint64_t q = 0;
  uint32_t p = 0;
  GenPair pair = GenPair::g34;
  std::array<RelationResult, 6> relations;
  bool relations_ok = false;
  uint64_t closure_size = 0;
  uint64_t expected_size = 0;  // 3p^2
  bool size_ok = false;
  // p = 3 branch: the first generator must lie outside <x^2 y, x y^2>.
  bool membership_checked = false;
  bool membership_ok = true;
  bool iso_bijective = false;
  bool iso_multiplicative = false;
  bool ok() const {
    return relations_ok && size_ok && membership_ok && iso_bijective &&
           iso_multiplicative;
  }
};

// Verifies that the subgroup of M*(q) generated by the chosen pair is a
// faithful copy of E(p): the six defining relations, the order count 3p^2,
// and the explicit normal-form bijection phi checked multiplicatively on all
// pairs.
EmbeddingReport verify_embedding(const gf::Field& f, GenPair pair,
                                 uint64_t cap = paige::kDefaultClosureCap);

struct IntersectionReport {
  uint64_t q = 0;
  // closures of (g3,g4), (g3,g5), (g4,g5)
  std::array<uint64_t, 3> closure_sizes{};
  // intersections 34^35, 34^45, 35^45 as element counts
  std::array<uint64_t, 3> intersection_sizes{};
  uint64_t union_closure_size = 0;
  uint64_t loop_order = 0;
};

inline constexpr uint64_t kDefaultUnionCap = 40'000;

// Sizes of the three pair subgroups, their pairwise intersections, and the
// closure of their union (the whole loop). The union closure is refused when
// the loop order exceeds union_cap.
IntersectionReport pairwise_intersections(const gf::Field& f,
                                          uint64_t cap = paige::kDefaultClosureCap,
                                          uint64_t union_cap = kDefaultUnionCap);

}  // namespace embed
