#pragma once

#include "embed.hpp"
#include "lattice.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cliapp {

inline constexpr uint64_t kDefaultSeed = 271828;
inline constexpr uint64_t kDefaultSamples = 1'000'000;

struct Budgets {
  uint64_t closure_cap = paige::kDefaultClosureCap;
  uint64_t lattice_max_elements = lattice::kDefaultMaxElements;
  uint64_t moufang_triples = paige::kDefaultMoufangTripleBudget;
  uint64_t union_cap = embed::kDefaultUnionCap;
};

// ZORN_BUDGET, when set to a positive integer, overrides every closure and
// enumeration cap.
Budgets budgets_from_env();

enum class LatticeFormat { dot, json, text };
std::optional<LatticeFormat> parse_format(const std::string& s);

std::string to_dot(const lattice::LatticeGraph& g);
std::string to_json(const lattice::LatticeGraph& g);
std::string to_text(const lattice::LatticeGraph& g);

// Each runner prints a deterministic report and returns the process exit
// code: 0 when every check passed, 1 when a check failed, 2 on invalid input
// or an exceeded budget.
int run_cox(uint32_t n, std::ostream& out);
int run_congruence(uint32_t p, std::ostream& out);
int run_lattice(uint32_t p, LatticeFormat format,
                const std::optional<std::string>& out_path, const Budgets& b,
                std::ostream& doc_out, std::ostream& status_out);
int run_paige(uint64_t q, const std::string& check, bool exhaustive,
              uint64_t samples, uint64_t seed, const Budgets& b,
              std::ostream& out);
int run_embed(uint64_t q, const std::string& pair, const Budgets& b,
              std::ostream& out);
int run_verify_all(uint32_t max_p, uint64_t seed, const Budgets& b,
                   std::ostream& out);

}  // namespace cliapp
