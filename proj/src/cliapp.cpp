#include "cliapp.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace cliapp {

namespace {

std::optional<gf::Field> make_field_for(uint64_t q, std::ostream& out) {
  uint32_t p = 0, r = 0;
  if (!gf::factor_prime_power(q, p, r)) {
    out << "error: q = " << q << " is not a prime power\n";
    return std::nullopt;
  }
  return std::optional<gf::Field>(std::in_place, p, r);
}

std::map<uint32_t, int> order_census(const std::vector<lattice::Subgroup>& subs) {
  std::map<uint32_t, int> census;
  for (const auto& s : subs) ++census[s.order()];
  return census;
}

// "74 subgroups: 1 trivial, 49 C3, 8 C7, 1 C7xC7, 14 order-21, 1 full"
std::string census_line(const lattice::LatticeGraph& g) {
  const uint32_t p = g.p;
  const auto census = order_census(g.nodes);
  std::ostringstream s;
  s << g.nodes.size() << " subgroups: ";
  s << census.at(1) << " trivial, ";
  s << census.at(3) << " C3, ";
  s << census.at(p) << " C" << p << ", ";
  s << census.at(p * p) << " C" << p << "xC" << p << ", ";
  if (census.count(3 * p)) s << census.at(3 * p) << " order-" << 3 * p << ", ";
  s << census.at(3 * p * p) << " full";
  return s.str();
}

bool oracle_matches(const lattice::LatticeGraph& g, const Budgets& b) {
  const auto found = lattice::brute_force_subgroups(g.p, b.lattice_max_elements);
  if (found.size() != g.nodes.size()) return false;
  std::set<std::vector<uint32_t>> named;
  for (const auto& s : g.nodes) named.insert(s.elements);
  return named == std::set<std::vector<uint32_t>>(found.begin(), found.end());
}

std::string solutions_str(const std::vector<uint32_t>& sols) {
  std::ostringstream s;
  s << "{";
  for (size_t i = 0; i < sols.size(); ++i) s << (i ? ", " : "") << sols[i];
  s << "}";
  return s.str();
}

std::optional<embed::GenPair> parse_pair(const std::string& s) {
  if (s == "34") return embed::GenPair::g34;
  if (s == "35") return embed::GenPair::g35;
  if (s == "45") return embed::GenPair::g45;
  return std::nullopt;
}

void print_embed_report(const embed::EmbeddingReport& r, std::ostream& out) {
  const auto names = [&]() -> std::pair<std::string, std::string> {
    switch (r.pair) {
      case embed::GenPair::g34: return {"g3", "g4"};
      case embed::GenPair::g35: return {"g3", "g5"};
      default: return {"g4", "g5"};
    }
  }();
  out << "embed q=" << r.q << " pair <" << names.first << "," << names.second
      << ">: relations " << (r.relations_ok ? "ok" : "FAILED") << ", |G1| = "
      << r.closure_size << " (expected " << r.expected_size << "), iso: "
      << (r.iso_bijective && r.iso_multiplicative ? "yes" : "NO") << "\n";
  out << "isomorphic to (3,3|3," << r.p << "): " << (r.ok() ? "yes" : "NO")
      << "\n";
  if (r.membership_checked)
    out << "p=3 branch, first generator outside <x^2 y, x y^2>: "
        << (r.membership_ok ? "yes" : "NO") << "\n";
  for (const auto& rel : r.relations) {
    if (!rel.holds)
      out << "  relation " << rel.word << " = e FAILED: base has order "
          << rel.order_found << "\n";
  }
}

}  // namespace

Budgets budgets_from_env() {
  Budgets b;
  if (const char* env = std::getenv("ZORN_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      b.closure_cap = v;
      b.lattice_max_elements = v;
      b.union_cap = v;
    }
  }
  return b;
}

std::optional<LatticeFormat> parse_format(const std::string& s) {
  if (s == "dot") return LatticeFormat::dot;
  if (s == "json") return LatticeFormat::json;
  if (s == "text") return LatticeFormat::text;
  return std::nullopt;
}

std::string to_dot(const lattice::LatticeGraph& g) {
  std::ostringstream s;
  s << "digraph subgroup_lattice {\n";
  s << "  rankdir=BT;\n";
  s << "  node [shape=box];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    s << "  n" << i << " [label=\"" << g.nodes[i].tag.label() << " ["
      << g.nodes[i].order() << "]\"];\n";
  }
  // one rank per subgroup order, bottom to top
  std::map<uint32_t, std::vector<size_t>> levels;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    levels[g.nodes[i].order()].push_back(i);
  for (const auto& [order, ids] : levels) {
    s << "  { rank=same;";
    for (size_t i : ids) s << " n" << i << ";";
    s << " }\n";
  }
  for (const auto& [child, parent] : g.edges)
    s << "  n" << child << " -> n" << parent << ";\n";
  s << "}\n";
  return s.str();
}

std::string to_json(const lattice::LatticeGraph& g) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["p"] = g.p;
  doc["nodes"] = nlohmann::json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    nlohmann::json node;
    node["id"] = i;
    node["tag"] = g.nodes[i].tag.label();
    node["order"] = g.nodes[i].order();
    node["generators"] = nlohmann::json::array();
    for (const auto& w : g.nodes[i].generator_words)
      node["generators"].push_back(cox::word_str(w));
    doc["nodes"].push_back(node);
  }
  doc["edges"] = nlohmann::json::array();
  for (const auto& [child, parent] : g.edges)
    doc["edges"].push_back({child, parent});
  return doc.dump(2) + "\n";
}

std::string to_text(const lattice::LatticeGraph& g) {
  std::ostringstream s;
  s << "(3,3|3," << g.p << ") subgroup lattice\n";
  s << census_line(g) << "\n";
  s << "congruence solutions mod " << g.p << ": "
    << solutions_str(lattice::solve_congruence(g.p)) << "\n";
  s << "hasse edges: " << g.edges.size() << "\n";
  s << "order census:\n";
  for (const auto& [order, count] : order_census(g.nodes))
    s << "  " << order << ": " << count << "\n";
  return s.str();
}

int run_cox(uint32_t n, std::ostream& out) {
  if (n < 1) {
    out << "error: n must be >= 1\n";
    return 2;
  }
  const cox::PresentationReport r = cox::verify_presentation(cox::Group(n));
  out << "cox n=" << n << ": order " << r.order << " (3n^2 = " << 3 * n * n
      << ")\n";
  out << "relations x^3 = y^3 = (xy)^3 = (x^-1 y)^" << n
      << " = 1: " << (r.relations_ok ? "ok" : "FAILED") << "\n";
  out << "generated by {x, y}: " << (r.generated_ok ? "yes" : "NO") << "\n";
  out << "abelian: " << (r.abelian ? "yes" : "no") << "\n";
  const bool cyclic = !r.order_census.empty() &&
                      r.order_census.back().first == r.order;
  out << "cyclic: " << (cyclic ? "yes" : "no") << "\n";
  out << "exponent: " << r.exponent << "\n";
  out << "order census:";
  for (const auto& [order, count] : r.order_census)
    out << " " << order << ":" << count;
  out << "\n";
  out << "H = <x^2 y, x y^2> normal abelian of order n^2: "
      << (r.h_ok ? "ok" : "FAILED") << "\n";
  if (n == 2) {
    const bool a4 = r.order_census ==
                    std::vector<std::pair<uint64_t, uint64_t>>{{1, 1}, {2, 3}, {3, 8}};
    out << "A4 profile: " << (a4 ? "yes" : "NO") << "\n";
  }
  out << "result: " << (r.ok() ? "pass" : "FAIL") << "\n";
  return r.ok() ? 0 : 1;
}

int run_congruence(uint32_t p, std::ostream& out) {
  try {
    const auto sols = lattice::solve_congruence(p);
    out << "i^2 + i + 1 = 0 (mod " << p << "): " << solutions_str(sols);
    if (sols.empty())
      out << " (p != 1 mod 3)";
    else if (p % 3 == 1)
      out << " (p = 1 mod 3)";
    out << "\n";
    return 0;
  } catch (const gf::NotPrime& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_lattice(uint32_t p, LatticeFormat format,
                const std::optional<std::string>& out_path, const Budgets& b,
                std::ostream& doc_out, std::ostream& status_out) {
  lattice::LatticeGraph graph;
  bool oracle_ok = false;
  try {
    graph = lattice::build_lattice(p);
    oracle_ok = oracle_matches(graph, b);
  } catch (const std::exception& e) {
    status_out << "error: " << e.what() << "\n";
    return 2;
  }

  std::string doc;
  switch (format) {
    case LatticeFormat::dot: doc = to_dot(graph); break;
    case LatticeFormat::json: doc = to_json(graph); break;
    case LatticeFormat::text: doc = to_text(graph); break;
  }
  if (out_path) {
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) {
      status_out << "error: cannot write " << *out_path << "\n";
      return 2;
    }
    file << doc;
    status_out << "wrote " << *out_path << "\n";
  } else {
    doc_out << doc;
  }
  status_out << "oracle cross-check: " << (oracle_ok ? "ok" : "FAILED") << "\n";
  return oracle_ok ? 0 : 1;
}

int run_paige(uint64_t q, const std::string& check, bool exhaustive,
              uint64_t samples, uint64_t seed, const Budgets& b,
              std::ostream& out) {
  auto field = make_field_for(q, out);
  if (!field) return 2;
  try {
    if (check == "generation") {
      const paige::GenerationReport r =
          paige::verify_generation(*field, b.closure_cap);
      out << "paige q=" << q << " generation: closure " << r.closure_size
          << " (expected " << r.expected_size << "), generator orders "
          << r.generator_orders[0] << "," << r.generator_orders[1] << ","
          << r.generator_orders[2] << "\n";
      out << "result: " << (r.ok ? "pass" : "FAIL") << "\n";
      return r.ok ? 0 : 1;
    }
    if (check == "moufang") {
      const paige::Generators g = paige::standard_generators(*field);
      const paige::Closure c =
          paige::close(*field, {g.g3, g.g4, g.g5}, b.closure_cap);
      const paige::CheckMode mode = exhaustive
                                        ? paige::CheckMode::Exhaustive()
                                        : paige::CheckMode::Sampled(samples, seed);
      const paige::MoufangReport r =
          paige::verify_moufang(c, mode, b.moufang_triples);
      out << "paige q=" << q << " moufang"
          << (exhaustive ? " (exhaustive)" : " (sampled, seed " +
                                                 std::to_string(seed) + ")")
          << ": " << r.triples_checked << " triples, "
          << (r.ok ? "0 violations" : "VIOLATION FOUND") << "\n";
      if (r.witness) {
        const auto& w = *r.witness;
        out << "witness triple indices: " << w[0] << " " << w[1] << " " << w[2]
            << "\n";
      }
      out << "result: " << (r.ok ? "pass" : "FAIL") << "\n";
      return r.ok ? 0 : 1;
    }
    out << "error: unknown check '" << check
        << "' (expected generation or moufang)\n";
    return 2;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_embed(uint64_t q, const std::string& pair, const Budgets& b,
              std::ostream& out) {
  const auto gp = parse_pair(pair);
  if (!gp) {
    out << "error: unknown pair '" << pair << "' (expected 34, 35 or 45)\n";
    return 2;
  }
  auto field = make_field_for(q, out);
  if (!field) return 2;
  try {
    const embed::EmbeddingReport r =
        embed::verify_embedding(*field, *gp, b.closure_cap);
    print_embed_report(r, out);
    out << "result: " << (r.ok() ? "pass" : "FAIL") << "\n";
    return r.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_verify_all(uint32_t max_p, uint64_t seed, const Budgets& b,
                   std::ostream& out) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };

  {
    bool ok = true;
    for (uint32_t n = 1; n <= 30; ++n) {
      const auto r = cox::verify_presentation(cox::Group(n));
      if (!r.ok() || r.order != 3ull * n * n || r.abelian != (n == 1)) ok = false;
    }
    report(ok, "E(n): order 3n^2, presented relations, non-abelian for n in [1,30]");
  }
  {
    const auto r1 = cox::verify_presentation(cox::Group(1));
    const auto r2 = cox::verify_presentation(cox::Group(2));
    const auto r3 = cox::verify_presentation(cox::Group(3));
    const bool ok =
        r1.order == 3 && r1.exponent == 3 &&
        r2.order == 12 && !r2.abelian &&
        r2.order_census ==
            std::vector<std::pair<uint64_t, uint64_t>>{{1, 1}, {2, 3}, {3, 8}} &&
        r3.order == 27 && r3.exponent == 3 && !r3.abelian;
    report(ok, "special cases: E(1) = C3, E(2) = A4 profile, E(3) of exponent 3");
  }
  {
    bool ok = true;
    for (uint32_t p = 2; p < 200; ++p) {
      if (!gf::is_prime(p) || p == 3) continue;
      const auto sols = lattice::solve_congruence(p);
      if ((p % 3 == 1) != !sols.empty()) ok = false;
      if (!sols.empty() && sols.size() != 2) ok = false;
    }
    if (lattice::solve_congruence(7) != std::vector<uint32_t>{2, 4}) ok = false;
    report(ok, "congruence solvable iff p = 1 mod 3 (primes < 200, p != 3); p=7 gives {2,4}");
  }

  for (uint32_t p = 5; p <= max_p; ++p) {
    if (!gf::is_prime(p)) continue;
    try {
      const auto family = lattice::named_subgroups(p);
      const auto found = lattice::brute_force_subgroups(p, b.lattice_max_elements);
      std::set<std::vector<uint32_t>> named_sets;
      for (const auto& s : family) named_sets.insert(s.elements);
      const bool complete =
          named_sets == std::set<std::vector<uint32_t>>(found.begin(), found.end());
      report(complete, "p=" + std::to_string(p) + ": named subgroups (" +
                           std::to_string(family.size()) +
                           ") equal the brute-force family");

      bool joins_ok = true;
      for (const auto& a : family)
        for (const auto& bb : family)
          if (!(join(a, bb, family).tag == join_oracle(a, bb, family).tag))
            joins_ok = false;
      report(joins_ok, "p=" + std::to_string(p) + ": formula joins equal oracle joins (" +
                           std::to_string(family.size() * family.size()) + " pairs)");

      const auto conj = lattice::conjugation_check(p);
      report(conj.ok, "p=" + std::to_string(p) + ": conjugation identity on " +
                          std::to_string(conj.triples_checked) + " triples");
    } catch (const std::exception& e) {
      report(false, "p=" + std::to_string(p) + ": " + e.what());
    }
  }

  for (uint64_t q : {2ull, 3ull}) {
    try {
      gf::Field f(uint32_t(q), 1);
      const auto gen = paige::verify_generation(f, b.closure_cap);
      report(gen.ok, "paige q=" + std::to_string(q) + ": generated by three order-3 elements, closure " +
                         std::to_string(gen.closure_size));
      const paige::Generators g = paige::standard_generators(f);
      const paige::Closure c = paige::close(f, {g.g3, g.g4, g.g5}, b.closure_cap);
      const paige::CheckMode mode = q == 2
                                        ? paige::CheckMode::Exhaustive()
                                        : paige::CheckMode::Sampled(kDefaultSamples, seed);
      const auto mo = paige::verify_moufang(c, mode, b.moufang_triples);
      report(mo.ok, "paige q=" + std::to_string(q) + ": Moufang identity, " +
                        std::to_string(mo.triples_checked) + " triples");
    } catch (const std::exception& e) {
      report(false, "paige q=" + std::to_string(q) + ": " + e.what());
    }
  }

  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 25ull}) {
    try {
      uint32_t pp = 0, rr = 0;
      gf::factor_prime_power(q, pp, rr);
      gf::Field f(pp, rr);
      bool ok = true;
      for (auto pair : {embed::GenPair::g34, embed::GenPair::g35, embed::GenPair::g45})
        if (!embed::verify_embedding(f, pair, b.closure_cap).ok()) ok = false;
      report(ok, "embed q=" + std::to_string(q) + ": all three pairs isomorphic to (3,3|3," +
                     std::to_string(pp) + ")");
    } catch (const std::exception& e) {
      report(false, "embed q=" + std::to_string(q) + ": " + e.what());
    }
  }

  {
    bool ok = false;
    try {
      gf::Field f9(3, 2);
      paige::standard_generators(f9);
    } catch (const paige::UnsupportedQ&) {
      ok = true;
    }
    report(ok, "q=9 refused by the generator construction");
  }

  if (failures == 0)
    out << "all checks passed\n";
  else
    out << failures << " check(s) failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace cliapp
