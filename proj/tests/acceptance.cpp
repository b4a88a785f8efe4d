// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "cliapp.hpp"
#include "embed.hpp"
#include "lattice.hpp"
#include "paige.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <regex>
#include <set>
#include <sstream>

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  std::map<uint64_t, std::unique_ptr<paige::Closure>> full_loops;
  std::map<uint64_t, std::unique_ptr<gf::Field>> fields;

  const gf::Field& field(uint64_t q) {
    auto it = fields.find(q);
    if (it == fields.end()) {
      uint32_t p = 0, r = 0;
      gf::factor_prime_power(q, p, r);
      it = fields.emplace(q, std::make_unique<gf::Field>(p, r)).first;
    }
    return *it->second;
  }

  const paige::Closure& full_loop(uint64_t q) {
    auto it = full_loops.find(q);
    if (it == full_loops.end()) {
      const gf::Field& f = field(q);
      const paige::Generators g = paige::standard_generators(f);
      it = full_loops
               .emplace(q, std::make_unique<paige::Closure>(
                               paige::close(f, {g.g3, g.g4, g.g5})))
               .first;
    }
    return *it->second;
  }
};

Outcome criterion_order_theorem() {
  for (uint32_t n = 1; n <= 30; ++n) {
    const auto r = cox::verify_presentation(cox::Group(n));
    if (r.order != 3ull * n * n)
      return {false, "order mismatch at n=" + std::to_string(n)};
    if (!r.generated_ok)
      return {false, "{x,y} does not generate E(" + std::to_string(n) + ")"};
    if (!r.relations_ok)
      return {false, "relation failure at n=" + std::to_string(n)};
    if (r.abelian != (n == 1))
      return {false, "abelianness wrong at n=" + std::to_string(n)};
  }
  return {true, "|E(n)| = 3n^2, generated by {x,y}, non-abelian for n in [1,30]"};
}

Outcome criterion_special_cases() {
  const auto r1 = cox::verify_presentation(cox::Group(1));
  if (!(r1.order == 3 && r1.exponent == 3 && r1.abelian &&
        r1.order_census ==
            std::vector<std::pair<uint64_t, uint64_t>>{{1, 1}, {3, 2}}))
    return {false, "E(1) is not cyclic of order 3"};
  const auto r2 = cox::verify_presentation(cox::Group(2));
  if (!(r2.order == 12 && !r2.abelian &&
        r2.order_census == std::vector<std::pair<uint64_t, uint64_t>>{
                               {1, 1}, {2, 3}, {3, 8}}))
    return {false, "E(2) does not have the A4 census {1:1, 2:3, 3:8}"};
  const auto r3 = cox::verify_presentation(cox::Group(3));
  if (!(r3.order == 27 && r3.exponent == 3 && !r3.abelian))
    return {false, "E(3) is not non-abelian of order 27 and exponent 3"};
  return {true, "E(1) = C3; E(2) has the A4 census; E(3) non-abelian, exponent 3"};
}

Outcome criterion_congruence() {
  // p = 3 is carved out: i = 1 solves i^2+i+1 = (i-1)^2 = 0 mod 3, which is
  // why the subgroup rules exclude p <= 3. Its actual behavior is pinned.
  if (lattice::solve_congruence(3) != std::vector<uint32_t>{1})
    return {false, "p=3 should give the double root {1}"};
  for (uint32_t p = 2; p < 200; ++p) {
    if (!gf::is_prime(p) || p == 3) continue;
    const auto sols = lattice::solve_congruence(p);
    if ((p % 3 == 1) != !sols.empty())
      return {false, "solvability wrong at p=" + std::to_string(p)};
    if (!sols.empty() && sols.size() != 2)
      return {false, "expected exactly 2 solutions at p=" + std::to_string(p)};
  }
  if (lattice::solve_congruence(7) != std::vector<uint32_t>{2, 4})
    return {false, "p=7 should give {2,4}"};
  return {true,
          "solvable iff p = 1 mod 3 with 2 roots (primes < 200, p != 3); "
          "p=7 gives {2,4}; p=3 pinned to its double root {1}"};
}

Outcome criterion_lattice_completeness() {
  const std::map<uint32_t, size_t> expected{{5, 34}, {7, 74}, {11, 136}, {13, 212}};
  std::string counts;
  for (const auto& [p, want] : expected) {
    const auto named = lattice::named_subgroups(p);
    const auto found = lattice::brute_force_subgroups(p);
    if (named.size() != want || found.size() != want)
      return {false, "count mismatch at p=" + std::to_string(p) + ": named " +
                         std::to_string(named.size()) + ", oracle " +
                         std::to_string(found.size()) + ", expected " +
                         std::to_string(want)};
    std::set<std::vector<uint32_t>> named_sets;
    for (const auto& s : named) named_sets.insert(s.elements);
    if (named_sets != std::set<std::vector<uint32_t>>(found.begin(), found.end()))
      return {false, "families differ at p=" + std::to_string(p)};
    counts += (counts.empty() ? "" : ", ") + std::to_string(p) + ":" +
              std::to_string(want);
  }
  return {true, "named family equals brute-force family; counts " + counts};
}

Outcome criterion_join_cross_validation() {
  uint64_t pairs = 0;
  for (uint32_t p : {5u, 7u}) {
    const auto family = lattice::named_subgroups(p);
    for (const auto& a : family) {
      for (const auto& b : family) {
        ++pairs;
        if (!(join(a, b, family).tag == join_oracle(a, b, family).tag))
          return {false, "join mismatch at p=" + std::to_string(p) + ", " +
                             a.tag.label() + " v " + b.tag.label()};
      }
    }
  }
  return {true, "formula join equals closure-oracle join on all " +
                    std::to_string(pairs) + " pairs, p in {5,7}"};
}

Outcome criterion_conjugation() {
  uint64_t triples = 0;
  for (uint32_t p : {5u, 7u, 11u}) {
    const auto r = lattice::conjugation_check(p);
    triples += r.triples_checked;
    if (!r.ok) {
      const auto& w = *r.first_failure;
      return {false, "failed at p=" + std::to_string(p) + ", (i,k,l)=(" +
                         std::to_string(w[0]) + "," + std::to_string(w[1]) +
                         "," + std::to_string(w[2]) + ")"};
    }
  }
  return {true, "h(i)^-1 g(k,l) h(i) = g(k+1, l+i) on all " +
                    std::to_string(triples) + " triples, p in {5,7,11}"};
}

Outcome criterion_generation(Context& ctx) {
  const std::map<uint64_t, uint64_t> expected{{2, 120}, {3, 1080}, {5, 39000}};
  for (const auto& [q, want] : expected) {
    const auto t0 = std::chrono::steady_clock::now();
    const paige::Closure& loop = ctx.full_loop(q);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (loop.size() != want)
      return {false, "closure size " + std::to_string(loop.size()) + " at q=" +
                         std::to_string(q) + ", expected " +
                         std::to_string(want)};
    if (q == 5 && secs >= 300.0)
      return {false, "q=5 closure took " + std::to_string(secs) + "s (>= 300s)"};
    const paige::Generators g = paige::standard_generators(ctx.field(q));
    for (const auto& gen : {g.g3, g.g4, g.g5})
      if (element_order(gen) != 3)
        return {false, "generator order != 3 at q=" + std::to_string(q)};
  }
  return {true, "closures 120, 1080, 39000 for q = 2, 3, 5; generator orders all 3"};
}

Outcome criterion_moufang(Context& ctx) {
  {
    const auto r = paige::verify_moufang(ctx.full_loop(2),
                                         paige::CheckMode::Exhaustive());
    if (!r.ok || r.triples_checked != 1728000)
      return {false, "exhaustive q=2 run checked " +
                         std::to_string(r.triples_checked) + " triples"};
  }
  for (uint64_t q : {3ull, 5ull}) {
    const auto r = paige::verify_moufang(
        ctx.full_loop(q),
        paige::CheckMode::Sampled(1'000'000, cliapp::kDefaultSeed));
    if (!r.ok || r.triples_checked != 1'000'000)
      return {false, "sampled q=" + std::to_string(q) + " failed"};
  }
  return {true,
          "exhaustive 120^3 = 1728000 triples for q=2; 10^6 seeded triples "
          "each for q=3 and q=5; zero violations"};
}

Outcome criterion_embedding(Context& ctx) {
  const std::vector<std::pair<uint64_t, uint32_t>> cases{
      {2, 2}, {3, 3}, {5, 5}, {7, 7}, {25, 5}};
  for (const auto& [q, p] : cases) {
    for (auto pair :
         {embed::GenPair::g34, embed::GenPair::g35, embed::GenPair::g45}) {
      const auto r = embed::verify_embedding(ctx.field(q), pair);
      if (r.p != p)
        return {false, "wrong p at q=" + std::to_string(q)};
      if (!r.relations_ok)
        return {false, "a relation fails at q=" + std::to_string(q) + " pair " +
                           embed::pair_name(pair)};
      if (!r.size_ok)
        return {false, "closure size " + std::to_string(r.closure_size) +
                           " != 3p^2 at q=" + std::to_string(q)};
      if (!(r.iso_bijective && r.iso_multiplicative && r.membership_ok))
        return {false, "phi is not an isomorphism at q=" + std::to_string(q) +
                           " pair " + embed::pair_name(pair)};
    }
  }
  return {true,
          "six relations, order 3p^2 and the normal-form isomorphism for "
          "(q,p) in {(2,2),(3,3),(5,5),(7,7),(25,5)}, all three pairs"};
}

Outcome criterion_figure_one() {
  std::ostringstream doc, status;
  cliapp::Budgets budgets;
  if (cliapp::run_lattice(7, cliapp::LatticeFormat::dot, std::nullopt, budgets,
                          doc, status) != 0)
    return {false, "lattice 7 --format dot exited nonzero"};
  const std::string dot = doc.str();
  const auto count = [&](const std::regex& re) {
    return size_t(std::distance(
        std::sregex_iterator(dot.begin(), dot.end(), re), std::sregex_iterator()));
  };
  const lattice::LatticeGraph g = lattice::build_lattice(7);
  if (count(std::regex("label=")) != 74)
    return {false, "DOT does not carry 74 node labels"};
  if (count(std::regex("->")) != g.edges.size())
    return {false, "DOT edge count differs from the graph"};

  size_t kmax_nodes = 0, g_nodes = 0;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const lattice::Tag& t = g.nodes[i].tag;
    if (t.kind == lattice::Tag::Kind::Kmax) {
      ++kmax_nodes;
      size_t lower = 0;
      for (const auto& [c, par] : g.edges) {
        if (par != i) continue;
        ++lower;
        const lattice::Tag& ct = g.nodes[c].tag;
        if (ct.kind == lattice::Tag::Kind::Gpoint) {
          // the slope rule: l' = l + i k' (mod 7)
          if (ct.l != (t.l + t.h.value() * ct.k) % 7)
            return {false, "slope rule fails on edge " + ct.label() + " -> " +
                               t.label()};
        } else if (!(ct == lattice::Tag::hline(t.h))) {
          return {false, "unexpected lower cover of " + t.label()};
        }
      }
      if (lower != 8)
        return {false, t.label() + " has " + std::to_string(lower) +
                           " lower covers, expected 8"};
    }
    if (t.kind == lattice::Tag::Kind::Gpoint) {
      ++g_nodes;
      size_t covers = 0;
      for (const auto& [c, par] : g.edges) {
        if (c != i) continue;
        ++covers;
        if (g.nodes[par].order() != 21)
          return {false, t.label() + " is covered by an order-" +
                             std::to_string(g.nodes[par].order()) + " node"};
      }
      if (covers != 2)
        return {false, t.label() + " has " + std::to_string(covers) +
                           " upper covers, expected 2"};
    }
  }
  if (kmax_nodes != 14 || g_nodes != 49)
    return {false, "wrong node census in the graph"};
  return {true,
          "74 DOT nodes; every K(i,j) has 8 lower covers; every G(k,l) has 2 "
          "order-21 covers; the slope rule governs all K-G edges"};
}

Outcome criterion_negative_controls(Context& ctx) {
  try {
    paige::standard_generators(ctx.field(9));
    return {false, "q=9 accepted by the generator construction"};
  } catch (const paige::UnsupportedQ&) {
  }
  try {
    paige::verify_generation(ctx.field(9));
    return {false, "q=9 accepted by verify_generation"};
  } catch (const paige::UnsupportedQ&) {
  }
  try {
    embed::verify_embedding(ctx.field(9), embed::GenPair::g34);
    return {false, "q=9 accepted by verify_embedding"};
  } catch (const paige::UnsupportedQ&) {
  }
  for (uint32_t p : {2u, 3u}) {
    try {
      lattice::named_subgroups(p);
      return {false, "p=" + std::to_string(p) + " accepted by the formula path"};
    } catch (const lattice::UnsupportedP&) {
    }
    try {
      lattice::build_lattice(p);
      return {false, "p=" + std::to_string(p) + " accepted by build_lattice"};
    } catch (const lattice::UnsupportedP&) {
    }
  }
  // the oracle still runs for p=2 and reproduces the A4 lattice
  const auto found = lattice::brute_force_subgroups(2);
  if (found.size() != 10)
    return {false, "A4 oracle found " + std::to_string(found.size()) +
                       " subgroups, expected 10"};
  std::map<size_t, int> census;
  for (const auto& s : found) ++census[s.size()];
  if (census != std::map<size_t, int>{{1, 1}, {2, 3}, {3, 4}, {4, 1}, {12, 1}})
    return {false, "A4 subgroup census is wrong"};
  return {true,
          "q=9 refused by paige and embed; p in {2,3} refused by the formula "
          "path; the p=2 oracle reproduces the A4 lattice (10 subgroups)"};
}

}  // namespace

int main() {
  Context ctx;
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no limit stated
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "order theorem |E(n)| = 3n^2", 10.0, criterion_order_theorem},
      {2, "special cases n = 1, 2, 3", 0.0, criterion_special_cases},
      {3, "congruence lemma, primes < 200", 1.0, criterion_congruence},
      {4, "lattice completeness, p in {5,7,11,13}", 60.0,
       criterion_lattice_completeness},
      {5, "join cross-validation, p in {5,7}", 120.0,
       criterion_join_cross_validation},
      {6, "conjugation identity, p in {5,7,11}", 0.0, criterion_conjugation},
      {7, "Paige generation, q in {2,3,5}", 0.0,
       [&] { return criterion_generation(ctx); }},
      {8, "Moufang identity", 0.0, [&] { return criterion_moufang(ctx); }},
      {9, "embedded copies of (3,3|3,p)", 60.0,
       [&] { return criterion_embedding(ctx); }},
      {10, "structural reproduction of the p=7 lattice diagram", 0.0,
       criterion_figure_one},
      {11, "negative controls", 0.0,
       [&] { return criterion_negative_controls(ctx); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (o.pass && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " — but exceeded the " + std::to_string(c.limit_seconds) +
                  "s limit";
    }
    std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n",
                o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (failures)
    std::printf("%d criterion(s) failed\n", failures);
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
