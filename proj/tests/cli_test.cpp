#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliapp.hpp"

#include "json.hpp"

#include <cstdlib>
#include <regex>
#include <sstream>

namespace {

size_t count_matches(const std::string& text, const std::regex& re) {
  return size_t(std::distance(
      std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("cox command output") {
  std::ostringstream out;
  const int rc = cliapp::run_cox(2, out);
  CHECK(rc == 0);
  const std::string s = out.str();
  CHECK(s.find("order 12") != std::string::npos);
  CHECK(s.find("order census: 1:1 2:3 3:8") != std::string::npos);
  CHECK(s.find("A4 profile: yes") != std::string::npos);
  CHECK(s.find("result: pass") != std::string::npos);

  std::ostringstream out1;
  CHECK(cliapp::run_cox(1, out1) == 0);
  CHECK(out1.str().find("order 3") != std::string::npos);
  CHECK(out1.str().find("cyclic: yes") != std::string::npos);

  std::ostringstream out3;
  CHECK(cliapp::run_cox(3, out3) == 0);
  CHECK(out3.str().find("order 27") != std::string::npos);
  CHECK(out3.str().find("exponent: 3") != std::string::npos);
  CHECK(out3.str().find("abelian: no") != std::string::npos);
}

TEST_CASE("congruence command output") {
  std::ostringstream out7;
  CHECK(cliapp::run_congruence(7, out7) == 0);
  CHECK(out7.str().find("{2, 4}") != std::string::npos);

  std::ostringstream out5;
  CHECK(cliapp::run_congruence(5, out5) == 0);
  CHECK(out5.str().find("{}") != std::string::npos);
  CHECK(out5.str().find("p != 1 mod 3") != std::string::npos);

  std::ostringstream bad;
  CHECK(cliapp::run_congruence(6, bad) == 2);
  CHECK(bad.str().find("error") != std::string::npos);
}

TEST_CASE("lattice text format carries the census line") {
  cliapp::Budgets b;
  std::ostringstream doc, status;
  const int rc =
      cliapp::run_lattice(7, cliapp::LatticeFormat::text, std::nullopt, b, doc, status);
  CHECK(rc == 0);
  CHECK(doc.str().find(
            "74 subgroups: 1 trivial, 49 C3, 8 C7, 1 C7xC7, 14 order-21, 1 full") !=
        std::string::npos);
  CHECK(status.str().find("oracle cross-check: ok") != std::string::npos);

  std::ostringstream doc5, status5;
  CHECK(cliapp::run_lattice(5, cliapp::LatticeFormat::text, std::nullopt, b, doc5,
                            status5) == 0);
  CHECK(doc5.str().find("34 subgroups: 1 trivial, 25 C3, 6 C5, 1 C5xC5, 1 full") !=
        std::string::npos);
}

TEST_CASE("DOT export round-trips node and edge counts") {
  const lattice::LatticeGraph g = lattice::build_lattice(7);
  const std::string dot = cliapp::to_dot(g);
  CHECK(count_matches(dot, std::regex("label=")) == g.nodes.size());
  CHECK(count_matches(dot, std::regex("->")) == g.edges.size());
  CHECK(count_matches(dot, std::regex("rank=same")) == 6);  // six order levels
  CHECK(dot.find("K(2,0) [21]") != std::string::npos);
}

TEST_CASE("DOT export for p=5 has 34 nodes and no order-15 layer") {
  const lattice::LatticeGraph g = lattice::build_lattice(5);
  const std::string dot = cliapp::to_dot(g);
  CHECK(count_matches(dot, std::regex("label=")) == 34);
  CHECK(count_matches(dot, std::regex("rank=same")) == 5);  // 1, 3, 5, 25, 75
  CHECK(dot.find("[15]") == std::string::npos);
}

TEST_CASE("JSON export parses back with the documented schema") {
  const lattice::LatticeGraph g = lattice::build_lattice(5);
  const nlohmann::json doc = nlohmann::json::parse(cliapp::to_json(g));
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("p") == 5);
  CHECK(doc.at("nodes").size() == 34);
  CHECK(doc.at("edges").size() == g.edges.size());
  // nodes are sorted by (order, tag); ids are their positions
  uint32_t prev_order = 0;
  for (const auto& node : doc.at("nodes")) {
    CHECK(node.at("order").get<uint32_t>() >= prev_order);
    prev_order = node.at("order").get<uint32_t>();
    CHECK(node.contains("id"));
    CHECK(node.contains("tag"));
    CHECK(node.contains("generators"));
  }
  CHECK(doc.at("nodes")[0].at("tag") == "1");
  CHECK(doc.at("nodes")[33].at("tag") == "G");
  // every edge joins valid ids, child order < parent order
  for (const auto& e : doc.at("edges")) {
    const uint32_t c = e[0].get<uint32_t>(), p = e[1].get<uint32_t>();
    CHECK(doc.at("nodes")[c].at("order").get<uint32_t>() <
          doc.at("nodes")[p].at("order").get<uint32_t>());
  }
}

TEST_CASE("lattice command writes files and reports the path") {
  cliapp::Budgets b;
  const std::string path = "/tmp/zorn_cli_test_lattice.json";
  std::remove(path.c_str());
  std::ostringstream doc, status;
  const int rc = cliapp::run_lattice(5, cliapp::LatticeFormat::json, path, b,
                                     doc, status);
  CHECK(rc == 0);
  CHECK(doc.str().empty());
  CHECK(status.str().find("wrote " + path) != std::string::npos);
  std::ifstream file(path);
  REQUIRE(file.good());
  nlohmann::json parsed;
  file >> parsed;
  CHECK(parsed.at("nodes").size() == 34);
  std::remove(path.c_str());
}

TEST_CASE("identical invocations produce byte-identical output") {
  cliapp::Budgets b;
  std::ostringstream a1, a2, s1, s2;
  cliapp::run_lattice(7, cliapp::LatticeFormat::dot, std::nullopt, b, a1, s1);
  cliapp::run_lattice(7, cliapp::LatticeFormat::dot, std::nullopt, b, a2, s2);
  CHECK(a1.str() == a2.str());
  CHECK(s1.str() == s2.str());

  std::ostringstream m1, m2;
  cliapp::run_paige(3, "moufang", false, 50000, cliapp::kDefaultSeed, b, m1);
  cliapp::run_paige(3, "moufang", false, 50000, cliapp::kDefaultSeed, b, m2);
  CHECK(m1.str() == m2.str());
  CHECK(m1.str().find("50000 triples, 0 violations") != std::string::npos);
}

TEST_CASE("paige command: generation report and refusals") {
  cliapp::Budgets b;
  std::ostringstream out;
  CHECK(cliapp::run_paige(2, "generation", false, 0, 0, b, out) == 0);
  CHECK(out.str().find("closure 120 (expected 120)") != std::string::npos);
  CHECK(out.str().find("generator orders 3,3,3") != std::string::npos);

  std::ostringstream out9;
  CHECK(cliapp::run_paige(9, "generation", false, 0, 0, b, out9) == 2);
  CHECK(out9.str().find("error") != std::string::npos);
  CHECK(out9.str().find("q = 9") != std::string::npos);

  std::ostringstream out6;
  CHECK(cliapp::run_paige(6, "generation", false, 0, 0, b, out6) == 2);
  CHECK(out6.str().find("not a prime power") != std::string::npos);

  std::ostringstream out11;
  CHECK(cliapp::run_paige(11, "generation", false, 0, 0, b, out11) == 2);
  CHECK(out11.str().find("exceeded cap") != std::string::npos);
}

TEST_CASE("paige moufang exhaustive on q=2") {
  cliapp::Budgets b;
  std::ostringstream out;
  CHECK(cliapp::run_paige(2, "moufang", true, 0, 0, b, out) == 0);
  CHECK(out.str().find("1728000 triples, 0 violations") != std::string::npos);
}

TEST_CASE("embed command output") {
  cliapp::Budgets b;
  std::ostringstream out;
  CHECK(cliapp::run_embed(5, "34", b, out) == 0);
  CHECK(out.str().find("|G1| = 75") != std::string::npos);
  CHECK(out.str().find("iso: yes") != std::string::npos);
  CHECK(out.str().find("isomorphic to (3,3|3,5): yes") != std::string::npos);

  std::ostringstream out25;
  CHECK(cliapp::run_embed(25, "34", b, out25) == 0);
  CHECK(out25.str().find("|G1| = 75") != std::string::npos);
  CHECK(out25.str().find("isomorphic to (3,3|3,5): yes") != std::string::npos);

  std::ostringstream out9;
  CHECK(cliapp::run_embed(9, "34", b, out9) == 2);
  CHECK(out9.str().find("error") != std::string::npos);

  std::ostringstream outbad;
  CHECK(cliapp::run_embed(5, "12", b, outbad) == 2);
}

TEST_CASE("ZORN_BUDGET env override") {
  setenv("ZORN_BUDGET", "2000", 1);
  const cliapp::Budgets b = cliapp::budgets_from_env();
  CHECK(b.closure_cap == 2000);
  CHECK(b.lattice_max_elements == 2000);
  unsetenv("ZORN_BUDGET");
  const cliapp::Budgets d = cliapp::budgets_from_env();
  CHECK(d.closure_cap == paige::kDefaultClosureCap);
  CHECK(d.lattice_max_elements == lattice::kDefaultMaxElements);

  setenv("ZORN_BUDGET", "garbage", 1);
  const cliapp::Budgets g = cliapp::budgets_from_env();
  CHECK(g.closure_cap == paige::kDefaultClosureCap);
  unsetenv("ZORN_BUDGET");
}

TEST_CASE("verify-all campaign (max-p 5)") {
  cliapp::Budgets b;
  std::ostringstream out;
  const int rc = cliapp::run_verify_all(5, cliapp::kDefaultSeed, b, out);
  CHECK(rc == 0);
  const std::string s = out.str();
  CHECK(s.find("all checks passed") != std::string::npos);
  CHECK(s.find("[FAIL]") == std::string::npos);
  CHECK(count_matches(s, std::regex("\\[ok\\]")) >= 12);
}
