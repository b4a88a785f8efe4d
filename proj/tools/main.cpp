#include "CLI11.hpp"
#include "cliapp.hpp"

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{
      "Paige loops over Zorn vector matrices and the subgroup lattices of "
      "the groups (3,3|3,p)"};
  app.require_subcommand(1);

  const cliapp::Budgets budgets = cliapp::budgets_from_env();
  int rc = 0;

  uint32_t cox_n = 1;
  auto* cox_cmd =
      app.add_subcommand("cox", "verify the concrete model E(n) of (3,3|3,n)");
  cox_cmd->add_option("n", cox_n, "group parameter, n >= 1")->required();
  cox_cmd->callback([&] { rc = cliapp::run_cox(cox_n, std::cout); });

  uint32_t cong_p = 2;
  auto* cong_cmd =
      app.add_subcommand("congruence", "solve i^2 + i + 1 = 0 (mod p)");
  cong_cmd->add_option("p", cong_p, "prime modulus")->required();
  cong_cmd->callback([&] { rc = cliapp::run_congruence(cong_p, std::cout); });

  uint32_t lat_p = 5;
  std::string lat_fmt = "text";
  std::string lat_out;
  auto* lat_cmd = app.add_subcommand(
      "lattice", "build, cross-check and export the subgroup lattice of (3,3|3,p)");
  lat_cmd->add_option("p", lat_p, "prime p > 3")->required();
  lat_cmd->add_option("--format", lat_fmt, "dot, json or text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  lat_cmd->add_option("--out", lat_out, "output path (default: stdout)");
  lat_cmd->callback([&] {
    const std::optional<std::string> path =
        lat_out.empty() ? std::nullopt : std::optional<std::string>(lat_out);
    rc = cliapp::run_lattice(lat_p, *cliapp::parse_format(lat_fmt), path,
                             budgets, std::cout, std::cerr);
  });

  uint64_t paige_q = 2;
  std::string paige_check;
  bool paige_exhaustive = false;
  uint64_t paige_samples = cliapp::kDefaultSamples;
  uint64_t paige_seed = cliapp::kDefaultSeed;
  auto* paige_cmd = app.add_subcommand(
      "paige", "verification campaigns on the Paige loop M*(q)");
  paige_cmd->add_option("q", paige_q, "prime power; odd with q != 9, or 2")
      ->required();
  paige_cmd->add_option("check", paige_check, "generation or moufang")
      ->required()
      ->check(CLI::IsMember({"generation", "moufang"}));
  auto* ex_flag =
      paige_cmd->add_flag("--exhaustive", paige_exhaustive, "check all triples");
  paige_cmd->add_option("--samples", paige_samples, "random triples to check")
      ->excludes(ex_flag);
  paige_cmd->add_option("--seed", paige_seed, "seed for sampled checks");
  paige_cmd->callback([&] {
    rc = cliapp::run_paige(paige_q, paige_check, paige_exhaustive,
                           paige_samples, paige_seed, budgets, std::cout);
  });

  uint64_t embed_q = 2;
  std::string embed_pair;
  auto* embed_cmd = app.add_subcommand(
      "embed", "verify that a generator pair spans a copy of (3,3|3,p)");
  embed_cmd->add_option("q", embed_q, "prime power; odd with q != 9, or 2")
      ->required();
  embed_cmd->add_option("pair", embed_pair, "34, 35 or 45")
      ->required()
      ->check(CLI::IsMember({"34", "35", "45"}));
  embed_cmd->callback(
      [&] { rc = cliapp::run_embed(embed_q, embed_pair, budgets, std::cout); });

  uint32_t max_p = 7;
  uint64_t all_seed = cliapp::kDefaultSeed;
  auto* all_cmd = app.add_subcommand("verify-all", "run the whole campaign");
  all_cmd->add_option("--max-p", max_p, "largest lattice prime (default 7)");
  all_cmd->add_option("--seed", all_seed, "seed for sampled checks");
  all_cmd->callback(
      [&] { rc = cliapp::run_verify_all(max_p, all_seed, budgets, std::cout); });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
