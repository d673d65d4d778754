// Command-line front end: csep <command> [options]. See README.md.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "csep/run.hpp"

namespace {

void add_graph_options(CLI::App* cmd, csep::RunConfig& config, std::string& format) {
  cmd->add_option("--graph,-g", config.graph_path, "Input graph file");
  cmd->add_option("--format", format, "Graph file format")->check(CLI::IsMember({"edgelist", "dimacs"}));
}

void add_class_options(CLI::App* cmd, csep::RunConfig& config) {
  cmd->add_option("--p,-p", config.p, "Clique-block size p");
  cmd->add_option("--q,-q", config.q, "Stable-block size q");
}

void add_family_options(CLI::App* cmd, csep::RunConfig& config, std::string& ramsey, std::string& family,
                        std::string& allow_empty, std::string& singletons) {
  cmd->add_option("--mode", ramsey, "Ramsey value: tight or paper (2^{2q})")
      ->check(CLI::IsMember({"tight", "paper"}));
  cmd->add_option("--family", family, "Triple enumeration: pruned or faithful")
      ->check(CLI::IsMember({"pruned", "faithful"}));
  cmd->add_option("--allow-empty-s2", allow_empty, "Include triples with S2 empty")
      ->check(CLI::IsMember({"true", "false"}));
  cmd->add_option("--singleton-neighborhoods", singletons, "At p = 1, add N[v] and N(v) partitions")
      ->check(CLI::IsMember({"true", "false"}));
  cmd->add_option("--budget", config.family.budget, "Enumeration budget (triples)");
  cmd->add_option("--workers", config.workers, "Worker threads for coverage checks");
  cmd->add_option("--max-vertices", config.max_vertices, "Vertex limit for exhaustive enumeration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique / stable-set separation toolkit"};
  app.require_subcommand(1);

  csep::RunConfig config;
  std::string format = "edgelist";
  std::string ramsey = "tight";
  std::string family = "pruned";
  std::string allow_empty = "true";
  std::string singletons = "true";
  std::string report_path;
  app.add_option("--report,-o", report_path, "Write the report here instead of stdout");

  std::map<CLI::App*, csep::Command> commands;

  auto* check = app.add_subcommand("check-free", "Test membership in the forbidden-pattern class");
  add_graph_options(check, config, format);
  add_class_options(check, config);
  commands[check] = csep::Command::check_free;

  auto* fam = app.add_subcommand("family", "Build and serialize the separating partition family");
  add_graph_options(fam, config, format);
  add_class_options(fam, config);
  add_family_options(fam, config, ramsey, family, allow_empty, singletons);
  commands[fam] = csep::Command::family;

  auto* wit = app.add_subcommand("witness", "Find a separating partition for one clique / stable-set pair");
  add_graph_options(wit, config, format);
  add_class_options(wit, config);
  add_family_options(wit, config, ramsey, family, allow_empty, singletons);
  wit->add_option("--clique,-K", config.clique, "Clique as comma-separated 0-based vertices");
  wit->add_option("--stable,-S", config.stable, "Stable set as comma-separated 0-based vertices");
  commands[wit] = csep::Command::witness;

  auto* ver = app.add_subcommand("verify", "Exhaustively check family coverage on a graph or manifest");
  add_graph_options(ver, config, format);
  add_class_options(ver, config);
  add_family_options(ver, config, ramsey, family, allow_empty, singletons);
  ver->add_option("--manifest", config.manifest_path, "JSON manifest of generated graphs");
  ver->add_option("--max-tries", config.max_tries, "Default rejection-sampling attempts for manifest entries");
  commands[ver] = csep::Command::verify;

  auto* ram = app.add_subcommand("ramsey-check", "Check that every 2-coloring of K_r has a monochromatic K_q");
  ram->add_option("--r", config.ramsey_r, "Complete graph order")->required();
  ram->add_option("--q", config.ramsey_q, "Monochromatic clique order")->required();
  commands[ram] = csep::Command::ramsey_check;

  auto* gen = app.add_subcommand("gen", "Generate a seeded random graph");
  gen->add_option("--n", config.n, "Vertex count");
  gen->add_option("--prob", config.edge_prob, "Edge probability");
  gen->add_option("--seed", config.seed, "Random seed");
  gen->add_flag("--in-class", config.in_class, "Rejection-sample a class member for --p/--q");
  gen->add_flag("--triangle-free", config.triangle_free, "Generate a triangle-free graph");
  gen->add_option("--max-tries", config.max_tries, "Rejection-sampling attempts");
  gen->add_option("--out", config.output, "Write the graph to this file");
  gen->add_option("--format", format, "Output graph format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  add_class_options(gen, config);
  commands[gen] = csep::Command::gen;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : csep::kExitInputError;
  }

  for (auto* sub : app.get_subcommands()) config.command = commands.at(sub);
  config.format = format == "dimacs" ? csep::GraphFormat::dimacs : csep::GraphFormat::edgelist;
  config.family.ramsey = ramsey == "paper" ? csep::RamseyMode::paper : csep::RamseyMode::tight;
  config.family.mode = family == "faithful" ? csep::FamilyMode::faithful : csep::FamilyMode::pruned;
  config.family.allow_empty_s2 = allow_empty == "true";
  config.family.singleton_neighborhoods = singletons == "true";

  const auto result = csep::run(config);
  if (report_path.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write " << report_path << "\n";
      return csep::kExitInputError;
    }
    out << result.report;
  }
  return result.exit_code;
}
