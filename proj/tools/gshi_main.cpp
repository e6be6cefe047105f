// Command-line front end: graph ingestion plus one subcommand per pipeline.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gshi/cli.hpp"
#include "gshi/io.hpp"

namespace {

gshi::FamilySpec parse_family(const std::vector<std::string>& args) {
  if (args.size() < 2) gshi::fail(gshi::errc::bad_parameter, "--family needs a name and n");
  gshi::FamilySpec spec;
  spec.kind = args[0];
  try {
    spec.n = std::stoi(args[1]);
    if (spec.kind == "complete_minus") {
      if (args.size() != 4)
        gshi::fail(gshi::errc::bad_parameter, "complete_minus needs n and the removed edge i j");
      spec.i = std::stoi(args[2]);
      spec.j = std::stoi(args[3]);
    } else if (args.size() != 2) {
      gshi::fail(gshi::errc::bad_parameter, "--family " + spec.kind + " takes a single parameter");
    }
  } catch (const std::invalid_argument&) {
    gshi::fail(gshi::errc::parse_error, "non-numeric family parameter");
  }
  return spec;
}

void add_graph_source(CLI::App* cmd, std::vector<std::string>& family, std::string& file) {
  cmd->add_option("--family", family,
                  "graph family: path|cycle|star|complete <n>, or complete_minus <n> <i> <j>")
      ->expected(2, 4);
  cmd->add_option("--file", file, "graph text file ('n <N>' then one 'i j' edge per line)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-Shi arrangement toolkit: regions, Pak-Stanley labels, chip-firing counts"};
  app.require_subcommand(1);

  gshi::RunConfig config;
  std::vector<std::string> family_args;
  std::string file_arg;
  std::string label_arg;

  auto add_common = [&](CLI::App* cmd, bool graph_source = true) {
    if (graph_source) add_graph_source(cmd, family_args, file_arg);
    cmd->add_option("--format", config.format, "text|json|csv")->default_val("text");
    cmd->add_option("--out", config.out_path, "write the artifact to this path");
    cmd->add_option("--cap", config.cap, "largest admissible 3^m state count");
    cmd->add_option("--jobs", config.jobs, "worker count (reserved; output is deterministic)");
    return cmd;
  };

  auto* regions = add_common(app.add_subcommand("regions", "enumerate the arrangement regions"));
  regions->add_flag("--witness", config.witness, "emit an exact rational point per region");
  add_common(app.add_subcommand("labels", "full region-to-label table"));
  add_common(app.add_subcommand("census", "label multiplicity census"));
  add_common(app.add_subcommand("digraph", "DOT export of the region adjacency digraph"));
  add_common(app.add_subcommand("superstables", "superstable configurations of the coned graph"));
  add_common(app.add_subcommand("probe-sinks", "look for sinks labelled non-maximally"));

  auto* game = app.add_subcommand("game", "three-rows-game queries");
  game->require_subcommand(1);
  auto* find = add_common(game->add_subcommand("find-label", "histories and regions with a label"));
  find->add_option("label", label_arg, "comma-separated counts, e.g. 0,1,1,0,2,0")->required();

  auto* verify = app.add_subcommand("verify", "closed-form counts against brute force");
  verify->add_option("--family", config.verify_family, "path|cycle|star|complete|tree (default all)");
  verify->add_option("--max", config.verify_max, "largest n per family");
  verify->add_option("--format", config.format, "text|csv")->default_val("text");
  verify->add_option("--out", config.out_path, "write the table to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* picked = app.get_subcommands().front();
    config.subcommand = picked->get_name();
    if (config.subcommand == "game") {
      config.subcommand = "find-label";
      config.label = gshi::parse_label(label_arg);
    }
    if (!family_args.empty()) config.family = parse_family(family_args);
    if (!file_arg.empty()) config.graph_file = file_arg;
  } catch (const gshi::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return gshi::run(config, std::cout, std::cerr);
}
