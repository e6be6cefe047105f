#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gshi/cli.hpp"
#include "gshi/io.hpp"

using namespace gshi;
using nlohmann::json;

namespace {

struct RunResult {
  int status = 0;
  std::string out;
  std::string err;
};

RunResult invoke(RunConfig config) {
  std::ostringstream out, err;
  RunResult r;
  r.status = run(config, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig family_config(const std::string& cmd, FamilySpec spec, const std::string& fmt = "text") {
  RunConfig config;
  config.subcommand = cmd;
  config.family = spec;
  config.format = fmt;
  return config;
}

}  // namespace

TEST_CASE("graph text format parsing") {
  SimpleGraph g = parse_graph_text("# a square\nn 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(g == cycle_graph(4));

  CHECK_THROWS_AS(parse_graph_text("0 1\n"), error);
  CHECK_THROWS_AS(parse_graph_text("n 2\n0 x\n"), error);
  CHECK_THROWS_AS(parse_graph_text(""), error);
  CHECK(parse_graph_text(graph_to_text(complete_minus(4, 1, 2))) == complete_minus(4, 1, 2));
}

TEST_CASE("label parsing and rendering") {
  CHECK(parse_label("0,1,1,0,2,0") == Label{0, 1, 1, 0, 2, 0});
  CHECK(parse_label("3") == Label{3});
  CHECK_THROWS_AS(parse_label("1,,2"), error);
  CHECK_THROWS_AS(parse_label("1,-2"), error);
  CHECK_THROWS_AS(parse_label(""), error);
  CHECK(label_string({0, 1, 0}) == "(0, 1, 0)");
  CHECK(chip_config_string({1, 0, 2}) == "1,0,2");
}

TEST_CASE("census artifacts") {
  RunResult r = invoke(family_config("census", {"complete", 3}, "json"));
  CHECK(r.status == 0);
  json doc = json::parse(r.out);
  CHECK(doc["regions"] == 16);
  CHECK(doc["labels"].size() == 16);
  for (const auto& entry : doc["labels"]) CHECK(entry["count"] == 1);
  CHECK(doc["graph"]["n"] == 3);

  RunResult p3 = invoke(family_config("census", {"path", 3}));
  CHECK(p3.status == 0);
  CHECK(p3.out.find("(0, 1, 0): 2") != std::string::npos);
  CHECK(p3.out.find("regions: 9") != std::string::npos);

  RunResult csv = invoke(family_config("census", {"path", 2}, "csv"));
  CHECK(csv.out == "label,count\n0 0,1\n0 1,1\n1 0,1\n");
}

TEST_CASE("census totals match the regions count") {
  for (FamilySpec spec : {FamilySpec{"path", 4}, FamilySpec{"cycle", 4}, FamilySpec{"star", 3}}) {
    json doc = json::parse(invoke(family_config("census", spec, "json")).out);
    long long total = 0;
    for (const auto& entry : doc["labels"]) total += entry["count"].get<long long>();
    CHECK(total == doc["regions"].get<long long>());
    json doc2 = json::parse(invoke(family_config("regions", spec, "json")).out);
    CHECK(doc2["count"] == doc["regions"]);
  }
}

TEST_CASE("regions and labels subcommands") {
  RunResult r = invoke(family_config("regions", {"path", 2}));
  CHECK(r.out == "regions: 3\n");

  RunConfig with_witness = family_config("regions", {"cycle", 3});
  with_witness.witness = true;
  RunResult w = invoke(with_witness);
  CHECK(w.status == 0);
  CHECK(w.out.find("MMM") != std::string::npos);

  RunResult labels = invoke(family_config("labels", {"path", 2}, "csv"));
  CHECK(labels.out == "region,label\nT,1 0\nM,0 0\nB,0 1\n");
}

TEST_CASE("digraph DOT export") {
  RunResult r = invoke(family_config("digraph", {"path", 2}));
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph shi_adjacency {") == 0);
  CHECK(r.out.find("\"M\" -> \"T\" [label=0];") != std::string::npos);
  CHECK(r.out.find("\"M\" -> \"B\" [label=1];") != std::string::npos);
  CHECK(r.out.find("\"M\" [label=\"(0, 0)\"];") != std::string::npos);
}

TEST_CASE("superstables subcommand") {
  RunResult r = invoke(family_config("superstables", {"path", 3}, "csv"));
  CHECK(r.status == 0);
  CHECK(r.out.find("v0,v1,v2\n0,0,0\n") == 0);
  CHECK(r.out.find("1,1,0") != std::string::npos);

  json arr = json::parse(invoke(family_config("superstables", {"path", 2}, "json")).out);
  CHECK(arr.size() == 3);
}

TEST_CASE("find-label subcommand") {
  RunConfig config = family_config("find-label", {"path", 6}, "json");
  config.label = {0, 1, 1, 0, 2, 0};
  json doc = json::parse(invoke(config).out);
  CHECK(doc["count"] == 3);
  CHECK(doc["histories"] == json::array({"MTTBT", "BMTBT", "BBMBT"}));
  CHECK(doc["constraints"] ==
        json::array({"x0 - x1 > 0", "x2 - x3 < 1", "x3 - x4 > 1", "x4 - x5 < 0"}));

  // cycle fast path agrees with the census count
  RunConfig cyc = family_config("find-label", {"cycle", 4}, "json");
  cyc.label = {0, 1, 0, 0};
  json cyc_doc = json::parse(invoke(cyc).out);
  MultiplicityReport report = multiplicity_census(cycle_graph(4));
  CHECK(cyc_doc["count"].get<long long>() == report.counts.at({0, 1, 0, 0}));

  // brute fallback on a generic graph
  RunConfig gen = family_config("find-label", {"complete_minus", 4}, "json");
  gen.family->i = 0;
  gen.family->j = 1;
  gen.label = {0, 0, 0, 0};
  CHECK(json::parse(invoke(gen).out)["count"] == 1);

  RunConfig bad = family_config("find-label", {"path", 3});
  bad.label = {1, 1, 1};
  RunResult err = invoke(bad);
  CHECK(err.status == 1);
  CHECK(err.err.find("unachievable") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  RunConfig config;
  config.subcommand = "verify";
  config.verify_family = "cycle";
  config.verify_max = 5;
  RunResult r = invoke(config);
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);

  config.format = "csv";
  RunResult csv = invoke(config);
  CHECK(csv.out.find("family,n,quantity,formula,brute,status\n") == 0);
  CHECK(csv.out.find("cycle,3,regions,16,16,PASS") != std::string::npos);
}

TEST_CASE("probe-sinks finds nothing on trees and cycles") {
  for (FamilySpec spec : {FamilySpec{"path", 4}, FamilySpec{"cycle", 5}, FamilySpec{"star", 3}}) {
    json doc = json::parse(invoke(family_config("probe-sinks", spec, "json")).out);
    CHECK(doc["non_maximal"].empty());
  }
  RunResult text = invoke(family_config("probe-sinks", {"cycle", 4}));
  CHECK(text.out.find("sinks: 14") != std::string::npos);
  CHECK(text.out.find("every sink label is maximal") != std::string::npos);
}

TEST_CASE("file ingestion") {
  std::string path = "gshi_test_graph.txt";
  {
    std::ofstream f(path);
    f << "# K4 without the {0,1} edge\n" << graph_to_text(complete_minus(4, 0, 1));
  }
  RunConfig config;
  config.subcommand = "regions";
  config.graph_file = path;
  RunResult r = invoke(config);
  std::remove(path.c_str());
  CHECK(r.status == 0);
  CHECK(r.out == "regions: 84\n");
}

TEST_CASE("errors exit nonzero") {
  RunConfig both = family_config("regions", {"path", 3});
  both.graph_file = "also.txt";
  CHECK(invoke(both).status == 1);

  RunConfig capped = family_config("regions", {"complete", 4});
  capped.cap = 10;
  RunResult r = invoke(capped);
  CHECK(r.status == 1);
  CHECK(r.err.find("too_large") != std::string::npos);

  RunConfig nofile;
  nofile.subcommand = "census";
  nofile.graph_file = "definitely_missing.txt";
  CHECK(invoke(nofile).status == 1);
}

TEST_CASE("byte-identical output across repeated runs") {
  RunConfig config = family_config("census", {"complete_minus", 4}, "json");
  config.family->i = 0;
  config.family->j = 2;
  RunResult a = invoke(config);
  RunResult b = invoke(config);
  CHECK(a.out == b.out);
  config.jobs = 4;
  CHECK(invoke(config).out == a.out);
}

TEST_CASE("output lands in --out") {
  RunConfig config = family_config("regions", {"path", 2});
  config.out_path = "gshi_test_out.txt";
  RunResult r = invoke(config);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(config.out_path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::remove(config.out_path.c_str());
  CHECK(buf.str() == "regions: 3\n");
}
