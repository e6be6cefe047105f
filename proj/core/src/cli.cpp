#include "gshi/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gshi/census.hpp"
#include "gshi/chips.hpp"
#include "gshi/game.hpp"
#include "gshi/io.hpp"

namespace gshi {

namespace {

using nlohmann::json;

json graph_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back({i, j});
  return json{{"n", g.n}, {"edges", edges}};
}

std::string rational_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string witness_string(const std::vector<Rational>& x) {
  std::string out = "(";
  for (size_t v = 0; v < x.size(); ++v) {
    if (v) out += ", ";
    out += rational_string(x[v]);
  }
  return out + ")";
}

SimpleGraph resolve_graph(const RunConfig& config) {
  if (config.family.has_value() == config.graph_file.has_value())
    fail(errc::bad_parameter, "exactly one graph source (--family or --file) is required");
  if (config.family) return build_family(*config.family);
  return load_graph_file(*config.graph_file);
}

int default_verify_max(const std::string& family) {
  if (family == "path" || family == "cycle") return 8;
  if (family == "star") return 6;
  if (family == "complete") return 4;
  if (family == "tree") return 7;
  return 6;
}

struct FoundHistories {
  std::vector<History> histories;
  std::vector<std::pair<int, int>> columns;  // board columns for rendering
  std::vector<ColumnConstraint> constraints;  // paths only
  bool has_constraints = false;
};

FoundHistories find_label_histories(const SimpleGraph& g, const Label& p, long long cap) {
  if (static_cast<int>(p.size()) != g.n) fail(errc::bad_parameter, "label length must equal n");
  FoundHistories found;
  found.columns = g.edges;
  if (g == path_graph(g.n)) {
    found.histories = enumerate_histories_for_outcome_path(p);
    found.constraints = bounding_constraints_for_label_path(p);
    found.has_constraints = true;
  } else if (g.n >= 3 && g == cycle_graph(g.n)) {
    found.histories = cycle_enumerate_histories_for_label(p);
    found.columns.clear();
    for (int k = 0; k + 1 < g.n; ++k) found.columns.emplace_back(k, k + 1);
    found.columns.emplace_back(0, g.n - 1);
  } else if (g.n >= 2 && g == star_graph(g.n - 1)) {
    found.histories = star_enumerate_histories_for_label(g.n - 1, p);
  } else {
    for (const StateVector& s : regions_with_label(g, p, cap))
      found.histories.push_back(to_history(s));
  }
  return found;
}

int run_impl(const RunConfig& config, std::ostream& out) {
  const std::string& cmd = config.subcommand;
  const std::string& fmt = config.format;

  if (cmd == "verify") {
    std::vector<CountReport> reports;
    std::vector<std::string> families;
    if (config.verify_family.empty())
      families = {"path", "cycle", "star", "complete", "tree"};
    else
      families = {config.verify_family};
    for (const std::string& family : families) {
      int n_max = config.verify_max > 0 ? config.verify_max : default_verify_max(family);
      auto rows = verify_family_all(family, n_max);
      reports.insert(reports.end(), rows.begin(), rows.end());
    }
    out << (fmt == "csv" ? reports_to_csv(reports) : reports_to_text(reports));
    for (const CountReport& r : reports)
      if (!r.pass()) return 1;
    return 0;
  }

  SimpleGraph g = resolve_graph(config);

  if (cmd == "regions") {
    auto regions = enumerate_regions(g, config.cap);
    if (fmt == "json") {
      json doc{{"graph", graph_json(g)}, {"count", regions.size()}};
      json list = json::array();
      for (const StateVector& s : regions) {
        json entry{{"region", state_string(s)}};
        if (config.witness) {
          json point = json::array();
          for (const Rational& r : region_witness(g, s)) point.push_back(rational_string(r));
          entry["witness"] = point;
        }
        list.push_back(entry);
      }
      doc["regions"] = list;
      out << doc.dump(2) << "\n";
    } else if (fmt == "csv") {
      out << (config.witness ? "region,witness\n" : "region\n");
      for (const StateVector& s : regions) {
        out << state_string(s);
        if (config.witness) out << ",\"" << witness_string(region_witness(g, s)) << "\"";
        out << "\n";
      }
    } else {
      out << "regions: " << regions.size() << "\n";
      if (config.witness)
        for (const StateVector& s : regions)
          out << state_string(s) << "  " << witness_string(region_witness(g, s)) << "\n";
    }
    return 0;
  }

  if (cmd == "labels") {
    auto regions = enumerate_regions(g, config.cap);
    if (fmt == "json") {
      json list = json::array();
      for (const StateVector& s : regions)
        list.push_back({{"region", state_string(s)}, {"label", direct_label(g, s)}});
      out << json{{"graph", graph_json(g)}, {"labels", list}}.dump(2) << "\n";
    } else if (fmt == "csv") {
      out << "region,label\n";
      for (const StateVector& s : regions) {
        Label p = direct_label(g, s);
        std::string key;
        for (size_t v = 0; v < p.size(); ++v) key += (v ? " " : "") + std::to_string(p[v]);
        out << state_string(s) << "," << key << "\n";
      }
    } else {
      for (const StateVector& s : regions)
        out << state_string(s) << ": " << label_string(direct_label(g, s)) << "\n";
    }
    return 0;
  }

  if (cmd == "census") {
    MultiplicityReport report = multiplicity_census(g, config.cap);
    if (fmt == "json")
      out << census_to_json(g, report);
    else if (fmt == "csv")
      out << census_to_csv(report);
    else
      out << census_to_text(report);
    return 0;
  }

  if (cmd == "digraph") {
    AdjacencyDigraph d = adjacency_digraph(g, config.cap);
    out << digraph_to_dot(d, pak_stanley_labels(d));
    return 0;
  }

  if (cmd == "superstables") {
    auto cs = enumerate_superstables(cone(g));
    if (fmt == "json") {
      out << superstables_to_json(cs);
    } else if (fmt == "csv") {
      out << superstables_to_csv(cs);
    } else {
      out << "superstables: " << cs.size() << "\n";
      for (const ChipConfig& c : cs) out << chip_config_string(c) << "\n";
    }
    return 0;
  }

  if (cmd == "find-label") {
    FoundHistories found = find_label_histories(g, config.label, config.cap);
    if (fmt == "json") {
      json doc{{"graph", graph_json(g)},
               {"label", config.label},
               {"count", found.histories.size()}};
      json list = json::array();
      for (const History& h : found.histories) list.push_back(history_string(h));
      doc["histories"] = list;
      if (found.has_constraints) {
        json cons = json::array();
        for (const ColumnConstraint& c : found.constraints) {
          std::string text = constraint_string(c);
          if (!text.empty()) cons.push_back(text);
        }
        doc["constraints"] = cons;
      }
      out << doc.dump(2) << "\n";
    } else if (fmt == "csv") {
      out << "history\n";
      for (const History& h : found.histories) out << history_string(h) << "\n";
    } else {
      out << "label " << label_string(config.label) << ": " << found.histories.size()
          << " histories\n";
      for (const History& h : found.histories) {
        out << "\n" << history_string(h) << "\n";
        out << render_board(found.columns, h);
      }
      if (found.has_constraints) {
        out << "\nbounding constraints:\n";
        for (const ColumnConstraint& c : found.constraints) {
          std::string text = constraint_string(c);
          if (!text.empty()) out << "  " << text << "\n";
        }
      }
    }
    return 0;
  }

  if (cmd == "probe-sinks") {
    AdjacencyDigraph d = adjacency_digraph(g, config.cap);
    auto labels = pak_stanley_labels(d);
    auto sinks = sink_nodes(d);
    std::vector<int> non_maximal;
    for (int v : sinks) {
      long long total = 0;
      for (int x : labels[v]) total += x;
      if (total != g.m()) non_maximal.push_back(v);
    }
    if (fmt == "json") {
      json list = json::array();
      for (int v : non_maximal)
        list.push_back({{"region", state_string(d.nodes[v])}, {"label", labels[v]}});
      out << json{{"graph", graph_json(g)},
                  {"sinks", sinks.size()},
                  {"non_maximal", list}}
                 .dump(2)
          << "\n";
    } else {
      out << "sinks: " << sinks.size() << "\n";
      if (non_maximal.empty()) {
        out << "every sink label is maximal\n";
      } else {
        out << "sinks with non-maximal labels:\n";
        for (int v : non_maximal)
          out << "  " << state_string(d.nodes[v]) << ": " << label_string(labels[v]) << "\n";
      }
    }
    return 0;
  }

  fail(errc::bad_parameter, "unknown subcommand '" + cmd + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.jobs < 1) fail(errc::bad_parameter, "--jobs must be positive");
    if (!config.out_path.empty()) {
      std::ofstream file(config.out_path);
      if (!file) fail(errc::parse_error, "cannot open '" + config.out_path + "' for writing");
      return run_impl(config, file);
    }
    return run_impl(config, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gshi
