#include "gshi/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gshi {

namespace {

using nlohmann::json;

json graph_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back({i, j});
  return json{{"n", g.n}, {"edges", edges}};
}

}  // namespace

SimpleGraph parse_graph_text(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    if (n < 0) {
      std::string keyword;
      row >> keyword >> n;
      if (keyword != "n" || row.fail() || n < 1)
        fail(errc::parse_error, "expected 'n <count>' on line " + std::to_string(lineno));
      continue;
    }
    int i, j;
    row >> i >> j;
    if (row.fail()) fail(errc::parse_error, "expected 'i j' on line " + std::to_string(lineno));
    edges.emplace_back(i, j);
  }
  if (n < 0) fail(errc::parse_error, "missing 'n <count>' header");
  return make_graph(n, std::move(edges));
}

SimpleGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

SimpleGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return parse_graph_text(in);
}

std::string graph_to_text(const SimpleGraph& g) {
  std::string out = "n " + std::to_string(g.n) + "\n";
  for (const auto& [i, j] : g.edges) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

std::string chip_config_string(const ChipConfig& c) {
  std::string out;
  for (size_t v = 0; v < c.size(); ++v) {
    if (v) out += ",";
    out += std::to_string(c[v]);
  }
  return out;
}

Label parse_label(const std::string& text) {
  Label out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) used++;
      if (used != item.size() || value < 0) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad label entry '" + item + "'");
    }
  }
  if (out.empty()) fail(errc::parse_error, "empty label");
  return out;
}

std::string label_string(const Label& p) {
  std::string out = "(";
  for (size_t v = 0; v < p.size(); ++v) {
    if (v) out += ", ";
    out += std::to_string(p[v]);
  }
  return out + ")";
}

std::string superstables_to_csv(const std::vector<ChipConfig>& cs) {
  std::string out;
  if (!cs.empty()) {
    for (size_t v = 0; v < cs.front().size(); ++v)
      out += (v ? ",v" : "v") + std::to_string(v);
    out += "\n";
  }
  for (const ChipConfig& c : cs) out += chip_config_string(c) + "\n";
  return out;
}

std::string superstables_to_json(const std::vector<ChipConfig>& cs) {
  json arr = json::array();
  for (const ChipConfig& c : cs) arr.push_back(c);
  return arr.dump(2) + "\n";
}

std::string census_to_json(const SimpleGraph& g, const MultiplicityReport& report) {
  json labels = json::array();
  for (const auto& [label, count] : report.counts)
    labels.push_back({{"label", label}, {"count", count}});
  json doc{{"graph", graph_json(g)}, {"regions", report.regions}, {"labels", labels}};
  return doc.dump(2) + "\n";
}

std::string census_to_csv(const MultiplicityReport& report) {
  std::string out = "label,count\n";
  for (const auto& [label, count] : report.counts) {
    std::string key;
    for (size_t v = 0; v < label.size(); ++v) {
      if (v) key += " ";
      key += std::to_string(label[v]);
    }
    out += key + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string census_to_text(const MultiplicityReport& report) {
  std::string out;
  for (const auto& [label, count] : report.counts)
    out += label_string(label) + ": " + std::to_string(count) + "\n";
  out += "regions: " + std::to_string(report.regions) + "\n";
  out += "distinct labels: " + std::to_string(report.counts.size()) + "\n";
  return out;
}

std::string digraph_to_dot(const AdjacencyDigraph& d, const std::vector<Label>& labels) {
  if (labels.size() != d.nodes.size()) fail(errc::bad_parameter, "one label per node required");
  std::string out = "digraph shi_adjacency {\n";
  for (size_t v = 0; v < d.nodes.size(); ++v)
    out += "  \"" + state_string(d.nodes[v]) + "\" [label=\"" + label_string(labels[v]) + "\"];\n";
  for (const auto& arc : d.arcs)
    out += "  \"" + state_string(d.nodes[arc.from]) + "\" -> \"" + state_string(d.nodes[arc.to]) +
           "\" [label=" + std::to_string(arc.increment) + "];\n";
  out += "}\n";
  return out;
}

namespace {

std::string report_family(const CountReport& r) {
  std::string name = r.family;
  if (r.variant >= 0) name += "#" + std::to_string(r.variant);
  return name;
}

}  // namespace

std::string reports_to_text(const std::vector<CountReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "family" << std::setw(5) << "n" << std::setw(17)
      << "quantity" << std::setw(14) << "formula" << std::setw(14) << "brute"
      << "status\n";
  for (const CountReport& r : reports) {
    out << std::left << std::setw(12) << report_family(r) << std::setw(5) << r.n << std::setw(17)
        << quantity_name(r.quantity) << std::setw(14) << r.formula_value.str() << std::setw(14)
        << r.brute_value.str() << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

std::string reports_to_csv(const std::vector<CountReport>& reports) {
  std::string out = "family,n,quantity,formula,brute,status\n";
  for (const CountReport& r : reports) {
    out += report_family(r) + "," + std::to_string(r.n) + "," + quantity_name(r.quantity) + "," +
           r.formula_value.str() + "," + r.brute_value.str() + "," + (r.pass() ? "PASS" : "FAIL") +
           "\n";
  }
  return out;
}

}  // namespace gshi
