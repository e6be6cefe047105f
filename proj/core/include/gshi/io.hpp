#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gshi/census.hpp"
#include "gshi/chips.hpp"
#include "gshi/regions.hpp"

namespace gshi {

/// Graph text format: first line `n <N>`, then one edge per line `i j`
/// (any order, normalized on read). Lines starting with `#` are comments.
SimpleGraph parse_graph_text(std::istream& in);
SimpleGraph parse_graph_text(const std::string& text);
SimpleGraph load_graph_file(const std::string& path);
std::string graph_to_text(const SimpleGraph& g);

std::string chip_config_string(const ChipConfig& c);  // comma-separated
Label parse_label(const std::string& text);           // comma-separated counts

std::string label_string(const Label& p);  // "(0, 1, 0)"

std::string superstables_to_csv(const std::vector<ChipConfig>& cs);
std::string superstables_to_json(const std::vector<ChipConfig>& cs);

/// {"graph": ..., "regions": N, "labels": [{"label": [...], "count": k}, ...]}
/// with the labels sorted lexicographically.
std::string census_to_json(const SimpleGraph& g, const MultiplicityReport& report);
std::string census_to_csv(const MultiplicityReport& report);
std::string census_to_text(const MultiplicityReport& report);

/// DOT export: nodes keyed by state string, labelled with the Pak-Stanley
/// tuple; arcs labelled with the incremented coordinate.
std::string digraph_to_dot(const AdjacencyDigraph& d, const std::vector<Label>& labels);

std::string reports_to_text(const std::vector<CountReport>& reports);
std::string reports_to_csv(const std::vector<CountReport>& reports);

}  // namespace gshi
