#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gshi/graph.hpp"
#include "gshi/regions.hpp"

namespace gshi {

/// One CLI invocation. Exactly one graph source (family or file) for the
/// graph-driven subcommands; `verify` takes a family name only.
struct RunConfig {
  std::string subcommand;  // regions | labels | census | digraph | superstables |
                           // find-label | verify | probe-sinks
  std::optional<FamilySpec> family;
  std::optional<std::string> graph_file;
  std::string format = "text";  // text | json | csv | dot
  std::string out_path;         // empty: stream to `out`
  long long cap = kDefaultCap;  // enumeration cap, checked before any 3^m walk
  int jobs = 1;                 // reserved; execution is deterministic regardless
  bool witness = false;         // regions: emit a rational point per region
  Label label;                  // find-label target
  std::string verify_family;    // verify: empty runs every family suite
  int verify_max = 0;           // verify: 0 picks the per-family default bound
};

/// Executes one subcommand; artifacts go to out_path or `out`. Returns the
/// process exit status: nonzero on validation failure, cap excess, or any
/// FAIL row from verify.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gshi
