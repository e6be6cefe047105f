#pragma once

#include <stdexcept>
#include <string>

namespace gshi {

enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  disconnected,
  bad_parameter,
  illegal_fire,
  illegal_cluster_fire,
  empty_set,
  too_large,
  bad_entry,
  not_superstable,
  not_dominated,
  infeasible,
  graph_mismatch,
  inconsistent_labels,
  not_a_path,
  not_a_cycle,
  not_a_parking_function,
  unachievable,
  identity_failure,
  parse_error,
};

const char* errc_name(errc c);

/// All library failures are reported as gshi::error carrying an errc code.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gshi
