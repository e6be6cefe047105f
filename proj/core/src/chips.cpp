#include "gshi/chips.hpp"

#include <algorithm>
#include <cstdint>

namespace gshi {

namespace {

void check_config(const ConedGraph& cg, const ChipConfig& c) {
  if (static_cast<int>(c.size()) != cg.base.n)
    fail(errc::bad_parameter, "config length " + std::to_string(c.size()) + " for n=" + std::to_string(cg.base.n));
  for (int x : c)
    if (x < 0) fail(errc::bad_parameter, "negative chip count");
}

}  // namespace

ChipConfig fire(const ConedGraph& cg, const ChipConfig& c, int v) {
  check_config(cg, c);
  if (v < 0 || v >= cg.base.n) fail(errc::vertex_out_of_range, "v=" + std::to_string(v));
  ChipConfig out = c;
  out[v] -= cg.degree(v);
  for (const auto& [i, j] : cg.base.edges) {
    if (i == v) out[j]++;
    if (j == v) out[i]++;
  }
  if (out[v] < 0) fail(errc::illegal_fire, "vertex " + std::to_string(v) + " lacks chips");
  return out;
}

ChipConfig cluster_fire(const ConedGraph& cg, const ChipConfig& c, const std::vector<int>& s) {
  check_config(cg, c);
  if (s.empty()) fail(errc::empty_set, "cluster-fire set is empty");
  std::vector<char> in(cg.base.n, 0);
  for (int v : s) {
    if (v < 0 || v >= cg.base.n) fail(errc::vertex_out_of_range, "set member " + std::to_string(v));
    in[v] = 1;
  }
  ChipConfig out = c;
  for (int v = 0; v < cg.base.n; ++v)
    if (in[v]) out[v] -= cg.degree(v);
  for (const auto& [i, j] : cg.base.edges) {
    if (in[i]) out[j]++;
    if (in[j]) out[i]++;
  }
  for (int v = 0; v < cg.base.n; ++v)
    if (out[v] < 0) fail(errc::illegal_cluster_fire, "vertex " + std::to_string(v) + " goes negative");
  return out;
}

bool is_stable(const ConedGraph& cg, const ChipConfig& c) {
  check_config(cg, c);
  for (int v = 0; v < cg.base.n; ++v)
    if (c[v] >= cg.degree(v)) return false;
  return true;
}

std::vector<int> dhar_burn(const ConedGraph& cg, const ChipConfig& c) {
  check_config(cg, c);
  int n = cg.base.n;
  auto adj = cg.base.adjacency();
  // burnt edge counts; the sink burns first, contributing one edge everywhere
  std::vector<char> burnt(n, 0);
  std::vector<int> hot(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!burnt[v] && hot[v] > c[v]) {
        burnt[v] = 1;
        changed = true;
        for (int u : adj[v]) hot[u]++;
      }
    }
  }
  std::vector<int> survivors;
  for (int v = 0; v < n; ++v)
    if (!burnt[v]) survivors.push_back(v);
  return survivors;
}

bool is_superstable(const ConedGraph& cg, const ChipConfig& c) { return dhar_burn(cg, c).empty(); }

bool is_parking_function(const ConedGraph& cg, const ChipConfig& c) {
  check_config(cg, c);
  int n = cg.base.n;
  if (n > 20) fail(errc::too_large, "subset oracle limited to n <= 20");
  std::vector<std::uint32_t> adj_mask(n, 0);
  for (const auto& [i, j] : cg.base.edges) {
    adj_mask[i] |= 1u << j;
    adj_mask[j] |= 1u << i;
  }
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool saved = false;
    for (int v = 0; v < n && !saved; ++v) {
      if (!(s & (1u << v))) continue;
      // +1 for the sink edge, always outside s
      int out = __builtin_popcount(adj_mask[v] & ~s) + 1;
      if (c[v] < out) saved = true;
    }
    if (!saved) return false;
  }
  return true;
}

std::vector<ChipConfig> enumerate_superstables(const ConedGraph& cg) {
  int n = cg.base.n;
  long long box = 1;
  for (int v = 0; v < n; ++v) {
    box *= cg.degree(v);
    if (box > 10'000'000) fail(errc::too_large, "degree box exceeds 1e7 candidates");
  }
  std::vector<ChipConfig> out;
  ChipConfig c(n, 0);
  while (true) {
    if (is_superstable(cg, c)) out.push_back(c);
    int k = n - 1;
    while (k >= 0 && c[k] == cg.degree(k) - 1) c[k--] = 0;
    if (k < 0) break;
    c[k]++;
  }
  return out;
}

ChipConfig max_config(const ConedGraph& cg) {
  ChipConfig c(cg.base.n);
  for (int v = 0; v < cg.base.n; ++v) c[v] = cg.degree(v) - 1;
  return c;
}

bool is_critical(const ConedGraph& cg, const ChipConfig& c) {
  check_config(cg, c);
  ChipConfig diff = max_config(cg);
  for (int v = 0; v < cg.base.n; ++v) {
    diff[v] -= c[v];
    if (diff[v] < 0) fail(errc::not_dominated, "entry " + std::to_string(v) + " exceeds max_config");
  }
  return is_superstable(cg, diff);
}

BlockDecomposition two_free_blocks(const ChipConfig& a) {
  BlockDecomposition d;
  d.blocks.emplace_back();
  for (int x : a) {
    if (x < 0 || x > 2) fail(errc::bad_entry, "entries must lie in {0, 1, 2}");
    if (x == 2)
      d.blocks.emplace_back();
    else
      d.blocks.back().push_back(x);
  }
  return d;
}

bool path_superstable_by_blocks(const ChipConfig& a) {
  for (const auto& block : two_free_blocks(a).blocks)
    if (std::find(block.begin(), block.end(), 0) == block.end()) return false;
  return true;
}

bool cycle_superstable_by_blocks(const ChipConfig& a) {
  int n = static_cast<int>(a.size());
  for (int x : a)
    if (x < 0 || x > 2) fail(errc::bad_entry, "entries must lie in {0, 1, 2}");
  std::vector<int> twos;
  for (int i = 0; i < n; ++i)
    if (a[i] == 2) twos.push_back(i);
  if (twos.empty()) return std::find(a.begin(), a.end(), 0) != a.end();
  // circular blocks between consecutive 2s
  int k = static_cast<int>(twos.size());
  for (int t = 0; t < k; ++t) {
    int from = twos[t] + 1;
    int to = twos[(t + 1) % k];  // exclusive, wrapping
    bool has_zero = false;
    for (int p = from % n; p != to; p = (p + 1) % n)
      if (a[p] == 0) has_zero = true;
    if (!has_zero) return false;
  }
  return true;
}

int bucket_index(const ChipConfig& a) {
  int n = static_cast<int>(a.size());
  if (n < 1) fail(errc::bad_parameter, "empty configuration");
  for (int x : a)
    if (x < 0) fail(errc::bad_parameter, "negative chip count");
  for (int i = n - 1; i >= 1; --i) {
    ChipConfig prefix(a.begin(), a.begin() + i);
    if (is_superstable(cone(path_graph(i)), prefix)) return i;
  }
  return 0;
}

}  // namespace gshi
