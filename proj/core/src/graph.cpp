#include "gshi/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gshi {

const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "self_loop";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::vertex_out_of_range: return "vertex_out_of_range";
    case errc::disconnected: return "disconnected";
    case errc::bad_parameter: return "bad_parameter";
    case errc::illegal_fire: return "illegal_fire";
    case errc::illegal_cluster_fire: return "illegal_cluster_fire";
    case errc::empty_set: return "empty_set";
    case errc::too_large: return "too_large";
    case errc::bad_entry: return "bad_entry";
    case errc::not_superstable: return "not_superstable";
    case errc::not_dominated: return "not_dominated";
    case errc::infeasible: return "infeasible";
    case errc::graph_mismatch: return "graph_mismatch";
    case errc::inconsistent_labels: return "inconsistent_labels";
    case errc::not_a_path: return "not_a_path";
    case errc::not_a_cycle: return "not_a_cycle";
    case errc::not_a_parking_function: return "not_a_parking_function";
    case errc::unachievable: return "unachievable";
    case errc::identity_failure: return "identity_failure";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (const auto& [i, j] : edges) d += (i == v) + (j == v);
  return d;
}

bool SimpleGraph::has_edge(int i, int j) const { return edge_index(i, j) >= 0; }

int SimpleGraph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it == edges.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - edges.begin());
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

int ConedGraph::degree(int v) const {
  if (v == sink()) return base.n;
  return base.degree(v) + 1;
}

SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) fail(errc::bad_parameter, "vertex count must be positive");
  for (auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail(errc::vertex_out_of_range,
           "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") with n=" + std::to_string(n));
    if (i == j) fail(errc::self_loop, "vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t k = 1; k < edges.size(); ++k)
    if (edges[k] == edges[k - 1])
      fail(errc::duplicate_edge,
           "(" + std::to_string(edges[k].first) + ", " + std::to_string(edges[k].second) + ")");

  SimpleGraph g{n, std::move(edges)};

  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  auto adj = g.adjacency();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n) fail(errc::disconnected, "graph is not connected");
  return g;
}

SimpleGraph path_graph(int n) {
  if (n < 1) fail(errc::bad_parameter, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) fail(errc::bad_parameter, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return make_graph(n, std::move(e));
}

SimpleGraph star_graph(int n) {
  if (n < 1) fail(errc::bad_parameter, "star needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  return make_graph(n + 1, std::move(e));
}

SimpleGraph complete_graph(int n) {
  if (n < 1) fail(errc::bad_parameter, "complete needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, std::move(e));
}

SimpleGraph complete_minus(int n, int i, int j) {
  if (n < 2) fail(errc::bad_parameter, "complete_minus needs n >= 2");
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    fail(errc::bad_parameter, "removed edge must be a valid vertex pair");
  if (i > j) std::swap(i, j);
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!(a == i && b == j)) e.emplace_back(a, b);
  return make_graph(n, std::move(e));
}

SimpleGraph build_family(const FamilySpec& spec) {
  if (spec.kind == "path") return path_graph(spec.n);
  if (spec.kind == "cycle") return cycle_graph(spec.n);
  if (spec.kind == "star") return star_graph(spec.n);
  if (spec.kind == "complete") return complete_graph(spec.n);
  if (spec.kind == "complete_minus") return complete_minus(spec.n, spec.i, spec.j);
  fail(errc::bad_parameter, "unknown family '" + spec.kind + "'");
}

namespace {

// AHU canonical code of a rooted tree.
std::string ahu_code(int v, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> child_codes;
  for (int u : adj[v])
    if (u != parent) child_codes.push_back(ahu_code(u, v, adj));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

std::vector<int> tree_centers(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int u : adj[v])
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  return layer;
}

std::string tree_canonical(const SimpleGraph& t) {
  auto adj = t.adjacency();
  std::string best;
  for (int c : tree_centers(t.n, adj)) {
    std::string code = ahu_code(c, -1, adj);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

SimpleGraph tree_from_pruefer(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int v : seq) deg[v]++;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  for (int v : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--deg[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin(), b = *leaves.rbegin();
  edges.emplace_back(a, b);
  return make_graph(n, std::move(edges));
}

}  // namespace

std::vector<SimpleGraph> all_trees(int n) {
  if (n < 1) fail(errc::bad_parameter, "need n >= 1");
  if (n == 1) return {make_graph(1, {})};
  if (n == 2) return {path_graph(2)};
  std::map<std::string, SimpleGraph> reps;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    SimpleGraph t = tree_from_pruefer(n, seq);
    reps.emplace(tree_canonical(t), t);
    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) break;
    seq[k]++;
  }
  std::vector<SimpleGraph> out;
  out.reserve(reps.size());
  for (auto& [code, t] : reps) out.push_back(std::move(t));
  return out;
}

ConedGraph cone(SimpleGraph g) { return ConedGraph{std::move(g)}; }

namespace {

int outdeg_impl(const std::vector<int>& neighbors, const std::vector<int>& s) {
  int count = 0;
  for (int u : neighbors)
    if (std::find(s.begin(), s.end(), u) == s.end()) count++;
  return count;
}

}  // namespace

int outdeg(const SimpleGraph& g, const std::vector<int>& s, int v) {
  if (v < 0 || v >= g.n) fail(errc::vertex_out_of_range, "v=" + std::to_string(v));
  for (int u : s)
    if (u < 0 || u >= g.n) fail(errc::vertex_out_of_range, "set member " + std::to_string(u));
  return outdeg_impl(g.adjacency()[v], s);
}

int outdeg(const ConedGraph& cg, const std::vector<int>& s, int v) {
  int total = cg.vertex_count();
  if (v < 0 || v >= total) fail(errc::vertex_out_of_range, "v=" + std::to_string(v));
  for (int u : s)
    if (u < 0 || u >= total) fail(errc::vertex_out_of_range, "set member " + std::to_string(u));
  std::vector<int> neighbors;
  if (v == cg.sink()) {
    for (int u = 0; u < cg.base.n; ++u) neighbors.push_back(u);
  } else {
    neighbors = cg.base.adjacency()[v];
    neighbors.push_back(cg.sink());
  }
  return outdeg_impl(neighbors, s);
}

IntMatrix IntMatrix::zero(int d) {
  IntMatrix m;
  m.d = d;
  m.a.assign(static_cast<size_t>(d) * d, Int(0));
  return m;
}

IntMatrix reduced_laplacian(const ConedGraph& cg) {
  int n = cg.base.n;
  IntMatrix m = IntMatrix::zero(n);
  for (int v = 0; v < n; ++v) m.at(v, v) = cg.degree(v);
  for (const auto& [i, j] : cg.base.edges) {
    m.at(i, j) = -1;
    m.at(j, i) = -1;
  }
  return m;
}

Int det_exact(IntMatrix m) {
  int d = m.d;
  if (d == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < d; ++r)
        if (m.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = 0; c < d; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(d - 1, d - 1);
}

}  // namespace gshi
