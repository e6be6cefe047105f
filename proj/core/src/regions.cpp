#include "gshi/regions.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>

namespace gshi {

namespace {

// Composite arc weight for one difference constraint x_a - x_b <= units with
// `stricts` of the inequalities along the way strict. Comparison treats each
// strict step as an infinitesimal tightening, so (u, s) < (u', s') iff
// u < u' or (u == u' and s > s').
struct StrictWeight {
  long long units = 0;
  long long stricts = 0;
};

constexpr long long kInf = LLONG_MAX / 4;

inline bool is_inf(const StrictWeight& w) { return w.units >= kInf; }

inline StrictWeight add(const StrictWeight& a, const StrictWeight& b) {
  if (is_inf(a) || is_inf(b)) return {kInf, 0};
  return {a.units + b.units, a.stricts + b.stricts};
}

inline bool less(const StrictWeight& a, const StrictWeight& b) {
  if (a.units != b.units) return a.units < b.units;
  return a.stricts > b.stricts;
}

inline bool negative(const StrictWeight& w) {
  return w.units < 0 || (w.units == 0 && w.stricts > 0);
}

struct Arc {
  int from, to;
  StrictWeight w;
};

// Arcs encoding "x_a - x_b < w" run from b to a. The strict count rides along
// so a zero-weight cycle made of strict constraints is still recognized as a
// contradiction.
void arcs_for_state(int i, int j, EdgeState st, std::vector<Arc>& arcs) {
  switch (st) {
    case EdgeState::below:  // x_i - x_j < 0
      arcs.push_back({j, i, {0, 1}});
      break;
    case EdgeState::between:  // 0 < x_i - x_j < 1
      arcs.push_back({j, i, {1, 1}});
      arcs.push_back({i, j, {0, 1}});
      break;
    case EdgeState::above:  // x_i - x_j > 1, i.e. x_j - x_i < -1
      arcs.push_back({i, j, {-1, 1}});
      break;
  }
}

// All-pairs shortest paths over composite weights, updated arc by arc.
// d[a][b] bounds x_b - x_a from above; a diagonal entry below (0, 0) is a
// contradictory cycle.
class FeasibilityTracker {
 public:
  explicit FeasibilityTracker(int n) : n_(n), d_(static_cast<size_t>(n) * n, StrictWeight{kInf, 0}) {
    for (int v = 0; v < n; ++v) at(v, v) = {0, 0};
  }

  bool add_arc(const Arc& arc) {
    StrictWeight w = arc.w;
    bool ok = true;
    for (int a = 0; a < n_; ++a) {
      StrictWeight head = add(at(a, arc.from), w);
      if (is_inf(head)) continue;
      for (int b = 0; b < n_; ++b) {
        StrictWeight cand = add(head, at(arc.to, b));
        if (less(cand, at(a, b))) {
          at(a, b) = cand;
          if (a == b && negative(cand)) ok = false;
        }
      }
    }
    return ok;
  }

  bool add_arcs(const std::vector<Arc>& arcs) {
    bool ok = true;
    for (const Arc& a : arcs) ok = add_arc(a) && ok;
    return ok;
  }

  const std::vector<StrictWeight>& data() const { return d_; }
  void restore(const std::vector<StrictWeight>& snapshot) { d_ = snapshot; }

 private:
  StrictWeight& at(int a, int b) { return d_[static_cast<size_t>(a) * n_ + b]; }

  int n_;
  std::vector<StrictWeight> d_;
};

void check_states(const SimpleGraph& g, const StateVector& s) {
  if (static_cast<int>(s.size()) != g.m())
    fail(errc::bad_parameter, "state vector length " + std::to_string(s.size()) + " for m=" + std::to_string(g.m()));
}

long long pow3(int m) {
  long long p = 1;
  for (int k = 0; k < m; ++k) p *= 3;
  return p;
}

void check_cap(const SimpleGraph& g, long long cap) {
  if (g.m() > 38 || pow3(g.m()) > cap)
    fail(errc::too_large, "3^" + std::to_string(g.m()) + " states exceed cap " + std::to_string(cap));
}

}  // namespace

bool is_feasible(const SimpleGraph& g, const StateVector& s) {
  check_states(g, s);
  FeasibilityTracker tracker(g.n);
  std::vector<Arc> arcs;
  for (int e = 0; e < g.m(); ++e) arcs_for_state(g.edges[e].first, g.edges[e].second, s[e], arcs);
  return tracker.add_arcs(arcs);
}

bool is_feasible(const Region& r) { return is_feasible(r.graph, r.states); }

std::vector<Rational> region_witness(const SimpleGraph& g, const StateVector& s) {
  check_states(g, s);
  if (!is_feasible(g, s)) fail(errc::infeasible, "region is empty");

  // Scale by D = 2m+2 and tighten every strict constraint by one unit; the
  // slack 1/D is safe because constraint constants are 0/1 and derived chains
  // involve at most 2m arcs.
  long long scale = 2LL * g.m() + 2;
  struct IntArc {
    int from, to;
    long long w;
  };
  std::vector<IntArc> arcs;
  std::vector<Arc> raw;
  for (int e = 0; e < g.m(); ++e) arcs_for_state(g.edges[e].first, g.edges[e].second, s[e], raw);
  for (const Arc& a : raw) arcs.push_back({a.from, a.to, a.w.units * scale - a.w.stricts});

  // Bellman–Ford from a virtual source connected to every vertex with 0.
  std::vector<long long> dist(g.n, 0);
  for (int round = 0; round < g.n; ++round) {
    bool changed = false;
    for (const IntArc& a : arcs)
      if (dist[a.from] + a.w < dist[a.to]) {
        dist[a.to] = dist[a.from] + a.w;
        changed = true;
      }
    if (!changed) break;
  }

  // Exact re-verification of every region inequality at x = dist / scale.
  for (int e = 0; e < g.m(); ++e) {
    long long diff = dist[g.edges[e].first] - dist[g.edges[e].second];
    bool ok = false;
    switch (s[e]) {
      case EdgeState::below: ok = diff < 0; break;
      case EdgeState::between: ok = diff > 0 && diff < scale; break;
      case EdgeState::above: ok = diff > scale; break;
    }
    if (!ok) fail(errc::infeasible, "witness verification failed on edge " + std::to_string(e));
  }

  std::vector<Rational> x(g.n);
  for (int v = 0; v < g.n; ++v) {
    long long num = dist[v], den = scale;
    long long d = std::gcd(num < 0 ? -num : num, den);
    if (d > 1) {
      num /= d;
      den /= d;
    }
    x[v] = {num, den};
  }
  return x;
}

std::vector<StateVector> enumerate_regions(const SimpleGraph& g, long long cap) {
  check_cap(g, cap);
  int m = g.m();
  std::vector<StateVector> out;
  StateVector states(m, EdgeState::below);

  FeasibilityTracker tracker(g.n);
  std::vector<std::vector<StrictWeight>> snapshots(m + 1);
  snapshots[0] = tracker.data();

  // DFS in lexicographic state order with incremental infeasibility pruning.
  auto dfs = [&](auto&& self, int e) -> void {
    if (e == m) {
      out.push_back(states);
      return;
    }
    for (EdgeState st : {EdgeState::below, EdgeState::between, EdgeState::above}) {
      tracker.restore(snapshots[e]);
      std::vector<Arc> arcs;
      arcs_for_state(g.edges[e].first, g.edges[e].second, st, arcs);
      if (tracker.add_arcs(arcs)) {
        states[e] = st;
        snapshots[e + 1] = tracker.data();
        self(self, e + 1);
      }
    }
  };
  dfs(dfs, 0);
  return out;
}

Region base_region(const SimpleGraph& g) {
  return Region{g, StateVector(g.m(), EdgeState::between)};
}

namespace {

std::optional<FacetCrossing> single_step(const SimpleGraph& g, const StateVector& a,
                                         const StateVector& b) {
  int edge = -1;
  for (int e = 0; e < g.m(); ++e) {
    if (a[e] == b[e]) continue;
    if (edge >= 0) return std::nullopt;  // differ in more than one coordinate
    edge = e;
  }
  if (edge < 0) return std::nullopt;  // identical
  auto lo = std::min(a[edge], b[edge]);
  auto hi = std::max(a[edge], b[edge]);
  if (lo == EdgeState::below && hi == EdgeState::between) return FacetCrossing{edge, Hyperplane::lower};
  if (lo == EdgeState::between && hi == EdgeState::above) return FacetCrossing{edge, Hyperplane::upper};
  return std::nullopt;  // below vs above: two steps apart
}

// Shared boundary is a facet iff the crossed hyperplane as an equality is
// consistent with the remaining strict constraints (common to both regions).
bool facet_check(const SimpleGraph& g, const StateVector& shared, const FacetCrossing& cross) {
  FeasibilityTracker tracker(g.n);
  std::vector<Arc> arcs;
  for (int e = 0; e < g.m(); ++e) {
    if (e == cross.edge) continue;
    arcs_for_state(g.edges[e].first, g.edges[e].second, shared[e], arcs);
  }
  auto [i, j] = g.edges[cross.edge];
  long long c = cross.plane == Hyperplane::lower ? 0 : 1;
  arcs.push_back({j, i, {c, 0}});   // x_i - x_j <= c
  arcs.push_back({i, j, {-c, 0}});  // x_i - x_j >= c
  return tracker.add_arcs(arcs);
}

}  // namespace

std::optional<FacetCrossing> facet_adjacent(const SimpleGraph& g, const StateVector& a,
                                            const StateVector& b) {
  check_states(g, a);
  check_states(g, b);
  auto cross = single_step(g, a, b);
  if (!cross) return std::nullopt;
  if (!facet_check(g, a, *cross)) return std::nullopt;
  return cross;
}

std::optional<FacetCrossing> facet_adjacent(const Region& a, const Region& b) {
  if (!(a.graph == b.graph)) fail(errc::graph_mismatch, "regions belong to different graphs");
  return facet_adjacent(a.graph, a.states, b.states);
}

AdjacencyDigraph adjacency_digraph(const SimpleGraph& g, long long cap) {
  AdjacencyDigraph d;
  d.graph = g;
  d.nodes = enumerate_regions(g, cap);
  d.out.resize(d.nodes.size());

  auto node_index = [&](const StateVector& s) -> int {
    auto it = std::lower_bound(d.nodes.begin(), d.nodes.end(), s);
    if (it == d.nodes.end() || *it != s) return -1;
    return static_cast<int>(it - d.nodes.begin());
  };

  StateVector base(g.m(), EdgeState::between);
  d.source = node_index(base);

  // The base region is all-between, so every arc leaves a between coordinate:
  // between -> below crosses the lower hyperplane (increment i),
  // between -> above crosses the upper one (increment j).
  for (int idx = 0; idx < static_cast<int>(d.nodes.size()); ++idx) {
    const StateVector& s = d.nodes[idx];
    for (int e = 0; e < g.m(); ++e) {
      if (s[e] != EdgeState::between) continue;
      auto [i, j] = g.edges[e];
      for (EdgeState target : {EdgeState::below, EdgeState::above}) {
        StateVector t = s;
        t[e] = target;
        int to = node_index(t);
        if (to < 0) continue;
        FacetCrossing cross{e, target == EdgeState::below ? Hyperplane::lower : Hyperplane::upper};
        if (!facet_check(g, s, cross)) continue;
        int inc = target == EdgeState::below ? i : j;
        d.out[idx].push_back(static_cast<int>(d.arcs.size()));
        d.arcs.push_back({idx, to, inc});
      }
    }
  }
  return d;
}

std::vector<Label> pak_stanley_labels(const AdjacencyDigraph& d) {
  int count = static_cast<int>(d.nodes.size());
  if (d.source < 0) fail(errc::inconsistent_labels, "digraph has no all-between source node");
  std::vector<Label> labels(count);
  std::vector<char> have(count, 0);
  labels[d.source] = Label(d.graph.n, 0);
  have[d.source] = 1;

  std::queue<int> queue;
  queue.push(d.source);
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int arc_idx : d.out[v]) {
      const auto& arc = d.arcs[arc_idx];
      Label candidate = labels[v];
      candidate[arc.increment]++;
      if (!have[arc.to]) {
        labels[arc.to] = std::move(candidate);
        have[arc.to] = 1;
        reached++;
        queue.push(arc.to);
      } else if (labels[arc.to] != candidate) {
        fail(errc::inconsistent_labels,
             "parents disagree at node " + state_string(d.nodes[arc.to]));
      }
    }
  }
  if (reached != count) fail(errc::inconsistent_labels, "digraph is not connected from the source");
  return labels;
}

Label direct_label(const SimpleGraph& g, const StateVector& s) {
  check_states(g, s);
  Label counts(g.n, 0);
  for (int e = 0; e < g.m(); ++e) {
    if (s[e] == EdgeState::below) counts[g.edges[e].first]++;
    if (s[e] == EdgeState::above) counts[g.edges[e].second]++;
  }
  return counts;
}

std::vector<int> sink_nodes(const AdjacencyDigraph& d) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
    if (d.out[v].empty()) out.push_back(v);
  return out;
}

MultiplicityReport multiplicity_census(const SimpleGraph& g, long long cap) {
  MultiplicityReport report;
  for (const StateVector& s : enumerate_regions(g, cap)) {
    report.counts[direct_label(g, s)]++;
    report.regions++;
  }
  return report;
}

std::vector<StateVector> regions_with_label(const SimpleGraph& g, const Label& p, long long cap) {
  std::vector<StateVector> out;
  for (StateVector& s : enumerate_regions(g, cap))
    if (direct_label(g, s) == p) out.push_back(std::move(s));
  return out;
}

std::string state_string(const StateVector& s) {
  std::string text;
  text.reserve(s.size());
  for (EdgeState st : s) text += "TMB"[static_cast<int>(st)];
  return text;
}

StateVector parse_state_string(const std::string& text) {
  StateVector s;
  s.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'T': s.push_back(EdgeState::below); break;
      case 'M': s.push_back(EdgeState::between); break;
      case 'B': s.push_back(EdgeState::above); break;
      default: fail(errc::parse_error, std::string("bad state character '") + c + "'");
    }
  }
  return s;
}

}  // namespace gshi
