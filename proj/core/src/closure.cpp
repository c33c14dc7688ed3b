#include "specham/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace specham {

std::pair<Graph, ClosureTrace> k_closure(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("closure threshold must be nonnegative");
  Graph h = g;
  ClosureTrace trace;
  trace.threshold = k;
  bool added = true;
  while (added) {
    added = false;
    for (int u = 0; u < h.n(); ++u) {
      for (int v = u + 1; v < h.n(); ++v) {
        if (h.has_edge(u, v)) continue;
        int sum = h.degree(u) + h.degree(v);
        if (sum >= k) {
          h.add_edge(u, v);
          trace.added_edges.push_back({u, v, sum});
          added = true;
        }
      }
    }
  }
  return {std::move(h), std::move(trace)};
}

bool closure_main_property_check(const Graph& g, int k) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) > k - 1) return false;
  return true;
}

bool ore_cycle_check(const Graph& g) {
  if (g.n() < 3) throw std::invalid_argument("cycle condition needs n >= 3");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < g.n()) return false;
  return true;
}

OreConnectedness ore_hamconnected_check(const Graph& g) {
  if (!is_two_connected(g)) return OreConnectedness::NotTwoConnected;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < g.n() + 1)
        return OreConnectedness::Fails;
  return OreConnectedness::Holds;
}

std::optional<ChvatalWitness> chvatal_cycle_witness(const Graph& g) {
  int n = g.n();
  if (n < 3) throw std::invalid_argument("cycle witness needs n >= 3");
  std::vector<int> d = degrees_ascending(g);
  for (int s = 1; 2 * s < n; ++s)
    if (d[s - 1] <= s && d[n - s - 1] <= n - s - 1) return ChvatalWitness{s};
  return std::nullopt;
}

std::optional<ChvatalWitness> chvatal_path_witness(const Graph& g) {
  int n = g.n();
  if (n < 2) throw std::invalid_argument("path witness needs n >= 2");
  std::vector<int> d = degrees_ascending(g);
  for (int s = 1; 2 * s < n + 1; ++s)
    if (d[s - 1] <= s - 1 && d[n - s] <= n - s - 1) return ChvatalWitness{s};
  return std::nullopt;
}

namespace {

bool is_cycle_of(const Graph& g, const std::vector<int>& cycle) {
  int n = g.n();
  if (static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)]))
      return false;
  return true;
}

}  // namespace

std::vector<int> cycle_from_closure(const Graph& g, const ClosureTrace& trace,
                                    const std::vector<int>& cycle_in_closure) {
  int n = g.n();
  if (trace.threshold != n)
    throw std::invalid_argument("cycle unwinding needs an n-closure trace");

  // current graph = G plus the first i trace edges
  Graph cur = g;
  for (const auto& a : trace.added_edges) cur.add_edge(a.u, a.v);
  if (!is_cycle_of(cur, cycle_in_closure))
    throw std::invalid_argument("input is not a Hamiltonian cycle of the closure");

  std::vector<int> cycle = cycle_in_closure;
  for (auto it = trace.added_edges.rbegin(); it != trace.added_edges.rend(); ++it) {
    cur.remove_edge(it->u, it->v);
    // locate the undone edge on the cycle
    int pos = -1;
    for (int i = 0; i < n; ++i) {
      int a = cycle[static_cast<std::size_t>(i)];
      int b = cycle[static_cast<std::size_t>((i + 1) % n)];
      if ((a == it->u && b == it->v) || (a == it->v && b == it->u)) {
        pos = i;
        break;
      }
    }
    if (pos < 0) continue;  // cycle does not use the edge

    // path w_1..w_n from u to v in cur (the undone edge removed)
    std::vector<int> path(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>((pos + 1 + i) % n)];
    // w_1 = one endpoint; orient so path.front() and path.back() are the pair
    int u = path.front(), v = path.back();
    // crossing pair: w_i ~ v and w_{i+1} ~ u closes a new cycle; the
    // recorded degree sum >= n guarantees one exists
    int cross = -1;
    for (int i = 1; i + 1 < n; ++i) {
      if (cur.has_edge(path[static_cast<std::size_t>(i)], v) &&
          cur.has_edge(path[static_cast<std::size_t>(i + 1)], u)) {
        cross = i;
        break;
      }
    }
    if (cross < 0)
      throw std::logic_error("crossing pair missing; trace preconditions violated");
    std::vector<int> next;
    next.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i <= cross; ++i) next.push_back(path[static_cast<std::size_t>(i)]);
    for (int i = n - 1; i > cross; --i) next.push_back(path[static_cast<std::size_t>(i)]);
    cycle = std::move(next);
#ifndef NDEBUG
    if (!is_cycle_of(cur, cycle)) throw std::logic_error("rotation produced a non-cycle");
#endif
  }
  if (!is_cycle_of(g, cycle))
    throw std::logic_error("unwinding did not land in the input graph");
  return cycle;
}

}  // namespace specham
