#include "specham/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace specham {

namespace {

constexpr int kDpMax = 20;
constexpr int kSearchMax = 24;
constexpr int kHamConnMax = 16;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v)
    g.for_each_neighbor(v, [&](int u) { adj[static_cast<std::size_t>(v)] |= 1u << u; });
  return adj;
}

// dp[mask] = endpoints of paths spanning mask; paths start at `start`,
// or anywhere when start < 0
std::vector<std::uint32_t> path_dp(const std::vector<std::uint32_t>& adj, int n, int start) {
  std::vector<std::uint32_t> dp(static_cast<std::size_t>(1) << n, 0);
  if (start >= 0) {
    dp[1u << start] = 1u << start;
  } else {
    for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
  }
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      int v = __builtin_ctz(ends);
      ends &= ends - 1;
      std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
      while (ext) {
        int u = __builtin_ctz(ext);
        ext &= ext - 1;
        dp[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return dp;
}

std::vector<int> reconstruct_path(const std::vector<std::uint32_t>& adj,
                                  const std::vector<std::uint32_t>& dp, int n, int last) {
  std::vector<int> seq;
  std::uint32_t mask = (1u << n) - 1u;
  int v = last;
  while (true) {
    seq.push_back(v);
    std::uint32_t prev_mask = mask & ~(1u << v);
    if (!prev_mask) break;
    std::uint32_t cands = dp[prev_mask] & adj[static_cast<std::size_t>(v)];
    v = __builtin_ctz(cands);
    mask = prev_mask;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

OracleResult dp_ham_cycle(const Graph& g) {
  int n = g.n();
  auto adj = adjacency_masks(g);
  auto dp = path_dp(adj, n, 0);
  std::uint32_t full = (1u << n) - 1u;
  std::uint32_t closers = dp[full] & adj[0] & ~1u;
  if (!closers) return {OracleStatus::NotFound, {}};
  int last = __builtin_ctz(closers);
  return {OracleStatus::Found, reconstruct_path(adj, dp, n, last)};
}

OracleResult dp_ham_path(const Graph& g) {
  int n = g.n();
  auto adj = adjacency_masks(g);
  auto dp = path_dp(adj, n, -1);  // free-start dp; the backward walk handles it
  std::uint32_t full = (1u << n) - 1u;
  if (!dp[full]) return {OracleStatus::NotFound, {}};
  int last = __builtin_ctz(dp[full]);
  return {OracleStatus::Found, reconstruct_path(adj, dp, n, last)};
}

struct Backtracker {
  const std::vector<std::uint32_t>& adj;
  int n;
  std::uint32_t full;
  std::vector<int> order;
  bool cycle_mode;
  int start = 0;

  // Unvisited vertices can only connect through other unvisited vertices,
  // the current endpoint, and (cycles) the start.
  bool prune(std::uint32_t visited, int current) {
    std::uint32_t rest = full & ~visited;
    std::uint32_t slots = rest | (1u << current);
    if (cycle_mode) slots |= 1u << start;
    int weak = 0;
    std::uint32_t r = rest;
    while (r) {
      int v = __builtin_ctz(r);
      r &= r - 1;
      int cnt = __builtin_popcount(adj[static_cast<std::size_t>(v)] & slots);
      if (cycle_mode) {
        if (cnt < 2) return true;
      } else {
        if (cnt == 0) return true;
        if (cnt == 1 && ++weak >= 2) return true;  // only one free path end remains
      }
    }
    // unvisited region plus the current endpoint must stay connected
    std::uint32_t comp = 1u << current, frontier = comp;
    std::uint32_t allowed = rest | (1u << current);
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        next |= adj[static_cast<std::size_t>(v)] & allowed & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    return (comp & rest) != rest;
  }

  bool dfs(std::uint32_t visited, int current) {
    if (visited == full) {
      if (!cycle_mode) return true;
      return (adj[static_cast<std::size_t>(current)] >> start) & 1u;
    }
    if (prune(visited, current)) return false;
    std::uint32_t cands = adj[static_cast<std::size_t>(current)] & ~visited;
    while (cands) {
      int v = __builtin_ctz(cands);
      cands &= cands - 1;
      order.push_back(v);
      if (dfs(visited | (1u << v), v)) return true;
      order.pop_back();
    }
    return false;
  }
};

OracleResult backtrack_ham(const Graph& g, bool cycle_mode) {
  int n = g.n();
  auto adj = adjacency_masks(g);
  std::uint32_t full = (1u << n) - 1u;
  std::vector<int> starts;
  if (cycle_mode) {
    starts.push_back(0);
  } else {
    for (int v = 0; v < n; ++v) starts.push_back(v);
  }
  for (int s : starts) {
    Backtracker bt{adj, n, full, {}, cycle_mode, s};
    bt.order.push_back(s);
    if (bt.dfs(1u << s, s)) return {OracleStatus::Found, bt.order};
  }
  return {OracleStatus::NotFound, {}};
}

}  // namespace

OracleResult ham_cycle(const Graph& g, SearchStrategy strategy) {
  int n = g.n();
  if (n > kSearchMax) return {OracleStatus::OutOfRange, {}};
  if (strategy == SearchStrategy::BitsetDP && n > kDpMax) return {OracleStatus::OutOfRange, {}};
  if (n < 3) return {OracleStatus::NotFound, {}};
  if (!is_connected(g) || g.min_degree() < 2) return {OracleStatus::NotFound, {}};
  bool use_dp = strategy == SearchStrategy::BitsetDP ||
                (strategy == SearchStrategy::Auto && n <= kDpMax);
  return use_dp ? dp_ham_cycle(g) : backtrack_ham(g, true);
}

OracleResult ham_path(const Graph& g, SearchStrategy strategy) {
  int n = g.n();
  if (n > kSearchMax) return {OracleStatus::OutOfRange, {}};
  if (strategy == SearchStrategy::BitsetDP && n > kDpMax) return {OracleStatus::OutOfRange, {}};
  if (n < 1) return {OracleStatus::NotFound, {}};
  if (n == 1) return {OracleStatus::Found, {0}};
  if (!is_connected(g)) return {OracleStatus::NotFound, {}};
  bool use_dp = strategy == SearchStrategy::BitsetDP ||
                (strategy == SearchStrategy::Auto && n <= kDpMax);
  return use_dp ? dp_ham_path(g) : backtrack_ham(g, false);
}

HamConnectedResult is_ham_connected(const Graph& g) {
  int n = g.n();
  if (n > kHamConnMax) return {OracleStatus::OutOfRange, false};
  if (n < 2) return {OracleStatus::Found, n == 1};
  if (!is_connected(g)) return {OracleStatus::Found, false};
  auto adj = adjacency_masks(g);
  std::uint32_t full = (1u << n) - 1u;
  for (int s = 0; s < n; ++s) {
    auto dp = path_dp(adj, n, s);
    // paths from s must be able to end at every other vertex
    if ((dp[full] | (1u << s)) != full) return {OracleStatus::Found, false};
  }
  return {OracleStatus::Found, true};
}

bool is_hamiltonian_cycle_of(const Graph& g, const std::vector<int>& cycle) {
  int n = g.n();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
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

bool is_hamiltonian_path_of(const Graph& g, const std::vector<int>& path) {
  int n = g.n();
  if (static_cast<int>(path.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : path) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!g.has_edge(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]))
      return false;
  return true;
}

}  // namespace specham
