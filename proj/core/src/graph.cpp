#include "specham/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace specham {

Graph::Graph(int n) : n_(n), m_(0), words_(static_cast<std::size_t>((n + 63) / 64)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  degrees_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |= 1ull << (u & 63);
  ++degrees_[u];
  ++degrees_[v];
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (!has_edge(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] &= ~(1ull << (v & 63));
  rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] &= ~(1ull << (u & 63));
  --degrees_[u];
  --degrees_[v];
  --m_;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degrees_[0];
  for (int v = 1; v < n_; ++v)
    if (degrees_[v] < d) d = degrees_[v];
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int v) {
      if (v > u) es.emplace_back(u, v);
    });
  return es;
}

void Graph::check_consistent() const {
  long deg_sum = 0;
  for (int v = 0; v < n_; ++v) {
    assert(!has_edge(v, v));
    int d = 0;
    for_each_neighbor(v, [&](int u) {
      assert(has_edge(u, v));
      ++d;
    });
    assert(d == degrees_[v]);
    deg_sum += d;
  }
  assert(deg_sum == 2l * m_);
  (void)deg_sum;
}

Graph build_complete(int s) {
  if (s < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  Graph g(s);
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) g.add_edge(u, v);
  return g;
}

Graph build_edgeless(int s) {
  if (s < 1) throw std::invalid_argument("edgeless graph needs at least one vertex");
  return Graph(s);
}

Graph join(const Graph& g, const Graph& h) {
  Graph r = disjoint_union(g, h);
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < h.n(); ++v) r.add_edge(u, g.n() + v);
#ifndef NDEBUG
  r.check_consistent();
#endif
  return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph r(g.n() + h.n());
  for (auto [u, v] : g.edges()) r.add_edge(u, v);
  for (auto [u, v] : h.edges()) r.add_edge(g.n() + u, g.n() + v);
#ifndef NDEBUG
  r.check_consistent();
#endif
  return r;
}

std::vector<int> degrees_ascending(const Graph& g) {
  std::vector<int> d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
  Graph r(g.n());
  for (auto [u, v] : g.edges()) r.add_edge(perm[u], perm[v]);
  return r;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.n() <= 1 || connected_components(g).size() == 1;
}

bool is_two_connected(const Graph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  // desk scale: delete each vertex and re-test connectivity
  for (int cut = 0; cut < g.n(); ++cut) {
    std::vector<int> map(static_cast<std::size_t>(g.n()), -1);
    int idx = 0;
    for (int v = 0; v < g.n(); ++v)
      if (v != cut) map[v] = idx++;
    Graph h(g.n() - 1);
    for (auto [u, v] : g.edges())
      if (u != cut && v != cut) h.add_edge(map[u], map[v]);
    if (!is_connected(h)) return false;
  }
  return true;
}

}  // namespace specham
