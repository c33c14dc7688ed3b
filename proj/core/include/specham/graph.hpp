#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace specham {

/// Simple undirected graph on vertices 0..n-1. Adjacency is kept as bitset
/// rows plus a degree cache; values are immutable once built and safe to
/// share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_edge(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int min_degree() const;

  std::vector<std::pair<int, int>> edges() const;

  // word-level row access for tight loops
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  std::size_t row_words() const { return words_; }

  template <typename Fn>
  void for_each_neighbor(int v, Fn&& fn) const {
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        fn(static_cast<int>(w * 64 + b));
      }
    }
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  // degrees match rows, no self-loops, adjacency symmetric
  void check_consistent() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
};

Graph build_complete(int s);
Graph build_edgeless(int s);

// G's vertices first, then H's, plus all |G|*|H| cross edges.
Graph join(const Graph& g, const Graph& h);
// G's vertices first, then H's (shifted); no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

// sorted copy of the degree sequence; position 0 is the minimum degree
std::vector<int> degrees_ascending(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& perm);  // v -> perm[v]

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

}  // namespace specham
