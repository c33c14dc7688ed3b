#pragma once

#include <optional>
#include <vector>

#include "specham/graph.hpp"

namespace specham {

struct ClosureAddition {
  int u;
  int v;
  int degree_sum;  // d(u)+d(v) in the graph at the moment of addition
};

/// Replaying added_edges onto the input graph reproduces the closure;
/// every recorded degree_sum is >= threshold.
struct ClosureTrace {
  int threshold = 0;
  std::vector<ClosureAddition> added_edges;
};

// Fixpoint of joining nonadjacent pairs with degree sum >= k. Unique; the
// scan repeats lexicographic sweeps so the trace is reproducible.
std::pair<Graph, ClosureTrace> k_closure(const Graph& g, int k);

// true iff every nonadjacent pair has degree sum <= k-1
bool closure_main_property_check(const Graph& g, int k);

// degree-sum >= n for every nonadjacent pair (implies a Hamiltonian cycle)
bool ore_cycle_check(const Graph& g);

enum class OreConnectedness { Holds, Fails, NotTwoConnected };

// degree-sum >= n+1 on a 2-connected graph (implies Hamiltonian-connected);
// the 2-connectivity premise is data, so its failure is an outcome
OreConnectedness ore_hamconnected_check(const Graph& g);

struct ChvatalWitness {
  int s;  // 1-based index into the ascending degree sequence
};

// least s < n/2 with d_s <= s and d_{n-s} <= n-s-1; absence implies a
// Hamiltonian cycle
std::optional<ChvatalWitness> chvatal_cycle_witness(const Graph& g);

// least s < (n+1)/2 with d_s <= s-1 and d_{n-s+1} <= n-s-1; absence
// implies a Hamiltonian path
std::optional<ChvatalWitness> chvatal_path_witness(const Graph& g);

// Pulls a Hamiltonian cycle of the n-closure back to one of G by undoing
// the trace in reverse; each undone edge is bypassed with a crossing-pair
// rotation (first matching position wins).
std::vector<int> cycle_from_closure(const Graph& g, const ClosureTrace& trace,
                                    const std::vector<int>& cycle_in_closure);

}  // namespace specham
