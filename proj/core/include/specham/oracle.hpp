#pragma once

#include <optional>
#include <vector>

#include "specham/graph.hpp"

namespace specham {

enum class OracleStatus { Found, NotFound, OutOfRange };

struct OracleResult {
  OracleStatus status = OracleStatus::OutOfRange;
  std::vector<int> sequence;  // cycle or path when status == Found

  bool found() const { return status == OracleStatus::Found; }
  bool decided() const { return status != OracleStatus::OutOfRange; }
};

enum class SearchStrategy { Auto, BitsetDP, Backtracking };

// Exact decisions at desk scale; n <= 24 (DP up to 20, backtracking above),
// larger orders report OutOfRange instead of guessing.
OracleResult ham_cycle(const Graph& g, SearchStrategy strategy = SearchStrategy::Auto);
OracleResult ham_path(const Graph& g, SearchStrategy strategy = SearchStrategy::Auto);

struct HamConnectedResult {
  OracleStatus status = OracleStatus::OutOfRange;
  bool value = false;  // meaningful when decided
};

// every vertex pair joined by a Hamiltonian path; n <= 16
HamConnectedResult is_ham_connected(const Graph& g);

bool is_hamiltonian_cycle_of(const Graph& g, const std::vector<int>& cycle);
bool is_hamiltonian_path_of(const Graph& g, const std::vector<int>& path);

}  // namespace specham
