#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specham/graph.hpp"

namespace specham {

// The four extremal families, all with minimum degree exactly k:
//   L_k(n)   = K_1 v (K_{n-k-1} + K_k)      — two cliques sharing one vertex
//   M_k(n)   = K_k v (K_{n-2k} + ~K_k)      — K_{n-k} plus k independent vertices
//   N_k(n)   = K_k v (K_{n-2k-1} + ~K_{k+1})
//   Split(n) = K_{n-k-1} + K_{k+1}          — two disjoint cliques
enum class Family { L, M, N, Split };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Canonical X/Y/Z partition, listed in vertex order X, then Y, then Z.
// X is the minimum-degree class, Y the common neighborhood of X, Z the rest.
struct Partition {
  std::vector<int> X, Y, Z;
};

struct ExtremalSpec {
  Family family;
  int k;
  int n;

  // class sizes (|X|, |Y|, |Z|):
  //   L -> (k, 1, n-k-1), M -> (k, k, n-2k),
  //   N -> (k+1, k, n-2k-1), Split -> (k+1, 0, n-k-1)
  std::array<int, 3> class_sizes() const;

  // k >= 1 (N and Split also allow k = 0) and n >= 2k+1
  void validate() const;
};

struct ExtremalGraph {
  Graph graph;
  Partition partition;
};

ExtremalGraph build_extremal(const ExtremalSpec& spec);

// Orbit of a deletable edge with both ends in Y u Z; the families'
// automorphisms act transitively inside each orbit.
enum class EdgeClass { YY, YZ, ZZ };

std::string edge_class_name(EdgeClass c);
std::optional<EdgeClass> edge_class_from_name(const std::string& name);

// representative edge of the orbit, or nullopt when no such edge exists
std::optional<std::pair<int, int>> class_edge_representative(const ExtremalSpec& spec,
                                                             const Partition& p, EdgeClass c);

// orbits whose deletion keeps every degree >= k
std::vector<EdgeClass> delta_preserving_orbits(const ExtremalSpec& spec);

}  // namespace specham
