#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specham/families.hpp"
#include "specham/graph.hpp"
#include "specham/rational.hpp"

namespace specham {

/// Equitable-partition quotient of an extremal family graph (optionally
/// with one Z-edge deleted, which splits off the class {u,v}). The
/// partition is validated against the actual graph, and the lifted profile
/// is an eigenvector for the certified lambda.
struct QuotientSystem {
  std::vector<char> labels;               // 'X','Y','Z','T' ({u,v})
  std::vector<int> sizes;                 // class sizes, all >= 1
  std::vector<std::vector<int>> members;  // vertices per class
  std::vector<std::vector<Int>> matrix;   // B[i][j] = neighbors in class j
  Rational lambda_lo;
  Rational lambda_hi;
  std::vector<Rational> profile;          // per-class eigenvector values

  Rational lambda_mid() const { return (lambda_lo + lambda_hi) / 2; }
  std::vector<Rational> lift_profile(int n) const;
};

// Certified Perron-root enclosure of a nonnegative matrix via exact
// bisection (c > rho iff all leading minors of c*I - B are positive).
std::pair<Rational, Rational> perron_interval(const std::vector<std::vector<Int>>& b,
                                              const Rational& tol);

Rational default_quotient_tol();  // 10^-12

// deleted == nullopt: 3-class system (X, Y, Z; empty classes dropped).
// deleted == ZZ: 4-class system (X, Y, Z\{u,v}, {u,v}); every class must
// be nonempty. Other edge classes are not reduced by the symmetry argument
// and are rejected.
QuotientSystem quotient_lambda(const ExtremalSpec& spec,
                               std::optional<EdgeClass> deleted = std::nullopt,
                               const Rational& tol = default_quotient_tol());

// every vertex of class i has exactly B[i][j] neighbors in class j
bool validate_equitable(const Graph& g, const QuotientSystem& qs);

}  // namespace specham
