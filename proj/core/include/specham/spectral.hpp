#pragma once

#include <optional>
#include <vector>

#include "specham/graph.hpp"
#include "specham/rational.hpp"

namespace specham {

/// Certified enclosure of the spectral radius: lambda_lo is the exact
/// Rayleigh quotient of witness (a positive rational vector), lambda_hi is
/// proved by an exact factorization of lambda_hi*I - A with positive
/// leading minors. certified_within_tol reports whether the requested
/// width was reached.
struct SpectralEstimate {
  Rational lambda_lo;
  Rational lambda_hi;
  std::vector<Rational> witness;
  long iterations = 0;
  bool certified_within_tol = false;

  Rational width() const { return lambda_hi - lambda_lo; }
  Rational midpoint() const { return (lambda_lo + lambda_hi) / 2; }
};

// <A v, v> / <v, v>, exact
Rational rayleigh_quotient(const Graph& g, const std::vector<Rational>& v);

Rational default_spectral_tol();  // 10^-12

// Floating-point power iteration seeds the witness; the bounds themselves
// are exact. Disconnected graphs are handled per component.
SpectralEstimate spectral_radius(const Graph& g, const Rational& tol = default_spectral_tol());

// exact test: true iff c > lambda(G) (all leading principal minors of
// c*I - A(G) positive; Z-matrix / Sylvester criterion)
bool shift_exceeds_spectral_radius(const Graph& g, const Rational& c);

// (delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4), rounded upward;
// always >= lambda(G), exact on regular graphs
Rational hsf_upper_bound(const Graph& g);

// the same bound as a function of the minimum-degree slot x; nullopt when
// the radicand is negative
std::optional<QuadVal> hsf_f_exact(const Rational& x, long m, int n);
std::optional<Rational> hsf_f(const Rational& x, long m, int n);

// f is decreasing for x <= n-1 whenever 2m <= n(n-1); verified exactly on
// an ascending grid (points past the radicand's root are skipped)
bool hsf_monotone_check(long m, int n, const std::vector<Rational>& grid);

// minimum 2m/2 forced on a closed graph whose spectral radius reaches the
// certifier threshold; diagnostic only
Rational edge_bound_diagnostic(int n, int k, bool path_variant = false);

}  // namespace specham
