#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specham/families.hpp"
#include "specham/graph.hpp"
#include "specham/rational.hpp"
#include "specham/spectral.hpp"

namespace specham {

/// Vector with entries coeff_i / sqrt(radical); all pairwise products are
/// rational, so norms and Rayleigh quotients are exact identities.
struct RadicalVector {
  Rational radical;               // shared, > 0
  std::vector<Rational> coeffs;   // value_i = coeffs[i] / sqrt(radical)

  Rational norm_squared() const;
  Rational rayleigh_quotient_exact(const Graph& g) const;
};

struct TightnessReport {
  int k = 0;
  int n = 0;
  std::string construction;      // which edge was deleted
  Rational norm_squared;         // must be exactly 1
  Rational rayleigh;             // exact, equal via both routes
  Rational threshold;            // n-k-1 or n-k-2
  Rational margin;               // rayleigh - threshold
  bool strict_certified = false; // lambda_lo > threshold was certified
  Rational lambda_lo;            // from the certified spectral estimate
};

// M_k(n) minus {u,v}; u,v must lie in Y u Z and the deletion must keep
// every degree >= k
Graph prop1_graph(int k, int n, int u, int v);
RadicalVector prop1_vector(int k, int n);
TightnessReport prop1_verify(int k, int n, const Rational& tol = default_spectral_tol());

// N_k(n) analogue; threshold n-k-2
Graph prop2_graph(int k, int n, int u, int v);
RadicalVector prop2_vector(int k, int n);
TightnessReport prop2_verify(int k, int n, const Rational& tol = default_spectral_tol());

enum class ScanRegime { Proposition, Theorem, Unresolved };

std::string scan_regime_name(ScanRegime r);

struct ScanRow {
  int n = 0;
  Rational max_lambda_lo;  // max over admissible one-edge deletions
  Rational max_lambda_hi;
  EdgeClass argmax_orbit = EdgeClass::ZZ;
  Rational threshold;
  ScanRegime regime = ScanRegime::Unresolved;
  bool flagged = false;  // interval straddles the threshold beyond tol
};

struct ScanResult {
  Family family;
  int k = 0;
  std::vector<ScanRow> rows;
  int theorem_bound_n = 0;            // first n covered by the theorem
  std::optional<int> last_prop_n;     // largest n still in the Proposition regime
  std::optional<int> first_theorem_n; // start of the clean Theorem suffix
  std::optional<int> gap;             // theorem_bound_n - first_theorem_n
};

// One-edge-deletion sweep: per n, the certified max lambda over the
// delta-preserving orbits against the family threshold. family must be
// M (threshold n-k-1) or N (threshold n-k-2).
ScanResult threshold_scan(Family family, int k, int n_min, int n_max,
                          const Rational& tol = default_spectral_tol());

std::string scan_to_csv(const ScanResult& scan);
std::string scan_to_json(const ScanResult& scan);
std::string tightness_report_to_csv(const std::vector<TightnessReport>& reports);
std::string tightness_report_to_json(const TightnessReport& report);

}  // namespace specham
