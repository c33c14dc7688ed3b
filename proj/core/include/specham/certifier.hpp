#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specham/families.hpp"
#include "specham/graph.hpp"
#include "specham/quotient.hpp"
#include "specham/spectral.hpp"

namespace specham {

enum class HamMode { Cycle, Path };

enum class VerdictKind {
  CertifiedHamiltonianCycle,
  CertifiedHamiltonianPath,
  Exceptional,
  Inconclusive,
};

std::string verdict_kind_name(VerdictKind k);

/// Exact structural recovery of an extremal-family membership: X is read
/// off the degree sequence (or the small component), Y is X's common
/// neighborhood, and the full adjacency is then verified, never guessed.
struct ExtremalMatch {
  Family family;
  int k;
  Partition partition;
  int l;  // |Y|
};

enum class ThresholdComparison {
  CertifiedAtOrAbove,  // lambda_lo >= threshold
  CertifiedBelow,      // lambda_hi < threshold
  ByIdentity,          // input is the exceptional graph itself
  Indeterminate,       // certified interval straddles the threshold
  Skipped,             // an earlier premise already failed
};

struct Premises {
  int k = 0;
  int n = 0;
  bool n_bound_ok = false;
  std::optional<Rational> lambda_lo;
  std::optional<Rational> lambda_hi;
  std::optional<Rational> threshold_lo;  // == threshold_hi for exact thresholds
  std::optional<Rational> threshold_hi;
  ThresholdComparison comparison = ThresholdComparison::Skipped;
  std::string failed;                    // names the failing premise, if any
  std::optional<bool> edge_bound_held;   // diagnostic m >= edge_bound_diagnostic
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string theorem;
  Premises premises;
  std::optional<ExtremalMatch> exceptional;
  std::optional<std::vector<int>> certificate;
  bool certificate_flagged = false;  // existence is certified but no witness was built
};

std::optional<ExtremalMatch> match_extremal(const Graph& g, int k);

// lambda >= n-k-1 with n >= k^3/2+k+4 certifies a Hamiltonian cycle,
// except on L_k(n) and M_k(n)
Verdict certify_cycle(const Graph& g, std::optional<int> k = std::nullopt,
                      const Rational& tol = default_spectral_tol(),
                      const SpectralEstimate* precomputed = nullptr);

// lambda >= n-k-2 with n >= k^3/2+k^2/2+k+5 certifies a Hamiltonian path,
// except on N_k(n) and K_{n-k-1}+K_{k+1}
Verdict certify_path(const Graph& g, std::optional<int> k = std::nullopt,
                     const Rational& tol = default_spectral_tol(),
                     const SpectralEstimate* precomputed = nullptr);

// thresholds lambda(M_k(n)) / lambda(N_k(n)); path mode admits k = 0
Verdict certify_li_ning(const Graph& g, std::optional<int> k, HamMode mode,
                        const Rational& tol = default_spectral_tol(),
                        const SpectralEstimate* precomputed = nullptr);

// Best-effort explicit witness for a certified existence claim: the oracle
// at small orders, closure unwinding when the closure completes, otherwise
// certificate_flagged is set. Throws if the existence claim is refuted.
void attach_hamiltonian_certificate(const Graph& g, Verdict& verdict, HamMode mode);

// {kind, theorem, k, n, lambda_lo, lambda_hi, threshold, exceptional_family?,
// certificate?}; rationals as "p/q" plus a float convenience field; field
// order fixed so identical inputs serialize byte-identically
std::string verdict_to_json(const Verdict& v);

}  // namespace specham
