#include "specham/certifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "specham/closure.hpp"
#include "specham/oracle.hpp"

namespace specham {

namespace {

constexpr int kOracleCertificateMax = 20;

std::vector<int> degree_k_vertices(const Graph& g, int k) {
  std::vector<int> vs;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == k) vs.push_back(v);
  return vs;
}

bool neighborhood_equals(const Graph& g, int v, const std::vector<char>& want) {
  // want[u] == 1 exactly for the expected neighbors
  int cnt = 0;
  bool ok = true;
  g.for_each_neighbor(v, [&](int u) {
    if (!want[static_cast<std::size_t>(u)]) ok = false;
    ++cnt;
  });
  int expect = 0;
  for (char c : want) expect += c;
  return ok && cnt == expect;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

std::optional<ExtremalMatch> try_match_m_or_n(const Graph& g, int k, Family family) {
  // X = deg-k vertices (independent), Y = N(x) for every x, Y u Z complete
  const int n = g.n();
  const int x_size = family == Family::M ? k : k + 1;
  if (family == Family::M && k < 1) return std::nullopt;
  auto X = degree_k_vertices(g, k);
  if (static_cast<int>(X.size()) != x_size) return std::nullopt;
  if (n < 2 * k + 1) return std::nullopt;
  if (X.empty()) return std::nullopt;

  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (int v : X) in_x[static_cast<std::size_t>(v)] = 1;
  std::vector<int> Y;
  g.for_each_neighbor(X[0], [&](int u) { Y.push_back(u); });
  if (static_cast<int>(Y.size()) != k) return std::nullopt;
  std::vector<char> want(static_cast<std::size_t>(n), 0);
  for (int y : Y) {
    if (in_x[static_cast<std::size_t>(y)]) return std::nullopt;
    want[static_cast<std::size_t>(y)] = 1;
  }
  for (int x : X)
    if (!neighborhood_equals(g, x, want)) return std::nullopt;

  std::vector<char> in_y(static_cast<std::size_t>(n), 0);
  for (int y : Y) in_y[static_cast<std::size_t>(y)] = 1;
  std::vector<int> Z;
  for (int v = 0; v < n; ++v)
    if (!in_x[static_cast<std::size_t>(v)] && !in_y[static_cast<std::size_t>(v)]) Z.push_back(v);
  std::vector<int> yz = Y;
  yz.insert(yz.end(), Z.begin(), Z.end());
  if (!is_clique(g, yz)) return std::nullopt;
  // every edge is accounted for: |E| = C(|YuZ|,2) + |X|k
  long want_m = static_cast<long>(yz.size()) * (static_cast<long>(yz.size()) - 1) / 2 +
                static_cast<long>(X.size()) * k;
  if (want_m != g.m()) return std::nullopt;
  std::sort(Y.begin(), Y.end());
  return ExtremalMatch{family, k, Partition{X, Y, Z}, static_cast<int>(Y.size())};
}

std::optional<ExtremalMatch> try_match_l(const Graph& g, int k) {
  if (k < 1) return std::nullopt;
  const int n = g.n();
  if (n < 2 * k + 1) return std::nullopt;
  auto D = degree_k_vertices(g, k);
  std::vector<std::vector<int>> candidates;
  if (static_cast<int>(D.size()) == k) {
    candidates.push_back(D);
  } else if (n == 2 * k + 1 && static_cast<int>(D.size()) == 2 * k) {
    // both cliques have degree k; try the components of the induced deg-k set
    Graph ind(2 * k);
    for (int i = 0; i < 2 * k; ++i)
      for (int j = i + 1; j < 2 * k; ++j)
        if (g.has_edge(D[static_cast<std::size_t>(i)], D[static_cast<std::size_t>(j)])) ind.add_edge(i, j);
    for (const auto& comp : connected_components(ind)) {
      if (static_cast<int>(comp.size()) != k) continue;
      std::vector<int> xs;
      for (int i : comp) xs.push_back(D[static_cast<std::size_t>(i)]);
      candidates.push_back(xs);
    }
  }
  for (const auto& X : candidates) {
    // w = the one common neighbor outside X
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (int v : X) in_x[static_cast<std::size_t>(v)] = 1;
    int w = -1;
    bool ok = true;
    g.for_each_neighbor(X[0], [&](int u) {
      if (!in_x[static_cast<std::size_t>(u)]) {
        if (w != -1) ok = false;
        w = u;
      }
    });
    if (!ok || w == -1 || g.degree(w) != n - 1) continue;
    std::vector<char> want(static_cast<std::size_t>(n), 0);
    for (int v : X) want[static_cast<std::size_t>(v)] = 1;
    want[static_cast<std::size_t>(w)] = 1;
    ok = true;
    for (int x : X) {
      want[static_cast<std::size_t>(x)] = 0;
      if (!neighborhood_equals(g, x, want)) ok = false;
      want[static_cast<std::size_t>(x)] = 1;
    }
    if (!ok) continue;
    std::vector<int> Z;
    for (int v = 0; v < n; ++v)
      if (!in_x[static_cast<std::size_t>(v)] && v != w) Z.push_back(v);
    if (!is_clique(g, Z)) continue;
    long want_m = static_cast<long>(k) * (k - 1) / 2 +
                  static_cast<long>(Z.size()) * (static_cast<long>(Z.size()) - 1) / 2 + (n - 1);
    if (want_m != g.m()) continue;
    return ExtremalMatch{Family::L, k, Partition{X, {w}, Z}, 1};
  }
  return std::nullopt;
}

std::optional<ExtremalMatch> try_match_split(const Graph& g, int k) {
  const int n = g.n();
  if (n < 2 * k + 1) return std::nullopt;
  auto comps = connected_components(g);
  if (comps.size() != 2) return std::nullopt;
  const std::vector<int>*small = &comps[0], *big = &comps[1];
  if (small->size() > big->size()) std::swap(small, big);
  if (static_cast<int>(small->size()) != k + 1 || static_cast<int>(big->size()) != n - k - 1)
    return std::nullopt;
  if (!is_clique(g, *small) || !is_clique(g, *big)) return std::nullopt;
  long want_m = static_cast<long>(k + 1) * k / 2 +
                static_cast<long>(n - k - 1) * (n - k - 2) / 2;
  if (want_m != g.m()) return std::nullopt;
  return ExtremalMatch{Family::Split, k, Partition{*small, {}, *big}, 0};
}

// threshold comparison against a certified [t_lo, t_hi] enclosure
ThresholdComparison compare_to_threshold(const SpectralEstimate& est, const Rational& t_lo,
                                         const Rational& t_hi) {
  if (est.lambda_lo >= t_hi) return ThresholdComparison::CertifiedAtOrAbove;
  if (est.lambda_hi < t_lo) return ThresholdComparison::CertifiedBelow;
  return ThresholdComparison::Indeterminate;
}

void attach_cycle_certificate(const Graph& g, Verdict& verdict) {
  const int n = g.n();
  if (n <= kOracleCertificateMax) {
    auto res = ham_cycle(g);
    if (!res.found() || !is_hamiltonian_cycle_of(g, res.sequence))
      throw std::logic_error("certified cycle premise contradicted by the oracle");
    verdict.certificate = res.sequence;
    return;
  }
  auto [closed, trace] = k_closure(g, n);
  if (closed.m() == static_cast<long>(n) * (n - 1) / 2) {
    std::vector<int> canonical(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) canonical[static_cast<std::size_t>(i)] = i;
    auto cyc = cycle_from_closure(g, trace, canonical);
    if (!is_hamiltonian_cycle_of(g, cyc))
      throw std::logic_error("closure unwinding produced an invalid cycle");
    verdict.certificate = cyc;
    return;
  }
  verdict.certificate_flagged = true;
}

void attach_path_certificate(const Graph& g, Verdict& verdict) {
  const int n = g.n();
  if (n <= kOracleCertificateMax) {
    auto res = ham_path(g);
    if (!res.found() || !is_hamiltonian_path_of(g, res.sequence))
      throw std::logic_error("certified path premise contradicted by the oracle");
    verdict.certificate = res.sequence;
    return;
  }
  // a Hamiltonian path of G is a Hamiltonian cycle of G v K_1 minus the apex
  Graph apex = join(g, build_edgeless(1));
  auto [closed, trace] = k_closure(apex, n + 1);
  if (closed.m() == static_cast<long>(n + 1) * n / 2) {
    std::vector<int> canonical(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) canonical[static_cast<std::size_t>(i)] = i;
    auto cyc = cycle_from_closure(apex, trace, canonical);
    auto it = std::find(cyc.begin(), cyc.end(), n);
    std::vector<int> path(it + 1, cyc.end());
    path.insert(path.end(), cyc.begin(), it);
    if (!is_hamiltonian_path_of(g, path))
      throw std::logic_error("closure unwinding produced an invalid path");
    verdict.certificate = path;
    return;
  }
  verdict.certificate_flagged = true;
}

int resolve_k(const Graph& g, std::optional<int> k, int k_min) {
  int kk = k.value_or(g.min_degree());
  if (kk < k_min) throw std::invalid_argument("parameter k below the theorem's range");
  if (g.min_degree() < kk) throw std::invalid_argument("minimum degree below k");
  return kk;
}

SpectralEstimate estimate_for(const Graph& g, const Rational& tol,
                              const SpectralEstimate* precomputed) {
  if (precomputed) return *precomputed;
  return spectral_radius(g, tol);
}

}  // namespace

void attach_hamiltonian_certificate(const Graph& g, Verdict& verdict, HamMode mode) {
  if (mode == HamMode::Cycle)
    attach_cycle_certificate(g, verdict);
  else
    attach_path_certificate(g, verdict);
}

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedHamiltonianCycle: return "CertifiedHamiltonianCycle";
    case VerdictKind::CertifiedHamiltonianPath: return "CertifiedHamiltonianPath";
    case VerdictKind::Exceptional: return "Exceptional";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::optional<ExtremalMatch> match_extremal(const Graph& g, int k) {
  if (k < 0) return std::nullopt;
  if (k >= 1)
    if (auto m = try_match_m_or_n(g, k, Family::M)) return m;
  if (auto m = try_match_l(g, k)) return m;
  if (auto m = try_match_m_or_n(g, k, Family::N)) return m;
  if (auto m = try_match_split(g, k)) return m;
  return std::nullopt;
}

namespace {

Verdict certify_threshold_theorem(const Graph& g, std::optional<int> k_opt, HamMode mode,
                                  const Rational& tol, const SpectralEstimate* precomputed) {
  const bool cycle = mode == HamMode::Cycle;
  Verdict verdict;
  verdict.theorem = cycle ? "mtc" : "mtp";
  const int n = g.n();
  int k = resolve_k(g, k_opt, 1);
  verdict.premises.k = k;
  verdict.premises.n = n;

  // n >= k^3/2 + k + 4 (cycle) / k^3/2 + k^2/2 + k + 5 (path)
  long k3 = static_cast<long>(k) * k * k;
  long bound2 = cycle ? k3 + 2L * k + 8 : k3 + static_cast<long>(k) * k + 2L * k + 10;
  verdict.premises.n_bound_ok = 2L * n >= bound2;
  if (!verdict.premises.n_bound_ok) {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.premises.failed = "n-bound";
    return verdict;
  }

  Rational threshold = make_rational(cycle ? n - k - 1 : n - k - 2);
  verdict.premises.threshold_lo = threshold;
  verdict.premises.threshold_hi = threshold;

  SpectralEstimate est = estimate_for(g, tol, precomputed);
  auto cmp = compare_to_threshold(est, threshold, threshold);
  if (cmp == ThresholdComparison::Indeterminate) {
    // the threshold is an exact rational, so the shift test decides
    // lambda >= threshold outright (equality included)
    if (shift_exceeds_spectral_radius(g, threshold)) {
      cmp = ThresholdComparison::CertifiedBelow;
      if (est.lambda_hi > threshold) est.lambda_hi = threshold;  // proved lambda < threshold
    } else {
      cmp = ThresholdComparison::CertifiedAtOrAbove;
      if (est.lambda_lo < threshold) est.lambda_lo = threshold;  // proved lambda >= threshold
    }
  }
  verdict.premises.lambda_lo = est.lambda_lo;
  verdict.premises.lambda_hi = est.lambda_hi;
  verdict.premises.comparison = cmp;
  if (cmp != ThresholdComparison::CertifiedAtOrAbove) {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.premises.failed =
        cmp == ThresholdComparison::CertifiedBelow ? "spectral" : "lambda-indeterminate";
    return verdict;
  }

  verdict.premises.edge_bound_held =
      make_rational(g.m()) >= edge_bound_diagnostic(n, k, !cycle);

  if (auto match = match_extremal(g, k)) {
    bool relevant = cycle ? (match->family == Family::L || match->family == Family::M)
                          : (match->family == Family::N || match->family == Family::Split);
    if (relevant) {
      verdict.kind = VerdictKind::Exceptional;
      verdict.exceptional = *match;
      return verdict;
    }
  }

  verdict.kind = cycle ? VerdictKind::CertifiedHamiltonianCycle
                       : VerdictKind::CertifiedHamiltonianPath;
  if (cycle)
    attach_cycle_certificate(g, verdict);
  else
    attach_path_certificate(g, verdict);
  return verdict;
}

}  // namespace

Verdict certify_cycle(const Graph& g, std::optional<int> k, const Rational& tol,
                      const SpectralEstimate* precomputed) {
  return certify_threshold_theorem(g, k, HamMode::Cycle, tol, precomputed);
}

Verdict certify_path(const Graph& g, std::optional<int> k, const Rational& tol,
                     const SpectralEstimate* precomputed) {
  return certify_threshold_theorem(g, k, HamMode::Path, tol, precomputed);
}

Verdict certify_li_ning(const Graph& g, std::optional<int> k_opt, HamMode mode,
                        const Rational& tol, const SpectralEstimate* precomputed) {
  const bool cycle = mode == HamMode::Cycle;
  Verdict verdict;
  verdict.theorem = cycle ? "li-ning-cycle" : "li-ning-path";
  const int n = g.n();
  int k = resolve_k(g, k_opt, cycle ? 1 : 0);
  verdict.premises.k = k;
  verdict.premises.n = n;

  // cycle: n >= max{6k+5, (k^2+6k+4)/2}; path: n >= max{6k+10, (k^2+7k+8)/2}
  long lin = cycle ? 6L * k + 5 : 6L * k + 10;
  long quad2 = cycle ? static_cast<long>(k) * k + 6L * k + 4 : static_cast<long>(k) * k + 7L * k + 8;
  verdict.premises.n_bound_ok = n >= lin && 2L * n >= quad2;
  if (!verdict.premises.n_bound_ok) {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.premises.failed = "n-bound";
    return verdict;
  }

  Family exceptional_family = cycle ? Family::M : Family::N;
  ExtremalSpec spec{exceptional_family, k, n};
  QuotientSystem qs = quotient_lambda(spec, std::nullopt, tol);
  verdict.premises.threshold_lo = qs.lambda_lo;
  verdict.premises.threshold_hi = qs.lambda_hi;

  // the exceptional graph is the threshold graph itself, so the structural
  // match is decided before any interval comparison
  if (auto match = match_extremal(g, k)) {
    if (match->family == exceptional_family) {
      verdict.kind = VerdictKind::Exceptional;
      verdict.exceptional = *match;
      verdict.premises.comparison = ThresholdComparison::ByIdentity;
      return verdict;
    }
  }

  SpectralEstimate est = estimate_for(g, tol, precomputed);
  auto cmp = compare_to_threshold(est, qs.lambda_lo, qs.lambda_hi);
  if (cmp == ThresholdComparison::Indeterminate) {
    est = spectral_radius(g, tol / 1000);
    QuotientSystem qs2 = quotient_lambda(spec, std::nullopt, tol / 1000);
    verdict.premises.threshold_lo = qs2.lambda_lo;
    verdict.premises.threshold_hi = qs2.lambda_hi;
    cmp = compare_to_threshold(est, qs2.lambda_lo, qs2.lambda_hi);
  }
  verdict.premises.lambda_lo = est.lambda_lo;
  verdict.premises.lambda_hi = est.lambda_hi;
  verdict.premises.comparison = cmp;
  if (cmp != ThresholdComparison::CertifiedAtOrAbove) {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.premises.failed =
        cmp == ThresholdComparison::CertifiedBelow ? "spectral" : "lambda-indeterminate";
    return verdict;
  }

  verdict.kind = cycle ? VerdictKind::CertifiedHamiltonianCycle
                       : VerdictKind::CertifiedHamiltonianPath;
  if (cycle)
    attach_cycle_certificate(g, verdict);
  else
    attach_path_certificate(g, verdict);
  return verdict;
}

std::string verdict_to_json(const Verdict& v) {
  std::ostringstream out;
  auto rat_fields = [&](const std::string& name, const std::optional<Rational>& q) {
    out << "\"" << name << "\":";
    if (q) {
      std::ostringstream f;
      f.precision(17);
      f << to_double(*q);
      out << "\"" << to_fraction_string(*q) << "\",\"" << name << "_f\":" << f.str();
    } else {
      out << "null,\"" << name << "_f\":null";
    }
  };
  out << "{\"kind\":\"" << verdict_kind_name(v.kind) << "\"";
  out << ",\"theorem\":\"" << v.theorem << "\"";
  out << ",\"k\":" << v.premises.k << ",\"n\":" << v.premises.n << ",";
  rat_fields("lambda_lo", v.premises.lambda_lo);
  out << ",";
  rat_fields("lambda_hi", v.premises.lambda_hi);
  out << ",";
  rat_fields("threshold", v.premises.threshold_hi);
  if (v.exceptional)
    out << ",\"exceptional_family\":\"" << family_name(v.exceptional->family) << "\"";
  if (v.certificate) {
    out << ",\"certificate\":[";
    for (std::size_t i = 0; i < v.certificate->size(); ++i)
      out << (i ? "," : "") << (*v.certificate)[i];
    out << "]";
  }
  if (!v.premises.failed.empty()) out << ",\"failed_premise\":\"" << v.premises.failed << "\"";
  out << "}";
  return out.str();
}

}  // namespace specham
