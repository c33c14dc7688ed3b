#include "specham/tightness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specham {

Rational RadicalVector::norm_squared() const {
  Rational s(0);
  for (const Rational& c : coeffs) s += c * c;
  return s / radical;
}

Rational RadicalVector::rayleigh_quotient_exact(const Graph& g) const {
  if (static_cast<int>(coeffs.size()) != g.n())
    throw std::invalid_argument("vector length must match the graph order");
  Rational num(0);
  for (int u = 0; u < g.n(); ++u)
    g.for_each_neighbor(u, [&](int w) {
      if (w > u) num += coeffs[static_cast<std::size_t>(u)] * coeffs[static_cast<std::size_t>(w)];
    });
  num *= 2;
  Rational den(0);  // the shared radical cancels between the two forms
  for (const Rational& c : coeffs) den += c * c;
  return num / den;
}

namespace {

struct PropSetup {
  Family family;
  ExtremalSpec spec;
  Graph graph;        // family graph minus the chosen edge
  Partition partition;
  std::pair<int, int> deleted;
  EdgeClass orbit;
};

void check_prop_range(int k, int n) {
  if (k < 2) throw std::invalid_argument("near-extremal constructions need k >= 2");
  if (n < 2 * k + 1) throw std::invalid_argument("need n >= 2k+1");
}

bool deletion_keeps_delta(const Graph& g, int u, int v, int k) {
  return g.degree(u) - 1 >= k && g.degree(v) - 1 >= k;
}

Graph prop_graph(Family family, int k, int n, int u, int v) {
  check_prop_range(k, n);
  auto built = build_extremal({family, k, n});
  const Partition& p = built.partition;
  auto in_x = [&](int w) {
    return std::find(p.X.begin(), p.X.end(), w) != p.X.end();
  };
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoints out of range");
  if (in_x(u) || in_x(v))
    throw std::invalid_argument("deletion endpoint in X would drop the minimum degree below k");
  if (!built.graph.has_edge(u, v)) throw std::invalid_argument("not an edge of the family graph");
  if (!deletion_keeps_delta(built.graph, u, v, k))
    throw std::invalid_argument("deletion would drop the minimum degree below k");
  Graph g = built.graph;
  g.remove_edge(u, v);
  return g;
}

// deterministic choice: first delta-preserving orbit in the order ZZ, YZ, YY
PropSetup prop_setup(Family family, int k, int n) {
  check_prop_range(k, n);
  ExtremalSpec spec{family, k, n};
  auto built = build_extremal(spec);
  auto admissible = delta_preserving_orbits(spec);
  for (EdgeClass orbit : {EdgeClass::ZZ, EdgeClass::YZ, EdgeClass::YY}) {
    if (std::find(admissible.begin(), admissible.end(), orbit) == admissible.end()) continue;
    auto rep = class_edge_representative(spec, built.partition, orbit);
    if (!rep) continue;
    Graph g = built.graph;
    g.remove_edge(rep->first, rep->second);
    return {family, spec, std::move(g), built.partition, *rep, orbit};
  }
  throw std::invalid_argument("no delta-preserving deletable edge exists");
}

RadicalVector prop_vector(Family family, int k, int n) {
  check_prop_range(k, n);
  ExtremalSpec spec{family, k, n};
  auto sizes = spec.class_sizes();
  Rational x_coeff, radical;
  if (family == Family::M) {
    // x = 2/(k^2 sqrt(r)), y = 1/sqrt(r), r = n-k+4/k^3
    x_coeff = make_rational(2) / make_rational(static_cast<long>(k) * k);
    radical = make_rational(n - k) + make_rational(4, static_cast<long>(k) * k * k);
  } else if (family == Family::N) {
    // x = 2/(k(k+1) sqrt(r)), y = 1/sqrt(r), r = n-k-1+4/(k^2(k+1))
    x_coeff = make_rational(2) / make_rational(static_cast<long>(k) * (k + 1));
    radical = make_rational(n - k - 1) + make_rational(4, static_cast<long>(k) * k * (k + 1));
  } else {
    throw std::invalid_argument("test vectors exist for the M and N families only");
  }
  RadicalVector vec;
  vec.radical = radical;
  vec.coeffs.assign(static_cast<std::size_t>(n), make_rational(1));
  for (int i = 0; i < sizes[0]; ++i) vec.coeffs[static_cast<std::size_t>(i)] = x_coeff;
  return vec;
}

TightnessReport prop_verify(Family family, int k, int n, const Rational& tol) {
  PropSetup setup = prop_setup(family, k, n);
  RadicalVector vec = prop_vector(family, k, n);

  TightnessReport rep;
  rep.k = k;
  rep.n = n;
  {
    std::ostringstream c;
    c << family_name(family) << "_" << k << "(" << n << ") minus " << edge_class_name(setup.orbit)
      << " edge {" << setup.deleted.first << "," << setup.deleted.second << "}";
    rep.construction = c.str();
  }
  rep.norm_squared = vec.norm_squared();
  if (rep.norm_squared != 1) throw std::logic_error("test vector norm is not exactly 1");

  rep.rayleigh = vec.rayleigh_quotient_exact(setup.graph);
  // closed form of the same quantity
  Rational closed;
  if (family == Family::M) {
    Rational r = vec.radical;
    Rational k3 = make_rational(static_cast<long>(k) * k * k);
    closed = make_rational(n - k - 1) -
             (make_rational(4) / (k3 * r)) * (make_rational(n - k - 1) - k3 / 2);
    rep.threshold = make_rational(n - k - 1);
  } else {
    Rational r = vec.radical;
    Rational k2k1 = make_rational(static_cast<long>(k) * k * (k + 1));
    closed = make_rational(n - k - 2) -
             (make_rational(4) / (k2k1 * r)) * (make_rational(n - k - 2) - k2k1 / 2);
    rep.threshold = make_rational(n - k - 2);
  }
  if (closed != rep.rayleigh)
    throw std::logic_error("closed-form Rayleigh value disagrees with the direct edge sum");
  rep.margin = rep.rayleigh - rep.threshold;

  SpectralEstimate est = spectral_radius(setup.graph, tol);
  rep.lambda_lo = est.lambda_lo;
  rep.strict_certified = est.lambda_lo > rep.threshold;
  if (!rep.strict_certified && rep.margin >= 0) {
    // the test vector is not an eigenvector, so some one-coordinate nudge
    // has to push the exact quotient strictly above the threshold
    for (int i = 0; i < n && !rep.strict_certified; ++i) {
      for (int sign : {1, -1}) {
        RadicalVector nudged = vec;
        nudged.coeffs[static_cast<std::size_t>(i)] += make_rational(sign, 1024);
        Rational q = nudged.rayleigh_quotient_exact(setup.graph);
        if (q > rep.threshold) {
          rep.lambda_lo = q;
          rep.strict_certified = true;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace

Graph prop1_graph(int k, int n, int u, int v) { return prop_graph(Family::M, k, n, u, v); }
RadicalVector prop1_vector(int k, int n) { return prop_vector(Family::M, k, n); }
TightnessReport prop1_verify(int k, int n, const Rational& tol) {
  return prop_verify(Family::M, k, n, tol);
}

Graph prop2_graph(int k, int n, int u, int v) { return prop_graph(Family::N, k, n, u, v); }
RadicalVector prop2_vector(int k, int n) { return prop_vector(Family::N, k, n); }
TightnessReport prop2_verify(int k, int n, const Rational& tol) {
  return prop_verify(Family::N, k, n, tol);
}

std::string scan_regime_name(ScanRegime r) {
  switch (r) {
    case ScanRegime::Proposition: return "proposition";
    case ScanRegime::Theorem: return "theorem";
    case ScanRegime::Unresolved: return "unresolved";
  }
  return "?";
}

ScanResult threshold_scan(Family family, int k, int n_min, int n_max, const Rational& tol) {
  if (family != Family::M && family != Family::N)
    throw std::invalid_argument("scan supports the M and N families");
  if (k < 1) throw std::invalid_argument("scan needs k >= 1");

  ScanResult result;
  result.family = family;
  result.k = k;
  long k3 = static_cast<long>(k) * k * k;
  long bound2 = family == Family::M ? k3 + 2L * k + 8 : k3 + static_cast<long>(k) * k + 2L * k + 10;
  result.theorem_bound_n = static_cast<int>((bound2 + 1) / 2);

  for (int n = std::max(n_min, 2 * k + 1); n <= n_max; ++n) {
    ExtremalSpec spec{family, k, n};
    auto built = build_extremal(spec);
    Rational threshold = make_rational(family == Family::M ? n - k - 1 : n - k - 2);

    ScanRow row;
    row.n = n;
    row.threshold = threshold;
    bool first = true;
    bool all_below = true;
    bool any_at_or_above = false;
    bool any_straddle = false;
    for (EdgeClass orbit : delta_preserving_orbits(spec)) {
      auto rep = class_edge_representative(spec, built.partition, orbit);
      if (!rep) continue;
      Graph g = built.graph;
      g.remove_edge(rep->first, rep->second);
      SpectralEstimate est = spectral_radius(g, tol);
      if (est.lambda_lo < threshold && est.lambda_hi >= threshold) {
        // straddles: one tighter retry before flagging
        SpectralEstimate est2 = spectral_radius(g, tol / 1000);
        if (est2.lambda_hi - est2.lambda_lo < est.lambda_hi - est.lambda_lo) est = est2;
      }
      if (first || est.lambda_lo > row.max_lambda_lo) {
        row.max_lambda_lo = est.lambda_lo;
        row.argmax_orbit = orbit;
      }
      if (first || est.lambda_hi > row.max_lambda_hi) row.max_lambda_hi = est.lambda_hi;
      first = false;
      if (est.lambda_lo >= threshold)
        any_at_or_above = true;
      else if (est.lambda_hi < threshold)
        ;  // certified below
      else
        any_straddle = true;
      if (!(est.lambda_hi < threshold)) all_below = false;
    }
    if (first) continue;  // no admissible deletion at this n
    if (any_at_or_above)
      row.regime = ScanRegime::Proposition;
    else if (all_below)
      row.regime = ScanRegime::Theorem;
    else
      row.regime = ScanRegime::Unresolved;
    row.flagged = any_straddle && row.regime != ScanRegime::Proposition;
    result.rows.push_back(row);
  }

  for (const ScanRow& row : result.rows)
    if (row.regime == ScanRegime::Proposition) result.last_prop_n = row.n;
  // clean Theorem suffix
  std::optional<int> suffix_start;
  for (auto it = result.rows.rbegin(); it != result.rows.rend(); ++it) {
    if (it->regime == ScanRegime::Theorem)
      suffix_start = it->n;
    else
      break;
  }
  result.first_theorem_n = suffix_start;
  if (suffix_start) result.gap = result.theorem_bound_n - *suffix_start;
  return result;
}

std::string scan_to_csv(const ScanResult& scan) {
  std::ostringstream out;
  out << "family,k,n,orbit,lambda_lo,lambda_hi,threshold,regime,flagged\n";
  for (const ScanRow& r : scan.rows) {
    out << family_name(scan.family) << "," << scan.k << "," << r.n << ","
        << edge_class_name(r.argmax_orbit) << "," << to_fraction_string(r.max_lambda_lo) << ","
        << to_fraction_string(r.max_lambda_hi) << "," << to_fraction_string(r.threshold) << ","
        << scan_regime_name(r.regime) << "," << (r.flagged ? 1 : 0) << "\n";
  }
  return out.str();
}

namespace {

void append_optional_int(std::ostringstream& out, const char* name, const std::optional<int>& v) {
  out << "\"" << name << "\":";
  if (v)
    out << *v;
  else
    out << "null";
}

}  // namespace

std::string scan_to_json(const ScanResult& scan) {
  std::ostringstream out;
  out << "{\"family\":\"" << family_name(scan.family) << "\",\"k\":" << scan.k << ",\"rows\":[";
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const ScanRow& r = scan.rows[i];
    out << (i ? "," : "") << "{\"n\":" << r.n << ",\"lambda_lo\":\""
        << to_fraction_string(r.max_lambda_lo) << "\",\"lambda_lo_f\":" << to_double(r.max_lambda_lo)
        << ",\"lambda_hi\":\"" << to_fraction_string(r.max_lambda_hi)
        << "\",\"lambda_hi_f\":" << to_double(r.max_lambda_hi) << ",\"orbit\":\""
        << edge_class_name(r.argmax_orbit) << "\",\"threshold\":\"" << to_fraction_string(r.threshold)
        << "\",\"regime\":\"" << scan_regime_name(r.regime) << "\",\"flagged\":"
        << (r.flagged ? "true" : "false") << "}";
  }
  out << "],\"theorem_bound_n\":" << scan.theorem_bound_n << ",";
  append_optional_int(out, "last_prop_n", scan.last_prop_n);
  out << ",";
  append_optional_int(out, "first_theorem_n", scan.first_theorem_n);
  out << ",";
  append_optional_int(out, "gap", scan.gap);
  out << "}";
  return out.str();
}

std::string tightness_report_to_csv(const std::vector<TightnessReport>& reports) {
  std::ostringstream out;
  out << "k,n,construction,norm_squared,rayleigh,threshold,margin,strict,lambda_lo\n";
  for (const TightnessReport& r : reports) {
    out << r.k << "," << r.n << ",\"" << r.construction << "\"," << to_fraction_string(r.norm_squared)
        << "," << to_fraction_string(r.rayleigh) << "," << to_fraction_string(r.threshold) << ","
        << to_fraction_string(r.margin) << "," << (r.strict_certified ? 1 : 0) << ","
        << to_fraction_string(r.lambda_lo) << "\n";
  }
  return out.str();
}

std::string tightness_report_to_json(const TightnessReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"k\":" << r.k << ",\"n\":" << r.n << ",\"construction\":\"" << r.construction
      << "\",\"norm_squared\":\"" << to_fraction_string(r.norm_squared) << "\",\"rayleigh\":\""
      << to_fraction_string(r.rayleigh) << "\",\"rayleigh_f\":" << to_double(r.rayleigh)
      << ",\"threshold\":\"" << to_fraction_string(r.threshold) << "\",\"margin\":\""
      << to_fraction_string(r.margin) << "\",\"margin_f\":" << to_double(r.margin)
      << ",\"strict\":" << (r.strict_certified ? "true" : "false") << ",\"lambda_lo\":\""
      << to_fraction_string(r.lambda_lo) << "\"}";
  return out.str();
}

}  // namespace specham
