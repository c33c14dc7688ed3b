#include "specham/quotient.hpp"

#include <stdexcept>

namespace specham {

namespace {

// all leading principal minors of (c*I - B) positive, exact
bool shift_exceeds_perron(const std::vector<std::vector<Int>>& b, const Rational& c) {
  const std::size_t n = b.size();
  Int p = c.get_num(), q = c.get_den();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = -q * b[i][j];
      if (i == j) a[i][j] += p;
    }
  Int prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

// exact solve of (B - lambda*I) p = 0 with p[anchor] = 1; lambda must not
// be an eigenvalue of the reduced system (callers pass lambda_hi > rho)
std::vector<Rational> solve_profile(const std::vector<std::vector<Int>>& b, const Rational& lambda,
                                    std::size_t anchor) {
  const std::size_t n = b.size();
  // unknowns: p_j for j != anchor; equations: rows i != anchor
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < n; ++j)
    if (j != anchor) idx.push_back(j);
  const std::size_t m = idx.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t i = idx[r];
    for (std::size_t cidx = 0; cidx < m; ++cidx) {
      std::size_t j = idx[cidx];
      Rational v = make_rational(b[i][j], Int(1));
      if (i == j) v -= lambda;
      a[r][cidx] = v;
    }
    a[r][m] = -make_rational(b[i][anchor], Int(1));
  }
  // Gaussian elimination with exact pivoting
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::logic_error("profile system singular at the certified shift");
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c2 = col; c2 <= m; ++c2) a[r][c2] -= f * a[col][c2];
    }
  }
  std::vector<Rational> p(n);
  p[anchor] = make_rational(1);
  for (std::size_t cidx = 0; cidx < m; ++cidx) p[idx[cidx]] = a[cidx][m] / a[cidx][cidx];
  return p;
}

}  // namespace

std::vector<Rational> QuotientSystem::lift_profile(int n) const {
  std::vector<Rational> v(static_cast<std::size_t>(n), make_rational(0));
  for (std::size_t c = 0; c < members.size(); ++c)
    for (int u : members[c]) v[static_cast<std::size_t>(u)] = profile[c];
  return v;
}

Rational default_quotient_tol() { return make_rational(1, 1000000000000L); }

std::pair<Rational, Rational> perron_interval(const std::vector<std::vector<Int>>& b,
                                              const Rational& tol) {
  if (b.empty()) throw std::invalid_argument("empty matrix");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  Int max_row_sum(0);
  for (const auto& row : b) {
    Int s(0);
    for (const Int& x : row) {
      if (sgn(x) < 0) throw std::invalid_argument("Perron bisection needs a nonnegative matrix");
      s += x;
    }
    if (s > max_row_sum) max_row_sum = s;
  }
  Rational lo = make_rational(0);
  Rational hi = make_rational(max_row_sum + 1, Int(1));
  // invariant: lo <= rho < hi
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (shift_exceeds_perron(b, mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

QuotientSystem quotient_lambda(const ExtremalSpec& spec, std::optional<EdgeClass> deleted,
                               const Rational& tol) {
  spec.validate();
  if (deleted && *deleted != EdgeClass::ZZ)
    throw std::invalid_argument("only Z-edge deletions reduce to a quotient here");

  auto built = build_extremal(spec);
  Graph g = built.graph;
  const Partition& part = built.partition;

  QuotientSystem qs;
  if (!deleted) {
    auto push = [&](char lab, const std::vector<int>& vs) {
      if (vs.empty()) return;
      qs.labels.push_back(lab);
      qs.sizes.push_back(static_cast<int>(vs.size()));
      qs.members.push_back(vs);
    };
    push('X', part.X);
    push('Y', part.Y);
    push('Z', part.Z);
  } else {
    if (part.Z.size() < 2) throw std::invalid_argument("no deletable Z-edge: class too small");
    int u = part.Z[0], v = part.Z[1];
    g.remove_edge(u, v);
    std::vector<int> z_rest(part.Z.begin() + 2, part.Z.end());
    if (part.X.empty() || part.Y.empty() || z_rest.empty())
      throw std::invalid_argument("deleted-edge quotient needs all four classes nonempty");
    qs.labels = {'X', 'Y', 'Z', 'T'};
    qs.sizes = {static_cast<int>(part.X.size()), static_cast<int>(part.Y.size()),
                static_cast<int>(z_rest.size()), 2};
    qs.members = {part.X, part.Y, z_rest, {u, v}};
  }

  const std::size_t nc = qs.members.size();
  std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t c = 0; c < nc; ++c)
    for (int w : qs.members[c]) cls[static_cast<std::size_t>(w)] = static_cast<int>(c);
  qs.matrix.assign(nc, std::vector<Int>(nc, Int(0)));
  for (std::size_t c = 0; c < nc; ++c) {
    int rep = qs.members[c][0];
    std::vector<int> counts(nc, 0);
    g.for_each_neighbor(rep, [&](int w) { ++counts[static_cast<std::size_t>(cls[static_cast<std::size_t>(w)])]; });
    for (std::size_t j = 0; j < nc; ++j) qs.matrix[c][j] = counts[j];
  }
  if (!validate_equitable(g, qs)) throw std::logic_error("partition is not equitable");

  auto [lo, hi] = perron_interval(qs.matrix, tol);
  qs.lambda_lo = lo;
  qs.lambda_hi = hi;

  // anchor the profile on the largest class (latest on ties); lambda_hi is
  // strictly above every eigenvalue, so the reduced solve is nonsingular
  std::size_t anchor = 0;
  for (std::size_t c = 0; c < nc; ++c)
    if (qs.sizes[c] >= qs.sizes[anchor]) anchor = c;
  qs.profile = solve_profile(qs.matrix, hi, anchor);
  return qs;
}

bool validate_equitable(const Graph& g, const QuotientSystem& qs) {
  std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t c = 0; c < qs.members.size(); ++c)
    for (int w : qs.members[c]) {
      if (w < 0 || w >= g.n() || cls[static_cast<std::size_t>(w)] != -1) return false;
      cls[static_cast<std::size_t>(w)] = static_cast<int>(c);
    }
  for (int v = 0; v < g.n(); ++v)
    if (cls[static_cast<std::size_t>(v)] == -1) return false;
  for (std::size_t c = 0; c < qs.members.size(); ++c) {
    for (int v : qs.members[c]) {
      std::vector<Int> counts(qs.members.size(), Int(0));
      g.for_each_neighbor(v, [&](int w) { ++counts[static_cast<std::size_t>(cls[static_cast<std::size_t>(w)])]; });
      for (std::size_t j = 0; j < qs.members.size(); ++j)
        if (counts[j] != qs.matrix[c][j]) return false;
    }
  }
  return true;
}

}  // namespace specham
