#include "specham/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specham {

namespace {

constexpr long kIterationCap = 1000000;
constexpr unsigned kWitnessBits = 53;  // witness entries are multiples of 2^-53

// Fraction-free elimination over the integers; returns true iff every
// leading principal minor of the matrix is positive.
bool leading_minors_positive(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
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

struct ComponentIteration {
  std::vector<int> vertices;
  std::vector<double> vec;     // indexed like `vertices`
  double rho = 0.0;            // float estimate of the component's radius
  double residual = 1.0;
  long iterations = 0;
};

// power iteration on A+I restricted to one component; seed is degree+1
void iterate_component(const Graph& g, ComponentIteration& c, double target_residual,
                       long max_iters) {
  const std::size_t sz = c.vertices.size();
  if (sz == 1) {
    c.vec = {1.0};
    c.rho = 0.0;
    c.residual = 0.0;
    return;
  }
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < sz; ++i) local[static_cast<std::size_t>(c.vertices[i])] = static_cast<int>(i);
  if (c.vec.empty()) {
    c.vec.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) c.vec[i] = g.degree(c.vertices[i]) + 1.0;
  }
  std::vector<double> next(sz);
  for (long it = 0; it < max_iters; ++it) {
    double norm2 = 0.0, quad = 0.0;
    for (std::size_t i = 0; i < sz; ++i) {
      double s = c.vec[i];  // the +I term
      g.for_each_neighbor(c.vertices[i], [&](int u) { s += c.vec[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])]; });
      next[i] = s;
      norm2 += c.vec[i] * c.vec[i];
      quad += s * c.vec[i];
    }
    double rho_shifted = quad / norm2;  // estimate of lambda+1
    double resid = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < sz; ++i) {
      resid = std::max(resid, std::fabs(next[i] - rho_shifted * c.vec[i]));
      scale = std::max(scale, std::fabs(next[i]));
    }
    for (std::size_t i = 0; i < sz; ++i) c.vec[i] = next[i] / scale;
    c.rho = rho_shifted - 1.0;
    c.residual = resid / (scale > 0 ? scale : 1.0);
    ++c.iterations;
    if (c.residual < target_residual) return;
  }
}

std::vector<Rational> witness_from_floats(const Graph& g, const std::vector<int>& comp,
                                          const std::vector<double>& vec) {
  const Int one(1);
  const Int den = one << kWitnessBits;
  std::vector<Rational> w(static_cast<std::size_t>(g.n()));
  std::vector<Int> nums(static_cast<std::size_t>(g.n()), one);  // floor: keep strictly positive
  double top = 0.0;
  for (double x : vec) top = std::max(top, std::fabs(x));
  if (top <= 0) top = 1.0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    double scaled = std::fabs(vec[i]) / top * std::ldexp(1.0, static_cast<int>(kWitnessBits));
    long long r = static_cast<long long>(std::llround(scaled));
    if (r < 1) r = 1;
    nums[static_cast<std::size_t>(comp[i])] = Int(static_cast<long>(r));
  }
  for (int v = 0; v < g.n(); ++v) w[static_cast<std::size_t>(v)] = make_rational(nums[static_cast<std::size_t>(v)], den);
  return w;
}

}  // namespace

Rational rayleigh_quotient(const Graph& g, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != g.n())
    throw std::invalid_argument("vector length must match the graph order");
  Rational den(0);
  for (const Rational& x : v) den += x * x;
  if (den == 0) throw std::invalid_argument("zero vector");
  Rational num(0);
  for (int u = 0; u < g.n(); ++u)
    g.for_each_neighbor(u, [&](int w) {
      if (w > u) num += v[static_cast<std::size_t>(u)] * v[static_cast<std::size_t>(w)];
    });
  num *= 2;
  return num / den;
}

Rational default_spectral_tol() { return make_rational(1, 1000000000000L); }

bool shift_exceeds_spectral_radius(const Graph& g, const Rational& c) {
  const int n = g.n();
  // scale c*I - A by den(c): integer matrix, same minor signs
  Int p = c.get_num(), q = c.get_den();
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = p;
    g.for_each_neighbor(i, [&](int j) { m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -q; });
  }
  return leading_minors_positive(std::move(m));
}

SpectralEstimate spectral_radius(const Graph& g, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("empty graph");

  // dyadic rounding fine enough that it cannot eat the requested width
  unsigned round_bits = kWitnessBits + 7;
  while (make_rational(4, Int(1) << round_bits) > tol && round_bits < 512) round_bits += 32;

  SpectralEstimate est;

  auto comps = connected_components(g);
  std::vector<ComponentIteration> iters(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) iters[i].vertices = comps[i];

  double target = 1e-10;
  long spent = 0;

  for (int attempt = 0;; ++attempt) {
    for (auto& c : iters) {
      iterate_component(g, c, target, std::max(0L, kIterationCap - spent));
      spent = 0;
      for (auto& ci : iters) spent += ci.iterations;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < iters.size(); ++i)
      if (iters[i].rho > iters[best].rho) best = i;

    est.witness = witness_from_floats(g, iters[best].vertices, iters[best].vec);
    est.lambda_lo = rayleigh_quotient(g, est.witness);
    est.iterations = spent;

    // first try the requested width, then grow the gap geometrically
    Rational gap = tol - make_rational(1, Int(1) << round_bits);
    if (gap <= 0) gap = tol / 2;
    bool done = false;
    for (int widen = 0; widen < 96; ++widen) {
      Rational c_up = round_up_dyadic(est.lambda_lo + gap, round_bits);
      if (shift_exceeds_spectral_radius(g, c_up)) {
        est.lambda_hi = c_up;
        done = true;
        break;
      }
      gap *= 2;
      // refine the witness before widening any further
      if (widen >= 1 && attempt < 3 && spent < kIterationCap) break;
    }
    if (done) {
      est.certified_within_tol = est.width() <= tol;
      return est;
    }
    if (attempt >= 3 || spent >= kIterationCap) {
      // widest certificate: max degree + 1 always clears the radius
      int max_deg = *std::max_element(g.degrees().begin(), g.degrees().end());
      Rational fallback = make_rational(max_deg + 1);
      if (!shift_exceeds_spectral_radius(g, fallback)) fallback = make_rational(n);
      est.lambda_hi = fallback;
      est.certified_within_tol = est.width() <= tol;
      return est;
    }
    target *= 1e-3;
    if (target < 1e-15) target = 1e-15;
  }
}

Rational hsf_upper_bound(const Graph& g) {
  const int n = g.n();
  const long m = g.m();
  const int delta = g.min_degree();
  auto f = hsf_f(make_rational(delta), m, n);
  if (!f) throw std::logic_error("negative radicand: 2m < n*delta is impossible");
  return *f;
}

std::optional<QuadVal> hsf_f_exact(const Rational& x, long m, int n) {
  Rational radicand = make_rational(2 * m) - make_rational(n) * x + (x + 1) * (x + 1) / 4;
  if (radicand < 0) return std::nullopt;
  return QuadVal{(x - 1) / 2, radicand};
}

std::optional<Rational> hsf_f(const Rational& x, long m, int n) {
  auto exact = hsf_f_exact(x, m, n);
  if (!exact) return std::nullopt;
  return exact->a + sqrt_upper_bound(exact->b, 64);
}

bool hsf_monotone_check(long m, int n, const std::vector<Rational>& grid) {
  if (2 * m > static_cast<long>(n) * (n - 1))
    throw std::invalid_argument("monotonicity requires 2m <= n(n-1)");
  std::optional<QuadVal> prev;
  for (const Rational& x : grid) {
    if (x > n - 1) break;
    auto cur = hsf_f_exact(x, m, n);
    if (!cur) break;  // radicand went negative; later points only sink lower
    if (prev && !(*prev >= *cur)) return false;
    prev = cur;
  }
  return true;
}

Rational edge_bound_diagnostic(int n, int k, bool path_variant) {
  if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
  long nn = n, kk = k;
  long num = path_variant ? nn * nn - 2 * kk * nn + 2 * kk * kk + 4 * kk - 3 * nn + 2
                          : nn * nn - 2 * kk * nn + 2 * kk * kk + kk - nn;
  return make_rational(num, 2);
}

}  // namespace specham
