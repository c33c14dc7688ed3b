#include <doctest.h>

#include "specham/certifier.hpp"
#include "specham/oracle.hpp"
#include "specham/rng.hpp"

using namespace specham;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("match_extremal recognizes the families it built") {
  auto m29 = build_extremal({Family::M, 2, 9});
  auto match = match_extremal(m29.graph, 2);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::M);
  CHECK(match->l == 2);

  auto l2 = build_extremal({Family::L, 2, 9});
  match = match_extremal(l2.graph, 2);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::L);
  CHECK(match->l == 1);

  auto n2 = build_extremal({Family::N, 2, 9});
  match = match_extremal(n2.graph, 2);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::N);
  CHECK(match->l == 2);

  auto sp = build_extremal({Family::Split, 2, 9});
  match = match_extremal(sp.graph, 2);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::Split);
  CHECK(match->l == 0);
}

TEST_CASE("match_extremal rejects near misses") {
  auto m29 = build_extremal({Family::M, 2, 9});
  Graph g = m29.graph;
  g.remove_edge(m29.partition.Z[0], m29.partition.Z[1]);
  CHECK_FALSE(match_extremal(g, 2).has_value());
  CHECK_FALSE(match_extremal(build_complete(9), 2).has_value());
  // adding an X-X edge also breaks the template
  Graph h = m29.graph;
  h.add_edge(m29.partition.X[0], m29.partition.X[1]);
  CHECK_FALSE(match_extremal(h, 2).has_value());
}

TEST_CASE("match_extremal handles the coincidences") {
  // L_1(n) = M_1(n); the fixed template order reports M
  auto m16 = build_extremal({Family::M, 1, 6});
  auto l16 = build_extremal({Family::L, 1, 6});
  CHECK(degrees_ascending(m16.graph) == degrees_ascending(l16.graph));
  auto match = match_extremal(m16.graph, 1);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::M);
  // L_k(2k+1) is X/Z symmetric
  auto l25 = build_extremal({Family::L, 2, 5});
  match = match_extremal(l25.graph, 2);
  REQUIRE(match.has_value());
  // N_0(n) = K_{n-1} + K_1
  auto n0 = build_extremal({Family::N, 0, 8});
  match = match_extremal(n0.graph, 0);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::N);
  // relabeled copies still match
  Rng rng(71);
  Graph shuffled = relabel(build_extremal({Family::M, 2, 9}).graph, rng.permutation(9));
  match = match_extremal(shuffled, 2);
  REQUIRE(match.has_value());
  CHECK(match->family == Family::M);
}

TEST_CASE("certify_cycle on the worked examples") {
  SUBCASE("K_6 with k=1 is certified") {
    Verdict v = certify_cycle(build_complete(6), 1);
    CHECK(v.kind == VerdictKind::CertifiedHamiltonianCycle);
    REQUIRE(v.certificate.has_value());
    CHECK(is_hamiltonian_cycle_of(build_complete(6), *v.certificate));
    CHECK(v.premises.edge_bound_held.value());
  }
  SUBCASE("M_1(6) is the exceptional graph") {
    auto built = build_extremal({Family::M, 1, 6});
    Verdict v = certify_cycle(built.graph, 1);
    CHECK(v.kind == VerdictKind::Exceptional);
    REQUIRE(v.exceptional.has_value());
    CHECK(v.exceptional->family == Family::M);
  }
  SUBCASE("C_6 is inconclusive on the spectral premise") {
    Verdict v = certify_cycle(cycle_graph(6), 1);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.premises.failed == "spectral");
  }
  SUBCASE("n-bound failure is named") {
    Verdict v = certify_cycle(build_complete(4), 1);  // n=4 < 5.5
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.premises.failed == "n-bound");
  }
  SUBCASE("k above the minimum degree is rejected") {
    CHECK_THROWS(certify_cycle(cycle_graph(6), 3));
  }
  SUBCASE("any k below the minimum degree is accepted") {
    Verdict v = certify_cycle(build_complete(8), 1);  // delta = 7, k = 1
    CHECK(v.kind == VerdictKind::CertifiedHamiltonianCycle);
    // the larger k tightens the n-bound past n = 8
    v = certify_cycle(build_complete(8), 2);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.premises.failed == "n-bound");
  }
}

TEST_CASE("certify_path on the worked examples") {
  SUBCASE("K_7 with k=1 is certified") {
    Verdict v = certify_path(build_complete(7), 1);
    CHECK(v.kind == VerdictKind::CertifiedHamiltonianPath);
    REQUIRE(v.certificate.has_value());
    CHECK(is_hamiltonian_path_of(build_complete(7), *v.certificate));
  }
  SUBCASE("K_6 + K_2 is the split exception") {
    Graph g = disjoint_union(build_complete(6), build_complete(2));
    Verdict v = certify_path(g, 1);
    CHECK(v.kind == VerdictKind::Exceptional);
    REQUIRE(v.exceptional.has_value());
    CHECK(v.exceptional->family == Family::Split);
  }
  SUBCASE("N_1(7) resolves by certified interval") {
    auto built = build_extremal({Family::N, 1, 7});
    Verdict v = certify_path(built.graph, 1);
    CHECK(v.kind == VerdictKind::Exceptional);
    REQUIRE(v.exceptional.has_value());
    CHECK(v.exceptional->family == Family::N);
  }
}

TEST_CASE("certify_li_ning on the worked examples") {
  SUBCASE("M_2(20) is exceptional by identity") {
    auto built = build_extremal({Family::M, 2, 20});
    Verdict v = certify_li_ning(built.graph, 2, HamMode::Cycle);
    CHECK(v.kind == VerdictKind::Exceptional);
    CHECK(v.premises.comparison == ThresholdComparison::ByIdentity);
  }
  SUBCASE("K_20 with k=2 clears the lambda(M_2(20)) threshold") {
    Verdict v = certify_li_ning(build_complete(20), 2, HamMode::Cycle);
    CHECK(v.kind == VerdictKind::CertifiedHamiltonianCycle);
    REQUIRE(v.certificate.has_value());
    CHECK(is_hamiltonian_cycle_of(build_complete(20), *v.certificate));
  }
  SUBCASE("star with k=0 in path mode is inconclusive") {
    Graph star = join(build_complete(1), build_edgeless(9));
    Verdict v = certify_li_ning(star, 0, HamMode::Path);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.premises.failed == "spectral");
    // threshold was lambda(N_0(10)) = 8
    CHECK(v.premises.threshold_lo.value() <= 8);
    CHECK(v.premises.threshold_hi.value() >= 8);
  }
  SUBCASE("cycle mode requires k >= 1") {
    CHECK_THROWS(certify_li_ning(build_complete(12), 0, HamMode::Cycle));
  }
}

TEST_CASE("certificates beyond the oracle range come from closure unwinding") {
  // K_22 minus a perfect matching is 20-regular: lambda = 20 = n-k-1 for
  // k = 1, and its 22-closure is complete
  Graph g = build_complete(22);
  for (int i = 0; i < 22; i += 2) g.remove_edge(i, i + 1);
  Verdict v = certify_cycle(g, 1);
  CHECK(v.kind == VerdictKind::CertifiedHamiltonianCycle);
  REQUIRE(v.certificate.has_value());
  CHECK(is_hamiltonian_cycle_of(g, *v.certificate));
  CHECK_FALSE(v.certificate_flagged);

  Verdict p = certify_path(g, 1);
  CHECK(p.kind == VerdictKind::CertifiedHamiltonianPath);
  REQUIRE(p.certificate.has_value());
  CHECK(is_hamiltonian_path_of(g, *p.certificate));

  // an incomplete closure leaves the verdict flagged instead of witnessed
  Graph c22(22);
  for (int i = 0; i < 22; ++i) c22.add_edge(i, (i + 1) % 22);
  Verdict flagged;
  attach_hamiltonian_certificate(c22, flagged, HamMode::Cycle);
  CHECK(flagged.certificate_flagged);
  CHECK_FALSE(flagged.certificate.has_value());
}

TEST_CASE("theorem consistency at the k=1 and k=2 specializations") {
  // path, k=1: n >= 7 and lambda > n-3 certify a path unless N_1(n)
  Rng rng(73);
  int exercised = 0;
  for (int t = 0; t < 400; ++t) {
    int n = rng.uniform_int(7, 12);
    Graph g = random_graph(rng, n, rng.uniform_int(75, 97) * 10000u);
    if (g.min_degree() < 1) continue;
    auto est = spectral_radius(g);
    if (!(est.lambda_lo > n - 3)) continue;
    Verdict v = certify_path(g, 1, default_spectral_tol(), &est);
    bool ok = v.kind == VerdictKind::CertifiedHamiltonianPath ||
              (v.kind == VerdictKind::Exceptional && v.exceptional->family == Family::N);
    CHECK(ok);
    CHECK(ham_path(g).found() == (v.kind == VerdictKind::CertifiedHamiltonianPath));
    ++exercised;
  }
  CHECK(exercised > 20);
  // cycle, k=2: n >= 10 and lambda >= n-3 certify a cycle unless L_2/M_2
  exercised = 0;
  for (int t = 0; t < 400; ++t) {
    int n = rng.uniform_int(10, 13);
    Graph g = random_graph(rng, n, rng.uniform_int(80, 97) * 10000u);
    if (g.min_degree() < 2) continue;
    auto est = spectral_radius(g);
    if (!(est.lambda_lo >= n - 3)) continue;
    Verdict v = certify_cycle(g, 2, default_spectral_tol(), &est);
    bool ok = v.kind == VerdictKind::CertifiedHamiltonianCycle ||
              (v.kind == VerdictKind::Exceptional &&
               (v.exceptional->family == Family::L || v.exceptional->family == Family::M));
    CHECK(ok);
    ++exercised;
  }
  CHECK(exercised > 20);
  // below the stated range the engine stays inconclusive
  Verdict v = certify_cycle(build_complete(8), 2);  // n=8 < 10
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.premises.failed == "n-bound");
}

TEST_CASE("json serialization is stable and complete") {
  auto built = build_extremal({Family::M, 1, 6});
  Verdict v = certify_cycle(built.graph, 1);
  std::string a = verdict_to_json(v);
  std::string b = verdict_to_json(certify_cycle(built.graph, 1));
  CHECK(a == b);
  CHECK(a.find("\"kind\":\"Exceptional\"") != std::string::npos);
  CHECK(a.find("\"theorem\":\"mtc\"") != std::string::npos);
  CHECK(a.find("\"exceptional_family\":\"M\"") != std::string::npos);
  CHECK(a.find("\"lambda_lo\":\"") != std::string::npos);
  CHECK(a.find("\"threshold\":\"4/1\"") != std::string::npos);  // n-k-1 at n=6, k=1

  Verdict c = certify_cycle(build_complete(6), 1);
  std::string s = verdict_to_json(c);
  CHECK(s.find("\"certificate\":[") != std::string::npos);
}
