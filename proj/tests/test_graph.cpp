#include <doctest.h>

#include <algorithm>

#include "specham/families.hpp"
#include "specham/graph.hpp"
#include "specham/rng.hpp"

using namespace specham;

TEST_CASE("complete and edgeless builders") {
  Graph k3 = build_complete(3);
  CHECK(k3.m() == 3);
  for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);
  CHECK(build_complete(1).m() == 0);
  CHECK(build_complete(5).m() == 10);
  Graph e4 = build_edgeless(4);
  CHECK(e4.n() == 4);
  CHECK(e4.m() == 0);
  CHECK(build_edgeless(1).n() == 1);
  CHECK(build_edgeless(2).degrees() == std::vector<int>{0, 0});
  CHECK_THROWS(build_complete(0));
  CHECK_THROWS(build_edgeless(0));
}

TEST_CASE("join and disjoint union") {
  CHECK(join(build_edgeless(1), build_edgeless(1)) == build_complete(2));
  // K_1 v (K_3 + K_1) = L_1(5), 7 edges
  Graph l15 = join(build_complete(1), disjoint_union(build_complete(3), build_complete(1)));
  CHECK(l15.n() == 5);
  CHECK(l15.m() == 7);
  Graph j = join(build_complete(2), build_edgeless(2));
  CHECK(j.m() == 5);
  auto d = degrees_ascending(j);
  CHECK(d == std::vector<int>{2, 2, 3, 3});
  CHECK(disjoint_union(build_complete(3), build_edgeless(1)).n() == 4);
  CHECK(disjoint_union(build_complete(3), build_edgeless(1)).m() == 3);
  CHECK(disjoint_union(build_edgeless(1), build_edgeless(1)) == build_edgeless(2));
  CHECK(disjoint_union(build_complete(4), build_complete(2)).m() == 7);
}

TEST_CASE("join/union edge-count identities on random pairs") {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, rng.uniform_int(1, 8), 400000);
    Graph h = random_graph(rng, rng.uniform_int(1, 8), 400000);
    CHECK(join(g, h).m() == g.m() + h.m() + g.n() * h.n());
    CHECK(disjoint_union(g, h).m() == g.m() + h.m());
  }
}

TEST_CASE("degrees_ascending") {
  Graph star = join(build_complete(1), build_edgeless(3));  // K_{1,3}
  CHECK(degrees_ascending(star) == std::vector<int>{1, 1, 1, 3});
  auto m15 = build_extremal({Family::M, 1, 5});
  CHECK(degrees_ascending(m15.graph) == std::vector<int>{1, 3, 3, 3, 4});
  CHECK(degrees_ascending(build_complete(4)) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("extremal family construction") {
  SUBCASE("M_2(9)") {
    auto [g, p] = build_extremal({Family::M, 2, 9});
    CHECK(g.min_degree() == 2);
    CHECK(g.m() == 25);  // C(7,2) + 4
    CHECK(p.X.size() == 2);
    CHECK(p.Y.size() == 2);
    CHECK(p.Z.size() == 5);
  }
  SUBCASE("L_2(10)") {
    auto [g, p] = build_extremal({Family::L, 2, 10});
    CHECK(g.m() == 31);  // C(8,2) + C(3,2)
    CHECK(g.min_degree() == 2);
  }
  SUBCASE("minimum degree is exactly k across the families") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 2 * k + 1; n <= 13; ++n)
        for (Family f : {Family::L, Family::M, Family::N}) {
          auto built = build_extremal({f, k, n});
          CHECK(built.graph.min_degree() == k);
        }
    // the split family needs n >= 2k+2: at n = 2k+1 its small side is K_k
    for (int k = 1; k <= 3; ++k) {
      for (int n = 2 * k + 2; n <= 13; ++n)
        CHECK(build_extremal({Family::Split, k, n}).graph.min_degree() == k);
      CHECK(build_extremal({Family::Split, k, 2 * k + 1}).graph.min_degree() == k - 1);
    }
  }
  SUBCASE("composition identities, canonical labels") {
    // L_k(n) = K_1 v (K_{n-k-1} + K_k) up to class relabeling
    int k = 2, n = 8;
    Graph via_join = join(build_complete(1), disjoint_union(build_complete(n - k - 1), build_complete(k)));
    auto built = build_extremal({Family::L, k, n});
    auto da = degrees_ascending(via_join);
    auto db = degrees_ascending(built.graph);
    CHECK(da == db);
    // canonical order: X (K_k part) first, then the shared vertex, then Z
    std::vector<int> perm(static_cast<std::size_t>(n));
    // join order: shared vertex 0, then K_{n-k-1}, then K_k
    perm[0] = k;  // shared vertex -> Y slot
    for (int i = 0; i < n - k - 1; ++i) perm[static_cast<std::size_t>(1 + i)] = k + 1 + i;
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(n - k + i)] = i;
    CHECK(relabel(via_join, perm) == built.graph);

    // M_k(n) = K_k v (K_{n-2k} + ~K_k): join order Y, Z, X; canonical X, Y, Z
    Graph m_join = join(build_complete(2), disjoint_union(build_complete(9 - 4), build_edgeless(2)));
    auto m_built = build_extremal({Family::M, 2, 9});
    CHECK(degrees_ascending(m_join) == degrees_ascending(m_built.graph));
    {
      int kk = 2, nn = 9;
      std::vector<int> perm(static_cast<std::size_t>(nn));
      for (int i = 0; i < kk; ++i) perm[static_cast<std::size_t>(i)] = kk + i;                   // Y
      for (int i = 0; i < nn - 2 * kk; ++i) perm[static_cast<std::size_t>(kk + i)] = 2 * kk + i; // Z
      for (int i = 0; i < kk; ++i) perm[static_cast<std::size_t>(nn - kk + i)] = i;              // X
      CHECK(relabel(m_join, perm) == m_built.graph);
    }
    Graph n_join = join(build_complete(2), disjoint_union(build_complete(9 - 5), build_edgeless(3)));
    auto n_built = build_extremal({Family::N, 2, 9});
    CHECK(degrees_ascending(n_join) == degrees_ascending(n_built.graph));
    {
      int kk = 2, nn = 9;
      std::vector<int> perm(static_cast<std::size_t>(nn));
      for (int i = 0; i < kk; ++i) perm[static_cast<std::size_t>(i)] = kk + 1 + i;  // Y after X
      for (int i = 0; i < nn - 2 * kk - 1; ++i)
        perm[static_cast<std::size_t>(kk + i)] = 2 * kk + 1 + i;                    // Z
      for (int i = 0; i < kk + 1; ++i) perm[static_cast<std::size_t>(nn - kk - 1 + i)] = i;  // X
      CHECK(relabel(n_join, perm) == n_built.graph);
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS(build_extremal({Family::M, 2, 4}));  // n < 2k+1
    CHECK_THROWS(build_extremal({Family::L, 0, 5}));
    CHECK_NOTHROW(build_extremal({Family::N, 0, 5}));     // N_0(n) = K_{n-1} + K_1
    CHECK_NOTHROW(build_extremal({Family::Split, 0, 5}));
    auto n0 = build_extremal({Family::N, 0, 6});
    CHECK(n0.graph.m() == 10);
    CHECK(n0.graph.min_degree() == 0);
  }
}

TEST_CASE("delta-preserving deletion orbits") {
  // at n = 2k+1 the Z-touching deletions break the minimum degree
  auto orbs = delta_preserving_orbits({Family::M, 2, 5});
  CHECK(orbs == std::vector<EdgeClass>{EdgeClass::YY});
  orbs = delta_preserving_orbits({Family::M, 2, 9});
  CHECK(orbs.size() == 3);
  orbs = delta_preserving_orbits({Family::L, 2, 10});
  CHECK(orbs == std::vector<EdgeClass>{EdgeClass::YZ, EdgeClass::ZZ});
  orbs = delta_preserving_orbits({Family::Split, 1, 8});
  CHECK(orbs == std::vector<EdgeClass>{EdgeClass::ZZ});
  orbs = delta_preserving_orbits({Family::M, 1, 6});
  CHECK(orbs == std::vector<EdgeClass>{EdgeClass::YZ, EdgeClass::ZZ});
}

TEST_CASE("consistency of adjacency rows and degree cache") {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_graph(rng, rng.uniform_int(1, 40), 300000);
    g.check_consistent();
    long sum = 0;
    for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
    CHECK(sum == 2l * g.m());
  }
}
