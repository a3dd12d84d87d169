#include <doctest.h>

#include <random>

#include "bergesat/berge.hpp"
#include "bergesat/constructions.hpp"
#include "oracles.hpp"

using namespace bergesat;

namespace {

bool contains(const std::vector<Vertex>& vs, Vertex v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

/// Whether (u, v) is good by the definition: adding any missing hyperedge
/// through u and v creates a Berge clique.
bool brute_good(const Hypergraph& h, Vertex u, Vertex v, int ell) {
  bool any = false;
  for (Vertex w = 0; w < h.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    const VertexMask e = bit(u) | bit(v) | bit(w);
    if (h.has_edge(e)) continue;
    any = true;
    if (!brute_force_find_berge(h.with_edge({u, v, w}), ell)) return false;
  }
  return any;
}

Hypergraph without(const Hypergraph& h, int index) {
  return h.without_edge(index);
}

}  // namespace

TEST_CASE("find_berge_clique examples") {
  const auto w = find_berge_clique(oracle::private_k4(), 4);
  REQUIRE(w);
  CHECK(w->core == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(verify_witness(oracle::private_k4(), *w, 4));
  CHECK_FALSE(find_berge_clique(oracle::c5(), 4));
  CHECK_FALSE(find_berge_clique(Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), 4));
  CHECK(is_berge_free(oracle::c5(), 4));
  CHECK_FALSE(is_berge_free(oracle::private_k4(), 4));
  CHECK(is_berge_free(Hypergraph(6, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {2, 3, 4}}), 4));

  CHECK(brute_force_find_berge(oracle::private_k4(), 4));
  CHECK_FALSE(brute_force_find_berge(oracle::c5(), 4));
}

TEST_CASE("ell outside the supported range") {
  CHECK_THROWS_AS(find_berge_clique(oracle::c5(), 2), Error);
  CHECK_THROWS_AS(is_saturated(oracle::c5(), 12), Error);
}

TEST_CASE("classify_pair examples") {
  // (0,1) in C5 is good: core {0,1,2,4} with 02->012, 12->123, 14->014,
  // 04->034, 24->234 leaves (0,1) for the new edge.
  const auto c = classify_pair(oracle::c5(), 0, 1, 4);
  CHECK(c.verdict == PairVerdict::Good);
  REQUIRE(c.witness);
  CHECK(verify_witness(oracle::c5(), *c.witness, 4, std::pair<Vertex, Vertex>{0, 1}));
  CHECK(brute_good(oracle::c5(), 0, 1, 4));
  CHECK(brute_force_find_berge(oracle::c5().with_edge({0, 1, 3}), 4));

  const Hypergraph minus = oracle::private_k4().without_edge(5);  // {2,3,9}
  const auto g = classify_pair(minus, 2, 3, 4);
  CHECK(g.verdict == PairVerdict::Good);
  REQUIRE(g.witness);
  CHECK(g.witness->core == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(g.witness->assignment.size() == 5);

  const Hypergraph lonely(6, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 5}});
  for (Vertex v = 1; v < 6; ++v) CHECK(classify_pair(lonely, 0, v, 4).verdict == PairVerdict::Bad);

  CHECK_THROWS_AS(classify_pair(oracle::c5(), 2, 2, 4), Error);
}

TEST_CASE("fast filter examples") {
  const Hypergraph two(9, 3, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}, {6, 7, 8}});
  CHECK(fast_bad_filters(two, 0, 1) == FastBadRule::LowDegreePairNeighbor);

  const Hypergraph three(6, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 5}});
  CHECK(fast_bad_filters(three, 0, 1) == FastBadRule::PairDegreeAtLeastThree);

  CHECK_FALSE(fast_bad_filters(oracle::c5(), 0, 2));
  CHECK_THROWS_AS(fast_bad_filters(oracle::c5(), 0, 2, 5), Error);
  CHECK_THROWS_AS(fast_bad_filters(Hypergraph(5, 4, {{0, 1, 2, 3}}), 0, 1), Error);
}

TEST_CASE("is_saturated examples") {
  CHECK(is_saturated(oracle::c5(), 4));
  CHECK(is_saturated(construction_even_base(), 4));
  CHECK_FALSE(is_saturated(Hypergraph(5, 3, {}), 4));
  CHECK_FALSE(is_saturated(oracle::private_k4(), 4));
  for (int i = 0; i < 5; ++i) CHECK_FALSE(is_saturated(without(oracle::c5(), i), 4));

  CHECK(brute_force_is_saturated(oracle::c5(), 4));
  CHECK_FALSE(brute_force_is_saturated(without(oracle::c5(), 0), 4));
  CHECK_FALSE(brute_force_is_saturated(oracle::private_k4(), 4));
}

TEST_CASE("printed good-pair threshold is stricter") {
  // The looser threshold never turns a bad pair good.
  BergeOptions printed;
  printed.paper_goodpair_threshold = true;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 7, 3, 6 + static_cast<int>(rng() % 5));
    if (!is_berge_free(h, 4)) continue;
    for (Vertex u = 0; u < 7; ++u) {
      for (Vertex v = u + 1; v < 7; ++v) {
        if (classify_pair(h, u, v, 4, printed).verdict == PairVerdict::Good) {
          CHECK(classify_pair(h, u, v, 4).verdict == PairVerdict::Good);
        }
      }
    }
  }
}

TEST_CASE("exhaustive oracle agreement for n <= 5, m <= 6") {
  for (int n = 3; n <= 5; ++n) {
    const auto all = oracle::subsets(n, 3);
    const int total = static_cast<int>(all.size());
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
      if (std::popcount(mask) > 6) continue;
      std::vector<std::vector<Vertex>> edges;
      for (int i = 0; i < total; ++i) {
        if (mask & (1u << i)) edges.push_back(all[i]);
      }
      const Hypergraph h(n, 3, edges);
      for (int ell : {3, 4}) {
        CAPTURE(h.to_line());
        CAPTURE(ell);
        const auto fast = find_berge_clique(h, ell);
        CHECK(fast.has_value() == brute_force_find_berge(h, ell).has_value());
        if (fast) CHECK(verify_witness(h, *fast, ell));
        CHECK(is_saturated(h, ell) == brute_force_is_saturated(h, ell));
      }
    }
  }
}

TEST_CASE("random oracle agreement, filter soundness and good-pair semantics") {
  std::mt19937 rng(2024);
  int free_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 11);
    const Hypergraph h = oracle::random_hypergraph(rng, n, 3, m);
    CAPTURE(h.to_line());
    const auto fast = find_berge_clique(h, 4);
    CHECK(fast.has_value() == brute_force_find_berge(h, 4).has_value());
    if (fast) {
      CHECK(verify_witness(h, *fast, 4));
      continue;
    }
    ++free_seen;
    CHECK(is_saturated(h, 4) == brute_force_is_saturated(h, 4));

    // removing an edge keeps it free
    for (int i = 0; i < h.edge_count(); ++i) CHECK(is_berge_free(h.without_edge(i), 4));

    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const auto c = classify_pair(h, u, v, 4);
        BergeOptions unfiltered;
        unfiltered.fast_filters = false;
        CHECK(c.verdict == classify_pair(h, u, v, 4, unfiltered).verdict);
        if (fast_bad_filters(h, u, v)) CHECK(c.verdict == PairVerdict::Bad);
        if (c.verdict == PairVerdict::Good) {
          REQUIRE(c.witness);
          CHECK(verify_witness(h, *c.witness, 4, std::pair<Vertex, Vertex>{u, v}));
          for (Vertex x : c.witness->core) {
            if (x == u || x == v) continue;
            CHECK(h.degree(x) >= 3);
            CHECK(contains(h.neighborhood(u), x));
            CHECK(contains(h.neighborhood(v), x));
          }
          for (Vertex w = 0; w < n; ++w) {
            const VertexMask e = bit(u) | bit(v) | bit(w);
            if (w == u || w == v || h.has_edge(e)) continue;
            CHECK(brute_force_find_berge(h.with_edge({u, v, w}), 4));
          }
        } else {
          CHECK_FALSE(c.witness);
        }
      }
    }
  }
  CHECK(free_seen >= 300);
}

TEST_CASE("other uniformities and clique sizes against the oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int ell = 3 + static_cast<int>(rng() % 3);
    const int n = std::max(k, 4) + static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % 11);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, m);
    CAPTURE(h.to_line());
    CAPTURE(ell);
    CHECK(is_berge_free(h, ell) == !brute_force_find_berge(h, ell).has_value());
    CHECK(is_saturated(h, ell) == brute_force_is_saturated(h, ell));
  }
}

TEST_CASE("verify_witness rejects broken witnesses") {
  const Hypergraph h = oracle::private_k4();
  auto w = *find_berge_clique(h, 4);
  CHECK(verify_witness(h, w, 4));
  auto repeated = w;
  repeated.assignment[1].edge = repeated.assignment[0].edge;
  CHECK_FALSE(verify_witness(h, repeated, 4));
  auto short_core = w;
  short_core.core.pop_back();
  CHECK_FALSE(verify_witness(h, short_core, 4));
  auto wrong = w;
  std::swap(wrong.assignment[0].edge, wrong.assignment[5].edge);
  CHECK_FALSE(verify_witness(h, wrong, 4));
}
