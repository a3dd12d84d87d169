#include <doctest.h>

#include <random>

#include "bergesat/matching.hpp"
#include "oracles.hpp"

using namespace bergesat;

namespace {

void check_valid(const BipartiteGraph& g, const Matching& m) {
  std::vector<bool> left(static_cast<std::size_t>(g.left_size)), right(static_cast<std::size_t>(g.right_size));
  for (const auto& [l, r] : m.pairs) {
    REQUIRE(!left[l]);
    REQUIRE(!right[r]);
    left[l] = right[r] = true;
    const auto& adj = g.adjacency[l];
    REQUIRE(std::find(adj.begin(), adj.end(), r) != adj.end());
  }
}

std::vector<std::uint64_t> masks_of(const BipartiteGraph& g) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(g.left_size), 0);
  for (int l = 0; l < g.left_size; ++l) {
    for (int r : g.adjacency[l]) out[l] |= std::uint64_t{1} << r;
  }
  return out;
}

BipartiteGraph random_graph(std::mt19937& rng, int left, int right, double density) {
  std::bernoulli_distribution coin(density);
  BipartiteGraph g{left, right, std::vector<std::vector<int>>(static_cast<std::size_t>(left))};
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      if (coin(rng)) g.adjacency[l].push_back(r);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("pair-edge auxiliary graph") {
  const Hypergraph h = oracle::c5();
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto aux = build_pair_edge_aux(h, pairs);
  CHECK(aux.graph.left_size == 6);
  CHECK(aux.graph.right_size == 5);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int e = 0; e < h.edge_count(); ++e) {
      const bool contained = (h.edge_mask(e) & (bit(pairs[p].first) | bit(pairs[p].second))) ==
                             (bit(pairs[p].first) | bit(pairs[p].second));
      const auto& adj = aux.graph.adjacency[p];
      CHECK(contained == (std::find(adj.begin(), adj.end(), e) != adj.end()));
    }
  }
  CHECK(max_matching(aux).size() <= 5);

  const auto none = build_pair_edge_aux(Hypergraph(5, 3, {}), pairs);
  CHECK(none.graph.right_size == 0);
  CHECK(max_matching(none).size() == 0);

  std::vector<std::pair<Vertex, Vertex>> triangle{{0, 1}, {0, 2}, {1, 2}};
  const auto single = build_pair_edge_aux(Hypergraph(3, 3, {{0, 1, 2}}), triangle);
  for (const auto& adj : single.graph.adjacency) CHECK(adj == std::vector<int>{0});
  CHECK(max_matching(single).size() == 1);
}

TEST_CASE("small matching examples") {
  BipartiteGraph complete{3, 3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  CHECK(max_matching(complete).size() == 3);
  CHECK(matching_size(masks_of(complete)) == 3);

  BipartiteGraph star{4, 3, {{1}, {1}, {1}, {1}}};
  CHECK(max_matching(star).size() == 1);
  CHECK(matching_size(masks_of(star)) == 1);

  BipartiteGraph empty{0, 0, {}};
  CHECK(max_matching(empty).size() == 0);
}

TEST_CASE("target stops early but never overshoots") {
  BipartiteGraph complete{4, 4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}};
  CHECK(max_matching(complete, 2).size() >= 2);
  CHECK(matching_size(masks_of(complete), 4) == 4);
}

TEST_CASE("matching agrees with exhaustive search up to 7+7 nodes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    const int left = static_cast<int>(rng() % 8);
    const int right = static_cast<int>(rng() % 8);
    const double density = 0.15 + 0.1 * static_cast<double>(rng() % 6);
    const BipartiteGraph g = random_graph(rng, left, right, density);
    const int expected = oracle::brute_matching(g);
    const Matching m = max_matching(g);
    check_valid(g, m);
    CHECK(m.size() == expected);
    CHECK(matching_size(masks_of(g)) == expected);

    // relabel both sides
    std::vector<int> pl(static_cast<std::size_t>(left)), pr(static_cast<std::size_t>(right));
    std::iota(pl.begin(), pl.end(), 0);
    std::iota(pr.begin(), pr.end(), 0);
    std::shuffle(pl.begin(), pl.end(), rng);
    std::shuffle(pr.begin(), pr.end(), rng);
    BipartiteGraph shuffled{left, right, std::vector<std::vector<int>>(static_cast<std::size_t>(left))};
    for (int l = 0; l < left; ++l) {
      for (int r : g.adjacency[l]) shuffled.adjacency[pl[l]].push_back(pr[r]);
    }
    CHECK(max_matching(shuffled).size() == expected);

    if (left > 0 && right > 0) {
      BipartiteGraph more = g;
      more.adjacency[rng() % left].push_back(static_cast<int>(rng() % right));
      auto& row = more.adjacency.front();
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      for (auto& r : more.adjacency) {
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
      }
      CHECK(max_matching(more).size() >= expected);
    }
  }
}
