#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// Plain bipartite graph: adjacency[l] lists the right nodes of left node l.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::vector<int>> adjacency;
};

/// Pair-to-hyperedge auxiliary graph: pair p ~ edge e iff p is contained in e.
struct BipartiteAux {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<int> edges;  // indices into the source hypergraph
  BipartiteGraph graph;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left, right)
  int size() const { return static_cast<int>(pairs.size()); }
};

BipartiteAux build_pair_edge_aux(const Hypergraph& h,
                                 std::span<const std::pair<Vertex, Vertex>> pairs);

/// Maximum-cardinality matching by Hopcroft-Karp phases. With a target the
/// search stops as soon as that many pairs are matched.
Matching max_matching(const BipartiteGraph& g, std::optional<int> target = std::nullopt);
Matching max_matching(const BipartiteAux& aux, std::optional<int> target = std::nullopt);

/// Same algorithm on bitmask adjacency (at most 64 left and 64 right nodes);
/// returns the cardinality only. Used by the Berge checks' inner loops.
int matching_size(std::span<const std::uint64_t> left_adjacency,
                  std::optional<int> target = std::nullopt);

}  // namespace bergesat
