#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bergesat/error.hpp"

namespace bergesat {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Vertices of `mask` in ascending order.
std::vector<Vertex> mask_to_vertices(VertexMask mask);

/// Calls f(v) for every set bit of `mask`, lowest first.
template <class F>
inline void for_each_bit(VertexMask mask, F&& f) {
  while (mask != 0) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

/// Non-owning edge-mask view used by the hot loops of the search; no
/// normalization is implied beyond "each mask has exactly k bits below n".
struct EdgeMasks {
  int n = 0;
  int k = 0;
  std::span<const VertexMask> edges;
};

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept as ascending k-tuples in lexicographic order, mirrored by
/// one bitmask per edge. Degrees and 2-shadow neighbourhoods are computed once
/// on construction; every query afterwards is O(1) or O(m).
class Hypergraph {
 public:
  /// Normalizes each edge (sorts its vertices) and the edge list. Throws
  /// BadArity, VertexOutOfRange or DuplicateEdge.
  Hypergraph(int n, int k, std::vector<std::vector<Vertex>> edges);

  static Hypergraph from_masks(int n, int k, std::span<const VertexMask> masks);

  /// Parses one line of the exchange format, `n=<n> k=<k> m=<m> : a,b,c;...`.
  /// The line must already be normalized. Throws Parse.
  static Hypergraph parse_line(std::string_view line);

  int vertex_count() const { return n_; }
  int uniformity() const { return k_; }
  int edge_count() const { return static_cast<int>(masks_.size()); }

  std::span<const Vertex> edge(int i) const {
    return {flat_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
  }
  VertexMask edge_mask(int i) const { return masks_[i]; }
  std::span<const VertexMask> edge_masks() const { return masks_; }
  EdgeMasks view() const { return {n_, k_, masks_}; }

  bool has_edge(VertexMask mask) const;

  int degree(Vertex v) const;
  int pair_degree(Vertex u, Vertex v) const;
  std::vector<Vertex> pair_neighborhood(Vertex u, Vertex v) const;
  std::vector<Vertex> neighborhood(Vertex v) const;
  VertexMask neighborhood_mask(Vertex v) const;

  const std::vector<int>& degrees() const { return degrees_; }
  int min_degree() const;

  Hypergraph with_edge(std::vector<Vertex> edge) const;
  Hypergraph without_edge(int index) const;

  /// Image under the vertex map v -> perm[v]; perm must be a permutation of 0..n-1.
  Hypergraph relabeled(std::span<const Vertex> perm) const;

  std::string to_line() const;

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && k_ == other.k_ && flat_ == other.flat_;
  }

 private:
  Hypergraph() = default;
  void check_vertex(Vertex v) const;
  void finish();

  int n_ = 0;
  int k_ = 0;
  std::vector<Vertex> flat_;
  std::vector<VertexMask> masks_;
  std::vector<VertexMask> sorted_masks_;
  std::vector<int> degrees_;
  std::vector<VertexMask> neighbors_;
};

/// Bipartite vertex/edge membership graph. Node ids 0..n-1 are vertex-nodes,
/// n..n+m-1 are edge-nodes.
struct IncidenceGraph {
  enum class Part { Vertex, Edge };

  int uniformity = 0;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<std::vector<Vertex>> edge_vertices;

  int vertex_count() const { return static_cast<int>(vertex_edges.size()); }
  int edge_count() const { return static_cast<int>(edge_vertices.size()); }
  int node_count() const { return vertex_count() + edge_count(); }
  Part part(int node) const { return node < vertex_count() ? Part::Vertex : Part::Edge; }
  std::size_t adjacency_count() const;
};

IncidenceGraph incidence_graph(const Hypergraph& h);
Hypergraph from_incidence(const IncidenceGraph& g);

}  // namespace bergesat
