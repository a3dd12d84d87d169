#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// Core pair (a, b) mapped onto hyperedge `edge` (an index into the host).
struct PairAssignment {
  Vertex a = 0;
  Vertex b = 0;
  int edge = 0;

  bool operator==(const PairAssignment&) const = default;
};

/// A Berge copy of K_l: an l-vertex core and an injective, containment
/// respecting map from core pairs to hyperedges. Pair witnesses omit the
/// classified pair itself, whose hyperedge is the one being added.
struct BergeWitness {
  std::vector<Vertex> core;
  std::vector<PairAssignment> assignment;
};

enum class PairVerdict { Good, Bad };

struct PairClassification {
  Vertex u = 0;
  Vertex v = 0;
  PairVerdict verdict = PairVerdict::Bad;
  std::optional<BergeWitness> witness;
};

/// Which sound shortcut declared a pair bad (3-uniform, K_4 only).
enum class FastBadRule {
  PairDegreeAtLeastThree,   // d(u,v) >= 3
  LowDegreePairNeighbor,    // some w in N(u,v) has degree <= 2
  FewHeavyCommonNeighbors,  // fewer than 2 common neighbours of degree >= 3
  LowDegreeEdge,            // low-degree edge configurations
};

struct BergeOptions {
  /// Require l-1 (instead of l-2) qualifying common neighbours before a pair
  /// may be good. Reproduces the published pseudocode; off by default.
  bool paper_goodpair_threshold = false;
  /// Run the (3, 4) shortcuts before matching.
  bool fast_filters = true;
};

std::optional<BergeWitness> find_berge_clique(const Hypergraph& h, int ell);

bool is_berge_free(const Hypergraph& h, int ell);
bool is_berge_free(const EdgeMasks& h, int ell);

/// Good/bad verdict for (u, v). Assumes h is Berge-K_l-free; throws
/// EqualVertices or VertexOutOfRange.
PairClassification classify_pair(const Hypergraph& h, Vertex u, Vertex v, int ell,
                                 const BergeOptions& options = {});

/// Cheap bad-pair rules; never claims a pair is good. Only defined for
/// k = 3, l = 4 (UnsupportedParameters otherwise).
std::optional<FastBadRule> fast_bad_filters(const Hypergraph& h, Vertex u, Vertex v,
                                            int ell = 4);

bool is_saturated(const Hypergraph& h, int ell, const BergeOptions& options = {});
bool is_saturated(const EdgeMasks& h, int ell, const BergeOptions& options = {});

enum class SaturationVerdict { NotFree, FreeNotSaturated, Saturated };

/// Both answers from one pass; the search uses this to count free candidates.
SaturationVerdict saturation_verdict(const EdgeMasks& h, int ell, const BergeOptions& options = {});

// Reference implementations straight from the definitions: every core, every
// injective pair-to-edge assignment. Exponential; meant for m <= 12.
std::optional<BergeWitness> brute_force_find_berge(const Hypergraph& h, int ell);
bool brute_force_is_saturated(const Hypergraph& h, int ell);

/// Checks core size, distinct hyperedges and containment. When `added_pair`
/// is given, that core pair must be the only one left unassigned.
bool verify_witness(const Hypergraph& h, const BergeWitness& w, int ell,
                    std::optional<std::pair<Vertex, Vertex>> added_pair = std::nullopt);

}  // namespace bergesat
