#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// Relabeling-invariant representative of a hypergraph together with its
/// exchange-format line. Ordered by the line text.
struct CanonicalForm {
  Hypergraph hypergraph;
  std::string line;

  bool operator==(const CanonicalForm& other) const { return line == other.line; }
  auto operator<=>(const CanonicalForm& other) const { return line <=> other.line; }
};

struct CanonOptions {
  /// Search-tree nodes allowed before giving up with TooLarge.
  std::size_t node_budget = 2'000'000;
};

/// Vertex map v -> label producing the canonical relabeling.
std::vector<Vertex> canonical_labeling(const Hypergraph& h, const CanonOptions& options = {});

CanonicalForm canonical_form(const Hypergraph& h, const CanonOptions& options = {});

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// One canonical representative per isomorphism class, sorted by line.
std::vector<Hypergraph> dedup(std::span<const Hypergraph> hypergraphs);

}  // namespace bergesat
