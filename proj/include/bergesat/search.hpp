#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergesat/berge.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

struct SearchProgress {
  std::size_t subtrees_done = 0;
  std::size_t subtrees_total = 0;
  std::uint64_t candidates = 0;
  double seconds = 0.0;
};

struct SearchSpec {
  int n_vertices = 0;
  int n_edges = 0;
  int uniform = 3;
  int n_min_degree = 0;
  int ell = 4;
  int workers = 1;
  /// Drop any edge prefix that already contains a Berge-K_l.
  bool incremental_freeness = false;
  BergeOptions berge;
  /// Called from worker threads (serialized) at most about once a second.
  std::function<void(const SearchProgress&)> progress;
};

struct SearchReport {
  std::uint64_t candidates = 0;
  std::uint64_t free = 0;
  std::uint64_t saturated = 0;
  /// Canonical forms, one per isomorphism class, sorted by exchange line.
  std::vector<Hypergraph> representatives;
  double seconds = 0.0;
  std::vector<std::uint64_t> per_worker_candidates;
};

/// Throws InvalidSpec for malformed specs. A min-degree bound that no
/// hypergraph can meet is valid and just yields nothing.
void validate(const SearchSpec& spec);

/// Streams every hypergraph meeting the spec's (n, k, m, min degree), each
/// once, edges chosen in increasing lexicographic order. Single-threaded.
void for_each_candidate(const SearchSpec& spec, const std::function<void(const EdgeMasks&)>& emit);

std::vector<Hypergraph> enumerate_hypergraphs(const SearchSpec& spec);

/// Enumerate, keep Berge-K_l-saturated candidates, deduplicate. The
/// representative list does not depend on the worker count.
SearchReport find_saturated(const SearchSpec& spec);

struct SaturationResult {
  std::optional<int> sat;             // least m in range with a saturated hypergraph
  std::vector<SearchReport> reports;  // one per m tried, in order
};

/// Runs find_saturated for m = m_lo, m_lo+1, ... and stops at the first hit.
/// spec.n_edges is ignored. The caller vouches for spec.n_min_degree.
SaturationResult saturation_number(const SearchSpec& spec, int m_lo, int m_hi);

/// `sat_n<k>u_<n>v_<m>e_l<l>.txt`
std::string result_file_name(const SearchSpec& spec);

/// key=value lines: candidates, free, saturated, classes, seconds.
std::string summary_text(const SearchReport& report);

/// Writes the sorted representative lines and the `.summary` sidecar into
/// `dir`; returns the path of the representative file.
std::filesystem::path write_report(const std::filesystem::path& dir, const SearchSpec& spec,
                                   const SearchReport& report);

}  // namespace bergesat
