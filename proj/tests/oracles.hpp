#pragma once

// Test-only reference computations. Nothing here calls into the matching,
// canonicalization or enumeration code it is used to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bergesat/hypergraph.hpp"
#include "bergesat/matching.hpp"

namespace oracle {

using bergesat::Hypergraph;
using bergesat::Vertex;

inline Hypergraph c5() { return Hypergraph(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}}); }

/// Ten-vertex Berge-K_4 on core {0,1,2,3}: each core pair gets a private edge.
inline Hypergraph private_k4() {
  return Hypergraph(10, 3, {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 7}, {1, 3, 8}, {2, 3, 9}});
}

inline std::vector<std::vector<Vertex>> subsets(int n, int r) {
  std::vector<std::vector<Vertex>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) s.push_back(v);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest matching by trying every subset of adjacencies (tiny graphs only).
inline int brute_matching(const bergesat::BipartiteGraph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (int l = 0; l < g.left_size; ++l) {
    for (int r : g.adjacency[l]) arcs.emplace_back(l, r);
  }
  int best = 0;
  std::vector<bool> left(static_cast<std::size_t>(g.left_size)), right(static_cast<std::size_t>(g.right_size));
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int size) {
    best = std::max(best, size);
    if (i == arcs.size()) return;
    const auto [l, r] = arcs[i];
    if (!left[l] && !right[r]) {
      left[l] = right[r] = true;
      go(i + 1, size + 1);
      left[l] = right[r] = false;
    }
    go(i + 1, size);
  };
  go(0, 0);
  return best;
}

inline std::vector<std::vector<Vertex>> edge_list(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out;
  for (int i = 0; i < h.edge_count(); ++i) out.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return out;
}

/// Isomorphism by trying all n! vertex bijections.
inline bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = edge_list(b);
  do {
    if (edge_list(a.relabeled(perm)) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of isomorphism classes by pairwise brute-force comparison.
inline int brute_class_count(const std::vector<Hypergraph>& hs) {
  std::vector<Hypergraph> reps;
  for (const auto& h : hs) {
    bool found = false;
    for (const auto& r : reps) {
      if (brute_isomorphic(h, r)) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(h);
  }
  return static_cast<int>(reps.size());
}

/// Every m-subset of all k-subsets of 0..n-1 with minimum degree >= delta,
/// as sorted exchange lines.
inline std::set<std::string> brute_enumerate(int n, int k, int m, int delta) {
  const auto all = subsets(n, k);
  std::set<std::string> out;
  const int total = static_cast<int>(all.size());
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::function<void(int, int)> go = [&](int start, int depth) {
    if (depth == m) {
      std::vector<std::vector<Vertex>> edges;
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (int i : pick) {
        edges.push_back(all[i]);
        for (Vertex v : all[i]) ++deg[v];
      }
      if (*std::min_element(deg.begin(), deg.end()) >= delta) {
        out.insert(Hypergraph(n, k, edges).to_line());
      }
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      go(i + 1, depth + 1);
    }
  };
  go(0, 0);
  return out;
}

inline Hypergraph random_hypergraph(std::mt19937& rng, int n, int k, int m) {
  auto all = subsets(n, k);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<int>(m, static_cast<int>(all.size()))));
  return Hypergraph(n, k, all);
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
