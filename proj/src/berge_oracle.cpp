// Definition-level reference checks. Deliberately shares nothing with the
// matching-based path in berge.cpp.

#include <functional>

#include "bergesat/berge.hpp"

namespace bergesat {

namespace {

/// Visits every size-r subset of 0..n-1 in lexicographic order.
bool for_each_subset(int n, int r, const std::function<bool(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> s(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s[i] = i;
  if (r > n) return false;
  for (;;) {
    if (f(s)) return true;
    int i = r - 1;
    while (i >= 0 && s[i] == n - r + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
  }
}

bool assign(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
            std::size_t next, std::vector<bool>& used, std::vector<PairAssignment>& out) {
  if (next == pairs.size()) return true;
  const auto [a, b] = pairs[next];
  for (int e = 0; e < h.edge_count(); ++e) {
    if (used[e]) continue;
    bool has_a = false;
    bool has_b = false;
    for (Vertex x : h.edge(e)) {
      has_a |= x == a;
      has_b |= x == b;
    }
    if (!has_a || !has_b) continue;
    used[e] = true;
    out.push_back({a, b, e});
    if (assign(h, pairs, next + 1, used, out)) return true;
    out.pop_back();
    used[e] = false;
  }
  return false;
}

}  // namespace

std::optional<BergeWitness> brute_force_find_berge(const Hypergraph& h, int ell) {
  if (h.edge_count() < ell * (ell - 1) / 2) return std::nullopt;
  std::optional<BergeWitness> found;
  for_each_subset(h.vertex_count(), ell, [&](const std::vector<Vertex>& core) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < core.size(); ++i) {
      for (std::size_t j = i + 1; j < core.size(); ++j) pairs.emplace_back(core[i], core[j]);
    }
    std::vector<bool> used(static_cast<std::size_t>(h.edge_count()), false);
    std::vector<PairAssignment> assignment;
    if (!assign(h, pairs, 0, used, assignment)) return false;
    found = BergeWitness{core, std::move(assignment)};
    return true;
  });
  return found;
}

bool brute_force_is_saturated(const Hypergraph& h, int ell) {
  if (brute_force_find_berge(h, ell)) return false;
  const bool some_addition_stays_free =
      for_each_subset(h.vertex_count(), h.uniformity(), [&](const std::vector<Vertex>& s) {
        VertexMask mask = 0;
        for (Vertex v : s) mask |= bit(v);
        if (h.has_edge(mask)) return false;
        return !brute_force_find_berge(h.with_edge(s), ell).has_value();
      });
  return !some_addition_stays_free;
}

}  // namespace bergesat
