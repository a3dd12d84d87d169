#include "bergesat/berge.hpp"

#include <algorithm>
#include <array>

#include "bergesat/matching.hpp"

namespace bergesat {

namespace {

constexpr int kMaxEll = 11;  // C(11,2) = 55 pairs still fit the bitmask matcher

void check_ell(int ell) {
  if (ell < 3 || ell > kMaxEll) {
    throw Error(ErrorKind::UnsupportedParameters,
                "clique size " + std::to_string(ell) + " outside 3..11");
  }
}

constexpr int choose2(int x) { return x * (x - 1) / 2; }

/// Per-call degree, shadow and incidence tables built from edge masks.
class Index {
 public:
  explicit Index(const EdgeMasks& h) : n(h.n), k(h.k), edges(h.edges) {
    m = static_cast<int>(edges.size());
    deg.fill(0);
    nbr.fill(0);
    inc.fill(0);
    small = m <= 64;
    for (int i = 0; i < m; ++i) {
      const VertexMask e = edges[i];
      for_each_bit(e, [&](Vertex v) {
        ++deg[v];
        nbr[v] |= e & ~bit(v);
        if (small) inc[v] |= std::uint64_t{1} << i;
      });
    }
  }

  VertexMask heavy(int min_deg) const {
    VertexMask out = 0;
    for (int v = 0; v < n; ++v) {
      if (deg[v] >= min_deg) out |= bit(v);
    }
    return out;
  }

  bool is_edge(VertexMask s) const {
    return std::find(edges.begin(), edges.end(), s) != edges.end();
  }

  /// True iff every listed pair can be given its own containing hyperedge.
  bool pairs_matchable(std::span<const std::pair<Vertex, Vertex>> pairs) const {
    const int need = static_cast<int>(pairs.size());
    if (need > m) return false;
    if (small) {
      std::array<std::uint64_t, 64> adj{};
      for (int i = 0; i < need; ++i) {
        adj[i] = inc[pairs[i].first] & inc[pairs[i].second];
        if (adj[i] == 0) return false;
      }
      return matching_size(std::span(adj.data(), static_cast<std::size_t>(need)), need) == need;
    }
    return max_matching(aux_graph(pairs), need).size() == need;
  }

  BipartiteGraph aux_graph(std::span<const std::pair<Vertex, Vertex>> pairs) const {
    BipartiteGraph g;
    g.left_size = static_cast<int>(pairs.size());
    g.right_size = m;
    g.adjacency.resize(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const VertexMask want = bit(pairs[p].first) | bit(pairs[p].second);
      for (int i = 0; i < m; ++i) {
        if ((edges[i] & want) == want) g.adjacency[p].push_back(i);
      }
    }
    return g;
  }

  int n;
  int k;
  int m = 0;
  std::span<const VertexMask> edges;
  bool small = true;
  std::array<int, 64> deg{};
  std::array<VertexMask, 64> nbr{};
  std::array<std::uint64_t, 64> inc{};
};

/// Calls f(clique_mask) for each `need`-clique of the shadow graph inside
/// `candidates`, lowest vertices first; stops when f returns true.
template <class F>
bool for_each_clique(const Index& ix, VertexMask candidates, VertexMask chosen, int need, F&& f) {
  if (need == 0) return f(chosen);
  while (std::popcount(candidates) >= need) {
    const Vertex v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (for_each_clique(ix, candidates & ix.nbr[v], chosen | bit(v), need - 1, f)) return true;
  }
  return false;
}

int core_pairs(VertexMask core, std::pair<Vertex, Vertex>* out, std::pair<Vertex, Vertex> skip) {
  int count = 0;
  for_each_bit(core, [&](Vertex a) {
    for_each_bit(core & ~((bit(a) << 1) - 1), [&](Vertex b) {
      if (std::pair{a, b} != skip) out[count++] = {a, b};
    });
  });
  return count;
}

std::optional<VertexMask> find_clique_core(const Index& ix, int ell) {
  if (ix.m < choose2(ell)) return std::nullopt;
  std::optional<VertexMask> found;
  std::array<std::pair<Vertex, Vertex>, 64> pairs{};
  for_each_clique(ix, ix.heavy(ell - 1), 0, ell, [&](VertexMask core) {
    const int count = core_pairs(core, pairs.data(), {-1, -1});
    if (ix.pairs_matchable(std::span(pairs.data(), static_cast<std::size_t>(count)))) {
      found = core;
      return true;
    }
    return false;
  });
  return found;
}

std::optional<FastBadRule> fast_rules(const Index& ix, Vertex u, Vertex v) {
  const VertexMask pair = bit(u) | bit(v);
  VertexMask witnesses = 0;
  int pair_degree = 0;
  for (VertexMask e : ix.edges) {
    if ((e & pair) == pair) {
      ++pair_degree;
      witnesses |= e & ~pair;
    }
  }
  if (pair_degree >= 3) return FastBadRule::PairDegreeAtLeastThree;
  bool low_witness = false;
  for_each_bit(witnesses, [&](Vertex w) { low_witness |= ix.deg[w] <= 2; });
  if (low_witness) return FastBadRule::LowDegreePairNeighbor;
  const VertexMask common = ix.nbr[u] & ix.nbr[v] & ix.heavy(3) & ~pair;
  if (std::popcount(common) < 2) return FastBadRule::FewHeavyCommonNeighbors;
  if (pair_degree > 0 && ix.deg[u] <= 2 && ix.deg[v] <= 2) return FastBadRule::LowDegreeEdge;
  for (VertexMask e : ix.edges) {
    if ((e & pair) == 0) continue;
    bool all_low = true;
    for_each_bit(e, [&](Vertex w) { all_low &= ix.deg[w] <= 2; });
    if (all_low) return FastBadRule::LowDegreeEdge;
  }
  return std::nullopt;
}

struct CoreCandidate {
  VertexMask others = 0;
  int key = 0;
};

/// Core mask witnessing that (u, v) is good, if any.
std::optional<VertexMask> good_core(const Index& ix, Vertex u, Vertex v, int ell,
                                    const BergeOptions& options) {
  const VertexMask pair = bit(u) | bit(v);
  const VertexMask common = ix.nbr[u] & ix.nbr[v] & ix.heavy(ell - 1) & ~pair;
  const int threshold = options.paper_goodpair_threshold ? ell - 1 : ell - 2;
  if (std::popcount(common) < threshold) return std::nullopt;
  if (ix.m < choose2(ell) - 1) return std::nullopt;
  if (options.fast_filters && ix.k == 3 && ell == 4 && fast_rules(ix, u, v)) return std::nullopt;

  thread_local std::vector<CoreCandidate> candidates;
  candidates.clear();
  for_each_clique(ix, common, 0, ell - 2, [&](VertexMask others) {
    int key = 64;
    for_each_bit(others, [&](Vertex x) { key = std::min(key, ix.deg[x]); });
    candidates.push_back({others, key});
    return false;
  });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CoreCandidate& a, const CoreCandidate& b) { return a.key > b.key; });

  std::array<std::pair<Vertex, Vertex>, 64> pairs{};
  const std::pair<Vertex, Vertex> skip{std::min(u, v), std::max(u, v)};
  for (const auto& c : candidates) {
    const VertexMask core = c.others | pair;
    const int count = core_pairs(core, pairs.data(), skip);
    if (ix.pairs_matchable(std::span(pairs.data(), static_cast<std::size_t>(count)))) return core;
  }
  return std::nullopt;
}

BergeWitness witness_for(const Index& ix, VertexMask core,
                         std::pair<Vertex, Vertex> skip = {-1, -1}) {
  std::array<std::pair<Vertex, Vertex>, 64> pairs{};
  const int count = core_pairs(core, pairs.data(), skip);
  const std::span<const std::pair<Vertex, Vertex>> listed(pairs.data(),
                                                          static_cast<std::size_t>(count));
  const Matching matching = max_matching(ix.aux_graph(listed), count);
  BergeWitness w;
  w.core = mask_to_vertices(core);
  for (const auto& [left, right] : matching.pairs) {
    w.assignment.push_back({listed[left].first, listed[left].second, right});
  }
  return w;
}

void check_pair(const Hypergraph& h, Vertex u, Vertex v) {
  const int n = h.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(ErrorKind::VertexOutOfRange, "pair vertex outside the hypergraph");
  }
  if (u == v) throw Error(ErrorKind::EqualVertices, "pair needs two distinct vertices");
}

/// Searches for a k-set whose pairs are all bad and which is not an edge.
bool bad_nonedge(const Index& ix, const std::array<VertexMask, 64>& bad, VertexMask candidates,
                 VertexMask chosen, int need) {
  if (need == 0) return !ix.is_edge(chosen);
  while (std::popcount(candidates) >= need) {
    const Vertex v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (bad_nonedge(ix, bad, candidates & bad[v], chosen | bit(v), need - 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<BergeWitness> find_berge_clique(const Hypergraph& h, int ell) {
  check_ell(ell);
  const Index ix(h.view());
  const auto core = find_clique_core(ix, ell);
  if (!core) return std::nullopt;
  return witness_for(ix, *core);
}

bool is_berge_free(const Hypergraph& h, int ell) { return is_berge_free(h.view(), ell); }

bool is_berge_free(const EdgeMasks& h, int ell) {
  check_ell(ell);
  return !find_clique_core(Index(h), ell).has_value();
}

PairClassification classify_pair(const Hypergraph& h, Vertex u, Vertex v, int ell,
                                 const BergeOptions& options) {
  check_ell(ell);
  check_pair(h, u, v);
  const Index ix(h.view());
  PairClassification out{u, v, PairVerdict::Bad, std::nullopt};
  if (const auto core = good_core(ix, u, v, ell, options)) {
    out.verdict = PairVerdict::Good;
    out.witness = witness_for(ix, *core, {std::min(u, v), std::max(u, v)});
  }
  return out;
}

std::optional<FastBadRule> fast_bad_filters(const Hypergraph& h, Vertex u, Vertex v, int ell) {
  if (h.uniformity() != 3 || ell != 4) {
    throw Error(ErrorKind::UnsupportedParameters, "fast filters exist only for k=3, l=4");
  }
  check_pair(h, u, v);
  return fast_rules(Index(h.view()), u, v);
}

bool is_saturated(const Hypergraph& h, int ell, const BergeOptions& options) {
  return is_saturated(h.view(), ell, options);
}

bool is_saturated(const EdgeMasks& h, int ell, const BergeOptions& options) {
  return saturation_verdict(h, ell, options) == SaturationVerdict::Saturated;
}

SaturationVerdict saturation_verdict(const EdgeMasks& h, int ell, const BergeOptions& options) {
  check_ell(ell);
  const Index ix(h);
  if (find_clique_core(ix, ell)) return SaturationVerdict::NotFree;
  std::array<VertexMask, 64> bad{};
  for (Vertex u = 0; u < ix.n; ++u) {
    for (Vertex v = u + 1; v < ix.n; ++v) {
      if (!good_core(ix, u, v, ell, options)) {
        bad[u] |= bit(v);
        bad[v] |= bit(u);
      }
    }
  }
  const VertexMask all = ix.n == 64 ? ~VertexMask{0} : (bit(ix.n) - 1);
  return bad_nonedge(ix, bad, all, 0, ix.k) ? SaturationVerdict::FreeNotSaturated
                                             : SaturationVerdict::Saturated;
}

bool verify_witness(const Hypergraph& h, const BergeWitness& w, int ell,
                    std::optional<std::pair<Vertex, Vertex>> added_pair) {
  if (static_cast<int>(w.core.size()) != ell) return false;
  VertexMask core = 0;
  for (Vertex v : w.core) {
    if (v < 0 || v >= h.vertex_count() || (core & bit(v))) return false;
    core |= bit(v);
  }
  VertexMask skip = 0;
  if (added_pair) {
    skip = bit(added_pair->first) | bit(added_pair->second);
    if (added_pair->first == added_pair->second || (skip & core) != skip) return false;
  }
  std::vector<VertexMask> covered;
  std::vector<int> used;
  for (const auto& a : w.assignment) {
    const VertexMask p = bit(a.a) | bit(a.b);
    if (a.a == a.b || (p & core) != p || p == skip) return false;
    if (a.edge < 0 || a.edge >= h.edge_count()) return false;
    if ((h.edge_mask(a.edge) & p) != p) return false;
    if (std::find(covered.begin(), covered.end(), p) != covered.end()) return false;
    if (std::find(used.begin(), used.end(), a.edge) != used.end()) return false;
    covered.push_back(p);
    used.push_back(a.edge);
  }
  const int expected = choose2(ell) - (added_pair ? 1 : 0);
  return static_cast<int>(covered.size()) == expected;
}

}  // namespace bergesat
