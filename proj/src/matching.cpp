#include "bergesat/matching.hpp"

#include <bit>
#include <limits>

namespace bergesat {

BipartiteAux build_pair_edge_aux(const Hypergraph& h,
                                 std::span<const std::pair<Vertex, Vertex>> pairs) {
  BipartiteAux aux;
  aux.pairs.assign(pairs.begin(), pairs.end());
  aux.edges.resize(static_cast<std::size_t>(h.edge_count()));
  for (int i = 0; i < h.edge_count(); ++i) aux.edges[i] = i;
  aux.graph.left_size = static_cast<int>(pairs.size());
  aux.graph.right_size = h.edge_count();
  aux.graph.adjacency.resize(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [u, v] = pairs[p];
    if (u == v) throw Error(ErrorKind::EqualVertices, "pair needs two distinct vertices");
    if (u < 0 || v < 0 || u >= h.vertex_count() || v >= h.vertex_count()) {
      throw Error(ErrorKind::VertexOutOfRange, "pair vertex outside the hypergraph");
    }
    const VertexMask want = bit(u) | bit(v);
    for (int i = 0; i < h.edge_count(); ++i) {
      if ((h.edge_mask(i) & want) == want) aux.graph.adjacency[p].push_back(i);
    }
  }
  return aux;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        match_left_(static_cast<std::size_t>(g.left_size), -1),
        match_right_(static_cast<std::size_t>(g.right_size), -1),
        dist_(static_cast<std::size_t>(g.left_size), kInf) {}

  int run(std::optional<int> target) {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < g_.left_size; ++u) {
        if (match_left_[u] < 0 && dfs(u)) {
          ++size;
          if (target && size >= *target) return size;
        }
      }
    }
    return size;
  }

  Matching matching() const {
    Matching m;
    for (int u = 0; u < g_.left_size; ++u) {
      if (match_left_[u] >= 0) m.pairs.emplace_back(u, match_left_[u]);
    }
    return m;
  }

 private:
  bool bfs() {
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g_.left_size));
    for (int u = 0; u < g_.left_size; ++u) {
      dist_[u] = match_left_[u] < 0 ? 0 : kInf;
      if (dist_[u] == 0) queue.push_back(u);
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int r : g_.adjacency[u]) {
        const int w = match_right_[r];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int r : g_.adjacency[u]) {
      const int w = match_right_[r];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = r;
        match_right_[r] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

// Fixed-size variant over bitmask rows.
class MaskHopcroftKarp {
 public:
  explicit MaskHopcroftKarp(std::span<const std::uint64_t> adj) : adj_(adj) {
    left_size_ = static_cast<int>(adj.size());
    match_left_.fill(-1);
    match_right_.fill(-1);
  }

  int run(std::optional<int> target) {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < left_size_; ++u) {
        if (match_left_[u] < 0 && dfs(u)) {
          ++size;
          if (target && size >= *target) return size;
        }
      }
    }
    return size;
  }

 private:
  bool bfs() {
    std::array<int, 64> queue{};
    int tail = 0;
    for (int u = 0; u < left_size_; ++u) {
      dist_[u] = match_left_[u] < 0 ? 0 : kInf;
      if (dist_[u] == 0) queue[tail++] = u;
    }
    bool found = false;
    for (int head = 0; head < tail; ++head) {
      const int u = queue[head];
      for_each_bit(adj_[u], [&](int r) {
        const int w = match_right_[r];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue[tail++] = w;
        }
      });
    }
    return found;
  }

  bool dfs(int u) {
    std::uint64_t rest = adj_[u];
    while (rest != 0) {
      const int r = std::countr_zero(rest);
      rest &= rest - 1;
      const int w = match_right_[r];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = r;
        match_right_[r] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::span<const std::uint64_t> adj_;
  int left_size_ = 0;
  std::array<int, 64> match_left_{};
  std::array<int, 64> match_right_{};
  std::array<int, 64> dist_{};
};

}  // namespace

Matching max_matching(const BipartiteGraph& g, std::optional<int> target) {
  HopcroftKarp hk(g);
  hk.run(target);
  return hk.matching();
}

Matching max_matching(const BipartiteAux& aux, std::optional<int> target) {
  return max_matching(aux.graph, target);
}

int matching_size(std::span<const std::uint64_t> left_adjacency, std::optional<int> target) {
  if (left_adjacency.size() > 64) {
    throw Error(ErrorKind::TooLarge, "bitmask matcher takes at most 64 left nodes");
  }
  MaskHopcroftKarp hk(left_adjacency);
  return hk.run(target);
}

}  // namespace bergesat
