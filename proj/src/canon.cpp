#include "bergesat/canon.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace bergesat {

namespace {

using Colors = std::vector<int>;
using EdgeList = std::vector<std::vector<Vertex>>;

/// Replaces arbitrary comparable keys by dense ranks 0..c-1.
template <class Key>
int rank_keys(const std::vector<Key>& keys, Colors& out) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  out.assign(keys.size(), 0);
  int color = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++color;
    out[order[i]] = color;
  }
  return keys.empty() ? 0 : color + 1;
}

int count_colors(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

class Canonicalizer {
 public:
  Canonicalizer(const Hypergraph& h, const CanonOptions& options)
      : h_(h), budget_(options.node_budget), incident_(static_cast<std::size_t>(h.vertex_count())) {
    for (int e = 0; e < h.edge_count(); ++e) {
      for (Vertex v : h.edge(e)) incident_[v].push_back(e);
    }
  }

  std::vector<Vertex> run() {
    Colors start(static_cast<std::size_t>(h_.vertex_count()), 0);
    refine(start);
    std::vector<Vertex> path;
    search(start, path);
    return best_labels_;
  }

 private:
  // Colour refinement on the incidence structure: an edge is described by the
  // sorted colours of its vertices, a vertex by its colour plus the sorted
  // descriptions of its edges. Iterates until the partition is stable. The
  // old colour leads every key, so the ordered partition only gets finer.
  // Higher degree sorts first, which pushes edges towards small labels.
  void refine(Colors& colors) const {
    int cells = count_colors(colors);
    for (;;) {
      std::vector<std::vector<int>> edge_keys(static_cast<std::size_t>(h_.edge_count()));
      for (int e = 0; e < h_.edge_count(); ++e) {
        for (Vertex v : h_.edge(e)) edge_keys[e].push_back(colors[v]);
        std::sort(edge_keys[e].begin(), edge_keys[e].end());
      }
      std::vector<std::vector<int>> keys(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        std::vector<const std::vector<int>*> mine;
        for (int e : incident_[v]) mine.push_back(&edge_keys[e]);
        std::sort(mine.begin(), mine.end(), [](auto* a, auto* b) { return *a < *b; });
        keys[v] = {colors[v], -static_cast<int>(mine.size())};
        for (const auto* k : mine) keys[v].insert(keys[v].end(), k->begin(), k->end());
      }
      Colors next;
      const int next_cells = rank_keys(keys, next);
      colors = std::move(next);
      if (next_cells == cells) return;
      cells = next_cells;
    }
  }

  static Colors individualize(const Colors& colors, Vertex v) {
    std::vector<int> keys(colors.size());
    for (std::size_t w = 0; w < colors.size(); ++w) {
      keys[w] = 2 * colors[w] + (colors[w] == colors[v] && static_cast<Vertex>(w) != v ? 1 : 0);
    }
    Colors out;
    rank_keys(keys, out);
    return out;
  }

  EdgeList relabel(const Colors& labels) const {
    EdgeList out;
    out.reserve(static_cast<std::size_t>(h_.edge_count()));
    for (int e = 0; e < h_.edge_count(); ++e) {
      std::vector<Vertex> edge;
      for (Vertex v : h_.edge(e)) edge.push_back(labels[v]);
      std::sort(edge.begin(), edge.end());
      out.push_back(std::move(edge));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void leaf(const Colors& labels) {
    EdgeList edges = relabel(labels);
    if (!best_edges_ || edges < *best_edges_) {
      best_edges_ = std::move(edges);
      best_labels_ = labels;
    } else if (edges == *best_edges_) {
      // labels and best_labels_ give the same image, so
      // v -> best^{-1}(labels(v)) is an automorphism.
      std::vector<Vertex> inverse_best(labels.size());
      for (std::size_t v = 0; v < labels.size(); ++v) inverse_best[best_labels_[v]] = static_cast<Vertex>(v);
      std::vector<Vertex> gamma(labels.size());
      bool identity = true;
      for (std::size_t v = 0; v < labels.size(); ++v) {
        gamma[v] = inverse_best[labels[v]];
        identity &= gamma[v] == static_cast<Vertex>(v);
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  /// Orbit representatives under the known automorphisms fixing `path`.
  std::vector<Vertex> orbit_roots(const std::vector<Vertex>& path) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(h_.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < gamma.size(); ++v) {
        const Vertex a = find(static_cast<Vertex>(v));
        const Vertex b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = find(static_cast<Vertex>(v));
    return parent;
  }

  void search(const Colors& colors, std::vector<Vertex>& path) {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::TooLarge, "canonical labeling exceeded its node budget");
    }
    const int n = h_.vertex_count();
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      const auto roots = orbit_roots(path);
      const bool seen = std::any_of(explored.begin(), explored.end(),
                                    [&](Vertex w) { return roots[w] == roots[v]; });
      if (seen) continue;
      explored.push_back(v);
      Colors child = individualize(colors, v);
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  const Hypergraph& h_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<int>> incident_;
  std::optional<EdgeList> best_edges_;
  Colors best_labels_;
  std::vector<std::vector<Vertex>> generators_;
};

std::vector<int> sorted_degrees(const Hypergraph& h) {
  std::vector<int> d = h.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> sorted_pair_degrees(const Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<int> counts(static_cast<std::size_t>(n * n), 0);
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) {
      for (std::size_t j = i + 1; j < edge.size(); ++j) ++counts[edge[i] * n + edge[j]];
    }
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Hypergraph& h, const CanonOptions& options) {
  return Canonicalizer(h, options).run();
}

CanonicalForm canonical_form(const Hypergraph& h, const CanonOptions& options) {
  Hypergraph relabeled = h.relabeled(canonical_labeling(h, options));
  std::string line = relabeled.to_line();
  return {std::move(relabeled), std::move(line)};
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  if (sorted_pair_degrees(a) != sorted_pair_degrees(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Hypergraph> dedup(std::span<const Hypergraph> hypergraphs) {
  std::vector<CanonicalForm> forms;
  forms.reserve(hypergraphs.size());
  for (const auto& h : hypergraphs) forms.push_back(canonical_form(h));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Hypergraph> out;
  out.reserve(forms.size());
  for (auto& f : forms) out.push_back(std::move(f.hypergraph));
  return out;
}

}  // namespace bergesat
