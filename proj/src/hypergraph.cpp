#include "bergesat/hypergraph.hpp"

#include <algorithm>
#include <charconv>

namespace bergesat {

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for_each_bit(mask, [&](Vertex v) { out.push_back(v); });
  return out;
}

namespace {

void check_shape(int n, int k) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex count " + std::to_string(n) + " outside 1..64");
  }
  if (k < 2 || k > n) {
    throw Error(ErrorKind::BadArity,
                "uniformity " + std::to_string(k) + " outside 2.." + std::to_string(n));
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int k, std::vector<std::vector<Vertex>> edges) : n_(n), k_(k) {
  check_shape(n, k);
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != k) {
      throw Error(ErrorKind::BadArity, "edge of size " + std::to_string(e.size()) +
                                           " in a " + std::to_string(k) + "-uniform hypergraph");
    }
    for (Vertex v : e) check_vertex(v);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorKind::BadArity, "edge repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge listed twice");
  }
  flat_.reserve(edges.size() * static_cast<std::size_t>(k));
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
  finish();
}

Hypergraph Hypergraph::from_masks(int n, int k, std::span<const VertexMask> masks) {
  check_shape(n, k);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(masks.size());
  for (VertexMask m : masks) edges.push_back(mask_to_vertices(m));
  return Hypergraph(n, k, std::move(edges));
}

void Hypergraph::finish() {
  const int m = static_cast<int>(flat_.size()) / k_;
  masks_.assign(static_cast<std::size_t>(m), 0);
  degrees_.assign(static_cast<std::size_t>(n_), 0);
  neighbors_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < m; ++i) {
    VertexMask mask = 0;
    for (Vertex v : edge(i)) mask |= bit(v);
    masks_[i] = mask;
    for (Vertex v : edge(i)) {
      ++degrees_[v];
      neighbors_[v] |= mask & ~bit(v);
    }
  }
  sorted_masks_ = masks_;
  std::sort(sorted_masks_.begin(), sorted_masks_.end());
}

void Hypergraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
  }
}

bool Hypergraph::has_edge(VertexMask mask) const {
  return std::binary_search(sorted_masks_.begin(), sorted_masks_.end(), mask);
}

int Hypergraph::degree(Vertex v) const {
  check_vertex(v);
  return degrees_[v];
}

int Hypergraph::pair_degree(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::EqualVertices, "pair needs two distinct vertices");
  const VertexMask pair = bit(u) | bit(v);
  int count = 0;
  for (VertexMask e : masks_) count += (e & pair) == pair;
  return count;
}

std::vector<Vertex> Hypergraph::pair_neighborhood(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::EqualVertices, "pair needs two distinct vertices");
  const VertexMask pair = bit(u) | bit(v);
  VertexMask out = 0;
  for (VertexMask e : masks_) {
    if ((e & pair) == pair) out |= e;
  }
  return mask_to_vertices(out & ~pair);
}

std::vector<Vertex> Hypergraph::neighborhood(Vertex v) const {
  return mask_to_vertices(neighborhood_mask(v));
}

VertexMask Hypergraph::neighborhood_mask(Vertex v) const {
  check_vertex(v);
  return neighbors_[v];
}

int Hypergraph::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }

Hypergraph Hypergraph::with_edge(std::vector<Vertex> extra) const {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(masks_.size() + 1);
  for (int i = 0; i < edge_count(); ++i) edges.emplace_back(edge(i).begin(), edge(i).end());
  edges.push_back(std::move(extra));
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(int index) const {
  if (index < 0 || index >= edge_count()) {
    throw Error(ErrorKind::VertexOutOfRange, "edge index " + std::to_string(index));
  }
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < edge_count(); ++i) {
    if (i != index) edges.emplace_back(edge(i).begin(), edge(i).end());
  }
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::VertexOutOfRange, "permutation length differs from vertex count");
  }
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(masks_.size());
  for (int i = 0; i < edge_count(); ++i) {
    std::vector<Vertex> e;
    e.reserve(static_cast<std::size_t>(k_));
    for (Vertex v : edge(i)) e.push_back(perm[v]);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n_, k_, std::move(edges));
}

std::string Hypergraph::to_line() const {
  std::string out = "n=" + std::to_string(n_) + " k=" + std::to_string(k_) +
                    " m=" + std::to_string(edge_count()) + " :";
  for (int i = 0; i < edge_count(); ++i) {
    out += i == 0 ? ' ' : ';';
    bool first = true;
    for (Vertex v : edge(i)) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view s) : s_(s) {}

  void expect(std::string_view token) {
    if (s_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "' at column " + std::to_string(pos_ + 1));
    }
    pos_ += token.size();
  }

  int number() {
    int value = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
      fail("expected a number at column " + std::to_string(pos_ + 1));
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool at_end() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  [[noreturn]] static void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Hypergraph Hypergraph::parse_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  LineReader r(line);
  r.expect("n=");
  const int n = r.number();
  r.expect(" k=");
  const int k = r.number();
  r.expect(" m=");
  const int m = r.number();
  r.expect(" :");
  std::vector<std::vector<Vertex>> edges;
  if (!r.at_end()) {
    r.expect(" ");
    for (;;) {
      std::vector<Vertex> e{r.number()};
      while (r.peek(',')) {
        r.expect(",");
        e.push_back(r.number());
      }
      edges.push_back(std::move(e));
      if (r.at_end()) break;
      r.expect(";");
    }
  }
  if (static_cast<int>(edges.size()) != m) {
    LineReader::fail("m=" + std::to_string(m) + " but " + std::to_string(edges.size()) +
                     " edges listed");
  }
  try {
    Hypergraph h(n, k, std::move(edges));
    if (h.to_line() != line) LineReader::fail("edge list is not in normalized order");
    return h;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    LineReader::fail(e.what());
  }
}

std::size_t IncidenceGraph::adjacency_count() const {
  std::size_t total = 0;
  for (const auto& e : edge_vertices) total += e.size();
  return total;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph g;
  g.uniformity = h.uniformity();
  g.vertex_edges.resize(static_cast<std::size_t>(h.vertex_count()));
  g.edge_vertices.resize(static_cast<std::size_t>(h.edge_count()));
  for (int i = 0; i < h.edge_count(); ++i) {
    for (Vertex v : h.edge(i)) {
      g.edge_vertices[i].push_back(v);
      g.vertex_edges[v].push_back(i);
    }
  }
  return g;
}

Hypergraph from_incidence(const IncidenceGraph& g) {
  return Hypergraph(g.vertex_count(), g.uniformity, g.edge_vertices);
}

}  // namespace bergesat
