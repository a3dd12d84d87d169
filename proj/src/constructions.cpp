#include "bergesat/constructions.hpp"

#include "bergesat/berge.hpp"
#include "bergesat/canon.hpp"

namespace bergesat {

namespace {

std::vector<std::vector<Vertex>> edges_of(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(static_cast<std::size_t>(h.edge_count()));
  for (int i = 0; i < h.edge_count(); ++i) out.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return out;
}

}  // namespace

Hypergraph tight_cycle(int r, int len) {
  if (r < 2 || len <= r) {
    throw Error(ErrorKind::BadLength, "tight cycle needs length > uniformity (got r=" +
                                          std::to_string(r) + ", len=" + std::to_string(len) + ")");
  }
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < len; ++i) {
    std::vector<Vertex> e;
    for (int j = 0; j < r; ++j) e.push_back((i + j) % len);
    edges.push_back(std::move(e));
  }
  return Hypergraph(len, r, std::move(edges));
}

Hypergraph attach_T(const Hypergraph& h, Vertex u, Vertex v, int copies,
                    std::vector<TGadget>* gadgets) {
  if (h.uniformity() != 3) throw Error(ErrorKind::BadArity, "T gadgets are 3-uniform");
  if (u < 0 || v < 0 || u >= h.vertex_count() || v >= h.vertex_count()) {
    throw Error(ErrorKind::VertexOutOfRange, "attachment vertex outside the host");
  }
  if (u == v) throw Error(ErrorKind::EqualVertices, "attachment pair needs two vertices");
  if (copies < 1) throw Error(ErrorKind::InvalidSpec, "need at least one gadget copy");
  const int n = h.vertex_count() + 2 * copies;
  if (n > kMaxVertices) throw Error(ErrorKind::VertexOutOfRange, "too many vertices after attachment");
  auto edges = edges_of(h);
  for (int c = 0; c < copies; ++c) {
    const Vertex a1 = h.vertex_count() + 2 * c;
    const Vertex a2 = a1 + 1;
    edges.push_back({a1, a2, u});
    edges.push_back({a1, a2, v});
    if (gadgets) gadgets->push_back({u, v, a1, a2});
  }
  return Hypergraph(n, 3, std::move(edges));
}

bool t_addable(const Hypergraph& h, Vertex u, Vertex v) {
  return is_saturated(attach_T(h, u, v, 1), 4);
}

std::vector<std::pair<Vertex, Vertex>> t_addable_pairs(const Hypergraph& h) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < h.vertex_count(); ++v) {
      if (t_addable(h, u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Hypergraph construction_odd(int n) {
  if (n < 5 || n % 2 == 0) {
    throw Error(ErrorKind::BadParity, "odd construction needs odd n >= 5, got " + std::to_string(n));
  }
  const Hypergraph base = tight_cycle(3, 5);
  return n == 5 ? base : attach_T(base, 0, 1, (n - 5) / 2);
}

Hypergraph construction_even_base() {
  return Hypergraph(6, 3, {{0, 1, 2}, {0, 2, 3}, {0, 2, 4}, {0, 1, 3}, {0, 3, 5}, {1, 4, 5}});
}

Hypergraph construction_even(int n) {
  if (n < 8 || n % 2 != 0) {
    throw Error(ErrorKind::BadParity, "even construction needs even n >= 8, got " + std::to_string(n));
  }
  return attach_T(construction_even_base(), 0, 1, (n - 6) / 2);
}

std::vector<Hypergraph> extremal_family(int n, std::span<const Hypergraph> hosts) {
  std::vector<Hypergraph> members;
  for (const auto& host : hosts) {
    const int extra = n - host.vertex_count();
    if (host.uniformity() != 3 || host.edge_count() != host.vertex_count()) continue;
    if (extra < 0 || extra % 2 != 0) continue;
    if (extra == 0) {
      if (is_saturated(host, 4)) members.push_back(host);
      continue;
    }
    for (const auto& [u, v] : t_addable_pairs(host)) {
      Hypergraph grown = attach_T(host, u, v, extra / 2);
      if (is_saturated(grown, 4)) members.push_back(std::move(grown));
    }
  }
  return dedup(members);
}

}  // namespace bergesat
