#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// The T gadget: fresh vertices a1 < a2 with edges {a1,a2,u} and {a1,a2,v}.
struct TGadget {
  Vertex u = 0;
  Vertex v = 0;
  Vertex a1 = 0;
  Vertex a2 = 0;
};

/// r-uniform tight cycle on 0..len-1; edges are the len cyclic windows.
/// Throws BadLength unless len > r (at len == r all windows coincide).
Hypergraph tight_cycle(int r, int len);

/// Appends `copies` gadgets on (u, v); new vertices are numbered after the
/// host's, gadget by gadget. Throws EqualVertices, VertexOutOfRange, BadArity
/// (host not 3-uniform) or InvalidSpec (copies < 1).
Hypergraph attach_T(const Hypergraph& h, Vertex u, Vertex v, int copies,
                    std::vector<TGadget>* gadgets = nullptr);

/// Whether one gadget on (u, v) keeps the host Berge-K_4-saturated.
bool t_addable(const Hypergraph& h, Vertex u, Vertex v);

/// All pairs u < v on which a gadget can be added.
std::vector<std::pair<Vertex, Vertex>> t_addable_pairs(const Hypergraph& h);

/// C_5^3 on 0..4 with (n-5)/2 gadgets on (0, 1). n odd, n >= 5.
Hypergraph construction_odd(int n);

/// Six-vertex base (x1..x4 = 0..3, a1' = 4, a2' = 5) with (n-6)/2 gadgets on
/// (0, 1). n even, n >= 8.
Hypergraph construction_even(int n);

/// The six-vertex base of construction_even.
Hypergraph construction_even_base();

/// Extensions of each host (with as many vertices as edges) to n vertices by
/// gadgets on each of its addable pairs, checked saturated and deduplicated.
std::vector<Hypergraph> extremal_family(int n, std::span<const Hypergraph> hosts);

}  // namespace bergesat
