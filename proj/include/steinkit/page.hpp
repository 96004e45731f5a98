// The page surface of the torus-knot open book, as an oriented fatgraph:
// one vertex per strip (p slope +1 strips, then q slope -1 strips), one
// quarter-twisted band per junction. Cyclic orders follow the junction
// positions along each strip, which makes the boundary walk trace a
// (p,q) torus link: gcd(p,q) boundary components, chi = p + q - pq.
//
// Link components embed as closed strip/band walks (one band per corner);
// Hopf-band cores are the unit plaquette cycles; 1-handles scoop an
// annular hole out of the last strip and are repaired by plumbing.
#pragma once

#include "steinkit/ribbon_graph.hpp"
#include "steinkit/square_bridge.hpp"

namespace steinkit {

struct PageSurface {
  RibbonGraph graph;
  int p = 0, q = 0;
  std::vector<Coord> b_intercepts, d_intercepts;
  std::vector<std::vector<int>> band;  // band[i][j] = edge id
  // Extra structure from 1-handle scooping / plumbing / stabilization.
  int scoops = 0;
  std::vector<int> plumb_edges;  // connective plumbing bands, in order
  std::vector<int> stab_edges;   // genus-stabilization bands, in order

  int plus_vertex(int i) const { return i; }
  int minus_vertex(int j) const { return p + j; }
  int euler_char() const { return graph.euler_char(); }
  int boundary_components() const { return graph.boundary_components(); }
  int genus() const { return graph.genus(); }
  Pt junction(int i, int j) const {
    return {(d_intercepts[j] - b_intercepts[i]) / 2, (d_intercepts[j] + b_intercepts[i]) / 2};
  }
};

struct EmbeddedCurve {
  Walk walk;
  std::vector<Int> h1_class;  // in the fundamental-cycle basis of the page
  int component = -1;         // front component id, when the curve is a link walk
  std::string origin;         // "link", "hopf-core", "plumbing", "stabilization"
};

inline PageSurface build_page(const SquareBridgePosition& sb) {
  PageSurface page;
  page.p = sb.p();
  page.q = sb.q();
  if (std::gcd(page.p, page.q) != 1)
    throw Error("Internal", "page requires coprime line counts");
  page.b_intercepts = sb.b_intercepts;
  page.d_intercepts = sb.d_intercepts;
  for (int i = 0; i < page.p + page.q; ++i) page.graph.add_vertex();
  page.band.assign(page.p, std::vector<int>(page.q, -1));
  // Bands attach along each strip in ascending junction order: ascending d
  // along a plus strip, ascending b along a minus strip.
  for (int i = 0; i < page.p; ++i)
    for (int j = 0; j < page.q; ++j)
      page.band[i][j] = page.graph.append_edge(page.plus_vertex(i), page.minus_vertex(j));
  if (page.boundary_components() != std::gcd(page.p, page.q))
    throw Error("Internal", "boundary walk does not match gcd(p,q)");
  if (page.euler_char() != page.p + page.q - page.p * page.q)
    throw Error("Internal", "page Euler characteristic mismatch");
  return page;
}

// One closed embedded walk per link component; every corner traverses its
// band, oriented from the slope +1 strip when the incoming strand has
// slope +1. Non-separating is certified by a nonzero homology class.
inline std::vector<EmbeddedCurve> embed_link(const PageSurface& page,
                                             const SquareBridgePosition& sb) {
  CycleSpace cs = cycle_space(page.graph);
  std::vector<EmbeddedCurve> out;
  std::set<int> bands_used;
  for (size_t c = 0; c < sb.corners.size(); ++c) {
    const auto& uses = sb.corners[c];
    if (uses.empty()) throw Error("EmbeddingFailure", "component with no corners");
    EmbeddedCurve curve;
    curve.component = sb.component_ids[c];
    curve.origin = "link";
    int m = int(uses.size());
    for (int t = 0; t < m; ++t) {
      int e = page.band[uses[t].i][uses[t].j];
      if (!bands_used.insert(e).second)
        throw Error("EmbeddingFailure", "band traversed twice");
      // The walk leaves through the strip shared with the next corner.
      bool to_minus = uses[(t + 1) % m].j == uses[t].j;
      // Shared strip alternates: consecutive corners share exactly one line.
      if (to_minus == (uses[(t + 1) % m].i == uses[t].i))
        throw Error("EmbeddingFailure", "consecutive corners do not share one line");
      curve.walk.push_back({e, to_minus});
    }
    check_closed_walk(page.graph, curve.walk);
    curve.h1_class = walk_class(cs, curve.walk);
    bool nonzero = false;
    for (const Int& x : curve.h1_class) nonzero |= (x != 0);
    if (!nonzero) throw Error("EmbeddingFailure", "link component separates the page");
    out.push_back(std::move(curve));
  }
  return out;
}

// Unit plaquette cycles: the Hopf-band cores generating the torus-knot
// monodromy. Count = (p-1)(q-1) = 1 - chi(page).
inline std::vector<EmbeddedCurve> hopf_cores(const PageSurface& page) {
  CycleSpace cs = cycle_space(page.graph);
  std::vector<EmbeddedCurve> out;
  for (int i = 0; i + 1 < page.p; ++i)
    for (int j = 0; j + 1 < page.q; ++j) {
      EmbeddedCurve c;
      c.origin = "hopf-core";
      c.walk = {{page.band[i][j], true},
                {page.band[i + 1][j], false},
                {page.band[i + 1][j + 1], true},
                {page.band[i][j + 1], false}};
      check_closed_walk(page.graph, c.walk);
      c.h1_class = walk_class(cs, c.walk);
      out.push_back(std::move(c));
    }
  if (int(out.size()) != 1 - page.euler_char())
    throw Error("Internal", "Hopf core count disagrees with 1 - chi");
  return out;
}

namespace detail {

// First corner (vertex, position) lying on the given boundary orbit.
inline std::pair<int, int> corner_on_orbit(const RibbonGraph& g, const std::vector<int>& orbit,
                                           int target) {
  for (int v = 0; v < g.vertices(); ++v)
    for (int i = 0; i < int(g.order(v).size()); ++i)
      if (g.corner_orbit(orbit, v, i) == target) return {v, i};
  throw Error("Internal", "no corner on requested boundary component");
}

}  // namespace detail

// Adds a plumbing band whose feet land on the prescribed boundary orbits
// (distinct orbits merge two components, equal orbits split one). Returns
// the new edge id.
inline int plumb_band(RibbonGraph& g, int orbit_a, int orbit_b) {
  auto orbit = g.boundary_orbits();
  auto [va, ia] = detail::corner_on_orbit(g, orbit, orbit_a);
  // For a same-orbit plumbing pick a second, different corner on the orbit.
  int vb = -1, ib = -1;
  for (int v = 0; v < g.vertices() && vb < 0; ++v)
    for (int i = 0; i < int(g.order(v).size()); ++i)
      if (g.corner_orbit(orbit, v, i) == orbit_b && !(v == va && i == ia)) {
        vb = v;
        ib = i;
        break;
      }
  if (vb < 0) throw Error("Internal", "no second corner for plumbing");
  int before = g.boundary_components();
  int e = g.add_edge(va, ia, vb, ib);
  int after = g.boundary_components();
  if (orbit_a == orbit_b ? (after != before + 1) : (after != before - 1))
    throw Error("Internal", "plumbing changed boundary unexpectedly");
  return e;
}

// Scoops one disk per 1-handle out of the last slope +1 strip (an annular
// hole at its far end), then plumbs positive Hopf bands to reconnect the
// boundary; each plumbing adds one positive monodromy letter.
inline PageSurface one_handle_adjust(PageSurface page, int dotted_count) {
  for (int t = 0; t < dotted_count; ++t) {
    int chi0 = page.euler_char();
    int b0 = page.boundary_components();
    int strip = page.plus_vertex(page.p - 1);
    int tip = page.graph.add_vertex();
    page.graph.append_edge(strip, tip);
    page.graph.append_edge(strip, tip);
    ++page.scoops;
    if (page.euler_char() != chi0 - 1 || page.boundary_components() != b0 + 1)
      throw Error("Internal", "scoop bookkeeping failed");
  }
  // Reconnect: merge boundary components pairwise until connected.
  while (page.boundary_components() > 1) {
    auto orbit = page.graph.boundary_orbits();
    int o0 = orbit[0];
    int other = -1;
    for (int h = 0; h < 2 * page.graph.edges() && other < 0; ++h)
      if (orbit[h] != o0) other = orbit[h];
    int e = plumb_band(page.graph, o0, other);
    page.plumb_edges.push_back(e);
  }
  return page;
}

}  // namespace steinkit
