// Oriented fatgraphs: vertices with counterclockwise cyclic orderings of
// half-edge attachments. The underlying surface invariants (Euler
// characteristic, boundary walk, genus), the cycle space with spanning-tree
// fundamental classes, and the algebraic intersection pairing of closed
// edge-walks are all computed combinatorially here.
//
// Half-edge ids: edge e owns 2e (its tail attachment) and 2e+1 (head).
// Boundary components are the orbits of h -> sigma_next(twin(h)).
#pragma once

#include <algorithm>
#include <vector>

#include "steinkit/exact.hpp"

namespace steinkit {

struct WalkStep {
  int edge;
  bool forward;  // tail -> head (even half to odd half)
  bool operator==(const WalkStep& o) const { return edge == o.edge && forward == o.forward; }
};
using Walk = std::vector<WalkStep>;

class RibbonGraph {
 public:
  int add_vertex() {
    order_.emplace_back();
    return int(order_.size()) - 1;
  }

  // Inserts an edge between v and w; pos_* is the index in the cyclic order
  // where the new attachment lands (entries at and after it shift by one).
  // Returns the edge id.
  int add_edge(int v, int pos_v, int w, int pos_w) {
    int e = edges();
    h_vertex_.push_back(v);
    h_vertex_.push_back(w);
    if (v == w && pos_w >= pos_v) ++pos_w;  // tail inserted first
    order_[v].insert(order_[v].begin() + pos_v, 2 * e);
    order_[w].insert(order_[w].begin() + pos_w, 2 * e + 1);
    return e;
  }

  int append_edge(int v, int w) { return add_edge(v, int(order_[v].size()), w, int(order_[w].size())); }

  int vertices() const { return int(order_.size()); }
  int edges() const { return int(h_vertex_.size()) / 2; }
  int euler_char() const { return vertices() - edges(); }

  static int twin(int h) { return h ^ 1; }
  int vertex_of(int h) const { return h_vertex_[h]; }
  const std::vector<int>& order(int v) const { return order_[v]; }

  int index_at_vertex(int h) const {
    const auto& ord = order_[h_vertex_[h]];
    for (int i = 0; i < int(ord.size()); ++i)
      if (ord[i] == h) return i;
    throw Error("Internal", "half-edge missing from its vertex order");
  }

  int sigma_next(int h) const {
    const auto& ord = order_[h_vertex_[h]];
    int i = index_at_vertex(h);
    return ord[(i + 1) % ord.size()];
  }

  // Boundary orbit id per half-edge; orbits of h -> sigma_next(twin(h)).
  std::vector<int> boundary_orbits() const {
    std::vector<int> orbit(2 * edges(), -1);
    int next_id = 0;
    for (int h0 = 0; h0 < 2 * edges(); ++h0) {
      if (orbit[h0] >= 0) continue;
      int id = next_id++;
      int h = h0;
      while (orbit[h] < 0) {
        orbit[h] = id;
        h = sigma_next(twin(h));
      }
    }
    return orbit;
  }

  int boundary_components() const {
    if (edges() == 0) return vertices();  // isolated disks
    auto orbit = boundary_orbits();
    int m = 0;
    for (int x : orbit) m = std::max(m, x + 1);
    // isolated vertices still bound one circle each
    for (int v = 0; v < vertices(); ++v)
      if (order_[v].empty()) ++m;
    return m;
  }

  bool connected() const {
    if (vertices() == 0) return true;
    std::vector<bool> seen(vertices(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h : order_[v]) {
        int w = h_vertex_[twin(h)];
        if (!seen[w]) { seen[w] = true; stack.push_back(w); }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  int genus() const {
    if (!connected()) throw Error("Internal", "genus of a disconnected fatgraph");
    int chi = euler_char(), b = boundary_components();
    int twog = 2 - b - chi;
    if (twog < 0 || twog % 2 != 0) throw Error("Internal", "inconsistent genus computation");
    return twog / 2;
  }

  // The corner (angular sector) before order(v)[i] belongs to the boundary
  // orbit of the half-edge order(v)[i].
  int corner_orbit(const std::vector<int>& orbit, int v, int i) const {
    return orbit[order_[v][i % order_[v].size()]];
  }

 private:
  std::vector<std::vector<int>> order_;
  std::vector<int> h_vertex_;
};

// ---- cycle space ----

struct CycleSpace {
  std::vector<int> parent_vertex;  // BFS tree, -1 at the root
  std::vector<int> parent_edge;
  std::vector<int> depth;
  std::vector<int> cotree;             // non-tree edges, ascending
  std::vector<int> cotree_index;       // edge -> index or -1
  int rank() const { return int(cotree.size()); }
};

inline CycleSpace cycle_space(const RibbonGraph& g) {
  int n = g.vertices();
  CycleSpace cs;
  cs.parent_vertex.assign(n, -2);
  cs.parent_edge.assign(n, -1);
  cs.depth.assign(n, 0);
  cs.cotree_index.assign(g.edges(), -1);
  std::vector<bool> tree_edge(g.edges(), false);
  std::vector<int> queue{0};
  if (n > 0) cs.parent_vertex[0] = -1;
  size_t qi = 0;
  while (qi < queue.size()) {
    int v = queue[qi++];
    for (int h : g.order(v)) {
      int e = h / 2;
      int w = g.vertex_of(RibbonGraph::twin(h));
      if (cs.parent_vertex[w] == -2) {
        cs.parent_vertex[w] = v;
        cs.parent_edge[w] = e;
        cs.depth[w] = cs.depth[v] + 1;
        tree_edge[e] = true;
        queue.push_back(w);
      }
    }
  }
  for (int e = 0; e < g.edges(); ++e)
    if (!tree_edge[e]) {
      cs.cotree_index[e] = int(cs.cotree.size());
      cs.cotree.push_back(e);
    }
  return cs;
}

inline int walk_tail(const RibbonGraph& g, const WalkStep& s) {
  return g.vertex_of(s.forward ? 2 * s.edge : 2 * s.edge + 1);
}
inline int walk_head(const RibbonGraph& g, const WalkStep& s) {
  return g.vertex_of(s.forward ? 2 * s.edge + 1 : 2 * s.edge);
}

inline void check_closed_walk(const RibbonGraph& g, const Walk& w) {
  if (w.empty()) return;
  for (size_t i = 0; i < w.size(); ++i)
    if (walk_head(g, w[i]) != walk_tail(g, w[(i + 1) % w.size()]))
      throw Error("Internal", "walk is not closed");
}

// Homology class in the fundamental-cycle basis: signed counts on cotree
// edges (tree traversals are homologically irrelevant).
inline std::vector<Int> walk_class(const CycleSpace& cs, const Walk& w) {
  std::vector<Int> c(cs.rank());
  for (const auto& s : w) {
    int idx = cs.cotree_index[s.edge];
    if (idx >= 0) c[idx] += s.forward ? 1 : -1;
  }
  return c;
}

// The closed walk: cotree edge forward, then the tree path from its head
// back to its tail.
inline Walk fundamental_cycle(const RibbonGraph& g, const CycleSpace& cs, int e) {
  Walk w{{e, true}};
  int from = g.vertex_of(2 * e + 1), to = g.vertex_of(2 * e);
  // Tree path from -> to via parents.
  std::vector<WalkStep> up, down;
  int a = from, b = to;
  while (cs.depth[a] > cs.depth[b]) {
    int pe = cs.parent_edge[a];
    up.push_back({pe, g.vertex_of(2 * pe) == a});  // step a -> parent(a)
    a = cs.parent_vertex[a];
  }
  while (cs.depth[b] > cs.depth[a]) {
    int pe = cs.parent_edge[b];
    down.push_back({pe, g.vertex_of(2 * pe) != b});  // step parent(b) -> b
    b = cs.parent_vertex[b];
  }
  while (a != b) {
    int pea = cs.parent_edge[a];
    up.push_back({pea, g.vertex_of(2 * pea) == a});
    a = cs.parent_vertex[a];
    int peb = cs.parent_edge[b];
    down.push_back({peb, g.vertex_of(2 * peb) != b});
    b = cs.parent_vertex[b];
  }
  for (const auto& s : up) w.push_back(s);
  for (auto it = down.rbegin(); it != down.rend(); ++it) w.push_back(*it);
  check_closed_walk(g, w);
  return w;
}

// ---- algebraic intersection pairing of closed walks ----
//
// Strands get parallel "lanes" inside each edge (no crossings within a
// band), and all crossings are counted inside vertex disks: two chords
// cross iff their endpoints interleave in the cyclic slot order, with the
// sign read off the counterclockwise orientation.

namespace detail {

struct Pass {
  int vertex;
  long slot_in, slot_out;
  int walk;  // 0 = A, 1 = B
};

inline Int chord_sign(long p1, long q1, long p2, long q2, long total) {
  auto arc = [&](long from, long x) { return ((x - from) % total + total) % total; };
  long a = arc(p1, q1);
  bool p2_in = arc(p1, p2) > 0 && arc(p1, p2) < a;
  bool q2_in = arc(p1, q2) > 0 && arc(p1, q2) < a;
  if (p2_in == q2_in) return 0;
  // Crossing: +1 when (p1, p2, q1, q2) is the ccw order.
  return p2_in ? 1 : -1;
}

}  // namespace detail

inline Int walk_intersection(const RibbonGraph& g, const Walk& wa, const Walk& wb) {
  check_closed_walk(g, wa);
  check_closed_walk(g, wb);
  // Lane assignment per edge, in (walk, step) listing order. Lane numbers
  // are read counterclockwise at the even end, clockwise at the odd end.
  std::vector<int> lane_count(g.edges(), 0);
  auto assign = [&](const Walk& w) {
    std::vector<int> lanes(w.size());
    for (size_t i = 0; i < w.size(); ++i) lanes[i] = lane_count[w[i].edge]++;
    return lanes;
  };
  std::vector<int> lane_a = assign(wa), lane_b = assign(wb);

  // Slot ordering around a vertex: half-edges in cyclic order, lanes within
  // each half-edge (ccw within the attachment arc).
  std::vector<long> vertex_total(g.vertices(), 0);
  std::vector<long> halfedge_base(2 * g.edges(), 0);
  for (int v = 0; v < g.vertices(); ++v) {
    long acc = 0;
    for (int h : g.order(v)) {
      halfedge_base[h] = acc;
      acc += std::max(lane_count[h / 2], 1);
    }
    vertex_total[v] = acc;
  }
  auto slot = [&](int h, int lane) {
    int e = h / 2;
    bool even_end = (h % 2 == 0);
    int seen = even_end ? lane : lane_count[e] - 1 - lane;
    return halfedge_base[h] + seen;
  };

  auto passes_of = [&](const Walk& w, const std::vector<int>& lanes, int tag) {
    std::vector<detail::Pass> ps;
    size_t m = w.size();
    for (size_t i = 0; i < m; ++i) {
      const WalkStep& in = w[i];
      const WalkStep& out = w[(i + 1) % m];
      int h_in = in.forward ? 2 * in.edge + 1 : 2 * in.edge;      // arrival attachment
      int h_out = out.forward ? 2 * out.edge : 2 * out.edge + 1;  // departure attachment
      ps.push_back({g.vertex_of(h_in), slot(h_in, lanes[i]), slot(h_out, lanes[(i + 1) % m]),
                    tag});
    }
    return ps;
  };
  auto pa = passes_of(wa, lane_a, 0);
  auto pb = passes_of(wb, lane_b, 1);

  Int total = 0;
  for (const auto& x : pa)
    for (const auto& y : pb) {
      if (x.vertex != y.vertex) continue;
      total += detail::chord_sign(x.slot_in, x.slot_out, y.slot_in, y.slot_out,
                                  vertex_total[x.vertex]);
    }
  return total;
}

}  // namespace steinkit
