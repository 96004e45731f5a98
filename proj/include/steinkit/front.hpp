// Front projections with slopes +-1 (square-bridge normal form).
//
// A front lives in the (u,v) plane on the even sublattice (u+v even), so
// every junction of a slope +1 line {v = u + b} with a slope -1 line
// {v = -u + d} is an integer point. Components are closed polygonal loops;
// corners are cusps exactly when the u-direction reverses. At a crossing
// the slope -1 strand is the over strand (front convention for
// ker(dz + x dy)); crossing sign is the right-hand rule
// sign(cross(d_over, d_under)).
//
// Classical invariants per component: tb = writhe - cusps/2 and
// rot = (down cusps - up cusps)/2.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "steinkit/exact.hpp"
#include "steinkit/grid.hpp"

namespace steinkit {

using Coord = long long;

struct Pt {
  Coord u = 0, v = 0;
  bool operator==(const Pt& o) const { return u == o.u && v == o.v; }
  bool operator<(const Pt& o) const { return u != o.u ? u < o.u : v < o.v; }
};

enum class Dir { NE, SE, SW, NW };

inline Pt dir_step(Dir d) {
  switch (d) {
    case Dir::NE: return {1, 1};
    case Dir::SE: return {1, -1};
    case Dir::SW: return {-1, -1};
    default: return {-1, 1};
  }
}

inline bool slope_plus(Dir d) { return d == Dir::NE || d == Dir::SW; }

inline Dir dir_of(Pt a, Pt b) {
  Coord du = b.u - a.u, dv = b.v - a.v;
  if (du == 0 || (du != dv && du != -dv))
    throw Error("NotNormalized", "segment slope is not +1 or -1");
  if (du > 0) return dv > 0 ? Dir::NE : Dir::SE;
  return dv > 0 ? Dir::NW : Dir::SW;
}

struct FrontSegment {
  Pt a, b;         // oriented a -> b
  bool plus;       // slope +1 (else -1)
  int component;
  Coord line() const { return plus ? a.v - a.u : a.u + a.v; }  // intercept b or d
};

struct Cusp {
  Pt at;
  bool up;     // traversed upward (v increasing)
  bool right;  // local maximum of u (else left)
  int component;
};

struct Corner {
  Pt at;
  Dir in, out;
  int component;
  bool is_cusp;
};

struct FrontCrossing {
  Pt at;
  int seg_over;   // index of the slope -1 segment
  int seg_under;  // index of the slope +1 segment
  int sign;       // right-hand rule
};

struct ComponentInvariants {
  long long tb = 0, rot = 0, writhe = 0;  // writhe counts self-crossings only
  int cusps_up = 0, cusps_down = 0, cusps_left = 0, cusps_right = 0;
  int cusps() const { return cusps_up + cusps_down; }
};

struct ClassicalInvariants {
  std::vector<ComponentInvariants> comp;
  long long total_writhe = 0;  // all crossings, including mixed pairs
};

class FrontDiagram {
 public:
  // Each loop is the cyclic corner list of one component, in traversal order.
  static FrontDiagram from_loops(std::vector<std::vector<Pt>> loops,
                                 std::vector<bool> dotted = {},
                                 std::vector<std::optional<long>> framing = {}) {
    FrontDiagram f;
    f.loops_ = std::move(loops);
    int nc = int(f.loops_.size());
    f.dotted_ = dotted.empty() ? std::vector<bool>(nc, false) : std::move(dotted);
    f.framing_ = framing.empty() ? std::vector<std::optional<long>>(nc, std::nullopt)
                                 : std::move(framing);
    if (int(f.dotted_.size()) != nc || int(f.framing_.size()) != nc)
      throw Error("SizeMismatch", "per-component metadata does not match component count");
    f.build();
    return f;
  }

  int components() const { return int(loops_.size()); }
  const std::vector<std::vector<Pt>>& loops() const { return loops_; }
  const std::vector<FrontSegment>& segments() const { return segments_; }
  const std::vector<Corner>& corners() const { return corners_; }
  const std::vector<Cusp>& cusps() const { return cusps_; }
  const std::vector<FrontCrossing>& crossings() const { return crossings_; }
  bool dotted(int c) const { return dotted_[c]; }
  const std::vector<bool>& dotted_flags() const { return dotted_; }
  const std::vector<std::optional<long>>& framing() const { return framing_; }

  int component_of_segment(int s) const { return segments_[s].component; }

  // Signed crossing count between two distinct components, halved.
  long long linking(int c1, int c2) const {
    long long s = 0;
    for (const auto& x : crossings_) {
      int ca = segments_[x.seg_over].component, cb = segments_[x.seg_under].component;
      if ((ca == c1 && cb == c2) || (ca == c2 && cb == c1)) s += x.sign;
    }
    if (s % 2 != 0) throw Error("Internal", "odd inter-component crossing sum");
    return s / 2;
  }

 private:
  void build() {
    segments_.clear();
    corners_.clear();
    cusps_.clear();
    crossings_.clear();
    for (int c = 0; c < components(); ++c) {
      const auto& loop = loops_[c];
      if (loop.size() < 4 || loop.size() % 2 != 0)
        throw Error("NotNormalized", "component loop must have an even number (>= 4) of corners");
      for (const Pt& p : loop)
        if (((p.u + p.v) % 2 + 2) % 2 != 0)
          throw Error("NotNormalized", "front vertices must lie on the even sublattice");
      int m = int(loop.size());
      for (int i = 0; i < m; ++i) {
        Pt a = loop[i], b = loop[(i + 1) % m];
        Dir d = dir_of(a, b);
        segments_.push_back({a, b, slope_plus(d), c});
      }
    }
    // Corners and cusps.
    int base = 0;
    for (int c = 0; c < components(); ++c) {
      int m = int(loops_[c].size());
      for (int i = 0; i < m; ++i) {
        const FrontSegment& sin = segments_[base + (i + m - 1) % m];
        const FrontSegment& sout = segments_[base + i];
        Dir din = dir_of(sin.a, sin.b), dout = dir_of(sout.a, sout.b);
        if (slope_plus(din) == slope_plus(dout))
          throw Error("NotNormalized", "consecutive segments on the same slope family");
        bool in_right = (din == Dir::NE || din == Dir::SE);
        bool out_right = (dout == Dir::NE || dout == Dir::SE);
        bool cusp = (in_right != out_right);
        corners_.push_back({loops_[c][i], din, dout, c, cusp});
        if (cusp) {
          bool up = (dout == Dir::NE || dout == Dir::NW);
          cusps_.push_back({loops_[c][i], up, in_right, c});
        }
      }
      base += m;
    }
    // Distinct corner points.
    {
      std::vector<Pt> pts;
      for (const auto& k : corners_) pts.push_back(k.at);
      std::sort(pts.begin(), pts.end());
      if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw Error("NotNormalized", "two corners occupy the same junction");
    }
    // Collinear overlap ban per line.
    {
      std::map<std::pair<bool, Coord>, std::vector<std::pair<Coord, Coord>>> lines;
      for (const auto& s : segments_) {
        Coord lo = std::min(s.a.u, s.b.u), hi = std::max(s.a.u, s.b.u);
        lines[{s.plus, s.line()}].push_back({lo, hi});
      }
      for (auto& [key, iv] : lines) {
        std::sort(iv.begin(), iv.end());
        for (size_t i = 1; i < iv.size(); ++i)
          if (iv[i].first < iv[i - 1].second)
            throw Error("NotNormalized", "collinear segments overlap");
      }
    }
    // Crossings: slope +1 against slope -1, strict interiors.
    for (int i = 0; i < int(segments_.size()); ++i) {
      const FrontSegment& sp = segments_[i];
      if (!sp.plus) continue;
      for (int j = 0; j < int(segments_.size()); ++j) {
        const FrontSegment& sm = segments_[j];
        if (sm.plus) continue;
        Coord bb = sp.line(), dd = sm.line();
        Coord num_u = dd - bb;
        if (num_u % 2 != 0) throw Error("Internal", "odd junction coordinate");
        Pt x{num_u / 2, (dd + bb) / 2};
        auto pos = [&](const FrontSegment& s) {
          Coord lo = std::min(s.a.u, s.b.u), hi = std::max(s.a.u, s.b.u);
          if (x.u < lo || x.u > hi) return -1;       // off the segment
          return (x.u == lo || x.u == hi) ? 0 : 1;   // endpoint : interior
        };
        int pp = pos(sp), pm = pos(sm);
        if (pp < 0 || pm < 0) continue;
        if (pp == 0 && pm == 0) continue;  // both endpoints: a shared corner, handled above
        if (pp == 0 || pm == 0)
          throw Error("NotNormalized", "segment endpoint lies on another strand");
        Pt dov = dir_step(dir_of(sm.a, sm.b));
        Pt dun = dir_step(dir_of(sp.a, sp.b));
        Coord cr = dov.u * dun.v - dov.v * dun.u;
        crossings_.push_back({x, j, i, cr > 0 ? 1 : -1});
      }
    }
    // A crossing may not sit on a corner.
    for (const auto& x : crossings_)
      for (const auto& k : corners_)
        if (x.at == k.at)
          throw Error("NotNormalized", "crossing coincides with a corner junction");
  }

  std::vector<std::vector<Pt>> loops_;
  std::vector<FrontSegment> segments_;
  std::vector<Corner> corners_;
  std::vector<Cusp> cusps_;
  std::vector<FrontCrossing> crossings_;
  std::vector<bool> dotted_;
  std::vector<std::optional<long>> framing_;
};

inline ClassicalInvariants classical_invariants(const FrontDiagram& f) {
  ClassicalInvariants ci;
  ci.comp.resize(f.components());
  for (const auto& k : f.cusps()) {
    auto& c = ci.comp[k.component];
    (k.up ? c.cusps_up : c.cusps_down)++;
    (k.right ? c.cusps_right : c.cusps_left)++;
  }
  for (const auto& x : f.crossings()) {
    int co = f.component_of_segment(x.seg_over), cu = f.component_of_segment(x.seg_under);
    ci.total_writhe += x.sign;
    if (co == cu) ci.comp[co].writhe += x.sign;
  }
  for (auto& c : ci.comp) {
    if ((c.cusps_up + c.cusps_down) % 2 != 0)
      throw Error("Internal", "odd cusp count on a component");
    c.tb = c.writhe - (c.cusps_up + c.cusps_down) / 2;
    c.rot = (c.cusps_down - c.cusps_up) / 2;
  }
  return ci;
}

// 45-degree rotation of the grid: marking (row i, col j) -> (i+j, j-i).
// Row strands become slope +1, column strands slope -1; the grid's
// column-over-row convention becomes the front's slope -1 over rule.
inline FrontDiagram grid_to_front(const GridDiagram& g) {
  int n = g.size;
  std::vector<int> x_row(n);
  for (int i = 0; i < n; ++i) x_row[g.x_col[i]] = i;
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Pt>> loops;
  std::vector<bool> dotted;
  std::vector<std::optional<long>> framing;
  auto pt = [](int row, int col) { return Pt{Coord(row + col), Coord(col - row)}; };
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int comp = g.component_of_row[start];
    std::vector<Pt> loop;
    int r = start;
    while (!seen[r]) {
      seen[r] = true;
      loop.push_back(pt(r, g.x_col[r]));  // X marking
      loop.push_back(pt(r, g.o_col[r]));  // O marking, same row
      r = x_row[g.o_col[r]];              // column strand to the next X
    }
    if (g.orient_reversed[comp]) std::reverse(loop.begin(), loop.end());
    loops.push_back(std::move(loop));
    dotted.push_back(g.dotted[comp]);
    framing.push_back(g.framing[comp]);
  }
  return FrontDiagram::from_loops(std::move(loops), std::move(dotted), std::move(framing));
}

// Legendrian mirror: reflect across the horizontal axis. tb is preserved,
// every rotation number changes sign.
inline FrontDiagram mirror(const FrontDiagram& f) {
  std::vector<std::vector<Pt>> loops;
  for (const auto& loop : f.loops()) {
    std::vector<Pt> l;
    for (const Pt& p : loop) l.push_back({p.u, -p.v});
    loops.push_back(std::move(l));
  }
  return FrontDiagram::from_loops(std::move(loops), f.dotted_flags(), f.framing());
}

namespace detail {

inline FrontDiagram scaled(const FrontDiagram& f, Coord s) {
  std::vector<std::vector<Pt>> loops;
  for (const auto& loop : f.loops()) {
    std::vector<Pt> l;
    for (const Pt& p : loop) l.push_back({p.u * s, p.v * s});
    loops.push_back(std::move(l));
  }
  return FrontDiagram::from_loops(std::move(loops), f.dotted_flags(), f.framing());
}

}  // namespace detail

// Adds one stabilization kink (a zigzag cusp pair) to the component:
// tb drops by 1, rot changes by +1 (positive, two down cusps) or -1
// (negative, two up cusps). The kink is paired with a smooth jog so the
// strand returns to its original line; the ambient diagram is scaled to
// make room.
inline FrontDiagram stabilize(const FrontDiagram& f0, int component, int sign) {
  if (component < 0 || component >= f0.components())
    throw Error("SizeMismatch", "no such component");
  for (Coord scale : {8, 16, 32, 64, 128}) {
    FrontDiagram f = detail::scaled(f0, scale);
    // Candidate runs: up-cusps need a v-increasing run (NE/NW), down-cusps a
    // v-decreasing one (SW/SE).
    int nseg = int(f.segments().size());
    for (int si = 0; si < nseg; ++si) {
      const FrontSegment& s = f.segments()[si];
      if (s.component != component) continue;
      Dir d = dir_of(s.a, s.b);
      bool v_up = (d == Dir::NE || d == Dir::NW);
      if ((sign < 0) != v_up) continue;
      // Crossing-free window [t0, t0+4] in u-steps along the segment.
      Coord len = std::llabs(s.b.u - s.a.u);
      std::vector<Coord> cuts;  // distances from s.a in u-steps
      for (const auto& x : f.crossings())
        if (x.seg_over == si || x.seg_under == si)
          cuts.push_back(std::llabs(x.at.u - s.a.u));
      cuts.push_back(0);
      cuts.push_back(len);
      std::sort(cuts.begin(), cuts.end());
      Coord t0 = -1;
      for (size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i] - cuts[i - 1] >= 8) { t0 = cuts[i - 1] + 2; break; }
      if (t0 < 0) continue;
      // Build the new loop with the kink + jog inserted into segment si.
      Pt step = dir_step(d);
      Dir e, g;  // kink excursion, compensating jog
      switch (d) {
        case Dir::NE: e = Dir::NW; g = Dir::SE; break;
        case Dir::NW: e = Dir::NE; g = Dir::SW; break;
        case Dir::SW: e = Dir::SE; g = Dir::NW; break;
        default:      e = Dir::SW; g = Dir::NE; break;
      }
      Pt es = dir_step(e), gs = dir_step(g);
      Pt p1{s.a.u + step.u * t0, s.a.v + step.v * t0};
      Pt p2{p1.u + es.u, p1.v + es.v};
      Pt p3{p2.u + step.u * 2, p2.v + step.v * 2};
      Pt p4{p3.u + gs.u, p3.v + gs.v};
      std::vector<std::vector<Pt>> loops = f.loops();
      // Locate the segment inside its loop: segment index within component.
      int base = 0;
      for (int c = 0; c < component; ++c) base += int(loops[c].size());
      int local = si - base;
      auto& loop = loops[component];
      loop.insert(loop.begin() + local + 1, {p1, p2, p3, p4});
      try {
        return FrontDiagram::from_loops(std::move(loops), f.dotted_flags(), f.framing());
      } catch (const Error&) {
        continue;  // crowded; try another site or a bigger scale
      }
    }
  }
  throw Error("Internal", "no room to stabilize");
}

}  // namespace steinkit
