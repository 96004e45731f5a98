// Exact piecewise-linear model of the page embedding, and linking numbers
// by exact crossing counts in sheared generic projections.
//
// Model: slope +1 strips lie in the plane x = -1, slope -1 strips in
// x = +1; the band at a junction follows the segment between them, its
// width direction rotating with the contact planes, (0,1,-x) at level x.
// A curve walks strip center lines and crosses bands along straight
// chords near its corner junctions. The in-surface pushoff used for the
// page framing offsets strip runs in the x direction and follows the
// band's quarter twist through each corner; its side flips exactly at
// cusps (where the walk's u-direction reverses), which keeps the normal
// field continuous around the loop.
//
// All coordinates are rational; projections are sheared until every
// crossing is transversal, so every count is exact.
#pragma once

#include "steinkit/page.hpp"

namespace steinkit {

struct P3 {
  Rat x, u, v;
};

namespace plgeom {

struct Proj2 {
  Rat a, b;  // shear: (x, u, v) -> (x + a v, u + b v), depth = v
};

inline std::pair<Rat, Rat> project(const P3& p, const Proj2& pr) {
  return {p.x + pr.a * p.v, p.u + pr.b * p.v};
}

struct CrossCount {
  long long signed_sum = 0;
};

// Signed crossings between closed polylines A and B in the sheared
// projection. Throws Error("Degenerate") when the projection is not
// generic for this pair; throws Error("Intersecting") when the curves
// genuinely touch in 3-space.
inline long long signed_crossings(const std::vector<P3>& A, const std::vector<P3>& B,
                                  const Proj2& pr) {
  long long total = 0;
  auto seg = [&](const std::vector<P3>& c, size_t i) {
    return std::pair<P3, P3>(c[i], c[(i + 1) % c.size()]);
  };
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j) {
      auto [p, q] = seg(A, i);
      auto [r, s] = seg(B, j);
      auto [px, py] = project(p, pr);
      auto [qx, qy] = project(q, pr);
      auto [rx, ry] = project(r, pr);
      auto [sx, sy] = project(s, pr);
      Rat d1x = qx - px, d1y = qy - py, d2x = sx - rx, d2y = sy - ry;
      Rat den = d1x * d2y - d1y * d2x;
      Rat ex = rx - px, ey = ry - py;
      if (den == 0) {
        // Parallel in projection: degenerate only if the supports overlap.
        if (ex * d1y - ey * d1x == 0) throw Error("Degenerate", "collinear projected segments");
        continue;
      }
      Rat t = (ex * d2y - ey * d2x) / den;   // along A-segment
      Rat u2 = (ex * d1y - ey * d1x) / den;  // along B-segment
      if (t <= 0 || t >= 1 || u2 <= 0 || u2 >= 1) {
        if (t == 0 || t == 1 || u2 == 0 || u2 == 1)
          throw Error("Degenerate", "projected crossing at a segment endpoint");
        continue;
      }
      Rat depth_a = p.v + t * (q.v - p.v);
      Rat depth_b = r.v + u2 * (s.v - r.v);
      if (depth_a == depth_b) throw Error("Intersecting", "polylines intersect in 3-space");
      bool a_over = depth_a > depth_b;
      Rat cr = a_over ? (d1x * d2y - d1y * d2x) : (d2x * d1y - d2y * d1x);
      total += cr > 0 ? 1 : -1;
    }
  return total;
}

inline const std::vector<Proj2>& projections() {
  static const std::vector<Proj2> ps = {
      {Rat(1, 7), Rat(1, 13)},  {Rat(2, 11), Rat(3, 17)}, {Rat(5, 19), Rat(1, 23)},
      {Rat(3, 29), Rat(7, 31)}, {Rat(8, 37), Rat(5, 41)}, {Rat(11, 43), Rat(2, 47)}};
  return ps;
}

}  // namespace plgeom

// Exact linking number of two disjoint closed polylines.
inline long long pl_linking(const std::vector<P3>& a, const std::vector<P3>& b) {
  for (const auto& pr : plgeom::projections()) {
    try {
      long long s = plgeom::signed_crossings(a, b, pr);
      if (s % 2 != 0) throw Error("Internal", "odd crossing sum for closed curves");
      return s / 2;
    } catch (const Error& e) {
      if (e.code() == std::string("Degenerate")) continue;
      throw;
    }
  }
  throw Error("Internal", "no generic projection found");
}

// ---- polyline realizations of page walks ----

namespace plgeom {

struct CornerData {
  int i, j;          // junction
  Pt junction;
  int s_in, s_out;   // u-direction of the incoming / outgoing strip run
  int x_in, x_out;   // strip levels: -1 for slope +1 strips, +1 for slope -1
};

inline std::vector<CornerData> walk_corners(const PageSurface& page, const Walk& walk) {
  // Map edges back to junctions.
  std::vector<std::pair<int, int>> band_of(page.graph.edges(), {-1, -1});
  for (int i = 0; i < page.p; ++i)
    for (int j = 0; j < page.q; ++j) band_of[page.band[i][j]] = {i, j};
  int m = int(walk.size());
  std::vector<CornerData> cd(m);
  for (int t = 0; t < m; ++t) {
    auto [i, j] = band_of[walk[t].edge];
    if (i < 0) throw Error("Internal", "walk leaves the junction grid");
    cd[t].i = i;
    cd[t].j = j;
    cd[t].junction = page.junction(i, j);
    cd[t].x_in = walk[t].forward ? -1 : +1;   // arrives on the tail strip
    cd[t].x_out = walk[t].forward ? +1 : -1;
  }
  for (int t = 0; t < m; ++t) {
    const Pt prev = cd[(t + m - 1) % m].junction;
    const Pt next = cd[(t + 1) % m].junction;
    cd[t].s_in = cd[t].junction.u > prev.u ? 1 : -1;
    cd[t].s_out = next.u > cd[t].junction.u ? 1 : -1;
  }
  return cd;
}

inline P3 at(Rat x, Pt base, Rat du, Rat dv) {
  return {x, Rat(base.u) + du, Rat(base.v) + dv};
}

}  // namespace plgeom

namespace plgeom {

// Lane/jitter separation: the jitter perturbs each lane differently so a
// retry changes the relative geometry of any pair of curves.
inline Rat lane_eps(int lane, int jitter) {
  return Rat(1, 4) + Rat(lane, 64) + Rat(jitter * (2 * lane + 1), 4096);
}
inline Rat lane_shift(int lane, int jitter) {
  return Rat(lane, 32) + Rat(jitter * (lane + 1), 2048);
}

}  // namespace plgeom

// The walk as a closed polyline: strip runs at x = -/+1 (shifted per lane
// to keep distinct curves apart), band chords with corner clearance eps.
inline std::vector<P3> page_curve_polyline(const PageSurface& page, const Walk& walk, int lane = 0,
                                           int jitter = 0) {
  auto cd = plgeom::walk_corners(page, walk);
  Rat eps = plgeom::lane_eps(lane, jitter);
  Rat shift = plgeom::lane_shift(lane, jitter);
  std::vector<P3> pts;
  for (const auto& c : cd) {
    // slope of the incoming line: +1 lines when arriving at x=-1
    Rat vin = c.x_in < 0 ? Rat(c.s_in) : Rat(-c.s_in);   // dv of incoming direction
    Rat vout = c.x_out < 0 ? Rat(c.s_out) : Rat(-c.s_out);
    pts.push_back(plgeom::at(Rat(c.x_in) + shift, c.junction, -eps * c.s_in, -eps * vin));
    pts.push_back(plgeom::at(Rat(c.x_out) + shift, c.junction, eps * c.s_out, eps * vout));
  }
  return pts;
}

// In-surface pushoff: strip offsets sigma * eta in x, rotating through each
// band with the quarter twist; sigma flips exactly at cusp corners.
inline std::vector<P3> page_curve_pushoff_in_surface(const PageSurface& page, const Walk& walk,
                                                     int lane = 0, int jitter = 0) {
  auto cd = plgeom::walk_corners(page, walk);
  Rat eps = plgeom::lane_eps(lane, jitter);
  Rat shift = plgeom::lane_shift(lane, jitter);
  Rat eta = Rat(1, 64);
  int m = int(cd.size());
  // sigma is constant on strip runs and flips at corners with s_in != s_out.
  std::vector<int> sigma_in(m);
  sigma_in[0] = 1;
  for (int t = 0; t < m; ++t) {
    int s_out = cd[t].s_in * cd[t].s_out * sigma_in[t];
    if (t + 1 < m) sigma_in[t + 1] = s_out;
    else if (s_out != sigma_in[0])
      throw Error("Internal", "pushoff side does not close up (odd cusp count?)");
  }
  std::vector<P3> pts;
  for (int t = 0; t < m; ++t) {
    const auto& c = cd[t];
    int sin_ = sigma_in[t];
    int sout_ = c.s_in * c.s_out * sin_;
    int core = c.x_in < 0 ? 1 : -1;                 // band travel direction in x
    int kappa = -c.s_in * core * sin_;              // width-component inside the band
    Rat vin = c.x_in < 0 ? Rat(c.s_in) : Rat(-c.s_in);
    Rat vout = c.x_out < 0 ? Rat(c.s_out) : Rat(-c.s_out);
    pts.push_back(plgeom::at(Rat(c.x_in) + shift + sin_ * eta, c.junction, -eps * c.s_in,
                             -eps * vin));
    // Band midpoint: the chord midpoint pushed along the width direction
    // w(0) = (0,1,0).
    Rat mid_du = eps * (Rat(c.s_out) - Rat(c.s_in)) / 2;
    Rat mid_dv = eps * (vout - vin) / 2;
    pts.push_back(plgeom::at(shift, c.junction, mid_du + Rat(kappa) * eta, mid_dv));
    pts.push_back(plgeom::at(Rat(c.x_out) + shift + sout_ * eta, c.junction, eps * c.s_out,
                             eps * vout));
  }
  return pts;
}

// Pushoff along the positive surface normal (0, x, 1)/|.| — the Seifert
// form pairing direction. The straight band chord already follows the
// rotating normal, which is linear in x.
inline std::vector<P3> page_curve_pushoff_off_surface(const PageSurface& page, const Walk& walk,
                                                      int lane = 0, int jitter = 0) {
  std::vector<P3> pts = page_curve_polyline(page, walk, lane, jitter);
  Rat eta = Rat(1, 64);
  for (auto& p : pts) {
    Rat x_level = p.x;  // close to -1/+1 at all polyline vertices
    p.u += eta * (x_level < 0 ? Rat(-1) : Rat(1));
    p.v += eta;
  }
  return pts;
}

// Page framing = lk(L, L') with L' the in-surface pushoff; retries the
// lane jitter until the PL model is collision-free.
inline long long page_framing(const PageSurface& page, const Walk& walk) {
  for (int jitter = 0; jitter < 4; ++jitter) {
    try {
      auto l = page_curve_polyline(page, walk, 0, jitter);
      auto lp = page_curve_pushoff_in_surface(page, walk, 0, jitter);
      return pl_linking(l, lp);
    } catch (const Error& e) {
      if (e.code() == std::string("Intersecting")) continue;
      throw;
    }
  }
  throw Error("Internal", "page framing: persistent PL collision");
}

struct FramingVerdict {
  bool match;
  long long page_framing;
  long long tb;
};

inline FramingVerdict page_framing_check(const PageSurface& page, const EmbeddedCurve& curve,
                                         const ComponentInvariants& inv) {
  long long fr = page_framing(page, curve.walk);
  return {fr == inv.tb, fr, inv.tb};
}

}  // namespace steinkit
