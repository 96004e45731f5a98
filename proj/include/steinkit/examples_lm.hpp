// The Lisca-Matic family L_k: a maximal-tb right trefoil (tb = 1, rot = 0)
// together with a meridian unknot carrying k down-kinks and n-k up-kinks,
// so tb(unknot) = -(n+1), rot(unknot) = 2k-n, lk(trefoil, unknot) = +1.
//
// Geometry: the trefoil is the 5x5 torus grid rotated into front position
// and scaled; the meridian is a diamond around the trefoil's left cusp,
// crossing the two cusp branches once each (once over, once under). Kinks
// ride on the diamond's long sides, each paired with a smooth jog so the
// side returns to its own line.
#pragma once

#include "steinkit/front.hpp"
#include "steinkit/grid.hpp"
#include "steinkit/surgery.hpp"

namespace steinkit {

inline GridDiagram trefoil_grid() {
  GridDiagram g;
  g.size = 5;
  g.x_col = {0, 1, 2, 3, 4};
  g.o_col = {2, 3, 4, 0, 1};
  compute_grid_components(g);
  g.dotted.assign(1, false);
  g.orient_reversed.assign(1, false);
  g.framing.assign(1, std::nullopt);
  return g;
}

inline FrontDiagram lisca_matic_front(int n, int k) {
  if (n < 2) throw Error("BadParameter", "n must be at least 2");
  if (k < 1 || k > n - 1) throw Error("BadParameter", "k must satisfy 1 <= k <= n-1");
  const Coord S = 8 * Coord(n) + 16;  // trefoil scale
  const Coord c = 4, delta = 8 * Coord(n) + 24;

  // Trefoil: 5x5 grid traversal, scaled by S.
  std::vector<Pt> trefoil;
  {
    GridDiagram g = trefoil_grid();
    std::vector<int> x_row(5);
    for (int i = 0; i < 5; ++i) x_row[g.x_col[i]] = i;
    int r = 0;
    for (int step = 0; step < 5; ++step) {
      trefoil.push_back({S * (r + g.x_col[r]), S * (g.x_col[r] - r)});
      trefoil.push_back({S * (r + g.o_col[r]), S * (g.o_col[r] - r)});
      r = x_row[g.o_col[r]];
    }
  }

  // Meridian diamond L -> T -> R -> B around the left cusp at the origin.
  Pt L{c - delta, 0}, T{c, delta}, R{c + delta, 0}, B{c, -delta};
  std::vector<Pt> meridian;
  meridian.push_back(L);
  // Up-kinks on the NE side L -> T (excursion NW, jog SE).
  {
    Coord t = 2;
    for (int i = 0; i < n - k; ++i, t += 8) {
      Pt p1{L.u + t, L.v + t};
      Pt p2{p1.u - 1, p1.v + 1};
      Pt p3{p2.u + 2, p2.v + 2};
      Pt p4{p3.u + 1, p3.v - 1};
      meridian.insert(meridian.end(), {p1, p2, p3, p4});
    }
    if (t + 2 > delta) throw Error("Internal", "kink capacity exceeded on NE side");
  }
  meridian.push_back(T);
  // Down-kinks on the SE side T -> R (excursion SW, jog NE), skipping a
  // margin around the strand crossing at u-offset (c+delta)/2 - c.
  {
    Coord cross_off = (c + delta) / 2 - c;
    Coord t = 2;
    for (int i = 0; i < k; ++i, t += 8) {
      while (t + 2 >= cross_off - 3 && t - 1 <= cross_off + 3) t += 8;
      if (t + 2 > delta) throw Error("Internal", "kink capacity exceeded on SE side");
      Pt p1{T.u + t, T.v - t};
      Pt p2{p1.u - 1, p1.v - 1};
      Pt p3{p2.u + 2, p2.v - 2};
      Pt p4{p3.u + 1, p3.v + 1};
      meridian.insert(meridian.end(), {p1, p2, p3, p4});
    }
  }
  meridian.push_back(R);
  meridian.push_back(B);

  return FrontDiagram::from_loops({trefoil, meridian});
}

inline SurgeryPresentation lisca_matic_presentation(int n, int k) {
  return SurgeryPresentation::from_front(lisca_matic_front(n, k));
}

}  // namespace steinkit
