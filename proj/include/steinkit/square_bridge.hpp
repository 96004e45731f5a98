// Square-bridge data extracted from a front: the two families of slope
// +-1 lines carrying the link's segments, the junction occupancy (which
// line pairs meet at link corners and which at crossings), and the
// coprimality padding.
//
// Padding rule: add the minimal number of unoccupied lines so that
// p >= 1, q >= 1 and gcd(p, q) = 1; ties prefer the slope +1 family.
// Padded intercepts continue past the largest occupied one.
#pragma once

#include <map>
#include <numeric>
#include <set>

#include "steinkit/front.hpp"

namespace steinkit {

struct SquareBridgePosition {
  std::vector<Coord> b_intercepts;  // slope +1 lines, ascending (v = u + b)
  std::vector<Coord> d_intercepts;  // slope -1 lines, ascending (v = -u + d)
  int occupied_p = 0, occupied_q = 0;  // before padding

  struct CornerUse {
    int i, j;        // line indices of the junction
    int component;
  };
  struct CrossingUse {
    int i, j;
    int sign;
  };
  // Corner sequence per embedded (non-dotted) component, in traversal order.
  std::vector<std::vector<CornerUse>> corners;
  std::vector<int> component_ids;  // front component id per embedded component
  std::vector<CrossingUse> crossings;
  int dotted_count = 0;

  int p() const { return int(b_intercepts.size()); }
  int q() const { return int(d_intercepts.size()); }
  Pt junction(int i, int j) const {
    Coord b = b_intercepts[i], d = d_intercepts[j];
    return {(d - b) / 2, (d + b) / 2};
  }
};

namespace detail {

inline std::pair<int, int> coprime_padding(int p0, int q0) {
  for (int total = 0;; ++total)
    for (int ap = total; ap >= 0; --ap) {
      int aq = total - ap;
      int p = p0 + ap, q = q0 + aq;
      if (p >= 1 && q >= 1 && std::gcd(p, q) == 1) return {ap, aq};
    }
}

}  // namespace detail

inline SquareBridgePosition to_square_bridge(const FrontDiagram& f) {
  SquareBridgePosition sb;
  sb.dotted_count = 0;
  for (int c = 0; c < f.components(); ++c)
    if (f.dotted(c)) ++sb.dotted_count;

  std::set<Coord> bs, ds;
  for (const auto& s : f.segments()) {
    if (f.dotted(s.component)) continue;
    (s.plus ? bs : ds).insert(s.line());
  }
  sb.b_intercepts.assign(bs.begin(), bs.end());
  sb.d_intercepts.assign(ds.begin(), ds.end());
  sb.occupied_p = sb.p();
  sb.occupied_q = sb.q();

  auto [ap, aq] = detail::coprime_padding(sb.occupied_p, sb.occupied_q);
  Coord bmax = sb.b_intercepts.empty() ? -2 : sb.b_intercepts.back();
  Coord dmax = sb.d_intercepts.empty() ? -2 : sb.d_intercepts.back();
  for (int t = 1; t <= ap; ++t) sb.b_intercepts.push_back(bmax + 2 * t);
  for (int t = 1; t <= aq; ++t) sb.d_intercepts.push_back(dmax + 2 * t);

  auto b_index = [&](Coord b) {
    return int(std::lower_bound(sb.b_intercepts.begin(), sb.b_intercepts.end(), b) -
               sb.b_intercepts.begin());
  };
  auto d_index = [&](Coord d) {
    return int(std::lower_bound(sb.d_intercepts.begin(), sb.d_intercepts.end(), d) -
               sb.d_intercepts.begin());
  };

  // Corner uses, in traversal order per embedded component.
  int base = 0;
  for (int c = 0; c < f.components(); ++c) {
    int m = int(f.loops()[c].size());
    if (f.dotted(c)) { base += m; continue; }
    std::vector<SquareBridgePosition::CornerUse> uses;
    for (int t = 0; t < m; ++t) {
      const FrontSegment& sin = f.segments()[base + (t + m - 1) % m];
      const FrontSegment& sout = f.segments()[base + t];
      const FrontSegment& splus = sin.plus ? sin : sout;
      const FrontSegment& sminus = sin.plus ? sout : sin;
      int i = b_index(splus.line()), j = d_index(sminus.line());
      if (sb.junction(i, j) != f.loops()[c][t])
        throw Error("Internal", "corner does not sit at its line junction");
      uses.push_back({i, j, c});
    }
    sb.corners.push_back(std::move(uses));
    sb.component_ids.push_back(c);
    base += m;
  }

  for (const auto& x : f.crossings()) {
    const FrontSegment& over = f.segments()[x.seg_over];
    const FrontSegment& under = f.segments()[x.seg_under];
    if (f.dotted(over.component) || f.dotted(under.component)) continue;
    sb.crossings.push_back({b_index(under.line()), d_index(over.line()), x.sign});
  }

  // Junction uniqueness across all uses.
  std::set<std::pair<int, int>> used;
  for (const auto& comp : sb.corners)
    for (const auto& u : comp)
      if (!used.insert({u.i, u.j}).second)
        throw Error("EmbeddingFailure", "two features at one junction");
  for (const auto& x : sb.crossings)
    if (!used.insert({x.i, x.j}).second)
      throw Error("EmbeddingFailure", "crossing collides with another junction feature");
  return sb;
}

}  // namespace steinkit
