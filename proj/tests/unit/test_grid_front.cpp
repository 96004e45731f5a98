#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "steinkit/examples_lm.hpp"
#include "steinkit/front.hpp"
#include "steinkit/grid.hpp"

using namespace steinkit;

namespace {

// Independent component-count oracle: cycle count of the traversal
// permutation, written directly against the grid data.
int orbit_count(const GridDiagram& g) {
  int n = g.size;
  std::vector<int> xrow(n);
  for (int i = 0; i < n; ++i) xrow[g.x_col[i]] = i;
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int r = s; !seen[r]; r = xrow[g.o_col[r]]) seen[r] = true;
  }
  return cycles;
}

// Independent crossing oracle in raw grid coordinates (rows drawn top to
// bottom, column strands over row strands, right-hand-rule signs).
long long grid_writhe_oracle(const GridDiagram& g) {
  int n = g.size;
  std::vector<int> xrow(n), orow(n);
  for (int i = 0; i < n; ++i) xrow[g.x_col[i]] = i, orow[g.o_col[i]] = i;
  long long w = 0;
  for (int i = 0; i < n; ++i) {
    int ca = g.x_col[i], cb = g.o_col[i];
    for (int j = 0; j < n; ++j) {
      int ra = orow[j], rb = xrow[j];
      bool j_between = (j > std::min(ca, cb)) && (j < std::max(ca, cb));
      bool i_between = (i > std::min(ra, rb)) && (i < std::max(ra, rb));
      if (!j_between || !i_between) continue;
      int hx = cb > ca ? 1 : -1;          // row strand, X -> O
      int vy = rb > ra ? -1 : 1;          // column strand in the plane (row 0 on top)
      w += -(long long)vy * hx;           // cross(d_over, d_under) with d_over=(0,vy)
    }
  }
  return w;
}

GridDiagram random_grid(std::mt19937& rng, int n) {
  GridDiagram g;
  g.size = n;
  g.x_col.resize(n);
  g.o_col.resize(n);
  while (true) {
    for (int i = 0; i < n; ++i) g.x_col[i] = i;
    std::shuffle(g.x_col.begin(), g.x_col.end(), rng);
    for (int i = 0; i < n; ++i) g.o_col[i] = i;
    std::shuffle(g.o_col.begin(), g.o_col.end(), rng);
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (g.x_col[i] == g.o_col[i]) ok = false;
    if (ok) break;
  }
  compute_grid_components(g);
  g.dotted.assign(g.components, false);
  g.orient_reversed.assign(g.components, false);
  g.framing.assign(g.components, std::nullopt);
  return g;
}

}  // namespace

TEST_CASE("parse smallest unknot grid") {
  GridDiagram g = parse_grid("n=2\nX=1,0\nO=0,1\n");
  REQUIRE(g.size == 2);
  REQUIRE(g.components == 1);
  REQUIRE(orbit_count(g) == 1);
}

TEST_CASE("parse rejects X/O collisions with a line number") {
  try {
    parse_grid("n=5\nX=0,1,2,3,4\nO=0,2,3,4,1\n");
    FAIL("expected CellCollision");
  } catch (const Error& e) {
    REQUIRE(e.code() == "CellCollision");
    REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("parse rejects malformed permutations and sizes") {
  REQUIRE_THROWS_AS(parse_grid("n=3\nX=0,1,1\nO=2,0,1\n"), Error);
  REQUIRE_THROWS_AS(parse_grid("n=3\nX=0,1\nO=2,0,1\n"), Error);
  REQUIRE_THROWS_AS(parse_grid("n=3\nX=0,1,2 junk\nO=2,0,1\n"), Error);
  REQUIRE_THROWS_AS(parse_grid("X=0,1\nO=1,0\n"), Error);
}

TEST_CASE("trefoil grid: single component, writhe +3") {
  GridDiagram g = parse_grid("n=5\nX=0,1,2,3,4\nO=2,3,4,0,1\n");
  REQUIRE(g.components == 1);
  REQUIRE(orbit_count(g) == 1);
  REQUIRE(grid_writhe_oracle(g) == 3);
  FrontDiagram f = grid_to_front(g);
  ClassicalInvariants ci = classical_invariants(f);
  REQUIRE(ci.total_writhe == 3);
  REQUIRE(ci.comp[0].writhe == 3);
  REQUIRE(ci.comp[0].cusps() == 4);
  REQUIRE(ci.comp[0].tb == 1);
  REQUIRE(ci.comp[0].rot == 0);
}

TEST_CASE("2x2 unknot front: 0 crossings, 2 cusps, tb=-1, rot=0") {
  FrontDiagram f = grid_to_front(parse_grid("n=2\nX=1,0\nO=0,1\n"));
  REQUIRE(f.crossings().empty());
  ClassicalInvariants ci = classical_invariants(f);
  REQUIRE(ci.comp[0].cusps_up == 1);
  REQUIRE(ci.comp[0].cusps_down == 1);
  REQUIRE(ci.comp[0].tb == -1);
  REQUIRE(ci.comp[0].rot == 0);
}

TEST_CASE("grid fronts have 2n segments and match the writhe oracle") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + int(rng() % 7);
    GridDiagram g = random_grid(rng, n);
    FrontDiagram f = grid_to_front(g);
    REQUIRE(int(f.segments().size()) == 2 * n);
    REQUIRE(classical_invariants(f).total_writhe == grid_writhe_oracle(g));
  }
}

TEST_CASE("tb + rot is odd on knots (random grids)") {
  std::mt19937 rng(99);
  int knots = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + int(rng() % 7);
    GridDiagram g = random_grid(rng, n);
    if (g.components != 1) continue;
    ++knots;
    ClassicalInvariants ci = classical_invariants(grid_to_front(g));
    long long parity = (ci.comp[0].tb + ci.comp[0].rot) % 2;
    REQUIRE((parity == 1 || parity == -1));
  }
  REQUIRE(knots > 20);
}

TEST_CASE("grid_to_front is deterministic") {
  const char* text = "n=5\nX=0,1,2,3,4\nO=2,3,4,0,1\n";
  FrontDiagram a = grid_to_front(parse_grid(text));
  FrontDiagram b = grid_to_front(parse_grid(text));
  REQUIRE(a.loops() == b.loops());
}

TEST_CASE("mirror negates rot and preserves tb") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng() % 6);
    GridDiagram g = random_grid(rng, n);
    FrontDiagram f = grid_to_front(g);
    FrontDiagram m = mirror(f);
    ClassicalInvariants a = classical_invariants(f), b = classical_invariants(m);
    for (int c = 0; c < int(a.comp.size()); ++c) {
      REQUIRE(a.comp[c].tb == b.comp[c].tb);
      REQUIRE(a.comp[c].rot == -b.comp[c].rot);
    }
  }
}

TEST_CASE("stabilize adjusts tb and rot by definition") {
  FrontDiagram unknot = grid_to_front(parse_grid("n=2\nX=1,0\nO=0,1\n"));
  FrontDiagram pos = stabilize(unknot, 0, +1);
  ClassicalInvariants ci = classical_invariants(pos);
  REQUIRE(ci.comp[0].tb == -2);
  REQUIRE(ci.comp[0].rot == 1);

  FrontDiagram pm = stabilize(pos, 0, -1);
  ci = classical_invariants(pm);
  REQUIRE(ci.comp[0].tb == -3);
  REQUIRE(ci.comp[0].rot == 0);

  // Alternating k positive / n-k negative kinks give rot = 2k-n.
  FrontDiagram f = unknot;
  int kk = 2, nn = 5;
  for (int i = 0; i < kk; ++i) f = stabilize(f, 0, +1);
  for (int i = 0; i < nn - kk; ++i) f = stabilize(f, 0, -1);
  ci = classical_invariants(f);
  REQUIRE(ci.comp[0].rot == 2 * kk - nn);
  REQUIRE(ci.comp[0].tb == -1 - nn);
}

TEST_CASE("stabilize preserves the component structure") {
  GridDiagram g = parse_grid("n=4\nX=1,0,3,2\nO=0,1,2,3\n");
  REQUIRE(g.components == 2);
  FrontDiagram f = grid_to_front(g);
  FrontDiagram s = stabilize(f, 1, +1);
  REQUIRE(s.components() == 2);
  REQUIRE(s.loops()[0].size() == f.loops()[0].size());  // untouched component
}

TEST_CASE("Lisca-Matic fronts: classical invariants for all k") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      FrontDiagram f = lisca_matic_front(n, k);
      ClassicalInvariants ci = classical_invariants(f);
      REQUIRE(ci.comp[0].tb == 1);
      REQUIRE(ci.comp[0].rot == 0);
      REQUIRE(ci.comp[1].tb == -(n + 1));
      REQUIRE(ci.comp[1].rot == 2 * k - n);
      REQUIRE(f.linking(0, 1) == 1);
    }
  }
}

TEST_CASE("orientation flip negates rot and linking signs") {
  GridDiagram g = parse_grid("n=5\nX=0,1,2,3,4\nO=2,3,4,0,1\norient=-\n");
  FrontDiagram f = grid_to_front(g);
  ClassicalInvariants ci = classical_invariants(f);
  REQUIRE(ci.comp[0].tb == 1);    // tb unchanged under reversal
  REQUIRE(ci.comp[0].rot == 0);   // rot of the trefoil is 0 either way
}
