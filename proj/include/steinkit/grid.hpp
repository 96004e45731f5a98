// Grid presentations of Legendrian links and the text file format.
//
// A grid of size n has one X and one O in every row and every column
// (two permutations). The link is traversed X -> O along rows and
// O -> X along columns; column strands cross over row strands. Rows are
// indexed top to bottom, columns left to right.
//
// File format (line oriented, '#' starts a comment):
//
//   n=5
//   X=0,1,2,3,4            column of the X in each row
//   O=2,3,4,0,1            column of the O in each row
//   orient=+-              optional, one '+'/'-' per component
//   frame=tb-1,-3          optional, per non-dotted component ("tb-1" or an
//                          integer; use '-' for dotted slots)
//   dotted=1               optional, component ids carrying 1-handles
//
// Components are numbered by their smallest row index. Trailing garbage is
// rejected.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "steinkit/exact.hpp"

namespace steinkit {

struct GridDiagram {
  int size = 0;
  std::vector<int> x_col;  // row -> column of X
  std::vector<int> o_col;  // row -> column of O
  std::vector<int> component_of_row;  // orbit partition of the traversal
  int components = 0;
  std::vector<bool> dotted;                  // per component
  std::vector<bool> orient_reversed;         // per component
  std::vector<std::optional<long>> framing;  // per component; nullopt = tb-1
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, int line_no) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (...) {
      throw Error("Malformed", "line " + std::to_string(line_no) + ": bad integer '" + item + "'");
    }
    while (pos < item.size() && isspace((unsigned char)item[pos])) ++pos;
    if (pos != item.size())
      throw Error("Malformed", "line " + std::to_string(line_no) + ": trailing characters in '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline void check_permutation(const std::vector<int>& v, int n, const char* name, int line_no) {
  if (int(v.size()) != n)
    throw Error("SizeMismatch", "line " + std::to_string(line_no) + ": " + name + " has " +
                                    std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x])
      throw Error("MalformedPermutation",
                  "line " + std::to_string(line_no) + ": " + name + " is not a permutation of 0.." +
                      std::to_string(n - 1));
    seen[x] = true;
  }
}

}  // namespace detail

// Orbit partition of the follow-the-rows/columns traversal.
inline void compute_grid_components(GridDiagram& g) {
  int n = g.size;
  std::vector<int> x_row(n);  // column -> row of X
  for (int i = 0; i < n; ++i) x_row[g.x_col[i]] = i;
  g.component_of_row.assign(n, -1);
  g.components = 0;
  for (int start = 0; start < n; ++start) {
    if (g.component_of_row[start] >= 0) continue;
    int c = g.components++;
    int r = start;
    while (g.component_of_row[r] < 0) {
      g.component_of_row[r] = c;
      r = x_row[g.o_col[r]];  // row segment to O, then column segment to X
    }
  }
}

inline GridDiagram parse_grid(const std::string& text) {
  GridDiagram g;
  std::optional<std::vector<int>> xs, os;
  std::optional<std::string> orient;
  std::optional<std::vector<std::string>> frame;
  std::optional<std::vector<int>> dotted_ids;
  bool have_n = false;
  int x_line = 0, o_line = 0;

  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("Malformed", "line " + std::to_string(line_no) + ": expected key=value");
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "n") {
      try {
        g.size = std::stoi(val);
      } catch (...) {
        throw Error("Malformed", "line " + std::to_string(line_no) + ": bad size");
      }
      if (g.size < 0) throw Error("Malformed", "line " + std::to_string(line_no) + ": negative size");
      have_n = true;
    } else if (key == "X") {
      xs = detail::parse_int_list(val, line_no);
      x_line = line_no;
    } else if (key == "O") {
      os = detail::parse_int_list(val, line_no);
      o_line = line_no;
    } else if (key == "orient") {
      orient = val;
    } else if (key == "frame") {
      std::vector<std::string> items;
      std::stringstream fs(val);
      std::string item;
      while (std::getline(fs, item, ',')) items.push_back(item);
      frame = items;
    } else if (key == "dotted") {
      dotted_ids = val.empty() ? std::vector<int>{} : detail::parse_int_list(val, line_no);
    } else {
      throw Error("Malformed", "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_n) throw Error("Malformed", "missing n=");
  if (g.size > 0 && (!xs || !os)) throw Error("Malformed", "missing X= or O=");
  g.x_col = xs.value_or(std::vector<int>{});
  g.o_col = os.value_or(std::vector<int>{});
  detail::check_permutation(g.x_col, g.size, "X", x_line);
  detail::check_permutation(g.o_col, g.size, "O", o_line);
  for (int i = 0; i < g.size; ++i)
    if (g.x_col[i] == g.o_col[i])
      throw Error("CellCollision", "line " + std::to_string(o_line) + ", row " + std::to_string(i) +
                                       ": X and O occupy the same cell");

  compute_grid_components(g);
  g.dotted.assign(g.components, false);
  g.orient_reversed.assign(g.components, false);
  g.framing.assign(g.components, std::nullopt);

  if (orient) {
    if (int(orient->size()) != g.components)
      throw Error("SizeMismatch", "orient= needs one sign per component (" +
                                      std::to_string(g.components) + ")");
    for (int c = 0; c < g.components; ++c) {
      char ch = (*orient)[c];
      if (ch == '-') g.orient_reversed[c] = true;
      else if (ch != '+') throw Error("Malformed", "orient= entries must be + or -");
    }
  }
  if (dotted_ids) {
    for (int id : *dotted_ids) {
      if (id < 0 || id >= g.components)
        throw Error("SizeMismatch", "dotted component " + std::to_string(id) + " out of range");
      g.dotted[id] = true;
    }
  }
  if (frame) {
    if (int(frame->size()) != g.components)
      throw Error("SizeMismatch", "frame= needs one entry per component");
    for (int c = 0; c < g.components; ++c) {
      const std::string& f = (*frame)[c];
      if (f == "tb-1" || f == "-") continue;
      try {
        size_t pos = 0;
        long v = std::stol(f, &pos);
        if (pos != f.size()) throw std::invalid_argument(f);
        if (g.dotted[c]) throw Error("Malformed", "dotted component " + std::to_string(c) + " cannot be framed");
        g.framing[c] = v;
      } catch (Error&) {
        throw;
      } catch (...) {
        throw Error("Malformed", "frame entry '" + f + "' is neither an integer nor tb-1");
      }
    }
  }
  return g;
}

}  // namespace steinkit
