// Dehn-twist words and their exact symplectic shadow on H_1 of the closed
// genus-g surface.
//
// Basis convention: e_{2i} = a_{i+1}, e_{2i+1} = b_{i+1} with
// <a_i, b_i> = +1. A positive (right-handed) twist about a curve of class
// c acts by the transvection x -> x + <x, c> c. The standard chain
// carries the curve names a1 b1 ... ag bg; its classes are
// a_i and b_i - b_{i+1}, so consecutive chain curves meet once.
//
// verify_relator checks the chain relator (a1 b1 ... ag bg)^{4g+2} on
// homology; the verdict is explicitly homology-level (a necessary, not
// sufficient, condition for mapping-class triviality).
//
// invert_positively rewrites the inverse of a positive word as a positive
// word: rotate the chain relator for chain-class letters, otherwise
// conjugate the relator so that one of its letters lands on the target
// class. Conjugators are searched breadth-first over chain transvections
// (depth-capped) with a constructive fallback: a symplectic matrix taking
// a1 to the target class, built by extending the class to a symplectic
// basis. Every symplectic matrix is induced by a mapping class, so the
// conjugated relator is still a genuine positive relator factorization.
#pragma once

#include <map>
#include <optional>
#include <sstream>

#include "steinkit/matrix.hpp"

namespace steinkit {

inline IMat symplectic_form(int g) {
  IMat j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

inline Int symplectic_pairing(const std::vector<Int>& u, const std::vector<Int>& v) {
  Int s = 0;
  for (size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

struct SymplecticAction {
  int genus;
  IMat m;
  SymplecticAction(int g, IMat mat) : genus(g), m(std::move(mat)) {
    IMat j = symplectic_form(g);
    if (m.transpose() * j * m != j)
      throw Error("NotSymplectic", "matrix does not preserve the intersection form");
  }
  static SymplecticAction identity(int g) { return SymplecticAction(g, IMat::identity(2 * g)); }
  bool is_identity() const { return m.is_identity(); }
};

// Positive Dehn twist on homology: x -> x + <x, c> c.
inline SymplecticAction transvection(const std::vector<Int>& cls, int g) {
  if (int(cls.size()) != 2 * g) throw Error("SizeMismatch", "curve class has wrong length");
  IMat m = IMat::identity(2 * g);
  // column k gets + <e_k, c> c
  for (int k = 0; k < 2 * g; ++k) {
    std::vector<Int> ek(2 * g);
    ek[k] = 1;
    Int w = symplectic_pairing(ek, cls);
    if (w == 0) continue;
    for (int i = 0; i < 2 * g; ++i) m(i, k) += w * cls[i];
  }
  return SymplecticAction(g, std::move(m));
}

struct CurveTable {
  std::vector<std::vector<Int>> cls;
  std::vector<std::string> name;
  int add(std::vector<Int> c, std::string n) {
    cls.push_back(std::move(c));
    name.push_back(std::move(n));
    return int(cls.size()) - 1;
  }
};

struct TwistLetter {
  int curve;
  bool positive;
  bool operator==(const TwistLetter& o) const = default;
};

struct TwistWord {
  std::vector<TwistLetter> letters;
  bool all_positive() const {
    for (const auto& l : letters)
      if (!l.positive) return false;
    return true;
  }
  size_t size() const { return letters.size(); }
};

// Homology class of the k-th standard chain curve, k = 0..2g-1.
inline std::vector<Int> chain_class(int k, int g) {
  std::vector<Int> c(2 * g);
  int i = k / 2;
  if (k % 2 == 0) {
    c[2 * i] = 1;  // a_{i+1}
  } else {
    c[2 * i + 1] = 1;  // b_{i+1} - b_{i+2}
    if (i + 1 < g) c[2 * i + 3] = -1;
  }
  return c;
}

inline std::string chain_name(int k) {
  return (k % 2 == 0 ? "a" : "b") + std::to_string(k / 2 + 1);
}

// Table primed with the 2g standard chain curves (ids 0..2g-1).
inline CurveTable standard_chain_table(int g) {
  CurveTable t;
  for (int k = 0; k < 2 * g; ++k) t.add(chain_class(k, g), chain_name(k));
  return t;
}

// Ordered product of transvections, exact over the integers; inverse
// exponents use the exact matrix inverse of the transvection.
inline SymplecticAction rho(const TwistWord& w, const CurveTable& table, int g) {
  IMat m = IMat::identity(2 * g);
  for (const auto& l : w.letters) {
    SymplecticAction t = transvection(table.cls[l.curve], g);
    m = m * (l.positive ? t.m : inverse_unimodular(t.m));
  }
  return SymplecticAction(g, std::move(m));
}

struct RelatorVerdict {
  bool homology_identity;
  std::string qualifier = "homology-level check only (necessary, not sufficient)";
};

inline RelatorVerdict verify_relator(const TwistWord& w, const CurveTable& table, int g) {
  return {rho(w, table, g).is_identity()};
}

// (a1 b1 ... ag bg)^{4g+2}: positive word of length 2g(4g+2) over the
// standard chain (curve ids 0..2g-1 of standard_chain_table).
inline TwistWord g_block(int g) {
  if (g < 1) throw Error("BadParameter", "g_block needs genus >= 1");
  TwistWord w;
  for (int rep = 0; rep < 4 * g + 2; ++rep)
    for (int k = 0; k < 2 * g; ++k) w.letters.push_back({k, true});
  return w;
}

// ---- word serialization: "g=2\na1 b1 A1" (capital = inverse) ----

inline std::string word_to_string(const TwistWord& w, const CurveTable& table, int g) {
  std::ostringstream os;
  os << "g=" << g << "\n";
  bool first = true;
  for (const auto& l : w.letters) {
    std::string n = table.name[l.curve];
    if (!l.positive) n[0] = char(toupper(n[0]));
    os << (first ? "" : " ") << n;
    first = false;
  }
  os << "\n";
  return os.str();
}

inline std::pair<TwistWord, int> parse_word(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head.rfind("g=", 0) != 0) throw Error("Malformed", "expected genus header g=<int>");
  int g = std::stoi(head.substr(2));
  TwistWord w;
  std::string tok;
  while (is >> tok) {
    bool positive = islower((unsigned char)tok[0]);
    char fam = char(tolower(tok[0]));
    if (fam != 'a' && fam != 'b') throw Error("Malformed", "letter must be a<i> or b<i>");
    int idx = std::stoi(tok.substr(1)) - 1;
    if (idx < 0 || idx >= g) throw Error("Malformed", "letter index out of range");
    w.letters.push_back({2 * idx + (fam == 'b' ? 1 : 0), positive});
  }
  return {w, g};
}

// ---- symplectic basis extraction ----

namespace detail {

inline Int vec_pairing(const IMat& omega, const std::vector<Int>& u, const std::vector<Int>& v) {
  Int s = 0;
  for (int i = 0; i < omega.rows(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < omega.cols(); ++j)
      if (omega(i, j) != 0 && v[j] != 0) s += u[i] * omega(i, j) * v[j];
  }
  return s;
}

}  // namespace detail

// Change of basis P with P^T Omega P = J for a unimodular alternating
// integer form. Optionally seeds the first basis vector.
inline IMat symplectic_basis(const IMat& omega,
                             std::optional<std::vector<Int>> seed = std::nullopt) {
  int n = omega.rows();
  if (n % 2 != 0) throw Error("BadParameter", "alternating form of odd rank");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (omega(i, j) != -omega(j, i)) throw Error("BadParameter", "form is not alternating");
  std::vector<std::vector<Int>> pool;
  if (seed) pool.push_back(*seed);
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n);
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  std::vector<std::vector<Int>> basis;
  auto pair = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
    return detail::vec_pairing(omega, u, v);
  };
  while (int(basis.size()) < n) {
    // u: first pool vector with a nonzero pairing against the pool.
    int ui = -1, vi = -1;
    for (int i = 0; i < int(pool.size()) && ui < 0; ++i)
      for (int j = 0; j < int(pool.size()); ++j)
        if (i != j && pair(pool[i], pool[j]) != 0) { ui = i; vi = j; break; }
    if (ui < 0) throw Error("NotUnimodular", "form is degenerate on the remaining lattice");
    if (seed && basis.empty() && ui != 0) {
      // the seed must begin the basis
      ui = 0;
      vi = -1;
      for (int j = 1; j < int(pool.size()); ++j)
        if (pair(pool[0], pool[j]) != 0) { vi = j; break; }
      if (vi < 0) throw Error("NotUnimodular", "seed pairs to nothing");
    }
    std::vector<Int> u = pool[ui];
    {  // primitivize u (stays in the complement lattice)
      Int cu = 0;
      for (const Int& x : u) cu = boost::multiprecision::gcd(cu, x);
      if (cu > 1)
        for (Int& x : u) x /= cu;
    }
    // Euclid over the pool to make <u, v> = 1.
    std::vector<Int> v = pool[vi];
    Int gv = pair(u, v);
    for (int j = 0; j < int(pool.size()); ++j) {
      if (gv == 1 || gv == -1) break;
      if (j == ui || j == vi) continue;
      Int gj = pair(u, pool[j]);
      if (gj == 0) continue;
      // v <- v*x + pool[j]*y with x*gv + y*gj = gcd
      Int a = gv, b = gj, x0 = 1, y0 = 0, x1 = 0, y1 = 1;
      while (b != 0) {
        Int qq = a / b;
        a -= qq * b;
        std::swap(a, b);
        Int nx = x0 - qq * x1, ny = y0 - qq * y1;
        x0 = x1; y0 = y1; x1 = nx; y1 = ny;
      }
      for (int t = 0; t < n; ++t) v[t] = v[t] * x0 + pool[j][t] * y0;
      gv = pair(u, v);
      if (a != gv && a != -gv) throw Error("Internal", "euclid bookkeeping");
    }
    if (gv == 0) throw Error("NotUnimodular", "no dual partner");
    if (gv < 0) {
      for (auto& t : v) t = -t;
      gv = -gv;
    }
    if (gv != 1) throw Error("NotUnimodular", "pairing gcd exceeds 1 (form not unimodular?)");
    basis.push_back(u);
    basis.push_back(v);
    // project the pool onto the symplectic complement of (u, v)
    std::vector<std::vector<Int>> next;
    for (const auto& w : pool) {
      std::vector<Int> w2(n);
      Int wu = pair(w, u), wv = pair(w, v);
      bool nonzero = false;
      for (int t = 0; t < n; ++t) {
        w2[t] = w[t] - wv * u[t] + wu * v[t];
        nonzero |= (w2[t] != 0);
      }
      if (nonzero) next.push_back(std::move(w2));
    }
    pool = std::move(next);
  }
  IMat p(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) p(i, j) = basis[j][i];
  IMat check = p.transpose() * omega * p;
  if (check != symplectic_form(n / 2)) throw Error("Internal", "symplectic reduction failed");
  return p;
}

// ---- conjugator search ----

struct Conjugator {
  IMat action;      // S with S * chain_class(chain_index) = +-target
  int chain_index;  // which chain letter the relator is rotated around
};

namespace detail {

inline bool vec_eq_pm(const std::vector<Int>& a, const std::vector<Int>& b) {
  bool plus = true, minus = true;
  for (size_t i = 0; i < a.size(); ++i) {
    plus &= (a[i] == b[i]);
    minus &= (a[i] == -b[i]);
  }
  return plus || minus;
}

}  // namespace detail

// Breadth-first search over positive chain transvections (spec default);
// falls back to the constructive symplectic extension for classes the
// bounded search cannot reach. depth <= 1 disables conjugation entirely.
inline std::optional<Conjugator> find_conjugator(const std::vector<Int>& target, int g,
                                                 int depth) {
  for (int k = 0; k < 2 * g; ++k)
    if (detail::vec_eq_pm(target, chain_class(k, g))) return Conjugator{IMat::identity(2 * g), k};
  if (depth <= 1) return std::nullopt;

  // BFS tier, small genus only: alphabet of 2g chain transvections.
  if (g <= 3) {
    std::vector<IMat> gens;
    for (int k = 0; k < 2 * g; ++k) gens.push_back(transvection(chain_class(k, g), g).m);
    struct Node {
      std::vector<Int> v;
      int parent, gen;
    };
    std::vector<Node> nodes;
    std::map<std::vector<Int>, int> seen;
    for (int k = 0; k < 2 * g; ++k) {
      auto c = chain_class(k, g);
      if (seen.emplace(c, int(nodes.size())).second) nodes.push_back({c, -1, -(k + 1)});
    }
    size_t qi = 0;
    int dwords = 0;
    std::vector<int> level(nodes.size(), 0);
    while (qi < nodes.size() && int(nodes.size()) < 60000) {
      Node cur = nodes[qi];
      int lv = level[qi];
      if (lv >= depth) { ++qi; continue; }
      for (int ksel = 0; ksel < 2 * g; ++ksel) {
        std::vector<Int> nv = gens[ksel] * cur.v;
        if (!seen.emplace(nv, int(nodes.size())).second) continue;
        nodes.push_back({nv, int(qi), ksel});
        level.push_back(lv + 1);
        if (detail::vec_eq_pm(nv, target)) {
          // reconstruct S as the product of generators applied
          IMat s = IMat::identity(2 * g);
          int at = int(nodes.size()) - 1;
          while (nodes[at].parent >= 0) {
            s = s * gens[nodes[at].gen];  // applied last = leftmost
            at = nodes[at].parent;
          }
          int chain_k = -nodes[at].gen - 1;
          return Conjugator{std::move(s), chain_k};
        }
      }
      ++qi;
      (void)dwords;
    }
  }

  // Constructive tier: extend the target to a symplectic basis; the
  // resulting matrix sends e_0 = a1 to the target.
  std::vector<Int> t = target;
  bool zero = true;
  for (const Int& x : t) zero &= (x == 0);
  if (zero) return std::nullopt;
  Int content = 0;
  for (const Int& x : t) content = boost::multiprecision::gcd(content, x);
  if (content != 1) return std::nullopt;  // non-primitive: not an embedded curve class
  IMat s = symplectic_basis(symplectic_form(g), t);
  return Conjugator{std::move(s), 0};
}

// ---- positive inversion ----

struct InvertOptions {
  int depth = 6;             // conjugator budget
  int verify_max_rank = 8;   // run the exact identity check when 2g <= this
};

struct PositiveInversion {
  TwistWord word;
  bool verified = false;     // exact rho(word') rho(word) = I was checked
  int conjugators_used = 0;
};

// Rewrites the inverse of a positive word as a positive word. Throws
// Error("NoConjugatorFound") when a letter's class cannot be reached
// within the depth budget.
inline PositiveInversion invert_positively(const TwistWord& w, CurveTable& table, int g,
                                           const InvertOptions& opt = {}) {
  if (!w.all_positive()) throw Error("BadParameter", "input word must be positive");
  PositiveInversion out;
  const int L = 2 * g * (4 * g + 2);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const std::vector<Int>& cls = table.cls[it->curve];
    bool zero = true;
    for (const Int& x : cls) zero &= (x == 0);
    if (zero) throw Error("BadParameter", "cannot invert a null-homologous twist positively");
    auto conj = find_conjugator(cls, g, opt.depth);
    if (!conj) throw Error("NoConjugatorFound", "no conjugator within depth budget for a letter");
    if (!conj->action.is_identity()) ++out.conjugators_used;
    // Curve ids for the conjugated chain.
    std::vector<int> ids(2 * g);
    for (int k = 0; k < 2 * g; ++k) {
      if (conj->action.is_identity()) {
        ids[k] = k;  // standard chain curves head the table
      } else {
        std::vector<Int> c = conj->action * chain_class(k, g);
        ids[k] = table.add(std::move(c), "conj_" + chain_name(k) + "_" +
                                             std::to_string(table.cls.size()));
      }
    }
    // Rotate the relator (c_0 ... c_{2g-1})^{4g+2} around the first
    // occurrence of chain index conj->chain_index (position = that index).
    int m = conj->chain_index;
    for (int t = 1; t < L; ++t) out.word.letters.push_back({ids[(m + t) % (2 * g)], true});
  }
  if (2 * g <= opt.verify_max_rank) {
    IMat prod = rho(out.word, table, g).m * rho(w, table, g).m;
    if (!prod.is_identity()) throw Error("Internal", "positive inversion failed certification");
    out.verified = true;
  }
  return out;
}

}  // namespace steinkit
