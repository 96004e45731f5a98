// Handle calculus on a surgery presentation: linking matrix, Euler
// characteristic, exact signature, c1^2, the Hopf invariant
// h = c1^2 - 2*chi - 3*sigma, the contact-invariant grading -h/4 - 1/2,
// and the distinctness verdict for pairs of Spin^c structures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinkit/front.hpp"
#include "steinkit/matrix.hpp"

namespace steinkit {

struct SurgeryPresentation {
  FrontDiagram front;
  // Indices of non-dotted (2-handle) components, in component order.
  std::vector<int> two_handles;
  int one_handle_count = 0;

  static SurgeryPresentation from_front(FrontDiagram f) {
    SurgeryPresentation p{std::move(f), {}, 0};
    for (int c = 0; c < p.front.components(); ++c) {
      if (p.front.dotted(c)) ++p.one_handle_count;
      else p.two_handles.push_back(c);
    }
    return p;
  }

  // Resolved framing of the k-th 2-handle (default tb - 1).
  long long framing_of(int k, const ClassicalInvariants& ci) const {
    int c = two_handles[k];
    if (front.framing()[c]) return *front.framing()[c];
    return ci.comp[c].tb - 1;
  }

  // True when every 2-handle uses the Stein framing tb - 1.
  bool is_stein(const ClassicalInvariants& ci) const {
    for (int k = 0; k < int(two_handles.size()); ++k) {
      int c = two_handles[k];
      if (front.framing()[c] && *front.framing()[c] != ci.comp[c].tb - 1) return false;
    }
    return true;
  }
};

struct ManifoldInvariants {
  IMat linking_matrix;
  long long euler_char = 1;
  int signature = 0;
  int b2_plus = 0, b2_minus = 0, b2_zero = 0;
  Int determinant = 0;
};

inline ManifoldInvariants linking_matrix(const SurgeryPresentation& p) {
  ClassicalInvariants ci = classical_invariants(p.front);
  int m = int(p.two_handles.size());
  IMat q(m, m);
  for (int i = 0; i < m; ++i) {
    q(i, i) = p.framing_of(i, ci);
    for (int j = i + 1; j < m; ++j) {
      Int l = p.front.linking(p.two_handles[i], p.two_handles[j]);
      q(i, j) = l;
      q(j, i) = l;
    }
  }
  ManifoldInvariants inv;
  inv.linking_matrix = q;
  inv.euler_char = 1 - p.one_handle_count + m;
  Inertia in = symmetric_inertia(q);
  inv.signature = in.signature();
  inv.b2_plus = in.positive;
  inv.b2_minus = in.negative;
  inv.b2_zero = in.zero;
  inv.determinant = m == 0 ? Int(1) : determinant(q);
  return inv;
}

struct SpincOnW {
  std::vector<Int> rotation_vector;  // <c1, handle class> per 2-handle
};

struct C1Squared {
  std::optional<Rat> value;  // empty = undefined (r not in the image of Q)
  std::string reason;
};

// Solves Q x = r over the rationals and returns r^T x. When Q is singular
// the value exists iff r lies in the image, and is then independent of the
// solution choice (checked against a kernel shift).
inline C1Squared c1_squared(const IMat& q, const std::vector<Int>& r) {
  int n = q.rows();
  if (int(r.size()) != n) throw Error("SizeMismatch", "rotation vector length");
  if (n == 0) return {Rat(0), ""};
  std::vector<Rat> rr(n);
  for (int i = 0; i < n; ++i) rr[i] = Rat(r[i]);
  LinearSolution sol = solve_rational(to_rational(q), rr);
  if (!sol.consistent)
    return {std::nullopt, "rotation vector is not in the image of the linking form"};
  auto dot = [&](const std::vector<Rat>& x) {
    Rat s = 0;
    for (int i = 0; i < n; ++i) s += rr[i] * x[i];
    return s;
  };
  Rat val = dot(sol.particular);
  if (!sol.kernel.empty()) {
    std::vector<Rat> shifted = sol.particular;
    for (int i = 0; i < n; ++i) shifted[i] += sol.kernel[0][i];
    if (dot(shifted) != val) throw Error("Internal", "c1^2 depends on the solution choice");
  }
  return {val, ""};
}

struct ContactHomotopyData {
  Rat hopf_invariant;  // h = c1^2 - 2 chi - 3 sigma
  Rat grading;         // -h/4 - 1/2
};

inline std::optional<ContactHomotopyData> hopf_and_grading(const ManifoldInvariants& inv,
                                                           const C1Squared& c1sq) {
  if (!c1sq.value) return std::nullopt;
  ContactHomotopyData d;
  d.hopf_invariant = *c1sq.value - 2 * Rat(inv.euler_char) - 3 * Rat(inv.signature);
  d.grading = -d.hopf_invariant / 4 - Rat(1, 2);
  return d;
}

inline Rat dimension_shift(const Rat& c1sq, const Rat& chi, const Rat& sigma) {
  return (c1sq - 2 * chi - 3 * sigma) / 4;
}

// One-directional distinctness verdict: unequal rotation vectors mean
// non-isomorphic Spin^c structures, hence distinct contact invariants;
// equal vectors allow no conclusion.
struct MainVerdict {
  enum Kind { DistinctContactInvariants, SameSpinc } kind;
  bool boundary_restrictions_agree;  // r1 = r2 modulo the image of Q over Z
  std::string text;
};

inline MainVerdict theorem_main_verdict(const SpincOnW& s1, const SpincOnW& s2, const IMat& q) {
  if (s1.rotation_vector.size() != s2.rotation_vector.size())
    throw Error("SizeMismatch", "Spin^c structures live on different presentations");
  int n = int(s1.rotation_vector.size());
  std::vector<Int> diff(n);
  for (int i = 0; i < n; ++i) diff[i] = s1.rotation_vector[i] - s2.rotation_vector[i];
  bool equal = true;
  for (const Int& d : diff)
    if (d != 0) { equal = false; break; }
  MainVerdict v;
  v.boundary_restrictions_agree = equal || solvable_over_integers(q, diff);
  if (equal) {
    v.kind = MainVerdict::SameSpinc;
    v.text = "identical rotation vectors: same Spin^c structure, no conclusion";
  } else {
    v.kind = MainVerdict::DistinctContactInvariants;
    v.text = "non-isomorphic Spin^c structures: the induced contact invariants are distinct";
  }
  return v;
}

}  // namespace steinkit
