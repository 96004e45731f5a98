// Small dense matrices over exact scalars, plus the handful of exact
// linear-algebra routines the topology layers need:
//
//  * rational linear solve (particular solution + kernel basis),
//  * integer characteristic polynomial (Faddeev-LeVerrier),
//  * inertia of a symmetric integer matrix via Descartes sign counting
//    on the characteristic polynomial (all roots are real),
//  * Smith-form style integer solvability of A x = b.
//
// Matrices here are tiny (linking forms, 2g x 2g symplectic actions), so
// clarity and exactness win over sparsity tricks.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "steinkit/exact.hpp"

namespace steinkit {

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o(k, j) == 0) continue;
          r(i, j) += aik * o(k, j);
        }
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    std::vector<T> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
    return true;
  }

  T trace() const {
    T t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_rational(const IMat& m) {
  QMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// -------- rational linear systems --------

struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> particular;            // one solution, when consistent
  std::vector<std::vector<Rat>> kernel;   // basis of the null space of A
};

// Gauss-Jordan over the rationals.
inline LinearSolution solve_rational(const QMat& a, const std::vector<Rat>& b) {
  int n = a.rows(), m = a.cols();
  QMat w(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) w(i, j) = a(i, j);
    w(i, m) = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (w(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j <= m; ++j) std::swap(w(piv, j), w(row, j));
    Rat inv = w(row, col);
    for (int j = 0; j <= m; ++j) w(row, j) /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || w(i, col) == 0) continue;
      Rat f = w(i, col);
      for (int j = 0; j <= m; ++j) w(i, j) -= f * w(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  LinearSolution sol;
  for (int i = row; i < n; ++i)
    if (w(i, m) != 0) return sol;  // inconsistent
  sol.consistent = true;
  sol.particular.assign(m, Rat(0));
  for (int r = 0; r < int(pivot_col.size()); ++r)
    sol.particular[pivot_col[r]] = w(r, m);
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> k(m, Rat(0));
    k[free] = 1;
    for (int r = 0; r < int(pivot_col.size()); ++r) k[pivot_col[r]] = -w(r, free);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

// -------- characteristic polynomial and inertia --------

// Coefficients c[0..n] of det(x I - A) = sum c[k] x^k, exact over Z.
inline std::vector<Int> char_poly(const IMat& a) {
  int n = a.rows();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IMat m = IMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    IMat am = a * m;
    Int t = am.trace();
    // Faddeev-LeVerrier: the division by k is exact for integer input.
    Int ck = -t / k;
    if (ck * k != -t) throw Error("Internal", "charpoly: non-exact division");
    c[n - k] = ck;
    m = am;
    for (int i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
  int rank() const { return positive + negative; }
};

// Inertia of a symmetric integer matrix. All eigenvalues are real, so
// Descartes' rule applied to the characteristic polynomial counts them
// exactly (sign variations = number of positive roots with multiplicity).
inline Inertia symmetric_inertia(const IMat& q) {
  int n = q.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (q(i, j) != q(j, i)) throw Error("NotSymmetric", "inertia of a non-symmetric matrix");
  std::vector<Int> c = char_poly(q);
  Inertia in;
  int low = 0;
  while (low <= n && c[low] == 0) ++low;
  in.zero = low;
  auto variations = [&](bool flip_odd) {
    int var = 0, prev = 0;
    for (int k = low; k <= n; ++k) {
      Int v = c[k];
      if (flip_odd && (k % 2 == 1)) v = -v;
      int s = sign_of(v);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  };
  in.positive = variations(false);
  in.negative = variations(true);  // p(-x)
  return in;
}

inline Int determinant(const IMat& q) {
  std::vector<Int> c = char_poly(q);
  // det(A) = (-1)^n * c[0] since det(xI - A)|_{x=0} = det(-A).
  Int d = c[0];
  if (q.rows() % 2 == 1) d = -d;
  return d;
}

// Inverse of a unimodular integer matrix (exact; throws if not integral).
inline IMat inverse_unimodular(const IMat& m) {
  int n = m.rows();
  QMat w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = Rat(m(i, j));
    w(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (w(i, col) != 0) { piv = i; break; }
    if (piv < 0) throw Error("Singular", "matrix is singular");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(col, j));
    Rat inv = w(col, col);
    for (int j = 0; j < 2 * n; ++j) w(col, j) /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w(i, col) == 0) continue;
      Rat f = w(i, col);
      for (int j = 0; j < 2 * n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  IMat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(w(i, n + j))) throw Error("NotUnimodular", "inverse is not integral");
      r(i, j) = numerator(w(i, n + j));
    }
  return r;
}

// -------- integer solvability --------

// Decides whether A x = b has an integer solution, via unimodular row/column
// reduction to diagonal (Smith) form: U A V = D with x = V y, D y = U b.
inline bool solvable_over_integers(const IMat& a_in, const std::vector<Int>& b_in) {
  int n = a_in.rows(), m = a_in.cols();
  IMat a = a_in;
  std::vector<Int> b = b_in;
  int row = 0, col = 0;
  while (row < n && col < m) {
    int pi = -1, pj = -1;
    for (int i = row; i < n && pi < 0; ++i)
      for (int j = col; j < m; ++j)
        if (a(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    for (int j = 0; j < m; ++j) std::swap(a(row, j), a(pi, j));
    std::swap(b[row], b[pi]);
    for (int i = 0; i < n; ++i) std::swap(a(i, col), a(i, pj));
    // Clear the pivot row and column by repeated remainder steps.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = row + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        Int f = a(i, col) / a(row, col);
        for (int j = 0; j < m; ++j) a(i, j) -= f * a(row, j);
        b[i] -= f * b[row];
        if (a(i, col) != 0) {  // swap to continue the gcd
          for (int j = 0; j < m; ++j) std::swap(a(i, j), a(row, j));
          std::swap(b[i], b[row]);
          changed = true;
        }
      }
      for (int j = col + 1; j < m; ++j) {
        if (a(row, j) == 0) continue;
        Int f = a(row, j) / a(row, col);
        for (int i = 0; i < n; ++i) a(i, j) -= f * a(i, col);
        if (a(row, j) != 0) {
          for (int i = 0; i < n; ++i) std::swap(a(i, j), a(i, col));
          changed = true;
        }
      }
    }
    ++row; ++col;
  }
  for (int i = 0; i < row; ++i)
    if (b[i] % a(i, i) != 0) return false;
  for (int i = row; i < n; ++i)
    if (b[i] != 0) return false;
  return true;
}

}  // namespace steinkit
