#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorbit/polynomial.hpp"
#include "nilorbit/roots.hpp"

namespace nilorbit {

template <typename K>
class Matrix {
 public:
  Matrix(int rows, int cols)
      : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols, K(0)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("bad matrix shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = K(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  K& at(int r, int c) { return d_[index(r, c)]; }
  const K& at(int r, int c) const { return d_[index(r, c)]; }

  bool operator==(const Matrix&) const = default;

  bool is_zero() const {
    for (const K& v : d_)
      if (!(v == K(0))) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (size_t k = 0; k < d_.size(); ++k) m.d_[k] = m.d_[k] + o.d_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (size_t k = 0; k < d_.size(); ++k) m.d_[k] = m.d_[k] - o.d_[k];
    return m;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (K& v : m.d_) v = -v;
    return m;
  }
  Matrix operator*(const K& s) const {
    Matrix m = *this;
    for (K& v : m.d_) v = v * s;
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const K& v = at(i, k);
        if (v == K(0)) continue;
        for (int j = 0; j < o.c_; ++j) m.at(i, j) = m.at(i, j) + v * o.at(k, j);
      }
    return m;
  }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  template <typename K2>
  Matrix<K2> cast() const {
    Matrix<K2> m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(i, j) = K2(at(i, j));
    return m;
  }

 private:
  size_t index(int r, int c) const {
    if (r < 0 || r >= r_ || c < 0 || c >= c_)
      throw std::out_of_range("matrix index");
    return static_cast<size_t>(r) * c_ + c;
  }
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }

  int r_, c_;
  std::vector<K> d_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Poly>;

template <typename K>
Matrix<K> bracket(const Matrix<K>& a, const Matrix<K>& b) {
  return a * b - b * a;
}

inline int algebra_matrix_size(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank;
  }
  return 0;
}

// The forms are antidiagonal, so the Borel is upper triangular. Coordinates
// reverse: e_m names the (n+1-m)-th defining basis weight, which makes every
// positive root vector an upper-triangular elementary combination.
namespace detail {

inline int mirror(int M, int k) { return M + 1 - k; }

// Entry positions are 1-based here; the public matrix API is 0-based.
inline void put(QMatrix& m, int r, int c, long long v) {
  m.at(r - 1, c - 1) = Rational(v);
}

}  // namespace detail

inline QMatrix root_vector(const RootSystemType& t, const Root& root) {
  if (!is_root(root, t))
    throw std::invalid_argument("not a root of " + t.to_string() + ": " + root.to_string());
  int M = algebra_matrix_size(t);
  int n = t.rank;
  QMatrix m(M, M);
  RootShape s = classify(root);

  if (t.family == Family::A) {
    int N = M;
    int rj = N + 1 - s.j, ri = N + 1 - s.i;  // e_j - e_i -> E_{rj, ri}
    if (!s.negative)
      detail::put(m, rj, ri, 1);
    else
      detail::put(m, ri, rj, 1);
    return m;
  }

  auto io = [&](int k) { return detail::mirror(M, k); };
  // epsilon indices of the e-cordinates; p < q whenever i < j.
  int p = s.j ? n + 1 - s.j : 0;
  int q = s.i ? n + 1 - s.i : 0;

  switch (s.kind) {
    case RootKind::diff:
      // +-(eps_p - eps_q), p < q
      if (!s.negative) {
        detail::put(m, p, q, 1);
        detail::put(m, io(q), io(p), -1);
      } else {
        detail::put(m, q, p, 1);
        detail::put(m, io(p), io(q), -1);
      }
      return m;
    case RootKind::sum:
      // +-(eps_p + eps_q), p < q
      if (t.family == Family::C) {
        if (!s.negative) {
          detail::put(m, p, io(q), 1);
          detail::put(m, q, io(p), 1);
        } else {
          detail::put(m, io(q), p, 1);
          detail::put(m, io(p), q, 1);
        }
      } else {
        if (!s.negative) {
          detail::put(m, p, io(q), 1);
          detail::put(m, q, io(p), -1);
        } else {
          detail::put(m, io(q), p, 1);
          detail::put(m, io(p), q, -1);
        }
      }
      return m;
    case RootKind::single: {
      // +-eps_p in so(2n+1); the middle column is n+1.
      int mid = n + 1;
      int pp = n + 1 - s.j;
      if (!s.negative) {
        detail::put(m, pp, mid, 1);
        detail::put(m, mid, io(pp), -1);
      } else {
        detail::put(m, mid, pp, 1);
        detail::put(m, io(pp), mid, -1);
      }
      return m;
    }
    case RootKind::twice: {
      int pp = n + 1 - s.j;
      if (!s.negative)
        detail::put(m, pp, io(pp), 1);
      else
        detail::put(m, io(pp), pp, 1);
      return m;
    }
    case RootKind::none: break;
  }
  throw std::logic_error("unreachable");
}

inline std::vector<QMatrix> cartan_basis(const RootSystemType& t) {
  int M = algebra_matrix_size(t);
  std::vector<QMatrix> out;
  if (t.family == Family::A) {
    for (int k = 1; k < M; ++k) {
      QMatrix h(M, M);
      detail::put(h, k, k, 1);
      detail::put(h, k + 1, k + 1, -1);
      out.push_back(std::move(h));
    }
    return out;
  }
  for (int p = 1; p <= t.rank; ++p) {
    QMatrix h(M, M);
    detail::put(h, p, p, 1);
    detail::put(h, detail::mirror(M, p), detail::mirror(M, p), -1);
    out.push_back(std::move(h));
  }
  return out;
}

// Defining relations: trace zero for sl, X^T J + J X = 0 for the bilinear
// form J of the family.
inline bool is_in_algebra(const RootSystemType& t, const QMatrix& x) {
  int M = algebra_matrix_size(t);
  if (x.rows() != M || x.cols() != M) return false;
  if (t.family == Family::A) {
    Rational tr(0);
    for (int k = 0; k < M; ++k) tr += x.at(k, k);
    return tr.is_zero();
  }
  QMatrix j(M, M);
  for (int k = 1; k <= M; ++k) {
    long long v = 1;
    if (t.family == Family::C && k > t.rank) v = -1;
    detail::put(j, k, detail::mirror(M, k), v);
  }
  return (x.transpose() * j + j * x).is_zero();
}

inline int nilpotency_order(const QMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("square matrix expected");
  QMatrix p = x;
  for (int k = 1; k <= x.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * x;
  }
  throw std::invalid_argument("matrix is not nilpotent");
}

// Exp(c X) Y Exp(-c X) for nilpotent X, exact in the scalar ring of Y.
template <typename K>
Matrix<K> exp_adjoint(const K& c, const QMatrix& x, const Matrix<K>& y) {
  int ord = nilpotency_order(x);
  Matrix<K> xk = x.template cast<K>();
  Matrix<K> fwd = Matrix<K>::identity(x.rows());
  Matrix<K> bwd = fwd;
  Matrix<K> pow = fwd;
  K cpow(1);
  Rational fact(1);
  for (int k = 1; k < ord; ++k) {
    pow = pow * xk;
    cpow = cpow * c;
    fact *= Rational(k);
    K coeff = cpow * K(Rational(1) / fact);
    fwd = fwd + pow * coeff;
    bwd = bwd + pow * (coeff * K(k % 2 == 0 ? Rational(1) : Rational(-1)));
  }
  return fwd * y * bwd;
}

// Decomposition of an element of the root-space span over the root vectors.
// Distinct root vectors occupy disjoint entry sets, so each coefficient is
// read off a canonical entry; the reconstruction is then verified exactly.
// Throws if y has any component outside the root spaces.
template <typename K>
std::map<Root, K> weight_decomposition(const RootSystemType& t, const Matrix<K>& y) {
  std::map<Root, K> out;
  Matrix<K> rebuilt(y.rows(), y.cols());
  std::vector<Root> all = positive_roots(t);
  {
    std::vector<Root> neg;
    for (const Root& r : all) neg.push_back(-r);
    all.insert(all.end(), neg.begin(), neg.end());
  }
  for (const Root& r : all) {
    QMatrix xv = root_vector(t, r);
    int cr = -1, cc = -1;
    for (int i = 0; cr < 0 && i < xv.rows(); ++i)
      for (int j = 0; j < xv.cols(); ++j)
        if (!xv.at(i, j).is_zero()) {
          cr = i;
          cc = j;
          break;
        }
    K coeff = y.at(cr, cc) * K(Rational(1) / xv.at(cr, cc));
    if (coeff == K(0)) continue;
    out.emplace(r, coeff);
    rebuilt = rebuilt + xv.template cast<K>() * coeff;
  }
  if (!(rebuilt == y))
    throw std::invalid_argument("element is not in the span of the root spaces");
  return out;
}

template <typename K>
std::set<Root> weight_support(const RootSystemType& t, const Matrix<K>& y) {
  std::set<Root> out;
  for (const auto& [r, c] : weight_decomposition(t, y)) out.insert(r);
  return out;
}

inline int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t p = rank;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    Rational inv = Rational(1) / m[rank][col];
    for (size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// dim B.x as the rank of y -> [y, x] on the Borel (positive root vectors
// plus the Cartan), computed by exact elimination.
inline int orbit_dimension(const RootSystemType& t, const QMatrix& x) {
  for (const auto& [r, c] : weight_decomposition(t, x))
    if (classify(r).negative)
      throw std::invalid_argument("orbit representative must lie in the nilradical");
  std::vector<QMatrix> basis;
  for (const Root& r : positive_roots(t)) basis.push_back(root_vector(t, r));
  for (QMatrix& h : cartan_basis(t)) basis.push_back(std::move(h));
  std::vector<std::vector<Rational>> rows;
  for (const QMatrix& b : basis) {
    QMatrix br = bracket(b, x);
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(br.rows()) * br.cols());
    for (int i = 0; i < br.rows(); ++i)
      for (int j = 0; j < br.cols(); ++j) flat.push_back(br.at(i, j));
    rows.push_back(std::move(flat));
  }
  return matrix_rank(std::move(rows));
}

}  // namespace nilorbit
