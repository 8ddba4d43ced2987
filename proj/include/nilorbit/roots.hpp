#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorbit/rational.hpp"

namespace nilorbit {

// Classical families. Coordinates are the e_i basis of the defining weight
// lattice: family A on rank+1 coordinates, B/C/D on rank coordinates.
//
// Positive roots:
//   A_n: e_j - e_i            (1 <= i < j <= n+1)
//   B_n: e_j +- e_i (i < j),  e_i
//   C_n: e_j +- e_i (i < j),  2e_i
//   D_n: e_j +- e_i (i < j)
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    default: throw std::invalid_argument(std::string("unknown family: ") + c);
  }
}

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  RootSystemType() = default;
  RootSystemType(Family f, int r) : family(f), rank(r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    if (f == Family::D && r < 2)
      throw std::invalid_argument("family D needs rank >= 2");
  }

  // Number of e_i coordinates a root of this system carries.
  int coord_dim() const { return family == Family::A ? rank + 1 : rank; }

  int positive_root_count() const {
    switch (family) {
      case Family::A: return rank * (rank + 1) / 2;
      case Family::B:
      case Family::C: return rank * rank;
      case Family::D: return rank * (rank - 1);
    }
    return 0;
  }

  std::string to_string() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
  }

  bool operator==(const RootSystemType&) const = default;
  auto operator<=>(const RootSystemType&) const = default;
};

// A vector in the root lattice, stored as integer coefficients over e_1..e_N.
// Total order is lexicographic on the coefficient vector; label serialization
// and all deterministic orderings rely on it.
class Root {
 public:
  explicit Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("empty root vector");
  }

  static Root zero(int dim) { return Root(std::vector<int>(dim, 0)); }
  // e_j - e_i, requires i < j.
  static Root diff(int dim, int i, int j) {
    Root r = zero(dim);
    r.set(i, -1);
    r.set(j, 1);
    return r;
  }
  // e_j + e_i, requires i < j.
  static Root sum(int dim, int i, int j) {
    Root r = zero(dim);
    r.set(i, 1);
    r.set(j, 1);
    return r;
  }
  static Root single(int dim, int i) {
    Root r = zero(dim);
    r.set(i, 1);
    return r;
  }
  static Root twice(int dim, int i) {
    Root r = zero(dim);
    r.set(i, 2);
    return r;
  }

  int dim() const { return static_cast<int>(c_.size()); }
  int coeff(int i) const {  // 1-based coordinate index
    return c_.at(static_cast<size_t>(i - 1));
  }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
  }

  Root operator+(const Root& o) const {
    check_dim(o);
    Root r = *this;
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
  }
  Root operator-(const Root& o) const {
    check_dim(o);
    Root r = *this;
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
    return r;
  }
  Root operator-() const {
    Root r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;

  std::string to_string() const;

 private:
  void set(int i, int v) {
    if (i < 1 || i > dim()) throw std::invalid_argument("root index out of range");
    c_[static_cast<size_t>(i - 1)] = v;
  }
  void check_dim(const Root& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("root dimension mismatch");
  }

  std::vector<int> c_;
};

enum class RootKind { diff, sum, single, twice, none };

// Shape of a lattice vector. For pair kinds i < j; for single/twice the index
// sits in j and i is 0. negative marks the negative of the listed shape.
struct RootShape {
  RootKind kind = RootKind::none;
  int i = 0;
  int j = 0;
  bool negative = false;
};

inline RootShape classify(const Root& r) {
  int n1 = 0, n2 = 0, v1 = 0, v2 = 0;
  for (int k = 1; k <= r.dim(); ++k) {
    int v = r.coeff(k);
    if (v == 0) continue;
    if (n1 == 0) {
      n1 = k;
      v1 = v;
    } else if (n2 == 0) {
      n2 = k;
      v2 = v;
    } else {
      return {};
    }
  }
  RootShape s;
  if (n1 == 0) return {};
  if (n2 == 0) {
    if (v1 == 1 || v1 == -1) {
      s.kind = RootKind::single;
    } else if (v1 == 2 || v1 == -2) {
      s.kind = RootKind::twice;
    } else {
      return {};
    }
    s.j = n1;
    s.negative = v1 < 0;
    return s;
  }
  if ((v1 != 1 && v1 != -1) || (v2 != 1 && v2 != -1)) return {};
  s.i = n1;
  s.j = n2;
  if (v1 == v2) {
    s.kind = RootKind::sum;
    s.negative = v2 < 0;
  } else {
    // Sign of the higher coordinate decides positivity of e_j - e_i.
    s.kind = RootKind::diff;
    s.negative = v2 < 0;
  }
  return s;
}

inline bool is_root(const Root& r, const RootSystemType& t) {
  if (r.dim() != t.coord_dim()) return false;
  RootShape s = classify(r);
  switch (s.kind) {
    case RootKind::diff: return true;
    case RootKind::sum: return t.family != Family::A;
    case RootKind::single: return t.family == Family::B;
    case RootKind::twice: return t.family == Family::C;
    case RootKind::none: return false;
  }
  return false;
}

inline bool is_positive_root(const Root& r, const RootSystemType& t) {
  return is_root(r, t) && !classify(r).negative;
}
inline bool is_negative_root(const Root& r, const RootSystemType& t) {
  return is_root(r, t) && classify(r).negative;
}

inline std::string Root::to_string() const {
  RootShape s = classify(*this);
  std::string body;
  switch (s.kind) {
    case RootKind::diff:
      body = "e" + std::to_string(s.j) + "-e" + std::to_string(s.i);
      break;
    case RootKind::sum:
      body = "e" + std::to_string(s.j) + "+e" + std::to_string(s.i);
      break;
    case RootKind::single:
      body = "e" + std::to_string(s.j);
      break;
    case RootKind::twice:
      body = "2e" + std::to_string(s.j);
      break;
    case RootKind::none: {
      std::string raw = "(";
      for (int k = 1; k <= dim(); ++k) {
        if (k > 1) raw += ",";
        raw += std::to_string(coeff(k));
      }
      return raw + ")";
    }
  }
  return s.negative ? "-(" + body + ")" : body;
}

// Fixed order: pair roots by (j, i, minus-before-plus), then the singles by
// index. Family A emits e_j - e_i by (j, i).
inline std::vector<Root> positive_roots(const RootSystemType& t) {
  int N = t.coord_dim();
  std::vector<Root> out;
  out.reserve(static_cast<size_t>(t.positive_root_count()));
  for (int j = 2; j <= N; ++j)
    for (int i = 1; i < j; ++i) {
      out.push_back(Root::diff(N, i, j));
      if (t.family != Family::A) out.push_back(Root::sum(N, i, j));
    }
  if (t.family == Family::B)
    for (int i = 1; i <= N; ++i) out.push_back(Root::single(N, i));
  if (t.family == Family::C)
    for (int i = 1; i <= N; ++i) out.push_back(Root::twice(N, i));
  return out;
}

// Simple roots in conventional order: the distinguished short/long/fork root
// first where present, then the chain e_{i+1} - e_i.
inline std::vector<Root> simple_roots(const RootSystemType& t) {
  int N = t.coord_dim();
  std::vector<Root> out;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < N; ++i) out.push_back(Root::diff(N, i, i + 1));
      break;
    case Family::B:
      out.push_back(Root::single(N, 1));
      for (int i = 1; i < N; ++i) out.push_back(Root::diff(N, i, i + 1));
      break;
    case Family::C:
      out.push_back(Root::twice(N, 1));
      for (int i = 1; i < N; ++i) out.push_back(Root::diff(N, i, i + 1));
      break;
    case Family::D:
      out.push_back(Root::sum(N, 1, 2));
      for (int i = 1; i < N; ++i) out.push_back(Root::diff(N, i, i + 1));
      break;
  }
  return out;
}

inline Root maximal_root(const RootSystemType& t) {
  int N = t.coord_dim();
  switch (t.family) {
    case Family::A: return Root::diff(N, 1, N);
    case Family::B: return N >= 2 ? Root::sum(N, N - 1, N) : Root::single(N, 1);
    case Family::C: return Root::twice(N, N);
    case Family::D: return Root::sum(N, N - 1, N);
  }
  throw std::logic_error("unreachable");
}

// alpha and beta are strongly orthogonal when they are distinct up to sign
// and neither their sum nor their difference is a root.
inline bool is_strongly_orthogonal(const Root& a, const Root& b,
                                   const RootSystemType& t) {
  if (!is_root(a, t) || !is_root(b, t))
    throw std::invalid_argument("strong orthogonality needs roots of the system");
  if (a == b || a == -b) return false;
  return !is_root(a + b, t) && !is_root(a - b, t);
}

// Disjoint index supports.
inline bool is_disjoint(const Root& a, const Root& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("root dimension mismatch");
  for (int k = 1; k <= a.dim(); ++k)
    if (a.coeff(k) != 0 && b.coeff(k) != 0) return false;
  return true;
}

namespace detail {

// Solves M x = y exactly, M given by columns. Throws if inconsistent.
inline std::vector<Rational> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                           const std::vector<Rational>& y) {
  size_t rows = y.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (size_t c = 0; c < ncols; ++c)
    for (size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
  for (size_t r = 0; r < rows; ++r) m[r][ncols] = y[r];

  std::vector<int> pivot_col_of_row(rows, -1);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t c = col; c <= ncols; ++c) m[row][c] *= inv;
    for (size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == row || m[r2][col].is_zero()) continue;
      Rational f = m[r2][col];
      for (size_t c = col; c <= ncols; ++c) m[r2][c] -= f * m[row][c];
    }
    pivot_col_of_row[row] = static_cast<int>(col);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (!m[r][ncols].is_zero())
      throw std::invalid_argument("vector outside the simple-root span");

  std::vector<Rational> x(ncols, Rational(0));
  for (size_t r = 0; r < row; ++r)
    x[static_cast<size_t>(pivot_col_of_row[r])] = m[r][ncols];
  return x;
}

}  // namespace detail

// Expansion of gamma over the simple roots, as integers.
inline std::vector<int> simple_root_coefficients(const RootSystemType& t,
                                                 const Root& gamma) {
  if (gamma.dim() != t.coord_dim())
    throw std::invalid_argument("root dimension mismatch");
  std::vector<std::vector<Rational>> cols;
  for (const Root& a : simple_roots(t)) {
    std::vector<Rational> col;
    for (int k = 1; k <= a.dim(); ++k) col.push_back(Rational(a.coeff(k)));
    cols.push_back(std::move(col));
  }
  std::vector<Rational> y;
  for (int k = 1; k <= gamma.dim(); ++k) y.push_back(Rational(gamma.coeff(k)));
  std::vector<Rational> x = detail::solve_columns(cols, y);
  std::vector<int> out;
  out.reserve(x.size());
  for (const Rational& v : x) {
    if (!v.is_integer())
      throw std::invalid_argument("non-integral simple-root expansion");
    out.push_back(static_cast<int>(v.num()));
  }
  return out;
}

// An abelian nilradical m of a maximal parabolic: the deleted simple root
// carries coefficient 1 in the maximal root.
struct NilradicalId {
  RootSystemType type;
  Root simple;

  NilradicalId(RootSystemType t, Root s) : type(t), simple(std::move(s)) {}

  std::string to_string() const { return simple.to_string(); }
  bool operator==(const NilradicalId&) const = default;
};

inline std::vector<NilradicalId> abelian_nilradicals(const RootSystemType& t) {
  if (t.family == Family::D && t.rank < 3)
    throw std::invalid_argument("family D nilradicals need rank >= 3");
  Root theta = maximal_root(t);
  std::vector<int> k = simple_root_coefficients(t, theta);
  std::vector<Root> delta = simple_roots(t);
  // Report in positive-root order, which matches the conventional listing.
  std::vector<Root> pos = positive_roots(t);
  std::vector<std::pair<size_t, Root>> picked;
  for (size_t s = 0; s < delta.size(); ++s) {
    if (k[s] != 1) continue;
    auto it = std::find(pos.begin(), pos.end(), delta[s]);
    picked.emplace_back(static_cast<size_t>(it - pos.begin()), delta[s]);
  }
  std::sort(picked.begin(), picked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<NilradicalId> out;
  for (auto& [_, r] : picked) out.emplace_back(t, r);
  return out;
}

inline bool is_abelian_nilradical(const NilradicalId& id) {
  try {
    for (const NilradicalId& cand : abelian_nilradicals(id.type))
      if (cand.simple == id.simple) return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
  return false;
}

// Positive roots whose expansion uses the deleted simple root. For an
// abelian nilradical the coefficient there is exactly 1.
inline std::vector<Root> nilradical_positive_roots(const NilradicalId& id) {
  if (!is_abelian_nilradical(id))
    throw std::invalid_argument("not an abelian nilradical: " + id.to_string());
  std::vector<Root> delta = simple_roots(id.type);
  size_t slot = 0;
  while (delta[slot] != id.simple) ++slot;
  std::vector<Root> out;
  for (const Root& g : positive_roots(id.type)) {
    std::vector<int> k = simple_root_coefficients(id.type, g);
    if (k[slot] >= 1) out.push_back(g);
  }
  return out;
}

// Parses "e3-e1", "e3+e1", "e4", "2e4".
inline Root parse_root(const std::string& text, int dim) {
  auto fail = [&]() -> Root {
    throw std::invalid_argument("cannot parse root: " + text);
  };
  auto read_index = [&](size_t& pos) -> int {
    if (pos >= text.size() || text[pos] != 'e') return -1;
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return -1;
    return std::stoi(text.substr(start, pos - start));
  };
  size_t pos = 0;
  bool doubled = false;
  if (!text.empty() && text[0] == '2') {
    doubled = true;
    pos = 1;
  }
  int j = read_index(pos);
  if (j < 1 || j > dim) return fail();
  if (pos == text.size()) {
    if (doubled) return Root::twice(dim, j);
    return Root::single(dim, j);
  }
  if (doubled) return fail();
  char op = text[pos++];
  int i = read_index(pos);
  if (pos != text.size() || i < 1 || i > dim || i >= j) return fail();
  if (op == '-') return Root::diff(dim, i, j);
  if (op == '+') return Root::sum(dim, i, j);
  return fail();
}

}  // namespace nilorbit
