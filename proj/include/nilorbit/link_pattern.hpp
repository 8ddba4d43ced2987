#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorbit/weyl.hpp"

namespace nilorbit {

struct Arc {
  int a = 0;  // left endpoint, a < b, both nonzero
  int b = 0;
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Partial matching drawn above an axis. Family A uses vertices 1..axis;
// the symmetric flavor uses -axis..-1, 1..axis (no vertex 0) and is closed
// under (a,b) -> (-b,-a).
class LinkPattern {
 public:
  LinkPattern(int axis, bool symmetric, std::vector<Arc> arcs)
      : axis_(axis), symmetric_(symmetric), arcs_(std::move(arcs)) {
    if (axis_ < 1) throw std::invalid_argument("axis must be positive");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<int> used;
    for (const Arc& p : arcs_) {
      if (p.a >= p.b || p.a == 0 || p.b == 0 || p.a < -axis_ || p.b > axis_ ||
          (!symmetric_ && p.a < 1))
        throw std::invalid_argument("arc endpoints out of range");
      used.push_back(p.a);
      used.push_back(p.b);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
      throw std::invalid_argument("arcs share an endpoint");
    if (symmetric_)
      for (const Arc& p : arcs_)
        if (std::find(arcs_.begin(), arcs_.end(), Arc{-p.b, -p.a}) == arcs_.end())
          throw std::invalid_argument("symmetric pattern not mirror-closed");
  }

  int axis() const { return axis_; }
  bool symmetric() const { return symmetric_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  std::vector<int> vertices() const {
    std::vector<int> v;
    if (symmetric_)
      for (int k = -axis_; k <= -1; ++k) v.push_back(k);
    for (int k = 1; k <= axis_; ++k) v.push_back(k);
    return v;
  }

  bool is_endpoint(int v) const {
    for (const Arc& p : arcs_)
      if (p.a == v || p.b == v) return true;
    return false;
  }

  std::string to_string() const {
    std::string s;
    for (const Arc& p : arcs_)
      s += "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    return s.empty() ? "()" : s;
  }

  std::string render_ascii() const;

 private:
  int axis_;
  bool symmetric_;
  std::vector<Arc> arcs_;
};

// Arc diagram of the canonical involution of S: the set is first reduced to
// its disjoint reflection decomposition, then each reflection contributes
//   e_j - e_i  ->  (i, j), (-j, -i)
//   e_j + e_i  ->  (-i, j), (-j, i)
//   e_i, 2e_i  ->  (-i, i)
// and family A keeps the single arc (i, j).
inline LinkPattern pattern_of(const RootSystemType& t, const std::vector<Root>& S) {
  SignedPermutation sigma = involution_of_set(t, S);
  std::vector<Root> dec = disjoint_reflection_decomposition(t, sigma);
  std::vector<Arc> arcs;
  for (const Root& r : dec) {
    RootShape s = classify(r);
    switch (s.kind) {
      case RootKind::diff:
        arcs.push_back({s.i, s.j});
        if (t.family != Family::A) arcs.push_back({-s.j, -s.i});
        break;
      case RootKind::sum:
        arcs.push_back({-s.i, s.j});
        arcs.push_back({-s.j, s.i});
        break;
      case RootKind::single:
      case RootKind::twice:
        arcs.push_back({-s.j, s.j});
        break;
      case RootKind::none:
        throw std::logic_error("decomposition produced a non-root");
    }
  }
  return LinkPattern(t.coord_dim(), t.family != Family::A, std::move(arcs));
}

// Crossings: pairs with a_s < a_t < b_s < b_t.
inline int stat_c(const LinkPattern& p) {
  int c = 0;
  for (const Arc& s : p.arcs())
    for (const Arc& t : p.arcs())
      if (s.a < t.a && t.a < s.b && s.b < t.b) ++c;
  return c;
}

// Ordered pairs of arcs lying strictly side by side.
inline int stat_r(const LinkPattern& p) {
  int r = 0;
  for (const Arc& s : p.arcs())
    for (const Arc& t : p.arcs())
      if (s.b < t.a) ++r;
  return r;
}

// Incidences (fixed vertex, arc spanning it), counted with multiplicity.
inline int stat_b(const LinkPattern& p) {
  int b = 0;
  for (int v : p.vertices()) {
    if (p.is_endpoint(v)) continue;
    for (const Arc& s : p.arcs())
      if (s.a < v && v < s.b) ++b;
  }
  return b;
}

struct ShapeCounts {
  int a = 0;  // e_j - e_i
  int d = 0;  // e_i or 2e_i
  int f = 0;  // e_j + e_i
  int x() const { return d + 2 * f; }
};

inline ShapeCounts count_shapes(const std::vector<Root>& S) {
  ShapeCounts out;
  for (const Root& r : S) {
    RootShape s = classify(r);
    if (s.negative) throw std::invalid_argument("negative root in shape count");
    switch (s.kind) {
      case RootKind::diff: ++out.a; break;
      case RootKind::sum: ++out.f; break;
      case RootKind::single:
      case RootKind::twice: ++out.d; break;
      case RootKind::none: throw std::invalid_argument("non-root in shape count");
    }
  }
  return out;
}

namespace detail {

inline void require_pairwise_disjoint(const std::vector<Root>& S) {
  for (size_t x = 0; x < S.size(); ++x)
    for (size_t y = x + 1; y < S.size(); ++y)
      if (!is_disjoint(S[x], S[y]))
        throw std::invalid_argument("set is not pairwise disjoint");
}

}  // namespace detail

// Length of the involution of a disjoint set of e_j - e_i roots in the
// symmetric group on 1..N, from pattern statistics alone.
inline int length_formula_A(const RootSystemType& t, const std::vector<Root>& S) {
  if (t.family != Family::A) throw std::invalid_argument("family A expected");
  detail::require_pairwise_disjoint(S);
  ShapeCounts sh = count_shapes(S);
  if (sh.d != 0 || sh.f != 0)
    throw std::invalid_argument("family A set must contain only e_j-e_i roots");
  LinkPattern p = pattern_of(t, S);
  int k = p.arc_count();
  return 2 * k * k - k + 2 * stat_b(p) - 4 * stat_r(p) - 2 * stat_c(p);
}

// Length of the involution of a disjoint set in the hyperoctahedral group,
// valid for the B and C root systems alike (their positive systems invert
// the same signed permutations). |S| below is the arc count of the pattern.
inline int length_formula_C(const RootSystemType& t, const std::vector<Root>& S) {
  if (t.family != Family::B && t.family != Family::C)
    throw std::invalid_argument("family B or C expected");
  detail::require_pairwise_disjoint(S);
  for (const Root& r : S)
    if (!is_positive_root(r, t))
      throw std::invalid_argument("set must consist of positive roots");
  LinkPattern p = pattern_of(t, S);
  int m = p.arc_count();
  ShapeCounts sh = count_shapes(S);
  return m * m - sh.a + stat_b(p) - stat_c(p) - 2 * stat_r(p);
}

// Length in the even hyperoctahedral group of the involution of a disjoint
// set of B-lattice shapes with an even number of short roots.
inline int length_formula_D(const RootSystemType& t, const std::vector<Root>& S) {
  if (t.family != Family::D) throw std::invalid_argument("family D expected");
  detail::require_pairwise_disjoint(S);
  ShapeCounts sh = count_shapes(S);
  if (sh.d % 2 != 0)
    throw std::invalid_argument("family D set needs an even number of short roots");
  RootSystemType bt(Family::B, t.rank);
  for (const Root& r : S)
    if (!is_positive_root(r, bt))
      throw std::invalid_argument("set must consist of positive B-lattice shapes");
  LinkPattern p = pattern_of(bt, S);
  int m = p.arc_count();
  return m * m - m + sh.a + stat_b(p) - stat_c(p) - 2 * stat_r(p);
}

// Reduction identities tying hyperoctahedral lengths to the symmetric group
// on 2n letters. For family C:
//   2 * l_C(sigma) = l_{S_2n}(doubled sigma) + x(S)
//   l_{S_2n}(doubled sigma) = 2m^2 - m + 2b - 4r - 2c   (m arcs)
// For family D:
//   l_D(sigma) = l_B(sigma) - x(S)
// All sides are computed independently (brute-force inversion counts against
// pattern statistics).
inline bool halving_identity_check(const RootSystemType& t, const std::vector<Root>& S) {
  detail::require_pairwise_disjoint(S);
  ShapeCounts sh = count_shapes(S);
  if (t.family == Family::C) {
    SignedPermutation sigma = involution_of_set(t, S);
    int lc = length(t, sigma);
    int l2n = inversion_count(doubled_permutation(sigma));
    LinkPattern p = pattern_of(t, S);
    int m = p.arc_count();
    int formula1 = 2 * m * m - m + 2 * stat_b(p) - 4 * stat_r(p) - 2 * stat_c(p);
    return 2 * lc == l2n + sh.x() && l2n == formula1;
  }
  if (t.family == Family::D) {
    RootSystemType bt(Family::B, t.rank);
    SignedPermutation sigma = involution_of_set(bt, S);
    if (!is_in_weyl_group(t, sigma))
      throw std::invalid_argument("involution not in the even hyperoctahedral group");
    return length(t, sigma) == length(bt, sigma) - sh.x();
  }
  throw std::invalid_argument("family C or D expected");
}

inline std::string LinkPattern::render_ascii() const {
  std::vector<int> vs = vertices();
  std::map<int, int> col;  // vertex -> column of its marker
  std::vector<std::string> labels;
  size_t width = 0;
  for (int v : vs) labels.push_back(std::to_string(v));
  for (const std::string& s : labels) width = std::max(width, s.size());
  int step = static_cast<int>(width) + 1;
  for (size_t k = 0; k < vs.size(); ++k)
    col[vs[k]] = static_cast<int>(k) * step + static_cast<int>(width) / 2;
  int total = static_cast<int>(vs.size()) * step;

  // Interval-graph layering: lowest free height whose occupied columns stay
  // clear of this arc's span.
  std::vector<Arc> order = arcs_;
  std::sort(order.begin(), order.end(), [&](const Arc& x, const Arc& y) {
    int sx = col.at(x.b) - col.at(x.a), sy = col.at(y.b) - col.at(y.a);
    return sx != sy ? sx < sy : x < y;
  });
  std::vector<std::vector<std::pair<int, int>>> spans;
  std::vector<int> height(order.size(), 0);
  for (size_t k = 0; k < order.size(); ++k) {
    int lo = col.at(order[k].a), hi = col.at(order[k].b);
    size_t h = 0;
    for (;; ++h) {
      if (h == spans.size()) spans.emplace_back();
      bool clash = false;
      for (auto [a, b] : spans[h])
        if (!(hi < a || b < lo)) clash = true;
      if (!clash) break;
    }
    spans[h].emplace_back(lo, hi);
    height[k] = static_cast<int>(h);
  }

  int rows = static_cast<int>(spans.size());
  std::vector<std::string> grid(static_cast<size_t>(rows),
                                std::string(static_cast<size_t>(total), ' '));
  auto put = [&](int row, int c, char ch) {
    char& cell = grid[static_cast<size_t>(row)][static_cast<size_t>(c)];
    if (ch == '|' && cell == '-')
      cell = '+';
    else if (cell == ' ' || ch == '.')
      cell = ch;
  };
  for (size_t k = 0; k < order.size(); ++k) {
    int lo = col.at(order[k].a), hi = col.at(order[k].b), h = height[k];
    int top = rows - 1 - h;
    put(top, lo, '.');
    put(top, hi, '.');
    for (int c = lo + 1; c < hi; ++c) put(top, c, '-');
    for (int row = top + 1; row < rows; ++row) {
      put(row, lo, '|');
      put(row, hi, '|');
    }
  }

  std::string axis(static_cast<size_t>(total), ' ');
  for (int v : vs) axis[static_cast<size_t>(col.at(v))] = 'o';
  std::string label_row(static_cast<size_t>(total), ' ');
  for (size_t k = 0; k < vs.size(); ++k) {
    const std::string& s = labels[k];
    int c = col.at(vs[k]) - static_cast<int>(s.size() - 1) / 2;
    for (size_t m = 0; m < s.size(); ++m) {
      size_t pos = static_cast<size_t>(c) + m;
      if (pos < label_row.size()) label_row[pos] = s[m];
    }
  }

  std::string out;
  for (const std::string& row : grid) out += row + "\n";
  out += axis + "\n" + label_row + "\n";
  return out;
}

}  // namespace nilorbit
