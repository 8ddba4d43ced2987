#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/link_pattern.hpp"
#include "nilorbit/matrix_rep.hpp"

namespace nilorbit {

// A B-orbit in an abelian nilradical, named by its set of pairwise strongly
// orthogonal positive roots. The empty set names the zero orbit.
struct OrbitLabel {
  std::vector<Root> roots;

  OrbitLabel() = default;
  explicit OrbitLabel(std::vector<Root> rs) : roots(std::move(rs)) {
    std::sort(roots.begin(), roots.end());
  }

  int size() const { return static_cast<int>(roots.size()); }
  bool empty() const { return roots.empty(); }

  std::string to_string() const {
    if (roots.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < roots.size(); ++k) {
      if (k) s += ",";
      s += roots[k].to_string();
    }
    return s;
  }

  bool operator==(const OrbitLabel&) const = default;
  std::strong_ordering operator<=>(const OrbitLabel& o) const {
    if (auto c = roots.size() <=> o.roots.size(); c != 0) return c;
    return roots <=> o.roots;
  }
};

inline std::vector<OrbitLabel> enumerate_orbits(const NilradicalId& id) {
  std::vector<Root> pool = nilradical_positive_roots(id);
  std::vector<OrbitLabel> out;
  std::vector<Root> cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    out.push_back(OrbitLabel(cur));
    for (size_t k = from; k < pool.size(); ++k) {
      bool ok = true;
      for (const Root& r : cur)
        if (!is_strongly_orthogonal(r, pool[k], id.type)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(pool[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  std::set<SignedPermutation> seen;
  for (const OrbitLabel& l : out)
    if (!seen.insert(involution_of_set(id.type, l.roots)).second)
      throw std::logic_error("orbit labels do not separate involutions");
  return out;
}

inline SignedPermutation sigma_of(const NilradicalId& id, const OrbitLabel& l) {
  return involution_of_set(id.type, l.roots);
}

inline SignedPermutation conjugated_sigma(const NilradicalId& id, const OrbitLabel& l,
                                          const SignedPermutation& w_hat) {
  return conjugate_by(w_hat, sigma_of(id, l));
}

// Expected dimension of the adjoint orbit: half of length plus cardinality,
// taken at the parabolic-conjugated involution.
inline int predicted_dimension(const NilradicalId& id, const OrbitLabel& l,
                               const SignedPermutation& w_hat) {
  int len = length(id.type, conjugated_sigma(id, l, w_hat));
  int s = l.size();
  if ((len + s) % 2 != 0)
    throw std::logic_error("dimension parity violation at " + l.to_string());
  return (len + s) / 2;
}

inline int predicted_dimension(const NilradicalId& id, const OrbitLabel& l) {
  return predicted_dimension(id, l, longest_parabolic(id));
}

// Expected dimension of the orbit of the dual functional, at the raw involution.
inline int predicted_coadjoint_dimension(const NilradicalId& id, const OrbitLabel& l) {
  int len = length(id.type, sigma_of(id, l));
  int s = l.size();
  if ((len + s) % 2 != 0)
    throw std::logic_error("dimension parity violation at " + l.to_string());
  return (len + s) / 2;
}

inline QMatrix representative_matrix(const NilradicalId& id, const OrbitLabel& l) {
  int m = algebra_matrix_size(id.type);
  QMatrix x(m, m);
  for (const Root& r : l.roots) x = x + root_vector(id.type, r);
  return x;
}

// Rank oracle for the dual orbit. Under the trace pairing the dual of the
// nilradical is the opposite nilradical, with the Borel acting by bracket
// followed by projection onto the lower root spaces; the projection reads
// the canonical matrix entry of each lower root vector.
inline int coadjoint_orbit_dimension(const NilradicalId& id, const OrbitLabel& l) {
  const RootSystemType& t = id.type;
  int m = algebra_matrix_size(t);
  QMatrix f(m, m);
  for (const Root& r : l.roots) f = f + root_vector(t, -r);

  struct Slot {
    int r, c;
    Rational scale;
  };
  std::vector<Slot> slots;
  for (const Root& beta : nilradical_positive_roots(id)) {
    QMatrix xv = root_vector(t, -beta);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!xv.at(i, j).is_zero()) {
          slots.push_back({i, j, xv.at(i, j)});
          i = m;
          break;
        }
  }

  std::vector<QMatrix> basis;
  for (const Root& r : positive_roots(t)) basis.push_back(root_vector(t, r));
  for (QMatrix& h : cartan_basis(t)) basis.push_back(std::move(h));

  std::vector<std::vector<Rational>> rows;
  for (const QMatrix& y : basis) {
    QMatrix br = bracket(y, f);
    std::vector<Rational> row;
    row.reserve(slots.size());
    for (const Slot& s : slots) row.push_back(br.at(s.r, s.c) / s.scale);
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

// ---------------------------------------------------------------------------
// Hard-coded closure relations for the two nilradicals whose closure order is
// not a window-count criterion: the short-rooted family B nilradical and its
// family D analogue. Each relation carries the data needed to certify it:
// either a torus contraction alone, or a unipotent curve (the accelerant
// roots) whose weight support and coefficient degrees are pinned exactly,
// with an optional root whose coefficient the curve parameter must cancel.
// ---------------------------------------------------------------------------

struct WeightDegree {
  Root root;
  int degree = 0;
};

struct RelationRow {
  std::string tag;
  OrbitLabel lower, upper;
  std::vector<Root> accelerants;      // positive roots; empty for torus rows
  std::optional<Root> kill;           // coefficient cancelled by tuning the curve
  std::vector<WeightDegree> support;  // exact expected support of the curve
};

struct NonRelationRow {
  std::string tag;
  OrbitLabel x, y;
  // When set, the two orbits have equal dimension, which already forbids
  // either closure containment.
  bool equal_dimension = false;
};

struct RelationTable {
  std::vector<RelationRow> relations;
  std::vector<NonRelationRow> non_relations;
};

inline RelationTable b_relation_table(int n) {
  if (n < 1) throw std::invalid_argument("family B rank must be at least 1");
  RelationTable tb;
  auto dm = [&](int i) { return Root::diff(n, i, n); };   // e_n - e_i
  auto sm = [&](int i) { return Root::sum(n, i, n); };    // e_n + e_i
  Root en = Root::single(n, n);
  auto one = [](const Root& r) { return OrbitLabel({r}); };
  auto pair = [&](int i) { return OrbitLabel({dm(i), sm(i)}); };

  if (n == 1) {
    tb.relations.push_back({"R0", OrbitLabel(), one(en), {}, {}, {{en, 0}}});
    return tb;
  }

  tb.relations.push_back({"R0", OrbitLabel(), one(sm(n - 1)), {}, {}, {{sm(n - 1), 0}}});
  for (int i = 2; i <= n - 1; ++i)
    tb.relations.push_back({"R1", one(dm(i - 1)), one(dm(i)),
                            {Root::diff(n, i - 1, i)}, {},
                            {{dm(i), 0}, {dm(i - 1), 1}}});
  tb.relations.push_back({"R2", one(sm(1)), one(dm(1)),
                          {Root::single(n, 1)}, {},
                          {{dm(1), 0}, {en, 1}, {sm(1), 2}}});
  for (int i = 1; i <= n - 2; ++i)
    tb.relations.push_back({"R3", one(sm(i + 1)), one(sm(i)),
                            {Root::diff(n, i, i + 1)}, {},
                            {{sm(i), 0}, {sm(i + 1), 1}}});
  tb.relations.push_back({"R4", one(sm(1)), one(en),
                          {Root::single(n, 1)}, {},
                          {{en, 0}, {sm(1), 1}}});
  for (int i = 1; i <= n - 2; ++i) {
    int j = i + 1;
    tb.relations.push_back({"R5", pair(i), pair(j),
                            {Root::diff(n, i, j), Root::sum(n, i, j)}, sm(j),
                            {{dm(j), 0}, {sm(j), 2}, {dm(i), 1}, {sm(i), 1}}});
  }
  tb.relations.push_back({"R6", one(en), pair(1),
                          {Root::single(n, 1)}, sm(1),
                          {{dm(1), 0}, {sm(1), 2}, {en, 1}}});
  for (int i = 1; i <= n - 1; ++i) {
    tb.relations.push_back({"R7", one(dm(i)), pair(i), {}, {},
                            {{dm(i), 0}, {sm(i), 0}}});
    tb.relations.push_back({"R7", one(sm(i)), pair(i), {}, {},
                            {{dm(i), 0}, {sm(i), 0}}});
  }

  for (int i = 1; i <= n - 1; ++i)
    tb.non_relations.push_back({"N1", one(en), one(dm(i)), i == 1});
  for (int i = 2; i <= n - 1; ++i)
    tb.non_relations.push_back({"N2", one(dm(i)), pair(i - 1), true});
  return tb;
}

inline RelationTable d_small_relation_table(int n) {
  if (n < 3) throw std::invalid_argument("family D nilradicals need rank >= 3");
  RelationTable tb;
  auto dm = [&](int i) { return Root::diff(n, i, n); };
  auto sm = [&](int i) { return Root::sum(n, i, n); };
  auto one = [](const Root& r) { return OrbitLabel({r}); };
  auto pair = [&](int i) { return OrbitLabel({dm(i), sm(i)}); };

  tb.relations.push_back({"R0", OrbitLabel(), one(sm(n - 1)), {}, {}, {{sm(n - 1), 0}}});
  for (int i = 2; i <= n - 1; ++i)
    tb.relations.push_back({"R1", one(dm(i - 1)), one(dm(i)),
                            {Root::diff(n, i - 1, i)}, {},
                            {{dm(i), 0}, {dm(i - 1), 1}}});
  tb.relations.push_back({"R2", one(sm(1)), one(dm(2)),
                          {Root::sum(n, 1, 2)}, {},
                          {{dm(2), 0}, {sm(1), 1}}});
  for (int i = 1; i <= n - 2; ++i)
    tb.relations.push_back({"R3", one(sm(i + 1)), one(sm(i)),
                            {Root::diff(n, i, i + 1)}, {},
                            {{sm(i), 0}, {sm(i + 1), 1}}});
  tb.relations.push_back({"R4", one(sm(2)), one(dm(1)),
                          {Root::sum(n, 1, 2)}, {},
                          {{dm(1), 0}, {sm(2), 1}}});
  for (int i = 1; i <= n - 2; ++i) {
    int j = i + 1;
    tb.relations.push_back({"R5", pair(i), pair(j),
                            {Root::diff(n, i, j), Root::sum(n, i, j)}, sm(j),
                            {{dm(j), 0}, {sm(j), 2}, {dm(i), 1}, {sm(i), 1}}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    tb.relations.push_back({"R6", one(dm(i)), pair(i), {}, {},
                            {{dm(i), 0}, {sm(i), 0}}});
    tb.relations.push_back({"R6", one(sm(i)), pair(i), {}, {},
                            {{dm(i), 0}, {sm(i), 0}}});
  }

  tb.non_relations.push_back({"N1", one(sm(1)), one(dm(1)), true});
  for (int i = 2; i <= n - 1; ++i)
    tb.non_relations.push_back({"N2", one(dm(i)), pair(i - 1), true});
  return tb;
}

// ---------------------------------------------------------------------------
// Closure order.
// ---------------------------------------------------------------------------

struct OrderOptions {
  // Reverses one hard-coded family B relation. Exists so the verification
  // pipeline can be shown to catch a wrong table.
  bool inject_fault = false;
};

// Flip of the first coordinate, the lattice automorphism exchanging the two
// fork nilradicals of family D.
inline Root flip_first_coordinate(const Root& r) {
  RootShape s = classify(r);
  if (s.kind == RootKind::diff && s.i == 1) return Root::sum(r.dim(), 1, s.j);
  if (s.kind == RootKind::sum && s.i == 1) return Root::diff(r.dim(), 1, s.j);
  return r;
}

// Arcs feeding the window-count criterion. Family A keeps each root as one
// arc. The long-rooted cases double into arcs on 1..2n, where the orbit
// representative sits as a rectangular matrix in rows 1..n, columns n+1..2n:
//   2e_k     -> (n+1-k, n+k)
//   e_j+e_i  -> (n+1-i, n+j), (n+1-j, n+i)
// The diff-rooted fork nilradical of family D is carried to the sum-rooted
// one by flip_first_coordinate before doubling.
inline std::vector<Arc> window_arcs(const NilradicalId& id, const OrbitLabel& l) {
  const RootSystemType& t = id.type;
  RootShape simple = classify(id.simple);
  std::vector<Arc> arcs;
  if (t.family == Family::A) {
    for (const Root& r : l.roots) {
      RootShape s = classify(r);
      arcs.push_back({s.i, s.j});
    }
    return arcs;
  }
  bool doubled = t.family == Family::C ||
                 (t.family == Family::D && simple.kind == RootKind::sum) ||
                 (t.family == Family::D && simple.kind == RootKind::diff && simple.j == 2);
  if (!doubled)
    throw std::invalid_argument("no window criterion for nilradical " + id.to_string());
  bool flip = t.family == Family::D && simple.kind == RootKind::diff;
  int n = t.rank;
  for (const Root& raw : l.roots) {
    Root r = flip ? flip_first_coordinate(raw) : raw;
    RootShape s = classify(r);
    if (s.kind == RootKind::twice) {
      arcs.push_back({n + 1 - s.j, n + s.j});
    } else if (s.kind == RootKind::sum) {
      arcs.push_back({n + 1 - s.i, n + s.j});
      arcs.push_back({n + 1 - s.j, n + s.i});
    } else {
      throw std::invalid_argument("unexpected root shape in " + l.to_string());
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

namespace detail {

inline int arcs_in_window(const std::vector<Arc>& arcs, int lo, int hi) {
  int c = 0;
  for (const Arc& a : arcs)
    if (lo <= a.a && a.b <= hi) ++c;
  return c;
}

inline bool window_dominated(const std::vector<Arc>& x, const std::vector<Arc>& y,
                             int axis) {
  for (int lo = 1; lo <= axis; ++lo)
    for (int hi = lo + 1; hi <= axis; ++hi)
      if (arcs_in_window(x, lo, hi) > arcs_in_window(y, lo, hi)) return false;
  return true;
}

}  // namespace detail

class GeometricOrder {
 public:
  explicit GeometricOrder(const NilradicalId& id, OrderOptions opt = {}) : id_(id) {
    const RootSystemType& t = id.type;
    RootShape s = classify(id.simple);
    bool table = (t.family == Family::B) ||
                 (t.family == Family::D && s.kind == RootKind::diff && s.j == t.rank &&
                  t.rank != 2);
    if (!table) {
      axis_ = t.family == Family::A ? t.coord_dim() : 2 * t.rank;
      return;
    }
    RelationTable tb = t.family == Family::B ? b_relation_table(t.rank)
                                             : d_small_relation_table(t.rank);
    labels_ = enumerate_orbits(id);
    size_t L = labels_.size();
    for (size_t k = 0; k < L; ++k) index_[labels_[k]] = k;
    leq_.assign(L, std::vector<char>(L, 0));
    for (size_t k = 0; k < L; ++k) leq_[k][k] = 1;
    for (const RelationRow& row : tb.relations) {
      OrbitLabel lo = row.lower, hi = row.upper;
      if (opt.inject_fault && t.family == Family::B && row.tag == "R2") std::swap(lo, hi);
      leq_[at(lo)][at(hi)] = 1;
    }
    for (size_t m = 0; m < L; ++m)
      for (size_t i = 0; i < L; ++i)
        if (leq_[i][m])
          for (size_t j = 0; j < L; ++j)
            if (leq_[m][j]) leq_[i][j] = 1;
  }

  bool leq(const OrbitLabel& x, const OrbitLabel& y) const {
    if (!leq_.empty()) return leq_[at(x)][at(y)] != 0;
    return detail::window_dominated(window_arcs(id_, x), window_arcs(id_, y), axis_);
  }

 private:
  size_t at(const OrbitLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end())
      throw std::invalid_argument("label outside the nilradical: " + l.to_string());
    return it->second;
  }

  NilradicalId id_;
  int axis_ = 0;
  std::vector<OrbitLabel> labels_;
  std::map<OrbitLabel, size_t> index_;
  std::vector<std::vector<char>> leq_;
};

// ---------------------------------------------------------------------------
// One-step degenerations of a family A label: deleting an arc, stretching an
// endpoint outward to a free vertex, or uncrossing a nested pair. Every
// produced label is strictly below the input in the closure order.
// ---------------------------------------------------------------------------

inline std::vector<OrbitLabel> elementary_move_lowerings(const NilradicalId& id,
                                                         const OrbitLabel& l) {
  if (id.type.family != Family::A)
    throw std::invalid_argument("elementary moves are a family A construction");
  int N = id.type.coord_dim();
  int cut = classify(id.simple).i;

  std::vector<Arc> arcs;
  std::set<int> used;
  for (const Root& r : l.roots) {
    RootShape s = classify(r);
    arcs.push_back({s.i, s.j});
    used.insert(s.i);
    used.insert(s.j);
  }

  std::vector<OrbitLabel> out;
  auto emit = [&](std::vector<Arc> as) {
    std::vector<Root> rs;
    for (const Arc& a : as) {
      if (!(1 <= a.a && a.a <= cut && cut < a.b && a.b <= N)) return;
      rs.push_back(Root::diff(N, a.a, a.b));
    }
    out.push_back(OrbitLabel(std::move(rs)));
  };

  for (size_t k = 0; k < arcs.size(); ++k) {
    std::vector<Arc> as = arcs;
    as.erase(as.begin() + static_cast<long>(k));
    emit(std::move(as));
    for (int v = arcs[k].b + 1; v <= N; ++v)
      if (!used.count(v)) {
        as = arcs;
        as[k].b = v;
        emit(std::move(as));
      }
    for (int v = arcs[k].a - 1; v >= 1; --v)
      if (!used.count(v)) {
        as = arcs;
        as[k].a = v;
        emit(std::move(as));
      }
  }
  for (size_t s = 0; s < arcs.size(); ++s)
    for (size_t u = 0; u < arcs.size(); ++u) {
      if (s == u) continue;
      // (a_s, b_s) strictly around (a_u, b_u): uncross to an interleaved pair.
      if (arcs[s].a < arcs[u].a && arcs[u].b < arcs[s].b) {
        std::vector<Arc> as = arcs;
        as[s] = {arcs[s].a, arcs[u].b};
        as[u] = {arcs[u].a, arcs[s].b};
        emit(std::move(as));
      }
      // Side-by-side pair to an interleaved pair; never lands in the
      // nilradical, where every arc crosses the cut.
      if (arcs[s].b < arcs[u].a) {
        std::vector<Arc> as = arcs;
        as[s] = {arcs[s].a, arcs[u].a};
        as[u] = {arcs[s].b, arcs[u].b};
        emit(std::move(as));
      }
    }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), l), out.end());
  return out;
}

// Reflexive-transitive closure of the one-step degenerations, as a matrix
// over the given label list: result[x][y] says x is reachable from y.
inline std::vector<std::vector<char>> moves_order(const NilradicalId& id,
                                                  const std::vector<OrbitLabel>& labels) {
  std::map<OrbitLabel, size_t> index;
  for (size_t k = 0; k < labels.size(); ++k) index[labels[k]] = k;
  size_t L = labels.size();
  std::vector<std::vector<char>> leq(L, std::vector<char>(L, 0));
  for (size_t y = 0; y < L; ++y) {
    std::vector<char> vis(L, 0);
    std::vector<size_t> stack{y};
    vis[y] = 1;
    while (!stack.empty()) {
      size_t c = stack.back();
      stack.pop_back();
      for (const OrbitLabel& nxt : elementary_move_lowerings(id, labels[c])) {
        auto it = index.find(nxt);
        if (it == index.end())
          throw std::logic_error("degeneration left the nilradical: " + nxt.to_string());
        if (!vis[it->second]) {
          vis[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
    for (size_t x = 0; x < L; ++x) leq[x][y] = vis[x];
  }
  return leq;
}

// ---------------------------------------------------------------------------
// Poset assembly.
// ---------------------------------------------------------------------------

enum class OrderKind { geometric, bruhat, coadjoint };

inline std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::geometric: return "geometric";
    case OrderKind::bruhat: return "bruhat";
    case OrderKind::coadjoint: return "coadjoint";
  }
  return "";
}

struct OrbitPoset {
  NilradicalId id;
  std::vector<OrbitLabel> labels;
  std::vector<int> dims;
  std::vector<int> coadjoint_dims;
  std::vector<std::vector<char>> leq;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) index pairs
};

inline OrbitPoset build_poset(const NilradicalId& id, OrderKind kind,
                              OrderOptions opt = {}) {
  OrbitPoset p{id, enumerate_orbits(id), {}, {}, {}, {}};
  size_t L = p.labels.size();
  SignedPermutation w_hat = longest_parabolic(id);

  std::vector<SignedPermutation> sig, con;
  sig.reserve(L);
  con.reserve(L);
  for (const OrbitLabel& l : p.labels) {
    sig.push_back(sigma_of(id, l));
    con.push_back(conjugate_by(w_hat, sig.back()));
  }
  for (size_t k = 0; k < L; ++k) {
    p.dims.push_back(predicted_dimension(id, p.labels[k], w_hat));
    p.coadjoint_dims.push_back(predicted_coadjoint_dimension(id, p.labels[k]));
  }

  p.leq.assign(L, std::vector<char>(L, 0));
  if (kind == OrderKind::geometric) {
    GeometricOrder g(id, opt);
    for (size_t i = 0; i < L; ++i)
      for (size_t j = 0; j < L; ++j)
        p.leq[i][j] = g.leq(p.labels[i], p.labels[j]) ? 1 : 0;
  } else {
    const std::vector<SignedPermutation>& w = kind == OrderKind::bruhat ? con : sig;
    for (size_t i = 0; i < L; ++i)
      for (size_t j = 0; j < L; ++j)
        p.leq[i][j] = bruhat_leq(id.type, w[i], w[j]) ? 1 : 0;
  }

  for (size_t i = 0; i < L; ++i) {
    if (!p.leq[i][i]) throw std::logic_error("order is not reflexive");
    for (size_t j = i + 1; j < L; ++j)
      if (p.leq[i][j] && p.leq[j][i])
        throw std::logic_error("order is not antisymmetric: " + p.labels[i].to_string() +
                               " vs " + p.labels[j].to_string());
  }

  for (size_t i = 0; i < L; ++i)
    for (size_t j = 0; j < L; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool direct = true;
      for (size_t k = 0; k < L && direct; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) direct = false;
      if (direct) p.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return p;
}

}  // namespace nilorbit
