#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilorbit/orbits.hpp"

namespace nilorbit {

struct VerifyOptions {
  std::set<std::string> checks;  // empty selects every check
  std::optional<Family> family;
  std::optional<int> rank;
  bool inject_fault = false;
  int bruhat_oracle_max_rank = 4;
};

struct VerificationReport {
  std::string check;
  char family = '-';
  int rank = 0;
  std::string nilradical;
  bool pass = true;
  std::string detail;
  nlohmann::json counterexample;
  std::vector<std::string> replay;
  long long millis = 0;
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j{{"check", r.check},
                   {"family", std::string(1, r.family)},
                   {"rank", r.rank},
                   {"nilradical", r.nilradical},
                   {"status", r.pass ? "pass" : "fail"},
                   {"detail", r.detail},
                   {"replay", r.replay},
                   {"millis", r.millis}};
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  return j;
}

inline const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{
      "lengths",    "example", "reduction", "conjecture",    "dimension",
      "structural", "witness", "moves",     "bruhat-engine"};
  return names;
}

namespace detail {

inline bool scoped(const VerifyOptions& o, Family f, int rank) {
  if (o.family && *o.family != f) return false;
  if (o.rank && *o.rank != rank) return false;
  return true;
}

template <typename Body>
void run_case(std::vector<VerificationReport>& out, const VerifyOptions& o,
              const std::string& check, Family f, int rank, const std::string& nil,
              Body&& body) {
  if (!scoped(o, f, rank)) return;
  VerificationReport rep;
  rep.check = check;
  rep.family = family_letter(f);
  rep.rank = rank;
  rep.nilradical = nil;
  rep.replay = {"verify",  "--check", check, "--family", std::string(1, family_letter(f)),
                "--rank",  std::to_string(rank)};
  if (o.inject_fault) rep.replay.push_back("--inject-fault");
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.detail += rep.detail.empty() ? "" : "; ";
    rep.detail += std::string("exception: ") + e.what();
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  out.push_back(std::move(rep));
}

// Visits every subset of the pool whose members are pairwise disjoint.
inline void disjoint_subsets(const std::vector<Root>& pool,
                             const std::function<void(const std::vector<Root>&)>& visit) {
  std::vector<Root> cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    visit(cur);
    for (size_t k = from; k < pool.size(); ++k) {
      bool ok = true;
      for (const Root& r : cur)
        if (!is_disjoint(r, pool[k])) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(pool[k]);
        self(self, k + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
}

inline int short_root_count(const std::vector<Root>& s) {
  int c = 0;
  for (const Root& r : s)
    if (classify(r).kind == RootKind::single) ++c;
  return c;
}

inline nlohmann::json set_to_json(const std::vector<Root>& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const Root& r : s) j.push_back(r.to_string());
  return j;
}

inline bool rational_square_root(const Rational& r, Rational* out) {
  if (r < Rational(0)) return false;
  auto isqrt = [](long long v) -> long long {
    long long s = std::llround(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s * s == v ? s : -1;
  };
  long long sn = isqrt(r.num()), sd = isqrt(r.den());
  if (sn < 0 || sd < 0) return false;
  if (out) *out = Rational(sn, sd);
  return true;
}

// Searches a small integer box for a torus weight vanishing on every target
// root and strictly positive on every leftover root. Such a weight drives a
// one-parameter torus curve whose limit keeps exactly the target components.
inline bool torus_contraction_weight(int dim, const std::vector<Root>& zero_on,
                                     const std::vector<Root>& positive_on,
                                     std::vector<int>* found) {
  std::set<int> involved_set;
  for (const Root& r : zero_on)
    for (int c = 1; c <= dim; ++c)
      if (r.coeff(c) != 0) involved_set.insert(c);
  for (const Root& r : positive_on)
    for (int c = 1; c <= dim; ++c)
      if (r.coeff(c) != 0) involved_set.insert(c);
  std::vector<int> involved(involved_set.begin(), involved_set.end());
  std::vector<int> lambda(static_cast<size_t>(dim), 0);
  auto pairing = [&](const Root& r) {
    int s = 0;
    for (int c : involved) s += lambda[static_cast<size_t>(c - 1)] * r.coeff(c);
    return s;
  };
  auto rec = [&](auto&& self, size_t pos) -> bool {
    if (pos == involved.size()) {
      for (const Root& r : zero_on)
        if (pairing(r) != 0) return false;
      for (const Root& r : positive_on)
        if (pairing(r) < 1) return false;
      if (found) *found = lambda;
      return true;
    }
    for (int v = -6; v <= 6; ++v) {
      lambda[static_cast<size_t>(involved[pos] - 1)] = v;
      if (self(self, pos + 1)) return true;
    }
    lambda[static_cast<size_t>(involved[pos] - 1)] = 0;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

// Certifies one hard-coded closure relation. The unipotent curve through the
// upper representative is computed exactly, its weight support and
// coefficient degrees are matched against the stored row, the marked
// coefficient is cancelled by solving for the curve parameter (passing to a
// quadratic extension of the rationals when the solution is irrational), and
// a torus contraction then isolates the lower representative, whose weights
// must be linearly independent so the torus can scale them freely.
inline void witness_check(const NilradicalId& id, const RelationRow& row) {
  const RootSystemType& t = id.type;
  auto fail = [&](const std::string& why) {
    throw std::logic_error("relation " + row.tag + " (" + row.lower.to_string() +
                           " < " + row.upper.to_string() + "): " + why);
  };

  for (const Root& g : row.accelerants)
    if (!is_positive_root(g, t)) fail("accelerant " + g.to_string() + " is not positive");
  for (size_t x = 0; x < row.accelerants.size(); ++x)
    for (size_t y = x + 1; y < row.accelerants.size(); ++y)
      if (!bracket(root_vector(t, row.accelerants[x]),
                   root_vector(t, row.accelerants[y]))
               .is_zero())
        fail("accelerants do not commute");

  PMatrix curve = representative_matrix(id, row.upper).cast<Poly>();
  Poly a = Poly::variable();
  for (const Root& g : row.accelerants)
    curve = exp_adjoint(a, root_vector(t, g), curve);

  std::map<Root, Poly> dec = weight_decomposition(t, curve);

  std::set<Root> upper_set(row.upper.roots.begin(), row.upper.roots.end());
  if (dec.size() != row.support.size()) fail("curve support size differs from the table");
  for (const WeightDegree& wd : row.support) {
    auto it = dec.find(wd.root);
    if (it == dec.end()) fail("curve support misses " + wd.root.to_string());
    if (it->second.degree() != wd.degree)
      fail("coefficient degree mismatch at " + wd.root.to_string());
    Rational c0 = it->second.coeff(0);
    if (!(c0 == (upper_set.count(wd.root) ? Rational(1) : Rational(0))))
      fail("constant term mismatch at " + wd.root.to_string());
  }

  std::vector<Root> targets = row.lower.roots;
  for (const Root& tr : targets)
    if (!dec.count(tr)) fail("curve never reaches target component " + tr.to_string());

  // nonzero[root] says the coefficient survives at the chosen parameter value.
  std::map<Root, bool> nonzero;
  if (row.kill) {
    Poly q = dec.at(*row.kill);
    if (!q.even_only() || q.degree() != 2)
      fail("cancelled coefficient is not an even quadratic");
    Rational r = -q.coeff(0) / q.coeff(2);
    Rational sq;
    if (detail::rational_square_root(r, &sq)) {
      bool done = false;
      for (const Rational& pt : {sq, -sq}) {
        nonzero.clear();
        for (const auto& [root, poly] : dec) nonzero[root] = !poly.eval(pt).is_zero();
        bool ok = !nonzero[*row.kill];
        for (const Root& tr : targets) ok = ok && nonzero[tr];
        if (ok) {
          done = true;
          break;
        }
      }
      if (!done) fail("no rational parameter cancels the marked coefficient only");
    } else {
      // The parameter lives in the field Q[a]/(a^2 - r); a residue is zero
      // exactly when both reduced coefficients vanish.
      for (const auto& [root, poly] : dec)
        nonzero[root] = !(poly.substitute_square(r) == Poly(Rational(0)));
      if (nonzero[*row.kill]) fail("marked coefficient survives the substitution");
      for (const Root& tr : targets)
        if (!nonzero[tr]) fail("target component dies with the marked coefficient");
    }
  } else {
    bool done = false;
    for (long long cand : {1, 2, 3, 5, 7}) {
      nonzero.clear();
      for (const auto& [root, poly] : dec)
        nonzero[root] = !poly.eval(Rational(cand)).is_zero();
      bool ok = true;
      for (const Root& tr : targets) ok = ok && nonzero[tr];
      if (ok) {
        done = true;
        break;
      }
    }
    if (!done) fail("no small parameter keeps every target component");
  }

  std::vector<Root> leftovers;
  for (const auto& [root, nz] : nonzero) {
    if (!nz) continue;
    if (std::find(targets.begin(), targets.end(), root) == targets.end())
      leftovers.push_back(root);
  }
  if (!detail::torus_contraction_weight(t.coord_dim(), targets, leftovers, nullptr))
    fail("no torus weight contracts onto the target components");

  std::vector<std::vector<Rational>> rows;
  for (const Root& tr : targets) {
    std::vector<Rational> v;
    for (int c = 1; c <= t.coord_dim(); ++c) v.push_back(Rational(tr.coeff(c)));
    rows.push_back(std::move(v));
  }
  if (matrix_rank(rows) != static_cast<int>(targets.size()))
    fail("target weights are linearly dependent");
}

// ---------------------------------------------------------------------------
// Check runners. Each emits one report per (family, rank, nilradical) case.
// ---------------------------------------------------------------------------

namespace detail {

inline void length_case(VerificationReport& rep, const RootSystemType& t,
                        const RootSystemType& lattice, bool even_short_only) {
  long long checked = 0;
  std::vector<Root> pool = positive_roots(lattice);
  disjoint_subsets(pool, [&](const std::vector<Root>& s) {
    if (!rep.pass) return;
    if (even_short_only && short_root_count(s) % 2 != 0) return;
    int formula = 0;
    switch (t.family) {
      case Family::A: formula = length_formula_A(t, s); break;
      case Family::B:
      case Family::C: formula = length_formula_C(t, s); break;
      case Family::D: formula = length_formula_D(t, s); break;
    }
    int direct = length(t, involution_of_set(lattice, s));
    ++checked;
    if (formula != direct) {
      rep.pass = false;
      rep.counterexample = {{"set", set_to_json(s)},
                            {"formula_length", formula},
                            {"direct_length", direct}};
      rep.detail = "length formula disagrees with the inversion count";
    }
  });
  if (rep.pass) rep.detail = "checked " + std::to_string(checked) + " disjoint sets";
}

inline void reduction_case(VerificationReport& rep, const RootSystemType& t,
                           const RootSystemType& lattice, bool even_short_only) {
  long long checked = 0;
  std::vector<Root> pool = positive_roots(lattice);
  disjoint_subsets(pool, [&](const std::vector<Root>& s) {
    if (!rep.pass) return;
    if (even_short_only && short_root_count(s) % 2 != 0) return;
    ++checked;
    if (!halving_identity_check(t, s)) {
      rep.pass = false;
      rep.counterexample = {{"set", set_to_json(s)}};
      rep.detail = "halving identity fails";
    }
  });
  if (rep.pass) rep.detail = "checked " + std::to_string(checked) + " disjoint sets";
}

}  // namespace detail

inline void check_lengths(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  for (int N = 2; N <= 8; ++N) {
    RootSystemType t(Family::A, N - 1);
    detail::run_case(out, o, "lengths", Family::A, N - 1, "",
                     [&](VerificationReport& rep) { detail::length_case(rep, t, t, false); });
  }
  for (Family f : {Family::B, Family::C})
    for (int n = 1; n <= 5; ++n) {
      RootSystemType t(f, n);
      detail::run_case(out, o, "lengths", f, n, "",
                       [&](VerificationReport& rep) { detail::length_case(rep, t, t, false); });
    }
  for (int n = 2; n <= 5; ++n) {
    RootSystemType t(Family::D, n);
    RootSystemType lattice(Family::B, n);
    detail::run_case(out, o, "lengths", Family::D, n, "", [&](VerificationReport& rep) {
      detail::length_case(rep, t, lattice, true);
    });
  }
}

inline void check_example(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  detail::run_case(out, o, "example", Family::C, 6, "2e1", [&](VerificationReport& rep) {
    RootSystemType t(Family::C, 6);
    std::vector<Root> s{Root::diff(6, 1, 2), Root::sum(6, 3, 6), Root::twice(6, 4)};
    LinkPattern p = pattern_of(t, s);
    int formula = length_formula_C(t, s);
    int direct = length(t, involution_of_set(t, s));
    nlohmann::json got{{"arcs", p.arc_count()},       {"crossings", stat_c(p)},
                       {"right_of_pairs", stat_r(p)}, {"covered_fixed", stat_b(p)},
                       {"formula_length", formula},   {"direct_length", direct},
                       {"pattern", p.to_string()}};
    if (p.arc_count() != 5 || stat_c(p) != 3 || stat_r(p) != 1 || stat_b(p) != 2 ||
        formula != 21 || direct != 21) {
      rep.pass = false;
      rep.detail = "pinned statistics differ";
      rep.counterexample = got;
      return;
    }
    rep.detail = "arcs 5, statistics (3,1,2), both lengths 21";
  });
}

inline void check_reduction(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  for (int n = 1; n <= 5; ++n) {
    RootSystemType t(Family::C, n);
    detail::run_case(out, o, "reduction", Family::C, n, "", [&](VerificationReport& rep) {
      detail::reduction_case(rep, t, t, false);
    });
  }
  for (int n = 2; n <= 5; ++n) {
    RootSystemType t(Family::D, n);
    RootSystemType lattice(Family::B, n);
    detail::run_case(out, o, "reduction", Family::D, n, "", [&](VerificationReport& rep) {
      detail::reduction_case(rep, t, lattice, true);
    });
  }
}

namespace detail {

// Common grid: every abelian nilradical at desk scale.
inline std::vector<NilradicalId> conjecture_grid() {
  std::vector<NilradicalId> ids;
  for (int N = 2; N <= 7; ++N)
    for (const NilradicalId& id : abelian_nilradicals(RootSystemType(Family::A, N - 1)))
      ids.push_back(id);
  for (int n = 1; n <= 6; ++n)
    for (const NilradicalId& id : abelian_nilradicals(RootSystemType(Family::B, n)))
      ids.push_back(id);
  for (int n = 1; n <= 5; ++n)
    for (const NilradicalId& id : abelian_nilradicals(RootSystemType(Family::C, n)))
      ids.push_back(id);
  for (int n = 3; n <= 5; ++n)
    for (const NilradicalId& id : abelian_nilradicals(RootSystemType(Family::D, n)))
      ids.push_back(id);
  return ids;
}

}  // namespace detail

inline void check_conjecture(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  for (const NilradicalId& id : detail::conjecture_grid()) {
    detail::run_case(out, o, "conjecture", id.type.family, id.type.rank, id.to_string(),
                     [&](VerificationReport& rep) {
                       OrbitPoset geo = build_poset(id, OrderKind::geometric,
                                                    OrderOptions{o.inject_fault});
                       OrbitPoset bru = build_poset(id, OrderKind::bruhat);
                       size_t L = geo.labels.size();
                       for (size_t i = 0; i < L; ++i)
                         for (size_t j = 0; j < L; ++j)
                           if (geo.leq[i][j] != bru.leq[i][j]) {
                             rep.pass = false;
                             rep.detail = "closure order disagrees with the conjugated "
                                          "Bruhat order";
                             rep.counterexample = {
                                 {"x", geo.labels[i].to_string()},
                                 {"y", geo.labels[j].to_string()},
                                 {"geometric_leq", geo.leq[i][j] != 0},
                                 {"bruhat_leq", bru.leq[i][j] != 0}};
                             return;
                           }
                       rep.detail = std::to_string(L) + " orbits, " +
                                    std::to_string(geo.covers.size()) + " covers agree";
                     });
  }

  // The two fork nilradicals of family D are exchanged by the first
  // coordinate flip; their closure orders must match along that bijection.
  for (int n = 3; n <= 5; ++n) {
    detail::run_case(out, o, "conjecture", Family::D, n, "e2-e1<->e2+e1",
                     [&](VerificationReport& rep) {
                       RootSystemType t(Family::D, n);
                       NilradicalId idm(t, Root::diff(n, 1, 2));
                       NilradicalId idp(t, Root::sum(n, 1, 2));
                       OrbitPoset pm = build_poset(idm, OrderKind::geometric);
                       OrbitPoset pp = build_poset(idp, OrderKind::geometric);
                       std::map<OrbitLabel, size_t> where;
                       for (size_t k = 0; k < pp.labels.size(); ++k)
                         where[pp.labels[k]] = k;
                       std::vector<size_t> img;
                       for (const OrbitLabel& l : pm.labels) {
                         std::vector<Root> fl;
                         for (const Root& r : l.roots) fl.push_back(flip_first_coordinate(r));
                         OrbitLabel target(std::move(fl));
                         if (!where.count(target)) {
                           rep.pass = false;
                           rep.detail = "flip does not map labels onto labels";
                           rep.counterexample = {{"label", l.to_string()}};
                           return;
                         }
                         img.push_back(where.at(target));
                       }
                       for (size_t i = 0; i < pm.labels.size(); ++i)
                         for (size_t j = 0; j < pm.labels.size(); ++j)
                           if (pm.leq[i][j] != pp.leq[img[i]][img[j]]) {
                             rep.pass = false;
                             rep.detail = "fork nilradical orders differ under the flip";
                             rep.counterexample = {{"x", pm.labels[i].to_string()},
                                                   {"y", pm.labels[j].to_string()}};
                             return;
                           }
                       rep.detail = "fork posets isomorphic on " +
                                    std::to_string(pm.labels.size()) + " orbits";
                     });
  }
}

inline void check_dimension(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  for (const NilradicalId& id : detail::conjecture_grid()) {
    detail::run_case(out, o, "dimension", id.type.family, id.type.rank, id.to_string(),
                     [&](VerificationReport& rep) {
                       std::vector<OrbitLabel> labels = enumerate_orbits(id);
                       SignedPermutation w_hat = longest_parabolic(id);
                       int dense = 0;
                       for (const OrbitLabel& l : labels) {
                         int pd = predicted_dimension(id, l, w_hat);
                         int od = orbit_dimension(id.type, representative_matrix(id, l));
                         int pc = predicted_coadjoint_dimension(id, l);
                         int oc = coadjoint_orbit_dimension(id, l);
                         dense = std::max(dense, pd);
                         if (pd != od || pc != oc) {
                           rep.pass = false;
                           rep.detail = "rank oracle disagrees with predicted dimension";
                           rep.counterexample = {{"label", l.to_string()},
                                                 {"predicted", pd},
                                                 {"oracle", od},
                                                 {"predicted_dual", pc},
                                                 {"oracle_dual", oc}};
                           return;
                         }
                       }
                       int full = static_cast<int>(nilradical_positive_roots(id).size());
                       if (dense != full) {
                         rep.pass = false;
                         rep.detail = "densest orbit does not fill the nilradical";
                         rep.counterexample = {{"dense_dimension", dense},
                                               {"nilradical_dimension", full}};
                         return;
                       }
                       rep.detail = std::to_string(labels.size()) +
                                    " orbits match both rank oracles, dense dimension " +
                                    std::to_string(dense);
                     });
  }
}

inline void check_structural(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  for (const NilradicalId& id : detail::conjecture_grid()) {
    detail::run_case(
        out, o, "structural", id.type.family, id.type.rank, id.to_string(),
        [&](VerificationReport& rep) {
          auto examine = [&](const OrbitPoset& p, const std::vector<int>& dims,
                             const std::string& which) {
            size_t L = p.labels.size();
            if (!p.labels[0].empty()) throw std::logic_error("first label is not empty");
            for (size_t j = 0; j < L; ++j)
              if (!p.leq[0][j])
                throw std::logic_error(which + ": zero orbit is not the minimum");
            int maxima = 0;
            for (size_t j = 0; j < L; ++j) {
              bool top = true;
              for (size_t i = 0; i < L; ++i) top = top && p.leq[i][j];
              maxima += top ? 1 : 0;
            }
            if (maxima != 1)
              throw std::logic_error(which + ": dense orbit is not the unique maximum");
            for (auto [lo, hi] : p.covers)
              if (dims[static_cast<size_t>(hi)] != dims[static_cast<size_t>(lo)] + 1) {
                rep.counterexample = {{"order", which},
                                      {"x", p.labels[static_cast<size_t>(lo)].to_string()},
                                      {"y", p.labels[static_cast<size_t>(hi)].to_string()},
                                      {"dim_x", dims[static_cast<size_t>(lo)]},
                                      {"dim_y", dims[static_cast<size_t>(hi)]}};
                throw std::logic_error(which + ": a cover does not raise dimension by 1");
              }
            for (size_t i = 0; i < L; ++i)
              for (size_t j = 0; j < L; ++j)
                if (i != j && p.leq[i][j] && dims[i] >= dims[j]) {
                  rep.counterexample = {{"order", which},
                                        {"x", p.labels[i].to_string()},
                                        {"y", p.labels[j].to_string()}};
                  throw std::logic_error(which + ": dimension is not strictly monotone");
                }
          };
          OrbitPoset geo = build_poset(id, OrderKind::geometric, OrderOptions{o.inject_fault});
          examine(geo, geo.dims, "closure");
          OrbitPoset coa = build_poset(id, OrderKind::coadjoint);
          examine(coa, coa.coadjoint_dims, "dual");
          rep.detail = "graded, unique extremes in both orders (" +
                       std::to_string(geo.labels.size()) + " orbits)";
        });
  }
}

inline void check_witness(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  auto run_table = [&](const NilradicalId& id, const RelationTable& tb,
                       VerificationReport& rep) {
    GeometricOrder order(id);
    for (const RelationRow& row : tb.relations) {
      witness_check(id, row);
      if (!order.leq(row.lower, row.upper) || order.leq(row.upper, row.lower))
        throw std::logic_error("relation " + row.tag + " contradicts the closure order");
    }
    for (const NonRelationRow& nr : tb.non_relations) {
      if (order.leq(nr.x, nr.y) || order.leq(nr.y, nr.x))
        throw std::logic_error("pair " + nr.tag + " is comparable in the closure order");
      int dx = orbit_dimension(id.type, representative_matrix(id, nr.x));
      int dy = orbit_dimension(id.type, representative_matrix(id, nr.y));
      if (nr.equal_dimension && dx != dy)
        throw std::logic_error("pair " + nr.tag + " should have equal dimensions");
      if (!nr.equal_dimension && dx == dy)
        throw std::logic_error("pair " + nr.tag + " unexpectedly has equal dimensions");
    }
    rep.detail = std::to_string(tb.relations.size()) + " relations certified, " +
                 std::to_string(tb.non_relations.size()) + " exclusions checked";
  };

  for (int n = 1; n <= 6; ++n) {
    RootSystemType t(Family::B, n);
    NilradicalId id = abelian_nilradicals(t).front();
    detail::run_case(out, o, "witness", Family::B, n, id.to_string(),
                     [&](VerificationReport& rep) { run_table(id, b_relation_table(n), rep); });
  }
  for (int n = 3; n <= 6; ++n) {
    RootSystemType t(Family::D, n);
    NilradicalId id(t, Root::diff(n, n - 1, n));
    detail::run_case(out, o, "witness", Family::D, n, id.to_string(),
                     [&](VerificationReport& rep) {
                       run_table(id, d_small_relation_table(n), rep);
                     });
  }
}

inline void check_moves(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  for (int N = 2; N <= 7; ++N) {
    RootSystemType t(Family::A, N - 1);
    for (const NilradicalId& id : abelian_nilradicals(t)) {
      detail::run_case(out, o, "moves", Family::A, N - 1, id.to_string(),
                       [&](VerificationReport& rep) {
                         std::vector<OrbitLabel> labels = enumerate_orbits(id);
                         auto mv = moves_order(id, labels);
                         GeometricOrder g(id);
                         for (size_t i = 0; i < labels.size(); ++i)
                           for (size_t j = 0; j < labels.size(); ++j) {
                             bool a = mv[i][j] != 0;
                             bool b = g.leq(labels[i], labels[j]);
                             if (a != b) {
                               rep.pass = false;
                               rep.detail = "degeneration reachability differs from the "
                                            "window criterion";
                               rep.counterexample = {{"x", labels[i].to_string()},
                                                     {"y", labels[j].to_string()},
                                                     {"moves_leq", a},
                                                     {"window_leq", b}};
                               return;
                             }
                           }
                         rep.detail = std::to_string(labels.size()) +
                                      " orbits, reachability matches the criterion";
                       });
    }
  }
}

inline void check_bruhat_engine(const VerifyOptions& o,
                                std::vector<VerificationReport>& out) {
  const std::vector<std::pair<Family, int>> groups{
      {Family::A, 3}, {Family::B, 3}, {Family::B, 4}, {Family::D, 4}};
  for (auto [f, n] : groups) {
    if (n > o.bruhat_oracle_max_rank) continue;
    detail::run_case(out, o, "bruhat-engine", f, n, "", [&](VerificationReport& rep) {
      RootSystemType t(f, n);
      BruhatCoverOracle oracle(t);
      const std::vector<SignedPermutation>& els = oracle.elements();
      for (const SignedPermutation& u : els)
        for (const SignedPermutation& w : els) {
          bool lift = bruhat_leq(t, u, w);
          bool cov = oracle.leq(u, w);
          if (lift != cov) {
            rep.pass = false;
            rep.detail = "lifting-property comparison disagrees with the cover oracle";
            rep.counterexample = {{"u", u.to_string()},
                                  {"w", w.to_string()},
                                  {"lifting", lift},
                                  {"cover_oracle", cov}};
            return;
          }
        }
      rep.detail = "all " + std::to_string(els.size() * els.size()) +
                   " pairs agree on a group of order " + std::to_string(els.size());
    });
  }
}

inline bool run_verify(const VerifyOptions& o, std::vector<VerificationReport>& out) {
  auto want = [&](const std::string& name) {
    if (!o.checks.empty() && !o.checks.count(name)) return false;
    return true;
  };
  for (const std::string& name : o.checks) {
    const auto& known = verify_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown check: " + name);
  }
  if (want("lengths")) check_lengths(o, out);
  if (want("example")) check_example(o, out);
  if (want("reduction")) check_reduction(o, out);
  if (want("conjecture")) check_conjecture(o, out);
  if (want("dimension")) check_dimension(o, out);
  if (want("structural")) check_structural(o, out);
  if (want("witness")) check_witness(o, out);
  if (want("moves")) check_moves(o, out);
  if (want("bruhat-engine")) check_bruhat_engine(o, out);
  bool ok = true;
  for (const VerificationReport& r : out) ok = ok && r.pass;
  return ok;
}

}  // namespace nilorbit
