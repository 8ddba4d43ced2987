#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/orbits.hpp"

using namespace nilorbit;

namespace {

NilradicalId pick(const RootSystemType& t, const Root& simple) {
  for (const NilradicalId& id : abelian_nilradicals(t))
    if (id.simple == simple) return id;
  throw std::runtime_error("no nilradical with the requested simple root");
}

OrbitLabel one(const Root& r) { return OrbitLabel({r}); }

std::multiset<int> dim_multiset(const OrbitPoset& p) {
  return {p.dims.begin(), p.dims.end()};
}

}  // namespace

TEST_CASE("orbit labels sort their roots and print canonically") {
  OrbitLabel zero;
  CHECK(zero.empty());
  CHECK(zero.size() == 0);
  CHECK(zero.to_string() == "0");

  OrbitLabel full({Root::twice(2, 1), Root::twice(2, 2)});
  REQUIRE(full.size() == 2);
  CHECK(full.roots[0] == Root::twice(2, 2));
  CHECK(full.roots[1] == Root::twice(2, 1));
  CHECK(full.to_string() == "2e2,2e1");

  CHECK(zero < one(Root::twice(2, 2)));
  CHECK(one(Root::sum(2, 1, 2)) < one(Root::twice(2, 1)));
  CHECK(one(Root::twice(2, 1)) < full);
}

TEST_CASE("orbit label counts across the families") {
  std::vector<NilradicalId> a3 = abelian_nilradicals(RootSystemType(Family::A, 3));
  REQUIRE(a3.size() == 3);
  CHECK(enumerate_orbits(a3[0]).size() == 4);
  CHECK(enumerate_orbits(a3[1]).size() == 7);
  CHECK(enumerate_orbits(a3[2]).size() == 4);

  for (int n = 1; n <= 4; ++n) {
    std::vector<NilradicalId> b = abelian_nilradicals(RootSystemType(Family::B, n));
    REQUIRE(b.size() == 1);
    CHECK(enumerate_orbits(b[0]).size() == static_cast<size_t>(3 * n - 1));
  }

  std::vector<size_t> c_counts{2, 5, 14, 43};
  for (int n = 1; n <= 4; ++n) {
    std::vector<NilradicalId> c = abelian_nilradicals(RootSystemType(Family::C, n));
    REQUIRE(c.size() == 1);
    CHECK(enumerate_orbits(c[0]).size() == c_counts[static_cast<size_t>(n - 1)]);
  }

  RootSystemType d3(Family::D, 3), d4(Family::D, 4);
  CHECK(enumerate_orbits(pick(d3, Root::diff(3, 2, 3))).size() == 7);
  CHECK(enumerate_orbits(pick(d4, Root::diff(4, 3, 4))).size() == 10);
  CHECK(enumerate_orbits(pick(d3, Root::diff(3, 1, 2))).size() == 4);
  CHECK(enumerate_orbits(pick(d3, Root::sum(3, 1, 2))).size() == 4);
  CHECK(enumerate_orbits(pick(d4, Root::diff(4, 1, 2))).size() == 10);
  CHECK(enumerate_orbits(pick(d4, Root::sum(4, 1, 2))).size() == 10);
}

TEST_CASE("orbit labels are strongly orthogonal subsets of the nilradical") {
  NilradicalId id = abelian_nilradicals(RootSystemType(Family::C, 3))[0];
  std::vector<Root> pool = nilradical_positive_roots(id);
  std::vector<OrbitLabel> labels = enumerate_orbits(id);
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
  for (const OrbitLabel& l : labels) {
    for (const Root& r : l.roots)
      CHECK(std::find(pool.begin(), pool.end(), r) != pool.end());
    for (size_t x = 0; x < l.roots.size(); ++x)
      for (size_t y = x + 1; y < l.roots.size(); ++y)
        CHECK(is_strongly_orthogonal(l.roots[x], l.roots[y], id.type));
  }
}

TEST_CASE("window closure order for a type A nilradical") {
  NilradicalId id = pick(RootSystemType(Family::A, 3), Root::diff(4, 2, 3));
  GeometricOrder g(id);

  OrbitLabel theta = one(Root::diff(4, 1, 4));
  OrbitLabel dense1 = one(Root::diff(4, 2, 3));
  OrbitLabel mid_a = one(Root::diff(4, 1, 3));
  OrbitLabel mid_b = one(Root::diff(4, 2, 4));
  OrbitLabel crossing({Root::diff(4, 1, 3), Root::diff(4, 2, 4)});
  OrbitLabel nested({Root::diff(4, 1, 4), Root::diff(4, 2, 3)});

  CHECK(g.leq(OrbitLabel(), theta));
  CHECK(g.leq(theta, dense1));
  CHECK(g.leq(theta, mid_a));
  CHECK(g.leq(mid_a, dense1));
  CHECK(g.leq(crossing, nested));
  CHECK(g.leq(mid_b, crossing));
  CHECK_FALSE(g.leq(dense1, mid_a));
  CHECK_FALSE(g.leq(mid_a, mid_b));
  CHECK_FALSE(g.leq(mid_b, mid_a));
  CHECK_FALSE(g.leq(nested, crossing));
  CHECK_FALSE(g.leq(dense1, crossing));
  CHECK_FALSE(g.leq(crossing, dense1));

  OrbitPoset p = build_poset(id, OrderKind::geometric);
  REQUIRE(p.labels.size() == 7);
  CHECK(p.labels[0] == OrbitLabel());
  CHECK(p.labels[1] == theta);
  CHECK(p.labels[4] == dense1);
  CHECK(p.labels[5] == nested);
  CHECK(p.labels[6] == crossing);
  CHECK(p.dims == std::vector<int>{0, 1, 2, 2, 3, 4, 3});
  CHECK(p.covers.size() == 9);
}

TEST_CASE("elementary moves lower type A labels one degeneration at a time") {
  NilradicalId id = pick(RootSystemType(Family::A, 3), Root::diff(4, 2, 3));

  std::vector<OrbitLabel> low = elementary_move_lowerings(id, one(Root::diff(4, 2, 3)));
  REQUIRE(low.size() == 3);
  CHECK(low[0] == OrbitLabel());
  CHECK(low[1] == one(Root::diff(4, 1, 3)));
  CHECK(low[2] == one(Root::diff(4, 2, 4)));

  OrbitLabel nested({Root::diff(4, 1, 4), Root::diff(4, 2, 3)});
  OrbitLabel crossing({Root::diff(4, 1, 3), Root::diff(4, 2, 4)});
  std::vector<OrbitLabel> down = elementary_move_lowerings(id, nested);
  REQUIRE(down.size() == 3);
  CHECK(down[0] == one(Root::diff(4, 1, 4)));
  CHECK(down[1] == one(Root::diff(4, 2, 3)));
  CHECK(down[2] == crossing);

  OrbitPoset p = build_poset(id, OrderKind::geometric);
  CHECK(moves_order(id, p.labels) == p.leq);

  NilradicalId c2 = abelian_nilradicals(RootSystemType(Family::C, 2))[0];
  CHECK_THROWS_AS(elementary_move_lowerings(c2, OrbitLabel()), std::invalid_argument);
}

TEST_CASE("doubled window order matches the pinned rank two C poset") {
  NilradicalId id = abelian_nilradicals(RootSystemType(Family::C, 2))[0];
  OrbitPoset p = build_poset(id, OrderKind::geometric);

  REQUIRE(p.labels.size() == 5);
  CHECK(p.labels[0] == OrbitLabel());
  CHECK(p.labels[1] == one(Root::twice(2, 2)));
  CHECK(p.labels[2] == one(Root::sum(2, 1, 2)));
  CHECK(p.labels[3] == one(Root::twice(2, 1)));
  CHECK(p.labels[4] == OrbitLabel({Root::twice(2, 2), Root::twice(2, 1)}));

  CHECK(p.dims == std::vector<int>{0, 1, 2, 2, 3});
  CHECK(p.coadjoint_dims == std::vector<int>{0, 2, 2, 1, 3});

  std::vector<std::pair<int, int>> covers{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
  CHECK(p.covers == covers);
  CHECK_FALSE(p.leq[2][3]);
  CHECK_FALSE(p.leq[3][2]);

  OrbitPoset b = build_poset(id, OrderKind::bruhat);
  CHECK(b.leq == p.leq);
}

TEST_CASE("dual order of the rank two C nilradical reverses a geometric relation") {
  NilradicalId id = abelian_nilradicals(RootSystemType(Family::C, 2))[0];
  OrbitPoset p = build_poset(id, OrderKind::coadjoint);

  CHECK(p.leq[3][1]);
  CHECK_FALSE(p.leq[1][3]);

  OrbitPoset g = build_poset(id, OrderKind::geometric);
  CHECK(g.leq[1][3]);
  CHECK_FALSE(g.leq[3][1]);

  std::vector<std::pair<int, int>> covers{{0, 3}, {1, 4}, {2, 4}, {3, 1}, {3, 2}};
  CHECK(p.covers == covers);
  for (const auto& [lo, hi] : p.covers)
    CHECK(p.coadjoint_dims[static_cast<size_t>(hi)] ==
          p.coadjoint_dims[static_cast<size_t>(lo)] + 1);
}

TEST_CASE("hard-coded closure table for the rank three short-rooted nilradical") {
  NilradicalId id = abelian_nilradicals(RootSystemType(Family::B, 3))[0];
  GeometricOrder g(id);

  Root dm1 = Root::diff(3, 1, 3), dm2 = Root::diff(3, 2, 3);
  Root sm1 = Root::sum(3, 1, 3), sm2 = Root::sum(3, 2, 3);
  Root e3 = Root::single(3, 3);
  OrbitLabel pair1({dm1, sm1}), pair2({dm2, sm2});

  CHECK(g.leq(OrbitLabel(), one(sm2)));
  CHECK(g.leq(one(sm2), one(sm1)));
  CHECK(g.leq(one(sm1), one(e3)));
  CHECK(g.leq(one(sm2), one(e3)));
  CHECK(g.leq(one(sm1), one(dm1)));
  CHECK(g.leq(one(dm1), one(dm2)));
  CHECK(g.leq(one(e3), pair1));
  CHECK(g.leq(pair1, pair2));
  CHECK(g.leq(one(dm2), pair2));
  CHECK(g.leq(OrbitLabel(), pair2));

  CHECK_FALSE(g.leq(one(e3), one(dm2)));
  CHECK_FALSE(g.leq(one(dm2), one(e3)));
  CHECK_FALSE(g.leq(one(e3), one(dm1)));
  CHECK_FALSE(g.leq(one(dm1), one(e3)));
  CHECK_FALSE(g.leq(one(dm2), pair1));
  CHECK_FALSE(g.leq(pair1, one(dm2)));

  CHECK_THROWS_AS(g.leq(one(Root::single(3, 1)), pair1), std::invalid_argument);

  OrbitPoset p = build_poset(id, OrderKind::geometric);
  CHECK(p.dims == std::vector<int>{0, 3, 4, 3, 1, 2, 4, 5});
  OrbitPoset b = build_poset(id, OrderKind::bruhat);
  CHECK(b.leq == p.leq);
}

TEST_CASE("fault injection reverses one short-rooted relation") {
  NilradicalId id = abelian_nilradicals(RootSystemType(Family::B, 2))[0];
  Root dm1 = Root::diff(2, 1, 2), sm1 = Root::sum(2, 1, 2);

  GeometricOrder honest(id);
  CHECK(honest.leq(one(sm1), one(dm1)));
  CHECK_FALSE(honest.leq(one(dm1), one(sm1)));

  GeometricOrder faulty(id, OrderOptions{true});
  CHECK(faulty.leq(one(dm1), one(sm1)));
  CHECK_FALSE(faulty.leq(one(sm1), one(dm1)));

  OrbitPoset b = build_poset(id, OrderKind::bruhat);
  OrbitPoset f = build_poset(id, OrderKind::geometric, OrderOptions{true});
  CHECK(b.leq != f.leq);
}

TEST_CASE("small D nilradical matches its type A twin") {
  NilradicalId d = pick(RootSystemType(Family::D, 3), Root::diff(3, 2, 3));
  NilradicalId a = pick(RootSystemType(Family::A, 3), Root::diff(4, 2, 3));

  OrbitPoset pd = build_poset(d, OrderKind::geometric);
  OrbitPoset pa = build_poset(a, OrderKind::geometric);
  REQUIRE(pd.labels.size() == 7);
  CHECK(dim_multiset(pd) == dim_multiset(pa));
  CHECK(dim_multiset(pd) == std::multiset<int>{0, 1, 2, 2, 3, 3, 4});
  CHECK(pd.covers.size() == pa.covers.size());

  GeometricOrder g(d);
  Root dm1 = Root::diff(3, 1, 3), dm2 = Root::diff(3, 2, 3);
  Root sm1 = Root::sum(3, 1, 3), sm2 = Root::sum(3, 2, 3);
  CHECK(g.leq(one(sm2), one(sm1)));
  CHECK(g.leq(one(sm1), one(dm2)));
  CHECK(g.leq(one(sm2), one(dm1)));
  CHECK(g.leq(one(sm2), OrbitLabel({dm2, sm2})));
  CHECK_FALSE(g.leq(one(dm2), OrbitLabel({dm1, sm1})));
  CHECK_FALSE(g.leq(one(sm1), one(dm1)));
  CHECK_FALSE(g.leq(one(dm1), one(sm1)));

  OrbitPoset pb = build_poset(d, OrderKind::bruhat);
  CHECK(pb.leq == pd.leq);
}

TEST_CASE("fork nilradicals of D are exchanged by the coordinate flip") {
  RootSystemType d4(Family::D, 4);
  NilradicalId diff_fork = pick(d4, Root::diff(4, 1, 2));
  NilradicalId sum_fork = pick(d4, Root::sum(4, 1, 2));

  auto flip = [](const OrbitLabel& l) {
    std::vector<Root> rs;
    for (const Root& r : l.roots) rs.push_back(flip_first_coordinate(r));
    return OrbitLabel(std::move(rs));
  };

  std::vector<OrbitLabel> dl = enumerate_orbits(diff_fork);
  std::vector<OrbitLabel> sl = enumerate_orbits(sum_fork);
  REQUIRE(dl.size() == sl.size());

  std::set<OrbitLabel> image;
  for (const OrbitLabel& l : dl) image.insert(flip(l));
  CHECK(image == std::set<OrbitLabel>(sl.begin(), sl.end()));

  GeometricOrder gd(diff_fork), gs(sum_fork);
  for (const OrbitLabel& x : dl)
    for (const OrbitLabel& y : dl)
      CHECK(gd.leq(x, y) == gs.leq(flip(x), flip(y)));

  for (const OrbitLabel& x : dl)
    CHECK(predicted_dimension(diff_fork, x) == predicted_dimension(sum_fork, flip(x)));
}

TEST_CASE("predicted dimensions are honest matrix ranks at rank two") {
  for (Family f : {Family::B, Family::C}) {
    NilradicalId id = abelian_nilradicals(RootSystemType(f, 2))[0];
    for (const OrbitLabel& l : enumerate_orbits(id)) {
      CHECK(predicted_dimension(id, l) ==
            orbit_dimension(id.type, representative_matrix(id, l)));
      CHECK(predicted_coadjoint_dimension(id, l) == coadjoint_orbit_dimension(id, l));
    }
  }

  NilradicalId c2 = abelian_nilradicals(RootSystemType(Family::C, 2))[0];
  OrbitLabel low = one(Root::twice(2, 2));
  CHECK(orbit_dimension(c2.type, representative_matrix(c2, low)) == 1);
  CHECK(coadjoint_orbit_dimension(c2, low) == 2);
}

TEST_CASE("relation tables are consistent with labels and dimensions") {
  auto examine = [](const NilradicalId& id, const RelationTable& tb) {
    std::vector<OrbitLabel> labels = enumerate_orbits(id);
    std::map<OrbitLabel, int> dim;
    for (const OrbitLabel& l : labels) dim[l] = predicted_dimension(id, l);

    for (const RelationRow& row : tb.relations) {
      REQUIRE(dim.count(row.lower) == 1);
      REQUIRE(dim.count(row.upper) == 1);
      CHECK(dim[row.lower] < dim[row.upper]);
      for (const Root& g : row.accelerants) CHECK(is_positive_root(g, id.type));
    }
    for (const NonRelationRow& row : tb.non_relations) {
      REQUIRE(dim.count(row.x) == 1);
      REQUIRE(dim.count(row.y) == 1);
      CHECK(row.equal_dimension == (dim[row.x] == dim[row.y]));
    }
  };

  for (int n = 2; n <= 4; ++n)
    examine(abelian_nilradicals(RootSystemType(Family::B, n))[0], b_relation_table(n));
  for (int n = 3; n <= 4; ++n)
    examine(pick(RootSystemType(Family::D, n), Root::diff(n, n - 1, n)),
            d_small_relation_table(n));
}
