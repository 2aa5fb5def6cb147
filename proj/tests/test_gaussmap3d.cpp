#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mink/gaussmap3d.hpp"
#include "mink/generators.hpp"
#include "mink/minkowski.hpp"

using namespace mink;

namespace {

RatVector vec(std::initializer_list<long long> xs) {
  RatVector v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

Polytope unit_cube3() {
  std::vector<RatVector> pts;
  for (int m = 0; m < 8; ++m)
    pts.push_back(vec({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  return Polytope::normalize(pts, 3);
}

Poles axis_e3_standard_frame() {
  // The frame the west examples are phrased in: e1' = x, e2' = y, axis = z.
  Poles p;
  p.axis = vec({0, 0, 1});
  p.e1 = vec({1, 0, 0});
  p.e2 = vec({0, 1, 0});
  return p;
}

}  // namespace

TEST_CASE("gaussian map duality counts") {
  auto cube = gaussian_map(unit_cube3());
  CHECK(cube.nodes.size() == 6);
  CHECK(cube.arcs.size() == 12);
  CHECK(cube.regions.size() == 8);

  auto tet = gaussian_map(random_polytope(3, 4, 1));
  CHECK(tet.nodes.size() == 4);
  CHECK(tet.arcs.size() == 6);
  CHECK(tet.regions.size() == 4);

  auto p = random_polytope(3, 6, 2);
  auto f = p.f_vector();
  auto m = gaussian_map(p);
  CHECK(static_cast<long long>(m.nodes.size()) == f.counts[2]);
  CHECK(static_cast<long long>(m.arcs.size()) == f.counts[1]);
  CHECK(static_cast<long long>(m.regions.size()) == f.counts[0]);

  CHECK_THROWS(gaussian_map(random_polytope(2, 4, 3)));
  CHECK_THROWS_AS(gaussian_map(Polytope::from_points(
                      {vec({0, 0, 0}), vec({1, 2, 3})}, 3)),
                  NotFullDimensional);
}

TEST_CASE("overlay of one map is the identity") {
  auto m = gaussian_map(random_polytope(3, 5, 4));
  auto o = overlay({m});
  CHECK(o.nodes.size() == m.nodes.size());
  CHECK(o.arcs.size() == m.arcs.size());
  CHECK(o.regions.size() == m.regions.size());
}

TEST_CASE("overlay matches the face lattice of the sum") {
  for (uint64_t seed : {10ull, 20ull, 30ull}) {
    auto a = random_polytope(3, 4, seed);
    auto b = random_polytope(3, 5, seed + 1);
    auto inst = make_general(SumInstance::of(3, {a, b}), seed);
    auto ov = overlay({gaussian_map(inst.summands[0]), gaussian_map(inst.summands[1])});
    auto f = minkowski_sum(inst).poly.f_vector();
    CHECK(static_cast<long long>(ov.nodes.size()) == f.counts[2]);
    CHECK(static_cast<long long>(ov.arcs.size()) == f.counts[1]);
    CHECK(static_cast<long long>(ov.regions.size()) == f.counts[0]);
    // Node supports have size 1 (an original node) or 2 (an arc crossing).
    for (const auto& n : ov.nodes) {
      CHECK(n.label.support.size() >= 1);
      CHECK(n.label.support.size() <= 2);
    }
  }
}

TEST_CASE("overlay rejects degenerate configurations") {
  auto cube = unit_cube3();
  std::vector<RatVector> shifted;
  for (const auto& v : cube.vertices())
    shifted.push_back(vadd(v, vec({7, 9, 13})));
  auto cube2 = Polytope::normalize(shifted, 3);
  // Identical facet normals: coincident nodes.
  CHECK_THROWS_AS(overlay({gaussian_map(cube), gaussian_map(cube2)}),
                  NotGeneralOrientation);
}

TEST_CASE("choose_poles validity") {
  auto cube = gaussian_map(unit_cube3());
  CHECK(poles_valid(cube, vec({1, 2, 5})));
  CHECK_FALSE(poles_valid(cube, vec({0, 0, 1})));
  auto poles = choose_poles(cube, 7);
  CHECK(poles_valid(cube, poles.axis));
  // Frame invariants: mutually orthogonal, positively oriented.
  CHECK(dot(poles.e1, poles.axis) == Rational(0));
  CHECK(dot(poles.e2, poles.axis) == Rational(0));
  CHECK(dot(poles.e1, poles.e2) == Rational(0));
  CHECK(dot(cross3(poles.e1, poles.e2), poles.axis).sign() > 0);
}

TEST_CASE("west ordering examples") {
  auto poles = axis_e3_standard_frame();
  // theta(e1) = pi/2, theta(e2) = 0.
  CHECK(west_compare(vec({1, 0, 0}), vec({0, 1, 0}), poles) == WestOrder::PWest);
  CHECK(west_compare(vec({0, 1, 0}), vec({1, 0, 0}), poles) == WestOrder::QWest);
  CHECK(west_compare(vec({1, 0, 0}), vec({1, 0, 0}), poles) == WestOrder::Tie);
  CHECK(west_compare(vec({2, 0, 5}), vec({1, 0, -3}), poles) == WestOrder::Tie);
  // Antipodal projections: canonicalized to the lexicographically smaller ray.
  CHECK(west_compare(vec({-1, 0, 0}), vec({1, 0, 0}), poles) == WestOrder::PWest);
  CHECK(theta_antipodal(vec({-1, 0, 0}), vec({1, 0, 0}), poles));
  CHECK_FALSE(theta_antipodal(vec({1, 0, 0}), vec({0, 1, 0}), poles));
  CHECK(theta_tie(vec({2, 0, 5}), vec({1, 0, -3}), poles));
  CHECK_THROWS_AS(west_compare(vec({0, 0, 1}), vec({1, 0, 0}), poles), WestUndefined);
}

TEST_CASE("westernmost of arcs and regions") {
  auto m = gaussian_map(unit_cube3());
  auto poles = poles_from_axis(vec({1, 2, 5}));
  REQUIRE(poles_valid(m, poles.axis));
  for (size_t i = 0; i < m.arcs.size(); ++i) {
    int w = westernmost(m, {CellKind::Arc, static_cast<int>(i)}, poles);
    int other = (w == m.arcs[i].a) ? m.arcs[i].b : m.arcs[i].a;
    CHECK(west_compare(m.nodes[w].ray, m.nodes[other].ray, poles) == WestOrder::PWest);
  }
  // Exhaustive check on regions: the western-most node is west of every
  // other incident node.
  int pole_regions = 0;
  for (size_t i = 0; i < m.regions.size(); ++i) {
    CellRef c{CellKind::Region, static_cast<int>(i)};
    try {
      int w = westernmost(m, c, poles);
      for (int v : m.regions[i].nodes)
        if (v != w)
          CHECK(west_compare(m.nodes[w].ray, m.nodes[v].ray, poles) == WestOrder::PWest);
    } catch (const PoleCell&) {
      ++pole_regions;
    }
  }
  CHECK(pole_regions == 2);
}

TEST_CASE("witness counts") {
  auto cube = gaussian_map(unit_cube3());
  auto poles = poles_from_axis(vec({1, 2, 5}));
  auto wc = count_witnesses(cube, poles);
  CHECK(wc.w == std::array<long long, 3>{6, 12, 6});

  auto tet = gaussian_map(random_polytope(3, 4, 5));
  auto tp = choose_poles(tet, 3);
  auto wt = count_witnesses(tet, tp);
  CHECK(wt.w == std::array<long long, 3>{4, 6, 2});
}

TEST_CASE("witness suite: identity, membership, local=global") {
  std::vector<Polytope> summands;
  for (int i = 0; i < 3; ++i) summands.push_back(random_polytope(3, 4, 40 + i));
  auto inst = make_general(SumInstance::of(3, std::move(summands)), 6);
  auto ws = run_witness_suite(inst.summands, 11);
  CHECK(ws.identity_ok[0]);
  CHECK(ws.identity_ok[1]);
  CHECK(ws.identity_ok[2]);
  CHECK(ws.membership_ok);
  CHECK(ws.local_global_ok);
  CHECK(ws.hemisphere_all_ok);
  CHECK(ws.membership_checks > 0);

  // w = (f_2, f_1, f_0 - 2) for every map in the suite.
  for (int i = 0; i < 3; ++i) {
    auto f = inst.summands[i].f_vector();
    CHECK(ws.single_counts[i].w ==
          std::array<long long, 3>{f.counts[2], f.counts[1], f.counts[0] - 2});
  }
  auto ff = minkowski_sum(inst).poly.f_vector();
  CHECK(ws.full_count.w ==
        std::array<long long, 3>{ff.counts[2], ff.counts[1], ff.counts[0] - 2});
}

TEST_CASE("witness membership honors the support rule") {
  std::vector<Polytope> summands;
  for (int i = 0; i < 3; ++i) summands.push_back(random_polytope(3, 4, 50 + i));
  auto inst = make_general(SumInstance::of(3, std::move(summands)), 8);
  auto ws = run_witness_suite(inst.summands, 21);

  for (const auto& [cell, wm] : ws.full_count.per_cell) {
    const auto& support = ws.full.nodes[wm].label.support;
    if (support.size() == 1) {
      int i = support[0];
      CHECK(witness_membership(ws.full, cell, {i}, ws.singles[i], ws.poles));
    } else {
      REQUIRE(support.size() == 2);
      // Missing one index of the support: the witness must disappear.
      CHECK_FALSE(witness_membership(ws.full, cell, {support[0]},
                                     ws.singles[support[0]], ws.poles));
    }
  }
}

TEST_CASE("hemisphere property from the pole choice") {
  auto p = random_polytope(3, 6, 60);
  auto m = gaussian_map(p);
  auto poles = choose_poles(m, 2);
  for (size_t i = 0; i < m.regions.size(); ++i) {
    CellRef c{CellKind::Region, static_cast<int>(i)};
    bool pole = false;
    try {
      westernmost(m, c, poles);
    } catch (const PoleCell&) {
      pole = true;
    }
    if (!pole) CHECK(hemisphere_ok(m, c, poles));
  }
}
