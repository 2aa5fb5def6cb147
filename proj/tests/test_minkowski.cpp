#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mink/generators.hpp"
#include "mink/minkowski.hpp"
#include "oracles.hpp"

using namespace mink;

namespace {

RatVector vec(std::initializer_list<long long> xs) {
  RatVector v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

Polytope seg2(std::initializer_list<long long> a, std::initializer_list<long long> b) {
  return Polytope::from_points({vec(a), vec(b)}, 2);
}

std::vector<RatVector> cube_pts(const RatVector& shift) {
  std::vector<RatVector> pts;
  for (int m = 0; m < 8; ++m)
    pts.push_back(vadd(vec({m & 1, (m >> 1) & 1, (m >> 2) & 1}), shift));
  return pts;
}

SumInstance two_triangles_general() {
  // Two triangles with no parallel edge pair.
  auto t1 = Polytope::normalize({vec({0, 0}), vec({3, 0}), vec({0, 3})}, 2);
  auto t2 = Polytope::normalize({vec({0, 0}), vec({2, 1}), vec({-1, 2})}, 2);
  return SumInstance::of(2, {t1, t2});
}

}  // namespace

TEST_CASE("square from orthogonal segments") {
  auto inst = SumInstance::of(2, {seg2({0, 0}, {1, 0}), seg2({0, 0}, {0, 1})});
  auto sum = minkowski_sum(inst);
  CHECK(sum.poly.f_vector().counts == std::vector<long long>{4, 4});
  CHECK(is_general_orientation(inst).general);
}

TEST_CASE("two generic triangles give a hexagon") {
  auto inst = two_triangles_general();
  auto sum = minkowski_sum(inst);
  CHECK(sum.poly.vertex_count() == 6);
  // Brute-force hull of the 9 vertex sums as the oracle.
  std::vector<RatVector> sums;
  for (const auto& a : inst.summands[0].vertices())
    for (const auto& b : inst.summands[1].vertices()) sums.push_back(vadd(a, b));
  CHECK(oracle::bf_vertex_count(sums) == 6);

  // Every edge decomposes exactly: one part an edge, the other a vertex.
  const auto& lat = sum.poly.face_lattice();
  for (int ei : lat.by_dim[1]) {
    auto dec = decompose_face(inst, sum, ei);
    CHECK(dec.exact);
    CHECK(dec.support.size() == 1);
  }
}

TEST_CASE("three generic segments sum to a combinatorial cube") {
  auto inst = random_segments(3, 3, 12345);
  auto sum = minkowski_sum(inst);
  CHECK(sum.poly.f_vector().counts == std::vector<long long>{8, 12, 6});
}

TEST_CASE("provenance decomposes every sum vertex") {
  auto inst = two_triangles_general();
  auto sum = minkowski_sum(inst);
  for (int v = 0; v < sum.poly.vertex_count(); ++v) {
    RatVector total(2, Rational(0));
    for (int i = 0; i < inst.r(); ++i)
      total = vadd(total, inst.summands[i].vertex(sum.provenance[v][i]));
    CHECK(total == sum.poly.vertex(v));
  }
}

TEST_CASE("decompose_face on the square") {
  auto inst = SumInstance::of(2, {seg2({0, 0}, {1, 0}), seg2({0, 0}, {0, 1})});
  auto sum = minkowski_sum(inst);
  const auto& lat = sum.poly.face_lattice();
  // Top edge: y = 1, vertices (0,1) and (1,1).
  int top = -1;
  for (int ei : lat.by_dim[1]) {
    bool all_top = true;
    for (int vi : lat.faces[ei].vertices)
      all_top &= (sum.poly.vertex(vi)[1] == Rational(1));
    if (all_top) top = ei;
  }
  REQUIRE(top >= 0);
  auto dec = decompose_face(inst, sum, top);
  CHECK(dec.exact);
  CHECK(dec.support == std::vector<int>{0});   // the x-segment contributes the edge
  CHECK(dec.parts[0].size() == 2);             // all of seg_x
  CHECK(dec.parts[1].size() == 1);             // top vertex of seg_y
  CHECK(inst.summands[1].vertex(dec.parts[1][0]) == vec({0, 1}));

  // Vertex (1,1): both parts vertices, empty support.
  int corner = -1;
  for (int vi : lat.by_dim[0])
    if (sum.poly.vertex(lat.faces[vi].vertices[0]) == vec({1, 1})) corner = vi;
  REQUIRE(corner >= 0);
  auto decv = decompose_face(inst, sum, corner);
  CHECK(decv.exact);
  CHECK(decv.support.empty());
}

TEST_CASE("is_general_orientation rejects a translated copy") {
  auto c1 = Polytope::normalize(cube_pts(vec({0, 0, 0})), 3);
  auto c2 = Polytope::normalize(cube_pts(vec({5, 7, 11})), 3);
  auto res = is_general_orientation(SumInstance::of(3, {c1, c2}));
  CHECK_FALSE(res.general);
  CHECK(res.offending_face.has_value());
}

TEST_CASE("rotated tetrahedra are in general orientation") {
  auto t1 = random_polytope(3, 4, 21);
  auto t2 = random_polytope(3, 4, 22);
  auto inst = make_general(SumInstance::of(3, {t1, t2}), 5);
  CHECK(is_general_orientation(inst).general);
}

TEST_CASE("partial sums") {
  auto inst = two_triangles_general();
  auto p0 = partial_sum(inst, {0});
  CHECK(p0.poly.f_vector().counts == inst.summands[0].f_vector().counts);
  auto p01 = partial_sum(inst, {0, 1});
  CHECK(p01.poly.vertex_count() == minkowski_sum(inst).poly.vertex_count());
  CHECK_THROWS(partial_sum(inst, {}));
}

TEST_CASE("support monotonicity and the trivial bound") {
  auto inst = make_general(
      SumInstance::of(3, {random_polytope(3, 4, 31), random_polytope(3, 5, 32),
                          random_polytope(3, 4, 33)}),
      17);
  auto sum = minkowski_sum(inst);
  const auto& lat = sum.poly.face_lattice();

  long long trivial = 1;
  for (const auto& s : inst.summands) trivial *= s.vertex_count();
  CHECK(sum.poly.vertex_count() <= trivial);

  std::vector<DecomposedFace> decs;
  decs.reserve(lat.faces.size());
  for (size_t i = 0; i < lat.faces.size(); ++i)
    decs.push_back(decompose_face(inst, sum, static_cast<int>(i)));
  for (size_t i = 0; i < lat.faces.size(); ++i) {
    CHECK(decs[i].exact);
    CHECK(static_cast<int>(decs[i].support.size()) <= lat.faces[i].face_dim);
    for (int gi : lat.faces[i].children) {
      CHECK(std::includes(decs[i].support.begin(), decs[i].support.end(),
                          decs[gi].support.begin(), decs[gi].support.end()));
    }
  }

  // The sum of the parts is the face, under provenance.
  for (size_t i = 0; i < lat.faces.size(); ++i) {
    for (int vi : lat.faces[i].vertices)
      for (int g = 0; g < inst.r(); ++g)
        CHECK(std::binary_search(decs[i].parts[g].begin(), decs[i].parts[g].end(),
                                 sum.provenance[vi][g]));
    // Conversely any sum vertex whose tuple lies in the parts is in the face.
    for (int vi = 0; vi < sum.poly.vertex_count(); ++vi) {
      bool inside = true;
      for (int g = 0; g < inst.r() && inside; ++g)
        inside = std::binary_search(decs[i].parts[g].begin(), decs[i].parts[g].end(),
                                    sum.provenance[vi][g]);
      if (inside) CHECK(lat.faces[i].vertex_set.test(vi));
    }
  }
}

TEST_CASE("decomposition is independent of the interior normal") {
  auto inst = make_general(
      SumInstance::of(3, {random_polytope(3, 4, 61), random_polytope(3, 5, 62),
                          random_polytope(3, 4, 63)}),
      19);
  auto sum = minkowski_sum(inst);
  const auto& lat = sum.poly.face_lattice();
  const auto& fs = sum.poly.facets();
  for (size_t fi = 0; fi < lat.faces.size(); ++fi) {
    // Two different positive combinations of the containing facet normals.
    RatVector l1(3, Rational(0)), l2(3, Rational(0));
    long long w = 1;
    for (const auto& f : fs) {
      if (!lat.faces[fi].vertex_set.subset_of(f.incident)) continue;
      l1 = vadd(l1, f.normal);
      l2 = vadd(l2, vscale(f.normal, Rational(2 * w + 1)));
      ++w;
    }
    std::vector<std::vector<int>> parts1, parts2;
    for (const auto& s : inst.summands) {
      parts1.push_back(s.support_face(l1));
      parts2.push_back(s.support_face(l2));
    }
    CHECK(parts1 == parts2);
    CHECK(parts1 == decompose_face(inst, sum, static_cast<int>(fi)).parts);
  }
}

TEST_CASE("lemma1_check on zonotopes and random instances") {
  auto inst = random_segments(3, 3, 99);
  auto sum = minkowski_sum(inst);
  PartialSumCache cache(inst);
  const auto& lat = sum.poly.face_lattice();
  for (int fi : lat.by_dim[2]) {
    auto dec = decompose_face(inst, sum, fi);
    CHECK(dec.support.size() == 2);  // zonotope facet = sum of two segments
    CHECK(lemma1_check(inst, sum, fi, dec.support, cache));
    std::vector<int> one{dec.support[0]};
    CHECK_FALSE(lemma1_check(inst, sum, fi, one, cache));
  }

  // Exhaustive over facets and subsets on a random d=3, r=4 instance.
  auto inst4 = make_general(
      SumInstance::of(3, {random_polytope(3, 4, 41), random_polytope(3, 4, 42),
                          random_polytope(3, 4, 43), random_polytope(3, 5, 44)}),
      23);
  auto sum4 = minkowski_sum(inst4);
  PartialSumCache cache4(inst4);
  const auto& lat4 = sum4.poly.face_lattice();
  for (int fi : lat4.by_dim[2]) {
    auto dec = decompose_face(inst4, sum4, fi);
    for (uint32_t mask = 1; mask < 16; ++mask) {
      auto S = mask_to_subset(mask);
      bool expected = std::includes(S.begin(), S.end(), dec.support.begin(),
                                    dec.support.end());
      CHECK(lemma1_check(inst4, sum4, fi, S, cache4) == expected);
    }
  }

  // One d=4 instance, all subsets, a sample of facets.
  auto inst5 = make_general(
      SumInstance::of(4, {random_polytope(4, 5, 51), random_polytope(4, 5, 52),
                          random_polytope(4, 5, 53), random_polytope(4, 5, 54)}),
      37);
  auto sum5 = minkowski_sum(inst5);
  PartialSumCache cache5(inst5);
  const auto& lat5 = sum5.poly.face_lattice();
  for (size_t s = 0; s < lat5.by_dim[3].size(); s += 7) {
    int fi = lat5.by_dim[3][s];
    auto dec = decompose_face(inst5, sum5, fi);
    for (uint32_t mask = 1; mask < 16; ++mask) {
      auto S = mask_to_subset(mask);
      bool expected = std::includes(S.begin(), S.end(), dec.support.begin(),
                                    dec.support.end());
      CHECK(lemma1_check(inst5, sum5, fi, S, cache5) == expected);
    }
  }
}
