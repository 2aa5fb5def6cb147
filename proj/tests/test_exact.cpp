#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mink/exact.hpp"
#include "mink/generators.hpp"

using namespace mink;

namespace {

RatVector vec(std::initializer_list<long long> xs) {
  RatVector v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

// Independent rank: plain rational Gauss elimination, right-to-left column
// order, no fraction-free tricks.
int rank_rational_gauss(RatMatrix m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = cols - 1; c >= 0 && r < rows; --c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  Rational b(-3, -6);
  CHECK(b.num() == 1);
  CHECK(b.den() == 2);
  Rational c(3, -6);
  CHECK(c.num() == -1);
  CHECK(c.den() == 2);
  CHECK(a == b);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(5, 15).str() == "1/3");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational arithmetic is exact at large magnitudes") {
  Rational big(mpz_class("123456789123456789"), mpz_class("987654321987654321"));
  Rational sum = big + Rational(1, 3);
  CHECK(sum - Rational(1, 3) == big);
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(10);
  CHECK((x + Rational(1, 7)) - x == Rational(1, 7));
}

TEST_CASE("dot product") {
  CHECK(dot(vec({1, 0, 0}), vec({0, 1, 0})) == Rational(0));
  CHECK(dot({Rational(1, 2), Rational(1, 3)}, vec({2, 3})) == Rational(2));
  CHECK(dot(vec({1, 2, 5}), vec({1, 2, 5})) == Rational(30));
  CHECK_THROWS_AS(dot(vec({1}), vec({1, 2})), DimensionMismatch);
}

TEST_CASE("rank basics") {
  CHECK(rank(identity_matrix(3)) == 3);
  CHECK(rank({vec({1, 1}), vec({1, 1})}) == 1);
  CHECK(rank({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})}) == 2);
  CHECK(rank({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), Rational(1)}}) == 1);
  CHECK(rank({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), Rational(2)}}) == 2);
  CHECK_THROWS_AS(rank(RatMatrix{}), Error);
}

TEST_CASE("rank agrees with an independent elimination ordering") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    RatMatrix m(rows, RatVector(cols));
    for (auto& row : m)
      for (auto& x : row) x = Rational(rng.range(-4, 4), rng.range(1, 3));
    // Plant dependencies now and then.
    if (rows >= 2 && rng.below(2)) m[rows - 1] = vadd(m[0], m[rows / 2]);
    CHECK(rank(m) == rank_rational_gauss(m));
  }
}

TEST_CASE("solve_hyperplane examples") {
  auto h = solve_hyperplane({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  REQUIRE(h.has_value());
  CHECK(h->normal == vec({1, 1, 1}));
  CHECK(h->offset == Rational(1));

  auto h2 = solve_hyperplane({vec({0, 0}), vec({2, 0})});
  REQUIRE(h2.has_value());
  CHECK(h2->normal == vec({0, 1}));
  CHECK(h2->offset == Rational(0));

  CHECK_FALSE(solve_hyperplane({vec({0, 0, 0}), vec({1, 0, 0}), vec({2, 0, 0})}).has_value());
  CHECK_THROWS(solve_hyperplane({vec({1, 0, 0}), vec({0, 1, 0})}));
}

TEST_CASE("solve_hyperplane is permutation-canonical") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 2 + static_cast<int>(rng.below(3));
    std::vector<RatVector> pts;
    for (int i = 0; i < d; ++i) {
      RatVector p(d);
      for (auto& x : p) x = Rational(rng.range(-5, 5), rng.range(1, 2));
      pts.push_back(p);
    }
    auto h = solve_hyperplane(pts);
    std::vector<RatVector> shuffled = pts;
    for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
      std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
    auto h2 = solve_hyperplane(shuffled);
    REQUIRE(h.has_value() == h2.has_value());
    if (h) {
      CHECK(h->normal == h2->normal);
      CHECK(h->offset == h2->offset);
      // All inputs lie on the plane.
      for (const auto& p : pts) CHECK(dot(h->normal, p) == h->offset);
      // First nonzero entry positive, integer entries.
      for (const auto& x : h->normal) CHECK(x.den() == 1);
    }
  }
}

TEST_CASE("primitive and sign_canonical") {
  CHECK(primitive({Rational(1, 2), Rational(1, 3)}) == vec({3, 2}));
  CHECK(sign_canonical(vec({-2, 4})) == vec({1, -2}));
  CHECK(sign_canonical(vec({0, -3, 6})) == vec({0, 1, -2}));
  CHECK(primitive(vec({0, 0})) == vec({0, 0}));
}

TEST_CASE("matrix inverse round-trip") {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + static_cast<int>(rng.below(3));
    RatMatrix m(d, RatVector(d));
    for (auto& row : m)
      for (auto& x : row) x = Rational(rng.range(-4, 4), rng.range(1, 2));
    auto inv = mat_inverse(m);
    if (!inv) continue;
    CHECK(mat_mul(m, *inv) == identity_matrix(d));
  }
  CHECK_FALSE(mat_inverse({vec({1, 2}), vec({2, 4})}).has_value());
}

TEST_CASE("cross3") {
  CHECK(cross3(vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
  auto a = vec({2, -1, 3}), b = vec({1, 4, -2});
  auto c = cross3(a, b);
  CHECK(dot(c, a) == Rational(0));
  CHECK(dot(c, b) == Rational(0));
}
