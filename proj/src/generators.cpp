#include "mink/generators.hpp"

#include <algorithm>
#include <set>

#include "mink/errors.hpp"

namespace mink {

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t m) { return m ? next() % m : 0; }

long long Rng::range(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
}

Rng Rng::fork(uint64_t tag) const {
  Rng r(state ^ (0xd1342543de82ef95ull * (tag + 1)));
  r.next();
  return r;
}

RatMatrix cayley_rotation(const RatMatrix& skew) {
  int d = static_cast<int>(skew.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (skew[i][j] != -skew[j][i])
        throw Error("cayley_rotation: matrix is not skew-symmetric");
  RatMatrix iplus = identity_matrix(d), iminus = identity_matrix(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      iplus[i][j] += skew[i][j];
      iminus[i][j] -= skew[i][j];
    }
  auto inv = mat_inverse(iplus);
  if (!inv) throw Error("cayley_rotation: I + A singular");
  return mat_mul(iminus, *inv);
}

RatMatrix random_rotation(int d, Rng& rng) {
  RatMatrix a(d, RatVector(d, Rational(0)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Rational v(rng.range(-6, 6), rng.range(1, 4));
      a[i][j] = v;
      a[j][i] = -v;
    }
  return cayley_rotation(a);
}

Polytope apply_rotation(const Polytope& p, const RatMatrix& q) {
  std::vector<RatVector> pts;
  pts.reserve(p.vertex_count());
  for (const auto& v : p.vertices()) pts.push_back(mat_apply(q, v));
  return Polytope::from_points(pts, p.ambient_dim());
}

namespace {

// Stereographic lift of x in R^{d-1} to the unit sphere S^{d-1}:
// (2x, |x|^2 - 1) / (|x|^2 + 1). Rational in, rational out, and any set of
// distinct lifts is in convex position.
RatVector stereographic(const RatVector& x) {
  Rational q2;
  for (const auto& c : x) q2 += c * c;
  Rational denom = q2 + Rational(1);
  RatVector p;
  p.reserve(x.size() + 1);
  for (const auto& c : x) p.push_back(Rational(2) * c / denom);
  p.push_back((q2 - Rational(1)) / denom);
  return p;
}

}  // namespace

Polytope random_polytope(int d, int n, uint64_t seed) {
  if (n < d + 1) throw std::invalid_argument("random_polytope: need n >= d+1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<RatVector, LexLess> params;
    while (static_cast<int>(params.size()) < n) {
      RatVector x(d - 1);
      for (int j = 0; j < d - 1; ++j) x[j] = Rational(rng.range(-12, 12), rng.range(1, 3));
      params.insert(std::move(x));
    }
    std::vector<RatVector> pts;
    pts.reserve(n);
    for (const auto& x : params) pts.push_back(stereographic(x));
    if (affine_dim_of(pts) != d) continue;
    Polytope p = Polytope::normalize(pts, d);
    if (p.vertex_count() == n) return p;
  }
  throw SearchExhausted("random_polytope: attempt budget exhausted");
}

Polytope cyclic_polytope(int d, int n, uint64_t seed) {
  if (n < d + 1) throw std::invalid_argument("cyclic_polytope: need n >= d+1");
  Rng rng(seed);
  std::set<long long> ts;
  while (static_cast<int>(ts.size()) < n) ts.insert(rng.range(-3 * n, 3 * n));
  std::vector<RatVector> pts;
  for (long long t : ts) {
    RatVector p(d);
    Rational pw(1);
    for (int j = 0; j < d; ++j) {
      pw *= Rational(t);
      p[j] = pw;
    }
    pts.push_back(std::move(p));
  }
  return Polytope::normalize(pts, d);
}

SumInstance make_general(const SumInstance& inst, uint64_t seed) {
  Rng rng(seed);
  SumInstance cur = inst;
  for (int attempt = 0; attempt < 50; ++attempt) {
    bool ok = false;
    try {
      ok = is_general_orientation(cur).general;
    } catch (const DegenerateCoincidence&) {
      ok = false;  // coincident sum vertices: re-draw, same as inexact faces
    }
    if (ok) return cur;
    std::vector<Polytope> rotated;
    rotated.reserve(inst.r());
    for (const auto& s : inst.summands)
      rotated.push_back(apply_rotation(s, random_rotation(inst.dim, rng)));
    cur = SumInstance::of(inst.dim, std::move(rotated));
  }
  throw SearchExhausted("make_general: attempt budget exhausted");
}

SumInstance ortho_polygons(int d, int r, int n) {
  if (2 * r > d) throw std::invalid_argument("ortho_polygons: requires 2r <= d");
  if (n < 3) throw std::invalid_argument("ortho_polygons: need n >= 3");
  std::vector<Polytope> summands;
  for (int i = 0; i < r; ++i) {
    std::vector<RatVector> pts;
    for (int j = 0; j < n; ++j) {
      // Rational points on the unit circle of the coordinate plane
      // span(e_{2i}, e_{2i+1}) via the tangent half-angle map.
      Rational t(j);
      Rational denom = t * t + Rational(1);
      RatVector p(d, Rational(0));
      p[2 * i] = (Rational(1) - t * t) / denom;
      p[2 * i + 1] = Rational(2) * t / denom;
      pts.push_back(std::move(p));
    }
    summands.push_back(Polytope::from_points(pts, d));
  }
  return SumInstance::of(d, std::move(summands));
}

ExtremalSearch extremal_family(int d, int r, int n, uint64_t seed, int budget) {
  if (r < d - 1) throw std::invalid_argument("extremal_family: requires r >= d-1");
  if (n < 2 || d < 3) throw std::invalid_argument("extremal_family: need n >= 2, d >= 3");
  Rng rng(seed);
  ExtremalSearch res;
  long long target = 1;
  for (int i = 0; i < d - 1; ++i) target *= n;
  for (res.attempts = 1; res.attempts <= budget; ++res.attempts) {
    std::vector<Polytope> summands;
    for (int i = 0; i < r; ++i) {
      // n points near the moment curve, then a random exact rotation.
      std::set<long long> ts;
      while (static_cast<int>(ts.size()) < n) ts.insert(rng.range(-4 * n, 4 * n));
      std::vector<RatVector> pts;
      for (long long t : ts) {
        RatVector p(d);
        Rational pw(1);
        for (int j = 0; j < d; ++j) {
          pw *= Rational(t, 4);
          p[j] = pw + Rational(rng.range(-1, 1), 64);
        }
        pts.push_back(std::move(p));
      }
      Polytope poly = Polytope::from_points(pts, d);
      if (poly.vertex_count() != n) { summands.clear(); break; }
      summands.push_back(apply_rotation(poly, random_rotation(d, rng)));
    }
    if (static_cast<int>(summands.size()) != r) continue;
    SumInstance inst = SumInstance::of(d, std::move(summands));
    bool extremal = true;
    try {
      std::vector<int> idx(d - 1);
      for (int i = 0; i < d - 1; ++i) idx[i] = i;
      while (extremal) {
        if (partial_sum(inst, idx).poly.vertex_count() != target) extremal = false;
        int i = d - 2;
        while (i >= 0 && idx[i] == r - (d - 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (extremal && r >= 2 && !is_general_orientation(inst).general) extremal = false;
    } catch (const Error&) {
      extremal = false;
    }
    if (extremal) {
      res.instance = std::move(inst);
      return res;
    }
  }
  return res;
}

SumInstance random_segments(int d, int r, uint64_t seed) {
  if (r < 1) throw std::invalid_argument("random_segments: need r >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<RatVector> dirs;
    for (int i = 0; i < r; ++i) {
      RatVector v(d);
      bool zero = true;
      for (int j = 0; j < d; ++j) {
        v[j] = Rational(rng.range(-9, 9));
        zero &= v[j].is_zero();
      }
      if (zero) v[0] = Rational(1);
      dirs.push_back(primitive(v));
    }
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = i + 1; j < r && ok; ++j)
        if (sign_canonical(dirs[i]) == sign_canonical(dirs[j])) ok = false;
    // Any min(d, r) directions must be linearly independent.
    int k = std::min(d, r);
    if (ok && k >= 2) {
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (ok) {
        RatMatrix m;
        for (int i : idx) m.push_back(dirs[i]);
        if (rank(m) != k) ok = false;
        int i = k - 1;
        while (i >= 0 && idx[i] == r - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!ok) continue;
    std::vector<Polytope> summands;
    for (const auto& v : dirs) {
      std::vector<RatVector> pts{RatVector(d, Rational(0)), v};
      summands.push_back(Polytope::from_points(pts, d));
    }
    return SumInstance::of(d, std::move(summands));
  }
  throw SearchExhausted("random_segments: attempt budget exhausted");
}

SumInstance generate(const GenSpec& spec) {
  auto vertex_count = [&](int i) {
    if (spec.n.empty()) return spec.d + 1;
    return spec.n[i % spec.n.size()];
  };
  Rng rng(spec.seed);
  if (spec.family == "random" || spec.family == "cyclic") {
    std::vector<Polytope> summands;
    for (int i = 0; i < spec.r; ++i) {
      uint64_t s = rng.fork(i).next();
      summands.push_back(spec.family == "random"
                             ? random_polytope(spec.d, vertex_count(i), s)
                             : cyclic_polytope(spec.d, vertex_count(i), s));
    }
    return SumInstance::of(spec.d, std::move(summands));
  }
  if (spec.family == "segments") return random_segments(spec.d, spec.r, spec.seed);
  if (spec.family == "ortho-polygons")
    return ortho_polygons(spec.d, spec.r, vertex_count(0));
  if (spec.family == "extremal") {
    auto res = extremal_family(spec.d, spec.r, vertex_count(0), spec.seed);
    if (!res.instance)
      throw SearchExhausted("extremal_family: no instance found in " +
                            std::to_string(res.attempts) + " attempts");
    return *res.instance;
  }
  throw std::invalid_argument("generate: unknown family '" + spec.family + "'");
}

long long hull_vertex_count(const std::vector<RatVector>& points, int dim) {
  return Polytope::from_points(points, dim).vertex_count();
}

}  // namespace mink
