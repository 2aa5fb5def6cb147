#ifndef MINK_GENERATORS_HPP
#define MINK_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mink/minkowski.hpp"

namespace mink {

struct GenSpec {
  int d = 3;
  int r = 3;
  std::vector<int> n;   // per-summand vertex counts
  std::string family = "random";  // random | segments | ortho-polygons | extremal | cyclic
  uint64_t seed = 0;
};

// splitmix64; self-contained so instances are bit-identical across platforms.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t below(uint64_t m);                 // [0, m)
  long long range(long long lo, long long hi);  // [lo, hi]
  Rng fork(uint64_t tag) const;
};

// Cayley transform Q = (I - A)(I + A)^{-1} of a skew-symmetric A: an exactly
// orthogonal rational rotation with det 1.
RatMatrix cayley_rotation(const RatMatrix& skew);

// Random rotation from small rational skew parameters.
RatMatrix random_rotation(int d, Rng& rng);

Polytope apply_rotation(const Polytope& p, const RatMatrix& q);

// Full-dimensional polytope with exactly n vertices: rational points on the
// unit sphere via stereographic parameters, so every point is extreme.
Polytope random_polytope(int d, int n, uint64_t seed);

// Moment-curve (cyclic) polytope with n distinct parameters drawn from seed.
Polytope cyclic_polytope(int d, int n, uint64_t seed);

// Returns the instance unchanged when it is already in general orientations;
// otherwise rotates every summand by independent Cayley rotations and
// re-checks, drawing fresh rotations until the check passes.
SumInstance make_general(const SumInstance& inst, uint64_t seed);

// r n-gons placed in pairwise orthogonal coordinate 2-planes (2r <= d),
// attaining the trivial bound f_0(sum) = n^r. Summands are 2-dimensional.
SumInstance ortho_polygons(int d, int r, int n);

struct ExtremalSearch {
  std::optional<SumInstance> instance;
  int attempts = 0;
};

// Seeded search for r summands of n vertices whose every (d-1)-subset sum
// attains n^{d-1} vertices, in general orientations. May fail; failure is a
// reported outcome.
ExtremalSearch extremal_family(int d, int r, int n, uint64_t seed,
                               int budget = 64);

// r segments with pairwise non-parallel directions, any min(d,r) of them
// linearly independent.
SumInstance random_segments(int d, int r, uint64_t seed);

// Builds the instance a GenSpec describes.
SumInstance generate(const GenSpec& spec);

// Vertex count of conv(points) regardless of affine dimension; used by the
// trivial-bound demonstrations.
long long hull_vertex_count(const std::vector<RatVector>& points, int dim);

}  // namespace mink

#endif
