#ifndef MINK_MINKOWSKI_HPP
#define MINK_MINKOWSKI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mink/polytope.hpp"

namespace mink {

// A list of summands in a common ambient dimension. Summands may be
// lower-dimensional (segments, polygons embedded in R^d); operations that
// need full-dimensional summands check for themselves.
struct SumInstance {
  int dim = 0;
  std::vector<Polytope> summands;

  int r() const { return static_cast<int>(summands.size()); }
  static SumInstance of(int dim, std::vector<Polytope> summands);
  SumInstance restricted(const std::vector<int>& S) const;
};

// Minkowski sum with vertex provenance: every vertex of the sum records the
// unique tuple of summand vertices it decomposes into.
struct SumPolytope {
  Polytope poly;
  std::vector<std::vector<int>> provenance;  // [vertex][summand] -> summand vertex index
};

SumPolytope minkowski_sum(const SumInstance& inst);

// Sum of the summands indexed by S (sorted, nonempty).
SumPolytope partial_sum(const SumInstance& inst, const std::vector<int>& S);

struct DecomposedFace {
  int face_index = -1;                   // index into the sum's face lattice
  int face_dim = 0;
  std::vector<std::vector<int>> parts;   // per summand: sorted vertex indices
  std::vector<int> part_dims;
  std::vector<int> support;              // sorted summand indices with dim > 0
  bool exact = false;
};

// Decomposes a face of the sum by picking a direction strictly inside its
// normal region (sum of the outward normals of all facets containing it).
DecomposedFace decompose_face(const SumInstance& inst, const SumPolytope& sum,
                              int face_index);

struct OrientationCheck {
  bool general = false;
  std::optional<int> offending_face;  // lattice index of the first inexact face
};

OrientationCheck is_general_orientation(const SumInstance& inst);
OrientationCheck check_orientation(const SumInstance& inst, const SumPolytope& sum);

// Caches partial sums by subset bitmask (bit i = summand i).
class PartialSumCache {
 public:
  explicit PartialSumCache(const SumInstance& inst) : inst_(&inst) {}
  const SumPolytope& get(uint32_t mask);
  const SumInstance& instance() const { return *inst_; }

 private:
  const SumInstance* inst_;
  std::map<uint32_t, SumPolytope> cache_;
};

std::vector<int> mask_to_subset(uint32_t mask);
uint32_t subset_to_mask(const std::vector<int>& S);

// Node-survival rule: the normal ray of a facet F of the full sum is a node
// of the Gaussian map of the partial sum P_S iff the support of F is
// contained in S. Returns whether it is a node (support face of dimension
// d-1); throws ClaimViolation if that disagrees with the support test.
bool lemma1_check(const SumInstance& inst, const SumPolytope& sum,
                  int facet_face_index, const std::vector<int>& S,
                  PartialSumCache& cache);

}  // namespace mink

#endif
