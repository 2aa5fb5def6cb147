#ifndef MINK_FORMULAS_HPP
#define MINK_FORMULAS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mink/minkowski.hpp"

namespace mink {

// C(n, k); 0 outside the triangle. Desk-scale arguments, exact.
long long binomial(long long n, long long k);

// Sum_{j=1}^{d-1} (-1)^{d-1-j} C(r-1-j, d-1-j) C(r-s, j-s) for 1 <= s < d <= r.
// Always equals 1; callers assert.
long long lemma6_sum(int s, int d, int r);

// 2 when k = 0 and d odd, 0 otherwise.
int theorem1_alpha(int k, int d);

// alpha + Sum_j (-1)^{d-1-j} C(r-1-j, d-1-j) Sum_{|S|=j} (f_k(P_S) - alpha),
// i.e. the predicted f_k of the full sum. per_subset must cover every
// nonempty subset mask of cardinality <= d-1.
long long theorem1_rhs(const std::map<uint32_t, long long>& per_subset, int d,
                       int r, int k);

struct RelationReport {
  int d = 0, r = 0, k = 0, alpha = 0;
  long long lhs = 0, rhs = 0;
  std::map<uint32_t, long long> per_subset;  // mask -> f_k(P_S), |S| <= d-1
  bool equal = false;
};

// Per-instance driver: owns the full sum, all needed partial sums and their
// f-vectors. Partial sums may be filled in parallel (thread count from
// MINKCOUNT_THREADS, 0 = auto); results are independent of scheduling.
class SumAnalysis {
 public:
  explicit SumAnalysis(SumInstance inst);

  const SumInstance& instance() const { return inst_; }
  const SumPolytope& full();
  const SumPolytope& partial(uint32_t mask);
  const OrientationCheck& orientation();

  // f_k of the partial sum for `mask` (0 = full sum). k = 0 is the vertex
  // count and works for lower-dimensional sums; k >= 1 requires the partial
  // sum to be full-dimensional.
  long long f_k(uint32_t mask, int k);

  // Computes all partial sums with 1 <= |S| <= max_card up front.
  void prefill(int max_card);

 private:
  SumInstance inst_;
  std::map<uint32_t, SumPolytope> partials_;  // mask 0 holds the full sum
  std::optional<OrientationCheck> orient_;
};

// Checks the face-count relation for one k: lhs from the full sum's face lattice, rhs via
// theorem1_rhs over all partial sums of fewer than d summands. Requires
// r >= d and general orientations.
RelationReport verify_theorem1(SumAnalysis& a, int k);

// Corollary 1 bound: sum of f_k over all (d-1)-subsets. Throws
// ClaimViolation if f_k(full) exceeds it.
long long corollary_bound(SumAnalysis& a, int k);

struct VertexBounds {
  long long product_bound = 0;  // Sum over (d-1)-subsets of prod n_i
  long long choose_total = 0;   // C(Sum n_i, d-1)
  long long choose_each = 0;    // C(r, d-1) * (max n_i)^{d-1}
};

VertexBounds vertex_bounds(int d, int r, const std::vector<long long>& n);

// Closed-form vertex count of the full sum when every (d-1)-subset sum is
// extremal; stated for even d only.
long long exact_count_even_d(int d, int r, long long n);

// Parallelism width: MINKCOUNT_THREADS, 0 or unset = hardware concurrency.
int thread_width();
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace mink

#endif
