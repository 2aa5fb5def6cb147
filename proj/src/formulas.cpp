#include "mink/formulas.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mink/errors.hpp"

namespace mink {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  mpz_class r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= static_cast<long>(n - k + i);
    r /= static_cast<long>(i);
  }
  if (!r.fits_slong_p()) throw Error("binomial: result exceeds desk scale");
  return r.get_si();
}

long long lemma6_sum(int s, int d, int r) {
  if (!(1 <= s && s < d && d <= r))
    throw std::invalid_argument("lemma6_sum: need 1 <= s < d <= r");
  long long total = 0;
  for (int j = 1; j <= d - 1; ++j) {
    long long sign = ((d - 1 - j) % 2 == 0) ? 1 : -1;
    total += sign * binomial(r - 1 - j, d - 1 - j) * binomial(r - s, j - s);
  }
  return total;
}

int theorem1_alpha(int k, int d) { return (k == 0 && d % 2 == 1) ? 2 : 0; }

long long theorem1_rhs(const std::map<uint32_t, long long>& per_subset, int d,
                       int r, int k) {
  long long alpha = theorem1_alpha(k, d);
  long long total = alpha;
  for (int j = 1; j <= d - 1; ++j) {
    long long sign = ((d - 1 - j) % 2 == 0) ? 1 : -1;
    long long coeff = binomial(r - 1 - j, d - 1 - j);
    if (coeff == 0) continue;
    long long inner = 0;
    for (uint32_t mask = 1; mask < (uint32_t{1} << r); ++mask) {
      if (std::popcount(mask) != j) continue;
      auto it = per_subset.find(mask);
      if (it == per_subset.end())
        throw Error("theorem1_rhs: missing subset in per_subset map");
      inner += it->second - alpha;
    }
    total += sign * coeff * inner;
  }
  return total;
}

SumAnalysis::SumAnalysis(SumInstance inst) : inst_(std::move(inst)) {}

const SumPolytope& SumAnalysis::full() {
  auto it = partials_.find(0);
  if (it == partials_.end())
    it = partials_.emplace(0, minkowski_sum(inst_)).first;
  return it->second;
}

const SumPolytope& SumAnalysis::partial(uint32_t mask) {
  if (mask == 0) return full();
  auto it = partials_.find(mask);
  if (it == partials_.end())
    it = partials_.emplace(mask, partial_sum(inst_, mask_to_subset(mask))).first;
  return it->second;
}

const OrientationCheck& SumAnalysis::orientation() {
  if (!orient_) orient_ = check_orientation(inst_, full());
  return *orient_;
}

long long SumAnalysis::f_k(uint32_t mask, int k) {
  const SumPolytope& ps = partial(mask);
  if (k == 0) return ps.poly.vertex_count();
  if (!ps.poly.full_dimensional())
    throw NotFullDimensional(
        "f_k: partial sum is lower-dimensional, f_k undefined for k >= 1");
  return ps.poly.f_vector().counts.at(k);
}

void SumAnalysis::prefill(int max_card) {
  int r = inst_.r();
  std::vector<uint32_t> todo;
  for (uint32_t mask = 1; mask < (uint32_t{1} << r); ++mask)
    if (std::popcount(mask) <= max_card && !partials_.count(mask))
      todo.push_back(mask);
  std::vector<std::optional<SumPolytope>> slots(todo.size());
  parallel_for(static_cast<int>(todo.size()), [&](int i) {
    slots[i] = partial_sum(inst_, mask_to_subset(todo[i]));
  });
  for (size_t i = 0; i < todo.size(); ++i)
    partials_.emplace(todo[i], std::move(*slots[i]));
}

RelationReport verify_theorem1(SumAnalysis& a, int k) {
  const SumInstance& inst = a.instance();
  int d = inst.dim, r = inst.r();
  if (r < d) throw std::invalid_argument("verify_theorem1: requires r >= d");
  if (!a.orientation().general)
    throw GeneralOrientationRequired("verify_theorem1: summands not in general orientations");

  RelationReport rep;
  rep.d = d;
  rep.r = r;
  rep.k = k;
  rep.alpha = theorem1_alpha(k, d);
  a.prefill(d - 1);
  for (uint32_t mask = 1; mask < (uint32_t{1} << r); ++mask)
    if (std::popcount(mask) <= d - 1) rep.per_subset[mask] = a.f_k(mask, k);
  rep.lhs = a.f_k(0, k);
  rep.rhs = theorem1_rhs(rep.per_subset, d, r, k);
  rep.equal = (rep.lhs == rep.rhs);
  return rep;
}

long long corollary_bound(SumAnalysis& a, int k) {
  const SumInstance& inst = a.instance();
  int d = inst.dim, r = inst.r();
  if (r < d) throw std::invalid_argument("corollary_bound: requires r >= d");
  if (!a.orientation().general)
    throw GeneralOrientationRequired("corollary_bound: summands not in general orientations");
  a.prefill(d - 1);
  long long bound = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << r); ++mask)
    if (std::popcount(mask) == d - 1) bound += a.f_k(mask, k);
  long long lhs = a.f_k(0, k);
  if (lhs > bound)
    throw ClaimViolation("corollary bound violated: f_k(sum) = " +
                         std::to_string(lhs) + " > " + std::to_string(bound));
  return bound;
}

VertexBounds vertex_bounds(int d, int r, const std::vector<long long>& n) {
  if (r < d) throw std::invalid_argument("vertex_bounds: requires r >= d");
  if (static_cast<int>(n.size()) != r)
    throw std::invalid_argument("vertex_bounds: need one vertex count per summand");
  VertexBounds vb;
  // Sum over (d-1)-subsets of the product of vertex counts.
  std::vector<int> idx(d - 1);
  for (int i = 0; i < d - 1; ++i) idx[i] = i;
  while (true) {
    long long prod = 1;
    for (int i : idx) prod *= n[i];
    vb.product_bound += prod;
    int i = d - 2;
    while (i >= 0 && idx[i] == r - (d - 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  long long total = 0, nmax = 0;
  for (long long ni : n) {
    total += ni;
    nmax = std::max(nmax, ni);
  }
  vb.choose_total = binomial(total, d - 1);
  long long pw = 1;
  for (int i = 0; i < d - 1; ++i) pw *= nmax;
  vb.choose_each = binomial(r, d - 1) * pw;
  if (vb.product_bound > vb.choose_total)
    throw ClaimViolation("vertex_bounds: product bound exceeds C(n, d-1)");
  return vb;
}

long long exact_count_even_d(int d, int r, long long n) {
  if (d % 2 != 0) throw std::invalid_argument("exact_count_even_d: d must be even");
  if (r < d) throw std::invalid_argument("exact_count_even_d: requires r >= d");
  long long total = 0;
  long long npow = 1;
  for (int j = 1; j <= d - 1; ++j) {
    npow *= n;
    long long sign = ((d - 1 - j) % 2 == 0) ? 1 : -1;
    total += sign * binomial(r - 1 - j, d - 1 - j) * binomial(r, j) * npow;
  }
  return total;
}

int thread_width() {
  const char* env = std::getenv("MINKCOUNT_THREADS");
  long v = 0;
  if (env && *env) v = std::strtol(env, nullptr, 10);
  if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
  if (v <= 0) v = 1;
  return static_cast<int>(v);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int width = std::min(thread_width(), n);
  if (width <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(width);
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace mink
