#include "mink/minkowski.hpp"

#include <algorithm>
#include <cassert>

#include "mink/errors.hpp"

namespace mink {

SumInstance SumInstance::of(int dim, std::vector<Polytope> summands) {
  if (summands.empty()) throw Error("SumInstance: need at least one summand");
  for (const auto& p : summands)
    if (p.ambient_dim() != dim)
      throw DimensionMismatch("SumInstance: summand ambient dimension mismatch");
  SumInstance inst;
  inst.dim = dim;
  inst.summands = std::move(summands);
  return inst;
}

SumInstance SumInstance::restricted(const std::vector<int>& S) const {
  if (S.empty()) throw Error("restricted: empty subset");
  std::vector<Polytope> sel;
  sel.reserve(S.size());
  for (int i : S) sel.push_back(summands.at(i));
  return SumInstance::of(dim, std::move(sel));
}

SumPolytope minkowski_sum(const SumInstance& inst) {
  int r = inst.r();
  int d = inst.dim;

  struct Entry {
    RatVector point;
    std::vector<int> tuple;
    bool multiple = false;
  };
  // Odometer over all vertex tuples.
  std::vector<Entry> entries;
  {
    std::vector<int> counts(r);
    long long total = 1;
    for (int i = 0; i < r; ++i) {
      counts[i] = inst.summands[i].vertex_count();
      total *= counts[i];
      if (total > 2'000'000)
        throw Error("minkowski_sum: tuple product too large for desk scale");
    }
    entries.reserve(static_cast<size_t>(total));
    std::vector<int> t(r, 0);
    while (true) {
      RatVector p(d, Rational(0));
      for (int i = 0; i < r; ++i) p = vadd(p, inst.summands[i].vertex(t[i]));
      entries.push_back({std::move(p), t, false});
      int i = r - 1;
      while (i >= 0 && t[i] == counts[i] - 1) { t[i] = 0; --i; }
      if (i < 0) break;
      ++t[i];
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return lex_cmp(a.point, b.point) < 0; });
  std::vector<Entry> distinct;
  for (auto& e : entries) {
    if (!distinct.empty() && distinct.back().point == e.point) {
      distinct.back().multiple = true;
    } else {
      distinct.push_back(std::move(e));
    }
  }

  std::vector<RatVector> pts;
  pts.reserve(distinct.size());
  for (const auto& e : distinct) pts.push_back(e.point);

  SumPolytope sum;
  sum.poly = Polytope::from_points(pts, d);
  sum.provenance.reserve(sum.poly.vertex_count());
  for (const auto& v : sum.poly.vertices()) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), v,
                               [](const Entry& e, const RatVector& key) {
                                 return lex_cmp(e.point, key) < 0;
                               });
    assert(it != distinct.end() && it->point == v);
    if (it->multiple)
      throw DegenerateCoincidence("minkowski_sum: extreme point " + vec_str(v) +
                                  " has two distinct vertex decompositions");
    sum.provenance.push_back(it->tuple);
  }
  return sum;
}

SumPolytope partial_sum(const SumInstance& inst, const std::vector<int>& S) {
  if (S.empty()) throw Error("partial_sum: empty subset");
  return minkowski_sum(inst.restricted(S));
}

namespace {

// Direction strictly inside the normal region of a face: a positive
// combination of the outward normals of all facets containing it.
RatVector interior_normal(const SumPolytope& sum, const FaceLatticeEntry& face,
                          bool weighted) {
  const auto& fs = sum.poly.facets();
  RatVector l(sum.poly.ambient_dim(), Rational(0));
  long long w = 1;
  for (const auto& f : fs) {
    if (!face.vertex_set.subset_of(f.incident)) continue;
    l = vadd(l, weighted ? vscale(f.normal, Rational(w)) : f.normal);
    ++w;
  }
  if (vzero(l)) throw Error("interior_normal: face contained in no facet");
  return l;
}

DecomposedFace decompose_at(const SumInstance& inst, const FaceLatticeEntry& face,
                            const RatVector& l) {
  DecomposedFace dec;
  dec.face_dim = face.face_dim;
  dec.parts.reserve(inst.r());
  int dim_sum = 0;
  for (int i = 0; i < inst.r(); ++i) {
    auto part = inst.summands[i].support_face(l);
    int pd = affine_dim_of(inst.summands[i].vertices(), part);
    dec.part_dims.push_back(pd);
    dim_sum += pd;
    if (pd > 0) dec.support.push_back(i);
    dec.parts.push_back(std::move(part));
  }
  dec.exact = (dim_sum == face.face_dim);
  return dec;
}

}  // namespace

DecomposedFace decompose_face(const SumInstance& inst, const SumPolytope& sum,
                              int face_index) {
  const auto& lat = sum.poly.face_lattice();
  const auto& face = lat.faces.at(face_index);
  RatVector l = interior_normal(sum, face, /*weighted=*/false);
  DecomposedFace dec = decompose_at(inst, face, l);
  dec.face_index = face_index;
#ifndef NDEBUG
  // The decomposition must not depend on which interior direction was used.
  RatVector l2 = interior_normal(sum, face, /*weighted=*/true);
  DecomposedFace dec2 = decompose_at(inst, face, l2);
  assert(dec.parts == dec2.parts);
#endif
  return dec;
}

OrientationCheck check_orientation(const SumInstance& inst, const SumPolytope& sum) {
  const auto& lat = sum.poly.face_lattice();
  for (size_t i = 0; i < lat.faces.size(); ++i) {
    DecomposedFace dec = decompose_face(inst, sum, static_cast<int>(i));
    if (!dec.exact) return {false, static_cast<int>(i)};
  }
  return {true, std::nullopt};
}

OrientationCheck is_general_orientation(const SumInstance& inst) {
  SumPolytope sum = minkowski_sum(inst);
  return check_orientation(inst, sum);
}

const SumPolytope& PartialSumCache::get(uint32_t mask) {
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;
  auto S = mask_to_subset(mask);
  auto [pos, _] = cache_.emplace(mask, partial_sum(*inst_, S));
  return pos->second;
}

std::vector<int> mask_to_subset(uint32_t mask) {
  std::vector<int> S;
  for (int i = 0; i < 32; ++i)
    if (mask & (uint32_t{1} << i)) S.push_back(i);
  return S;
}

uint32_t subset_to_mask(const std::vector<int>& S) {
  uint32_t m = 0;
  for (int i : S) m |= (uint32_t{1} << i);
  return m;
}

bool lemma1_check(const SumInstance& inst, const SumPolytope& sum,
                  int facet_face_index, const std::vector<int>& S,
                  PartialSumCache& cache) {
  int d = inst.dim;
  const auto& lat = sum.poly.face_lattice();
  const auto& face = lat.faces.at(facet_face_index);
  if (face.face_dim != d - 1)
    throw Error("lemma1_check: face is not a facet");

  RatVector n = interior_normal(sum, face, /*weighted=*/false);
  const SumPolytope& ps = cache.get(subset_to_mask(S));
  auto sf = ps.poly.support_face(n);
  bool is_node = affine_dim_of(ps.poly.vertices(), sf) == d - 1;

  DecomposedFace dec = decompose_face(inst, sum, facet_face_index);
  bool support_in_s = std::includes(S.begin(), S.end(), dec.support.begin(),
                                    dec.support.end());
  if (is_node != support_in_s)
    throw ClaimViolation("lemma1: node membership disagrees with support test");
  return is_node;
}

}  // namespace mink
