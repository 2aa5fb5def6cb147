#include "mink/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mink/errors.hpp"

namespace mink {

namespace {

std::vector<RatVector> dedup_sorted(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Key for hyperplane dedup: canonical normal entries then offset.
struct PlaneKey {
  RatVector n;
  Rational b;
  bool operator<(const PlaneKey& o) const {
    int c = lex_cmp(n, o.n);
    if (c) return c < 0;
    return b < o.b;
  }
};

void sort_facets(std::vector<Facet>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) {
    int c = lex_cmp(a.normal, b.normal);
    if (c) return c < 0;
    return a.offset < b.offset;
  });
}

Facet make_outward(const Hyperplane& h, const std::vector<RatVector>& pts, bool flip) {
  Facet f;
  f.normal = flip ? vneg(h.normal) : h.normal;
  f.offset = flip ? -h.offset : h.offset;
  f.incident = IndexSet(static_cast<int>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i)
    if (dot(f.normal, pts[i]) == f.offset) f.incident.set(static_cast<int>(i));
  return f;
}

// d=1 is degenerate for both engines; handle directly.
std::vector<Facet> facets_dim1(const std::vector<RatVector>& pts) {
  int lo = 0, hi = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i][0] < pts[lo][0]) lo = static_cast<int>(i);
    if (pts[i][0] > pts[hi][0]) hi = static_cast<int>(i);
  }
  Facet fmax{{Rational(1)}, pts[hi][0], IndexSet(static_cast<int>(pts.size()))};
  Facet fmin{{Rational(-1)}, -pts[lo][0], IndexSet(static_cast<int>(pts.size()))};
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i][0] == pts[hi][0]) fmax.incident.set(static_cast<int>(i));
    if (pts[i][0] == pts[lo][0]) fmin.incident.set(static_cast<int>(i));
  }
  std::vector<Facet> fs{fmin, fmax};
  sort_facets(fs);
  return fs;
}

}  // namespace

std::vector<Facet> facets_subset_scan(const std::vector<RatVector>& pts, int d) {
  if (d == 1) return facets_dim1(pts);
  int n = static_cast<int>(pts.size());
  std::set<PlaneKey> seen;
  std::vector<Facet> out;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::vector<RatVector> sub(d);
  while (true) {
    for (int i = 0; i < d; ++i) sub[i] = pts[idx[i]];
    auto h = solve_hyperplane(sub);
    if (h) {
      PlaneKey key{h->normal, h->offset};
      if (seen.insert(key).second) {
        bool pos = false, neg = false;
        for (const auto& p : pts) {
          int s = (dot(h->normal, p) - h->offset).sign();
          pos |= s > 0;
          neg |= s < 0;
          if (pos && neg) break;
        }
        // Outward orientation keeps every point on the <= side.
        if (!(pos && neg)) out.push_back(make_outward(*h, pts, /*flip=*/pos));
      }
    }
    // next d-combination
    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  sort_facets(out);
  return out;
}

namespace {

// Beneath-beyond state: simplicial facets over input point indices.
struct SimpFacet {
  std::vector<int> vs;  // d sorted vertex indices
  RatVector normal;     // outward primitive
  Rational offset;
};

SimpFacet simp_facet(const std::vector<RatVector>& pts, std::vector<int> vs,
                     const RatVector& interior) {
  std::sort(vs.begin(), vs.end());
  std::vector<RatVector> sub;
  sub.reserve(vs.size());
  for (int v : vs) sub.push_back(pts[v]);
  auto h = solve_hyperplane(sub);
  if (!h) throw Error("incremental hull: degenerate facet simplex");
  int s = (dot(h->normal, interior) - h->offset).sign();
  if (s == 0) throw Error("incremental hull: interior point on facet plane");
  SimpFacet f;
  if (s < 0) {
    f.normal = h->normal;
    f.offset = h->offset;
  } else {
    f.normal = vneg(h->normal);
    f.offset = -h->offset;
  }
  f.vs = std::move(vs);
  return f;
}

}  // namespace

std::vector<Facet> facets_incremental(const std::vector<RatVector>& pts, int d) {
  if (d == 1) return facets_dim1(pts);
  int n = static_cast<int>(pts.size());

  // Seed simplex: greedy affinely independent points.
  std::vector<int> seed{0};
  std::vector<RatVector> chosen{pts[0]};
  for (int i = 1; i < n && static_cast<int>(seed.size()) < d + 1; ++i) {
    chosen.push_back(pts[i]);
    if (affine_dim_of(chosen) == static_cast<int>(seed.size())) {
      seed.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (static_cast<int>(seed.size()) != d + 1)
    throw NotFullDimensional("incremental hull: points not full-dimensional");

  RatVector interior(d, Rational(0));
  for (int v : seed) interior = vadd(interior, pts[v]);
  interior = vscale(interior, Rational(1, d + 1));

  std::vector<SimpFacet> facets;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> vs;
    for (int j = 0; j <= d; ++j)
      if (j != skip) vs.push_back(seed[j]);
    facets.push_back(simp_facet(pts, vs, interior));
  }

  std::vector<bool> in_seed(n, false);
  for (int v : seed) in_seed[v] = true;

  for (int p = 0; p < n; ++p) {
    if (in_seed[p]) continue;
    std::vector<int> visible;
    for (size_t f = 0; f < facets.size(); ++f)
      if (dot(facets[f].normal, pts[p]) > facets[f].offset)
        visible.push_back(static_cast<int>(f));
    if (visible.empty()) continue;  // inside or on the current hull

    // Horizon ridges appear in exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (int f : visible) {
      const auto& vs = facets[f].vs;
      for (size_t skip = 0; skip < vs.size(); ++skip) {
        std::vector<int> ridge;
        ridge.reserve(vs.size() - 1);
        for (size_t j = 0; j < vs.size(); ++j)
          if (j != skip) ridge.push_back(vs[j]);
        ++ridge_count[ridge];
      }
    }
    std::vector<bool> is_visible(facets.size(), false);
    for (int f : visible) is_visible[f] = true;
    std::vector<SimpFacet> next;
    next.reserve(facets.size());
    for (size_t f = 0; f < facets.size(); ++f)
      if (!is_visible[f]) next.push_back(std::move(facets[f]));
    for (const auto& [ridge, cnt] : ridge_count) {
      if (cnt != 1) continue;
      std::vector<int> vs = ridge;
      vs.push_back(p);
      next.push_back(simp_facet(pts, std::move(vs), interior));
    }
    facets = std::move(next);
  }

  // Merge coplanar simplicial facets and recompute full incident sets.
  std::map<PlaneKey, bool> merged;
  for (const auto& f : facets) merged[PlaneKey{f.normal, f.offset}] = true;
  std::vector<Facet> out;
  out.reserve(merged.size());
  for (const auto& [key, _] : merged) {
    Facet f;
    f.normal = key.n;
    f.offset = key.b;
    f.incident = IndexSet(n);
    for (int i = 0; i < n; ++i)
      if (dot(f.normal, pts[i]) == f.offset) f.incident.set(i);
    out.push_back(std::move(f));
  }
  sort_facets(out);
  return out;
}

std::vector<Facet> enumerate_facets(const std::vector<RatVector>& pts, int d) {
  // Cost of the exhaustive scan is ~C(n,d)*n hyperplane checks; switch to the
  // incremental hull once that outgrows desk scale.
  double cost = static_cast<double>(pts.size());
  long long nn = static_cast<long long>(pts.size());
  for (int i = 0; i < d; ++i) cost *= static_cast<double>(nn - i) / (i + 1);
  if (cost <= 2e6) return facets_subset_scan(pts, d);
  return facets_incremental(pts, d);
}

std::vector<int> extreme_points(const std::vector<RatVector>& pts,
                                const std::vector<Facet>& facets) {
  int d = pts.empty() ? 0 : static_cast<int>(pts[0].size());
  std::vector<int> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    RatMatrix active;
    for (const auto& f : facets)
      if (f.incident.test(static_cast<int>(i))) active.push_back(f.normal);
    if (!active.empty() && rank(active) == d) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// Re-expresses a lower-dimensional point set in coordinates of its affine
// hull, so hull machinery can run in the right dimension.
struct Chart {
  RatVector origin;
  RatMatrix basis;             // m x d, rows span the direction space
  std::vector<int> piv_cols;   // m independent columns of basis
  RatMatrix minv;              // inverse of basis[:, piv_cols]

  RatVector to_chart(const RatVector& p) const {
    RatVector rel = vsub(p, origin);
    RatVector rhs(piv_cols.size());
    for (size_t j = 0; j < piv_cols.size(); ++j) rhs[j] = rel[piv_cols[j]];
    RatVector t = mat_apply(minv, rhs);
    // The point must lie in the affine hull.
    RatVector back(origin.size(), Rational(0));
    for (size_t k = 0; k < basis.size(); ++k)
      back = vadd(back, vscale(basis[k], t[k]));
    if (back != rel) throw Error("chart: point outside affine hull");
    return t;
  }
};

Chart make_chart(const std::vector<RatVector>& pts, int m) {
  Chart ch;
  ch.origin = pts[0];
  std::vector<RatVector> chosen{pts[0]};
  for (size_t i = 1; i < pts.size() && static_cast<int>(ch.basis.size()) < m; ++i) {
    chosen.push_back(pts[i]);
    if (affine_dim_of(chosen) == static_cast<int>(ch.basis.size()) + 1) {
      ch.basis.push_back(vsub(pts[i], pts[0]));
    } else {
      chosen.pop_back();
    }
  }
  // Pivot columns via elimination on a scratch copy.
  RatMatrix scratch = ch.basis;
  int d = static_cast<int>(ch.origin.size());
  int r = 0;
  for (int c = 0; c < d && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (!scratch[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(scratch[piv], scratch[r]);
    for (int i = r + 1; i < m; ++i) {
      if (scratch[i][c].is_zero()) continue;
      Rational f = scratch[i][c] / scratch[r][c];
      for (int j = c; j < d; ++j) scratch[i][j] -= f * scratch[r][j];
    }
    ch.piv_cols.push_back(c);
    ++r;
  }
  RatMatrix msub(m, RatVector(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) msub[i][j] = ch.basis[i][ch.piv_cols[j]];
  auto inv = mat_inverse(mat_transpose(msub));
  if (!inv) throw Error("chart: singular basis submatrix");
  ch.minv = *inv;
  return ch;
}

}  // namespace

Polytope Polytope::normalize(const std::vector<RatVector>& points, int dim) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw DimensionMismatch("normalize: point of wrong dimension");
  auto pts = dedup_sorted(points);
  if (pts.size() < 2) throw TooFewVertices("normalize: fewer than 2 distinct points");
  if (affine_dim_of(pts) != dim)
    throw NotFullDimensional("normalize: affine hull has dimension < " +
                             std::to_string(dim));
  auto facets = enumerate_facets(pts, dim);
  auto ext = extreme_points(pts, facets);
  Polytope P;
  P.ambient_dim_ = dim;
  P.affine_dim_ = dim;
  P.vertices_.reserve(ext.size());
  for (int i : ext) P.vertices_.push_back(pts[i]);
  // Rebuild incident sets over the surviving vertices.
  std::vector<Facet> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) {
    Facet g;
    g.normal = f.normal;
    g.offset = f.offset;
    g.incident = IndexSet(static_cast<int>(P.vertices_.size()));
    for (size_t i = 0; i < P.vertices_.size(); ++i)
      if (dot(g.normal, P.vertices_[i]) == g.offset) g.incident.set(static_cast<int>(i));
    fs.push_back(std::move(g));
  }
  P.facets_ = std::make_shared<const std::vector<Facet>>(std::move(fs));
  return P;
}

Polytope Polytope::from_points(const std::vector<RatVector>& points, int dim) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw DimensionMismatch("from_points: point of wrong dimension");
  auto pts = dedup_sorted(points);
  if (pts.size() < 2) throw TooFewVertices("from_points: fewer than 2 distinct points");
  int m = affine_dim_of(pts);
  if (m == dim) return normalize(pts, dim);

  Chart ch = make_chart(pts, m);
  std::vector<RatVector> chart_pts;
  chart_pts.reserve(pts.size());
  for (const auto& p : pts) chart_pts.push_back(ch.to_chart(p));
  auto facets = enumerate_facets(chart_pts, m);
  auto ext = extreme_points(chart_pts, facets);
  Polytope P;
  P.ambient_dim_ = dim;
  P.affine_dim_ = m;
  P.vertices_.reserve(ext.size());
  for (int i : ext) P.vertices_.push_back(pts[i]);
  return P;
}

const std::vector<Facet>& Polytope::facets() const {
  if (!full_dimensional())
    throw NotFullDimensional("facets: polytope is not full-dimensional");
  if (!facets_) {
    auto fs = enumerate_facets(vertices_, ambient_dim_);
    facets_ = std::make_shared<const std::vector<Facet>>(std::move(fs));
  }
  return *facets_;
}

const FaceLattice& Polytope::face_lattice() const {
  if (lattice_) return *lattice_;
  const auto& fs = facets();
  int d = ambient_dim_;

  // Every proper face is an intersection of facet incident sets; close the
  // facet sets under intersection.
  std::unordered_set<IndexSet, IndexSetHash> known;
  std::vector<IndexSet> work;
  for (const auto& f : fs)
    if (known.insert(f.incident).second) work.push_back(f.incident);
  for (size_t head = 0; head < work.size(); ++head) {
    IndexSet cur = work[head];
    for (const auto& f : fs) {
      if (cur.subset_of(f.incident)) continue;
      IndexSet inter = cur & f.incident;
      if (inter.empty()) continue;
      if (known.insert(inter).second) work.push_back(inter);
    }
  }

  auto lat = std::make_shared<FaceLattice>();
  lat->faces.reserve(work.size());
  for (auto& s : work) {
    FaceLatticeEntry e;
    e.vertices = s.to_list();
    e.vertex_set = std::move(s);
    e.face_dim = affine_dim_of(vertices_, e.vertices);
    lat->faces.push_back(std::move(e));
  }
  std::sort(lat->faces.begin(), lat->faces.end(),
            [](const FaceLatticeEntry& a, const FaceLatticeEntry& b) {
              if (a.face_dim != b.face_dim) return a.face_dim < b.face_dim;
              return a.vertices < b.vertices;
            });
  lat->by_dim.assign(d, {});
  for (size_t i = 0; i < lat->faces.size(); ++i)
    lat->by_dim[lat->faces[i].face_dim].push_back(static_cast<int>(i));
  // Covering links between consecutive dimensions.
  for (int k = 0; k + 1 < d; ++k) {
    for (int gi : lat->by_dim[k]) {
      for (int fi : lat->by_dim[k + 1]) {
        if (lat->faces[gi].vertex_set.subset_of(lat->faces[fi].vertex_set)) {
          lat->faces[gi].parents.push_back(fi);
          lat->faces[fi].children.push_back(gi);
        }
      }
    }
  }
  lattice_ = lat;
  return *lattice_;
}

FVector Polytope::f_vector() const {
  const auto& lat = face_lattice();
  int d = ambient_dim_;
  FVector f;
  f.counts.assign(d, 0);
  for (int k = 0; k < d; ++k) f.counts[k] = static_cast<long long>(lat.by_dim[k].size());
  long long euler = 0;
  for (int k = 0; k < d; ++k) euler += (k % 2 ? -1 : 1) * f.counts[k];
  long long expect = 1 + ((d - 1) % 2 ? -1 : 1);
  if (euler != expect)
    throw ClaimViolation("Euler-Poincare violated: alternating sum " +
                         std::to_string(euler) + " != " + std::to_string(expect));
  return f;
}

std::vector<int> Polytope::support_face(const RatVector& l) const {
  if (static_cast<int>(l.size()) != ambient_dim_)
    throw DimensionMismatch("support_face: direction of wrong dimension");
  if (vzero(l)) throw Error("support_face: zero direction");
  std::vector<int> arg;
  Rational best;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    Rational v = dot(l, vertices_[i]);
    if (arg.empty() || v > best) {
      best = v;
      arg.assign(1, static_cast<int>(i));
    } else if (v == best) {
      arg.push_back(static_cast<int>(i));
    }
  }
  return arg;
}

RatVector Polytope::centroid() const {
  RatVector c(ambient_dim_, Rational(0));
  for (const auto& v : vertices_) c = vadd(c, v);
  return vscale(c, Rational(1, static_cast<long long>(vertices_.size())));
}

}  // namespace mink
