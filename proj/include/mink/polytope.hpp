#ifndef MINK_POLYTOPE_HPP
#define MINK_POLYTOPE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "mink/bits.hpp"
#include "mink/exact.hpp"

namespace mink {

struct Facet {
  RatVector normal;  // outward, primitive integer entries
  Rational offset;   // <normal, x> <= offset for all x in P
  IndexSet incident;
};

struct FaceLatticeEntry {
  IndexSet vertex_set;
  std::vector<int> vertices;  // sorted
  int face_dim = 0;
  std::vector<int> parents;   // covering faces (dim+1)
  std::vector<int> children;  // covered faces (dim-1)
};

struct FaceLattice {
  std::vector<FaceLatticeEntry> faces;       // proper nonempty faces, sorted by (dim, vertices)
  std::vector<std::vector<int>> by_dim;      // indices per dimension 0..d-1
};

struct FVector {
  std::vector<long long> counts;  // f_0 .. f_{d-1}
  bool operator==(const FVector&) const = default;
};

// V-representation polytope over exact rationals. Vertices are the extreme
// points in lexicographic order. Facets and the face lattice are computed on
// demand and cached; both require the polytope to be full-dimensional.
// Lower-dimensional point sets (segments, polygons embedded in R^d) are
// supported through from_points(); they carry vertices and support-face
// queries but no facet structure.
class Polytope {
 public:
  // Strict constructor: duplicates and non-extreme points removed, errors
  // with NotFullDimensional unless the points span R^dim.
  static Polytope normalize(const std::vector<RatVector>& points, int dim);

  // Same cleanup, any affine dimension allowed.
  static Polytope from_points(const std::vector<RatVector>& points, int dim);

  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const RatVector& vertex(int i) const { return vertices_[i]; }

  const std::vector<Facet>& facets() const;
  const FaceLattice& face_lattice() const;
  FVector f_vector() const;  // checks Euler-Poincare

  // Vertex indices maximizing <l, .>; this set is a face.
  std::vector<int> support_face(const RatVector& l) const;

  RatVector centroid() const;

  bool operator==(const Polytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
  }

 private:
  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<RatVector> vertices_;
  mutable std::shared_ptr<const std::vector<Facet>> facets_;
  mutable std::shared_ptr<const FaceLattice> lattice_;
};

// Facet enumeration engines over a raw point set (full-dimensional). Facets
// come back with incident sets over the *input* indexing, deduplicated,
// outward-oriented, sorted by (normal, offset). Exposed for cross-checking.
std::vector<Facet> facets_subset_scan(const std::vector<RatVector>& pts, int d);
std::vector<Facet> facets_incremental(const std::vector<RatVector>& pts, int d);

// Engine selection used by Polytope: subset scan at desk scale, incremental
// hull when C(n,d)*n grows past it.
std::vector<Facet> enumerate_facets(const std::vector<RatVector>& pts, int d);

// Extreme points of a full-dimensional point set given its facets: a point
// is extreme iff its active facet normals span R^d.
std::vector<int> extreme_points(const std::vector<RatVector>& pts,
                                const std::vector<Facet>& facets);

}  // namespace mink

#endif
