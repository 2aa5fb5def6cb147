#ifndef MINK_GAUSSMAP3D_HPP
#define MINK_GAUSSMAP3D_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "mink/polytope.hpp"

namespace mink {

// All spherical objects are rational rays and cones; the unit sphere itself
// is never materialized. A node is the outward normal ray of a facet, an arc
// is the minor great-circle arc between two node rays (the normal region of
// an edge), a region is the normal cone of a vertex.

// Per-cell decomposition: for each constituent summand, the vertex set of
// its support face at any ray interior to the cell; support lists the
// summands contributing a positive-dimensional face.
struct CellLabel {
  std::vector<std::vector<int>> parts;
  std::vector<int> support;
  bool operator==(const CellLabel& o) const { return parts == o.parts; }
};

struct GMNode {
  RatVector ray;  // primitive integer direction
  CellLabel label;
};

struct GMArc {
  int a = -1, b = -1;  // node ids, linearly independent rays
  CellLabel label;
};

struct GMRegion {
  std::vector<int> nodes;  // boundary cycle
  std::vector<int> arcs;   // boundary cycle, arcs[i] joins nodes[i], nodes[i+1]
  CellLabel label;
};

enum class CellKind { Node = 0, Arc = 1, Region = 2 };

struct CellRef {
  CellKind kind = CellKind::Node;
  int index = 0;
  auto operator<=>(const CellRef&) const = default;
};

struct GaussianMap3 {
  std::vector<Polytope> summands;
  std::vector<GMNode> nodes;
  std::vector<GMArc> arcs;
  std::vector<GMRegion> regions;

  int cell_dim(CellRef c) const { return static_cast<int>(c.kind); }
  const CellLabel& label(CellRef c) const;
  long long cell_count(CellKind k) const;
};

// Gaussian map of a full-dimensional 3-polytope: nodes/arcs/regions dual to
// facets/edges/vertices.
GaussianMap3 gaussian_map(const Polytope& p);

// Common refinement of several maps. New nodes are transversal intersections
// of arcs from different input maps; any concurrence of three arcs, node on a
// foreign arc, or overlapping arcs raises NotGeneralOrientation.
GaussianMap3 overlay(const std::vector<GaussianMap3>& maps);

struct Poles {
  RatVector axis;  // u; north = +u, south = -u
  RatVector e1, e2;  // rational frame orthogonal to u, (e1, e2, u) positively oriented
};

Poles poles_from_axis(const RatVector& axis);
bool poles_valid(const GaussianMap3& map, const RatVector& axis);

// Deterministic-from-seed axis not lying in the plane of any arc.
Poles choose_poles(const GaussianMap3& map, uint64_t seed);

enum class WestOrder { PWest, QWest, Tie };

// Half-turn ordering of theta_1 around the poles, exactly, via the sign of
// the 2x2 determinant of projected coordinates. Rays projecting to opposite
// directions (theta difference exactly pi) sit on the boundary of the closed
// half-turn interval, so each is west of the other; the pair is canonicalized
// to the lexicographically smaller ray.
WestOrder west_compare(const RatVector& p, const RatVector& q, const Poles& poles);

// theta_1(p) and theta_1(q) differ by exactly pi.
bool theta_antipodal(const RatVector& p, const RatVector& q, const Poles& poles);
// theta_1(p) == theta_1(q).
bool theta_tie(const RatVector& p, const RatVector& q, const Poles& poles);

// The unique incident node west of the rest of the cell; regions containing
// a pole direction throw PoleCell.
int westernmost(const GaussianMap3& map, CellRef cell, const Poles& poles);

// Boundary nodes of a region that are local optima: west of both their cycle
// neighbors. Lemma "local = western-most" says this has exactly one element
// for every non-pole region.
std::vector<int> region_local_optima(const GaussianMap3& map, int region,
                                     const Poles& poles);

// No two nodes of the cell at antipodal theta_1 (the cell's theta span is
// strictly less than a half turn).
bool hemisphere_ok(const GaussianMap3& map, CellRef cell, const Poles& poles);

struct WitnessCount {
  std::array<long long, 3> w{0, 0, 0};  // w_0 nodes, w_1 arcs, w_2 regions - 2
  std::map<CellRef, int> per_cell;      // cell -> western-most node
  std::array<int, 2> pole_regions{-1, -1};  // north, south
};

WitnessCount count_witnesses(const GaussianMap3& map, const Poles& poles);

// Does the witness of `cell` (in the overlay of all summands) survive in the
// overlay `sub` of the subset S of summands? True iff the support of the
// western-most node's underlying facet is contained in S; throws
// ClaimViolation if the geometric check disagrees with that rule.
bool witness_membership(const GaussianMap3& full, CellRef cell,
                        const std::vector<int>& S, const GaussianMap3& sub,
                        const Poles& poles);

// Full d=3 witness machinery for one instance: single maps, pair overlays,
// full overlay, witness counts, the counting identity
// w_k(full) = Sum_pairs w_k - (r-2) Sum_singles w_k, exhaustive witness
// membership over |S| <= 2, local-optimum uniqueness and hemisphere checks.
struct WitnessSuite {
  Poles poles;
  std::vector<GaussianMap3> singles;
  std::map<std::pair<int, int>, GaussianMap3> pairs;
  GaussianMap3 full;
  std::vector<WitnessCount> single_counts;
  std::map<std::pair<int, int>, WitnessCount> pair_counts;
  WitnessCount full_count;
  std::array<bool, 3> identity_ok{false, false, false};
  bool membership_ok = false;
  bool local_global_ok = false;
  bool hemisphere_all_ok = false;
  long long membership_checks = 0;
};

WitnessSuite run_witness_suite(const std::vector<Polytope>& summands, uint64_t seed);

}  // namespace mink

#endif
