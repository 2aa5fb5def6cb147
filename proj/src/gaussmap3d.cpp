#include "mink/gaussmap3d.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "mink/errors.hpp"
#include "mink/generators.hpp"

namespace mink {

const CellLabel& GaussianMap3::label(CellRef c) const {
  switch (c.kind) {
    case CellKind::Node: return nodes.at(c.index).label;
    case CellKind::Arc: return arcs.at(c.index).label;
    default: return regions.at(c.index).label;
  }
}

long long GaussianMap3::cell_count(CellKind k) const {
  switch (k) {
    case CellKind::Node: return static_cast<long long>(nodes.size());
    case CellKind::Arc: return static_cast<long long>(arcs.size());
    default: return static_cast<long long>(regions.size());
  }
}

namespace {

// --- cone predicates -------------------------------------------------------
// The arc between rays a, b is the set of rays alpha*a + beta*b with
// alpha, beta > 0. With n = a x b: for x coplanar, alpha and beta have the
// signs of <x x b, n> and <a x x, n>.

struct ConeCoords {
  Rational alpha, beta;
};

ConeCoords cone_coords(const RatVector& x, const RatVector& a, const RatVector& b,
                       const RatVector& plane) {
  return {dot(cross3(x, b), plane), dot(cross3(a, x), plane)};
}

bool in_cone_strict(const RatVector& x, const RatVector& a, const RatVector& b,
                    const RatVector& plane) {
  if (!dot(x, plane).is_zero()) return false;
  auto c = cone_coords(x, a, b, plane);
  return c.alpha.sign() > 0 && c.beta.sign() > 0;
}

bool in_cone_closed(const RatVector& x, const RatVector& a, const RatVector& b,
                    const RatVector& plane) {
  if (!dot(x, plane).is_zero()) return false;
  auto c = cone_coords(x, a, b, plane);
  return c.alpha.sign() >= 0 && c.beta.sign() >= 0;
}

// --- labeling ---------------------------------------------------------------

CellLabel label_at(const std::vector<Polytope>& summands, const RatVector& ray) {
  CellLabel lab;
  lab.parts.reserve(summands.size());
  for (size_t g = 0; g < summands.size(); ++g) {
    auto part = summands[g].support_face(ray);
    if (affine_dim_of(summands[g].vertices(), part) > 0)
      lab.support.push_back(static_cast<int>(g));
    lab.parts.push_back(std::move(part));
  }
  return lab;
}

int label_dim_sum(const std::vector<Polytope>& summands, const CellLabel& lab) {
  int s = 0;
  for (size_t g = 0; g < summands.size(); ++g)
    s += affine_dim_of(summands[g].vertices(), lab.parts[g]);
  return s;
}

// --- face tracing -----------------------------------------------------------
// Rotation-system face extraction: sort the half-edges around every node by
// exact angular order in the tangent plane, then walk next = successor of the
// twin. Orbits are the 2-cells.

RatVector tangent_at(const RatVector& p, const RatVector& q) {
  // Component of q orthogonal to p, scaled rationally.
  return vsub(vscale(q, dot(p, p)), vscale(p, dot(p, q)));
}

std::vector<GMRegion> trace_regions(const std::vector<GMNode>& nodes,
                                    const std::vector<GMArc>& arcs) {
  int nn = static_cast<int>(nodes.size());
  int na = static_cast<int>(arcs.size());
  // Half-edge 2*arc + 0 runs a->b, 2*arc + 1 runs b->a.
  auto tail = [&](int he) { return (he & 1) ? arcs[he >> 1].b : arcs[he >> 1].a; };
  auto head = [&](int he) { return (he & 1) ? arcs[he >> 1].a : arcs[he >> 1].b; };

  std::vector<std::vector<int>> outgoing(nn);
  for (int he = 0; he < 2 * na; ++he) outgoing[tail(he)].push_back(he);

  std::vector<int> pos_of(2 * na, -1);
  for (int v = 0; v < nn; ++v) {
    auto& out = outgoing[v];
    if (out.size() < 3)
      throw Error("trace_regions: node of degree < 3");
    const RatVector& p = nodes[v].ray;
    std::vector<RatVector> tans(out.size());
    for (size_t i = 0; i < out.size(); ++i)
      tans[i] = tangent_at(p, nodes[head(out[i])].ray);
    RatVector u1 = tans[0];
    RatVector u2 = cross3(p, u1);
    struct Dir { Rational x, y; int he; };
    std::vector<Dir> dirs(out.size());
    for (size_t i = 0; i < out.size(); ++i)
      dirs[i] = {dot(tans[i], u1), dot(tans[i], u2), out[i]};
    auto half = [](const Dir& d) {
      // 0 for angle in [0, pi), 1 for [pi, 2pi)
      int ys = d.y.sign();
      if (ys > 0) return 0;
      if (ys < 0) return 1;
      return d.x.sign() > 0 ? 0 : 1;
    };
    std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
      int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      Rational cr = a.x * b.y - a.y * b.x;
      if (cr.is_zero())
        throw NotGeneralOrientation("trace_regions: two arcs leave a node in the same direction");
      return cr.sign() > 0;
    });
    out.clear();
    for (size_t i = 0; i < dirs.size(); ++i) {
      out.push_back(dirs[i].he);
      pos_of[dirs[i].he] = static_cast<int>(i);
    }
  }

  std::vector<GMRegion> regions;
  std::vector<bool> seen(2 * na, false);
  for (int start = 0; start < 2 * na; ++start) {
    if (seen[start]) continue;
    GMRegion reg;
    int he = start;
    do {
      seen[he] = true;
      reg.nodes.push_back(tail(he));
      reg.arcs.push_back(he >> 1);
      int w = head(he);
      int twin = he ^ 1;
      const auto& out = outgoing[w];
      he = out[(pos_of[twin] + 1) % out.size()];
    } while (he != start);
    if (reg.nodes.size() < 3) throw Error("trace_regions: cell with fewer than 3 corners");
    regions.push_back(std::move(reg));
  }

  long long euler = nn - na + static_cast<long long>(regions.size());
  if (euler != 2)
    throw Error("trace_regions: Euler characteristic " + std::to_string(euler));
  return regions;
}

// Interior ray of a region: the sum of its (distinct) corner rays. Regions
// are normal cones of vertices, salient with the corners as extreme rays.
RatVector region_interior(const std::vector<GMNode>& nodes, const GMRegion& reg) {
  std::set<int> distinct(reg.nodes.begin(), reg.nodes.end());
  if (distinct.size() != reg.nodes.size())
    throw Error("region_interior: non-simple boundary cycle");
  RatVector l(3, Rational(0));
  for (int v : distinct) l = vadd(l, nodes[v].ray);
  return l;
}

void label_complex(GaussianMap3& m, bool require_general) {
  for (auto& n : m.nodes) {
    n.label = label_at(m.summands, n.ray);
    if (label_dim_sum(m.summands, n.label) != 2 ||
        n.label.support.size() < 1 || n.label.support.size() > 2) {
      if (require_general)
        throw NotGeneralOrientation("overlay: node with inexact decomposition");
      throw Error("gaussian map: node label of wrong dimension");
    }
  }
  for (auto& a : m.arcs) {
    a.label = label_at(m.summands, vadd(m.nodes[a.a].ray, m.nodes[a.b].ray));
    if (label_dim_sum(m.summands, a.label) != 1 || a.label.support.size() != 1) {
      if (require_general)
        throw NotGeneralOrientation("overlay: arc with inexact decomposition");
      throw Error("gaussian map: arc label of wrong dimension");
    }
  }
  std::set<std::vector<std::vector<int>>> region_labels;
  for (auto& r : m.regions) {
    r.label = label_at(m.summands, region_interior(m.nodes, r));
    if (label_dim_sum(m.summands, r.label) != 0)
      throw Error("gaussian map: region label of wrong dimension");
    if (!region_labels.insert(r.label.parts).second)
      throw Error("gaussian map: two regions with one vertex decomposition");
  }
}

}  // namespace

GaussianMap3 gaussian_map(const Polytope& p) {
  if (p.ambient_dim() != 3)
    throw Error("gaussian_map: defined for d = 3 only");
  if (!p.full_dimensional())
    throw NotFullDimensional("gaussian_map: polytope must be full-dimensional");

  GaussianMap3 m;
  m.summands = {p};
  const auto& fs = p.facets();
  const auto& lat = p.face_lattice();

  std::map<IndexSet, int> node_of_facet;
  for (size_t i = 0; i < fs.size(); ++i) {
    GMNode n;
    n.ray = fs[i].normal;  // primitive outward normal
    node_of_facet[fs[i].incident] = static_cast<int>(i);
    m.nodes.push_back(std::move(n));
  }

  for (int ei : lat.by_dim[1]) {
    const auto& edge = lat.faces[ei];
    std::vector<int> ends;
    for (int fi : edge.parents) {
      auto it = node_of_facet.find(lat.faces[fi].vertex_set);
      assert(it != node_of_facet.end());
      ends.push_back(it->second);
    }
    if (ends.size() != 2) throw Error("gaussian_map: edge not on exactly 2 facets");
    m.arcs.push_back(GMArc{ends[0], ends[1], {}});
  }

  m.regions = trace_regions(m.nodes, m.arcs);
  if (static_cast<long long>(m.regions.size()) != p.vertex_count())
    throw Error("gaussian_map: region count disagrees with vertex count");
  label_complex(m, /*require_general=*/false);
  return m;
}

GaussianMap3 overlay(const std::vector<GaussianMap3>& maps) {
  if (maps.empty()) throw Error("overlay: no maps");
  if (maps.size() == 1) return maps[0];

  GaussianMap3 m;
  for (const auto& g : maps)
    for (const auto& s : g.summands) m.summands.push_back(s);

  struct ONode {
    int input;
    RatVector ray;
  };
  struct OArc {
    int input;
    RatVector a, b, plane;  // plane = a x b
  };
  std::vector<ONode> onodes;
  std::vector<OArc> oarcs;
  for (size_t g = 0; g < maps.size(); ++g) {
    for (const auto& n : maps[g].nodes) onodes.push_back({static_cast<int>(g), n.ray});
    for (const auto& a : maps[g].arcs) {
      const RatVector& ra = maps[g].nodes[a.a].ray;
      const RatVector& rb = maps[g].nodes[a.b].ray;
      oarcs.push_back({static_cast<int>(g), ra, rb, cross3(ra, rb)});
    }
  }

  // Cross-map degeneracies: coincident nodes and nodes on foreign arcs.
  for (const auto& n : onodes)
    for (const auto& n2 : onodes)
      if (n.input < n2.input && n.ray == n2.ray)
        throw NotGeneralOrientation("overlay: coincident nodes of different maps");
  for (const auto& n : onodes)
    for (const auto& a : oarcs)
      if (n.input != a.input && in_cone_closed(n.ray, a.a, a.b, a.plane))
        throw NotGeneralOrientation("overlay: node of one map on an arc of another");

  // Transversal arc-arc intersections between different input maps.
  struct Crossing {
    RatVector ray;
    std::vector<int> on_arcs;  // indices into oarcs
  };
  std::map<RatVector, Crossing, LexLess> crossings;
  for (size_t i = 0; i < oarcs.size(); ++i) {
    for (size_t j = i + 1; j < oarcs.size(); ++j) {
      const OArc& x = oarcs[i];
      const OArc& y = oarcs[j];
      if (x.input == y.input) continue;
      RatVector w = cross3(x.plane, y.plane);
      if (vzero(w)) {
        // Same great circle: any interior contact means overlapping arcs.
        if (in_cone_strict(y.a, x.a, x.b, x.plane) ||
            in_cone_strict(y.b, x.a, x.b, x.plane) ||
            in_cone_strict(x.a, y.a, y.b, y.plane) ||
            in_cone_strict(x.b, y.a, y.b, y.plane) ||
            (sign_canonical(x.a) == sign_canonical(y.a) && sign_canonical(x.b) == sign_canonical(y.b)) ||
            (sign_canonical(x.a) == sign_canonical(y.b) && sign_canonical(x.b) == sign_canonical(y.a)))
          throw NotGeneralOrientation("overlay: overlapping arcs on one great circle");
        continue;
      }
      for (const RatVector& cand : {w, vneg(w)}) {
        if (in_cone_strict(cand, x.a, x.b, x.plane) &&
            in_cone_strict(cand, y.a, y.b, y.plane)) {
          RatVector key = primitive(cand);
          auto [it, fresh] = crossings.try_emplace(key, Crossing{key, {}});
          if (!fresh)
            throw NotGeneralOrientation("overlay: three arcs through one ray");
          it->second.on_arcs = {static_cast<int>(i), static_cast<int>(j)};
        }
      }
    }
  }

  // Node table: original nodes first, then crossings in ray order.
  std::map<RatVector, int, LexLess> node_id;
  for (const auto& n : onodes) {
    GMNode gn;
    gn.ray = n.ray;
    node_id[n.ray] = static_cast<int>(m.nodes.size());
    m.nodes.push_back(std::move(gn));
  }
  std::vector<std::vector<std::pair<Rational, int>>> splits(oarcs.size());
  for (const auto& [ray, cr] : crossings) {
    int id = static_cast<int>(m.nodes.size());
    GMNode gn;
    gn.ray = ray;
    m.nodes.push_back(std::move(gn));
    node_id[ray] = id;
    for (int ai : cr.on_arcs) {
      auto c = cone_coords(ray, oarcs[ai].a, oarcs[ai].b, oarcs[ai].plane);
      splits[ai].push_back({c.beta / c.alpha, id});
    }
  }

  for (size_t ai = 0; ai < oarcs.size(); ++ai) {
    auto& cuts = splits[ai];
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<int> chain{node_id.at(oarcs[ai].a)};
    for (const auto& [t, id] : cuts) chain.push_back(id);
    chain.push_back(node_id.at(oarcs[ai].b));
    for (size_t k = 0; k + 1 < chain.size(); ++k)
      m.arcs.push_back(GMArc{chain[k], chain[k + 1], {}});
  }

  m.regions = trace_regions(m.nodes, m.arcs);
  label_complex(m, /*require_general=*/true);
  return m;
}

Poles poles_from_axis(const RatVector& axis) {
  if (axis.size() != 3 || vzero(axis)) throw Error("poles_from_axis: need a nonzero 3-vector");
  Poles p;
  p.axis = primitive(axis);
  for (int j = 0; j < 3; ++j) {
    RatVector e(3, Rational(0));
    e[j] = Rational(1);
    RatVector c = cross3(p.axis, e);
    if (!vzero(c)) {
      p.e1 = primitive(c);
      break;
    }
  }
  p.e2 = primitive(cross3(p.axis, p.e1));
  return p;
}

bool poles_valid(const GaussianMap3& map, const RatVector& axis) {
  for (const auto& a : map.arcs) {
    RatVector plane = cross3(map.nodes[a.a].ray, map.nodes[a.b].ray);
    if (dot(axis, plane).is_zero()) return false;
  }
  return true;
}

Poles choose_poles(const GaussianMap3& map, uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RatVector axis(3);
    bool zero = true;
    for (int j = 0; j < 3; ++j) {
      axis[j] = Rational(rng.range(-40, 40));
      zero &= axis[j].is_zero();
    }
    if (zero) continue;
    if (poles_valid(map, axis)) return poles_from_axis(axis);
  }
  throw SearchExhausted("choose_poles: attempt budget exhausted");
}

namespace {

struct Projected {
  Rational s, c;  // components along e1 (sin) and e2 (cos)
};

Projected project(const RatVector& p, const Poles& poles) {
  Projected pr{dot(p, poles.e1), dot(p, poles.e2)};
  if (pr.s.is_zero() && pr.c.is_zero())
    throw WestUndefined("west: ray on the pole axis");
  return pr;
}

bool same_theta_halfline(const Projected& a, const Projected& b) {
  return a.s.sign() == b.s.sign() && a.c.sign() == b.c.sign();
}

}  // namespace

WestOrder west_compare(const RatVector& p, const RatVector& q, const Poles& poles) {
  Projected pp = project(p, poles), pq = project(q, poles);
  Rational d = pp.s * pq.c - pp.c * pq.s;  // sign of sin(theta_p - theta_q)
  if (d.sign() > 0) return WestOrder::PWest;
  if (d.sign() < 0) return WestOrder::QWest;
  if (same_theta_halfline(pp, pq)) return WestOrder::Tie;
  // Antipodal theta: each is west of the other on the boundary of the closed
  // half-turn interval; canonicalize to the lexicographically smaller ray.
  return lex_cmp(primitive(p), primitive(q)) < 0 ? WestOrder::PWest : WestOrder::QWest;
}

bool theta_antipodal(const RatVector& p, const RatVector& q, const Poles& poles) {
  Projected pp = project(p, poles), pq = project(q, poles);
  Rational d = pp.s * pq.c - pp.c * pq.s;
  return d.is_zero() && !same_theta_halfline(pp, pq);
}

bool theta_tie(const RatVector& p, const RatVector& q, const Poles& poles) {
  Projected pp = project(p, poles), pq = project(q, poles);
  Rational d = pp.s * pq.c - pp.c * pq.s;
  return d.is_zero() && same_theta_halfline(pp, pq);
}

namespace {

// Is `ray` (the pole direction) inside this region? Exact test through the
// underlying polytopes: the region's decomposition must be the support faces
// at the pole.
bool region_contains(const GaussianMap3& m, const GMRegion& reg, const RatVector& ray) {
  for (size_t g = 0; g < m.summands.size(); ++g)
    if (m.summands[g].support_face(ray) != reg.label.parts[g]) return false;
  return true;
}

int westmost_of_nodes(const GaussianMap3& m, const std::vector<int>& ids,
                      const Poles& poles) {
  int best = ids[0];
  for (size_t i = 1; i < ids.size(); ++i)
    if (west_compare(m.nodes[ids[i]].ray, m.nodes[best].ray, poles) == WestOrder::PWest)
      best = ids[i];
  return best;
}

}  // namespace

int westernmost(const GaussianMap3& map, CellRef cell, const Poles& poles) {
  switch (cell.kind) {
    case CellKind::Node:
      return cell.index;
    case CellKind::Arc: {
      const auto& a = map.arcs.at(cell.index);
      return westmost_of_nodes(map, {a.a, a.b}, poles);
    }
    default: {
      const auto& reg = map.regions.at(cell.index);
      if (region_contains(map, reg, poles.axis) ||
          region_contains(map, reg, vneg(poles.axis)))
        throw PoleCell("westernmost: region contains a pole");
      std::set<int> distinct(reg.nodes.begin(), reg.nodes.end());
      return westmost_of_nodes(map, {distinct.begin(), distinct.end()}, poles);
    }
  }
}

std::vector<int> region_local_optima(const GaussianMap3& map, int region,
                                     const Poles& poles) {
  const auto& reg = map.regions.at(region);
  int n = static_cast<int>(reg.nodes.size());
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    int p = reg.nodes[i];
    int prev = reg.nodes[(i + n - 1) % n];
    int next = reg.nodes[(i + 1) % n];
    if (west_compare(map.nodes[p].ray, map.nodes[prev].ray, poles) == WestOrder::PWest &&
        west_compare(map.nodes[p].ray, map.nodes[next].ray, poles) == WestOrder::PWest)
      out.push_back(p);
  }
  return out;
}

bool hemisphere_ok(const GaussianMap3& map, CellRef cell, const Poles& poles) {
  std::vector<int> ids;
  switch (cell.kind) {
    case CellKind::Node: ids = {cell.index}; break;
    case CellKind::Arc: ids = {map.arcs[cell.index].a, map.arcs[cell.index].b}; break;
    default: {
      const auto& reg = map.regions[cell.index];
      std::set<int> d(reg.nodes.begin(), reg.nodes.end());
      ids.assign(d.begin(), d.end());
    }
  }
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (theta_antipodal(map.nodes[ids[i]].ray, map.nodes[ids[j]].ray, poles))
        return false;
  return true;
}

WitnessCount count_witnesses(const GaussianMap3& map, const Poles& poles) {
  WitnessCount wc;
  wc.w = {static_cast<long long>(map.nodes.size()),
          static_cast<long long>(map.arcs.size()),
          static_cast<long long>(map.regions.size()) - 2};
  for (size_t i = 0; i < map.nodes.size(); ++i)
    wc.per_cell[{CellKind::Node, static_cast<int>(i)}] = static_cast<int>(i);
  for (size_t i = 0; i < map.arcs.size(); ++i) {
    CellRef c{CellKind::Arc, static_cast<int>(i)};
    wc.per_cell[c] = westernmost(map, c, poles);
  }
  for (size_t i = 0; i < map.regions.size(); ++i) {
    if (region_contains(map, map.regions[i], poles.axis)) {
      wc.pole_regions[0] = static_cast<int>(i);
      continue;
    }
    if (region_contains(map, map.regions[i], vneg(poles.axis))) {
      wc.pole_regions[1] = static_cast<int>(i);
      continue;
    }
    CellRef c{CellKind::Region, static_cast<int>(i)};
    wc.per_cell[c] = westernmost(map, c, poles);
  }
  if (wc.pole_regions[0] < 0 || wc.pole_regions[1] < 0 ||
      wc.pole_regions[0] == wc.pole_regions[1])
    throw Error("count_witnesses: poles not inside two distinct regions");
  return wc;
}

bool witness_membership(const GaussianMap3& full, CellRef cell,
                        const std::vector<int>& S, const GaussianMap3& sub,
                        const Poles& poles) {
  int wm = westernmost(full, cell, poles);
  const RatVector& wray = full.nodes[wm].ray;
  const auto& wsupport = full.nodes[wm].label.support;
  bool expected = std::includes(S.begin(), S.end(), wsupport.begin(), wsupport.end());

  int sub_node = -1;
  for (size_t i = 0; i < sub.nodes.size(); ++i)
    if (sub.nodes[i].ray == wray) { sub_node = static_cast<int>(i); break; }

  if (!expected) {
    if (sub_node >= 0)
      throw ClaimViolation("witness_membership: node survives without its support");
    return false;
  }
  if (sub_node < 0)
    throw ClaimViolation("witness_membership: node missing though support is in S");

  // Locate the cell of the sub-overlay holding the witness corner: same
  // dimension, decomposition restricted to S.
  std::vector<std::vector<int>> key;
  key.reserve(S.size());
  for (int g : S) key.push_back(full.label(cell).parts[g]);
  int dim = full.cell_dim(cell);
  CellRef sub_cell{CellKind::Node, -1};
  bool found = false;
  long long count = sub.cell_count(static_cast<CellKind>(dim));
  for (int i = 0; i < count && !found; ++i) {
    CellRef c{static_cast<CellKind>(dim), i};
    if (sub.label(c).parts == key) {
      sub_cell = c;
      found = true;
    }
  }
  if (!found)
    throw ClaimViolation("witness_membership: no matching cell in the partial overlay");
  int wm2 = westernmost(sub, sub_cell, poles);
  if (sub.nodes[wm2].ray != wray)
    throw ClaimViolation("witness_membership: corner is not western-most in the partial overlay");
  return true;
}

WitnessSuite run_witness_suite(const std::vector<Polytope>& summands, uint64_t seed) {
  int r = static_cast<int>(summands.size());
  if (r < 1) throw Error("run_witness_suite: need summands");
  WitnessSuite ws;
  for (const auto& s : summands) ws.singles.push_back(gaussian_map(s));
  ws.full = (r == 1) ? ws.singles[0] : overlay(ws.singles);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      ws.pairs[{i, j}] = overlay({ws.singles[i], ws.singles[j]});

  // One pole axis serves every map: the full overlay's arcs lie in the same
  // planes as every original and pair arc. Also avoid theta ties between
  // distinct nodes, so western-most witnesses are strict everywhere.
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt >= 64) throw SearchExhausted("run_witness_suite: no tie-free poles");
    ws.poles = choose_poles(ws.full, seed + attempt * 0x9e37ull);
    bool tie = false;
    for (size_t i = 0; i < ws.full.nodes.size() && !tie; ++i)
      for (size_t j = i + 1; j < ws.full.nodes.size() && !tie; ++j)
        if (theta_tie(ws.full.nodes[i].ray, ws.full.nodes[j].ray, ws.poles)) tie = true;
    if (!tie) break;
  }

  for (int i = 0; i < r; ++i)
    ws.single_counts.push_back(count_witnesses(ws.singles[i], ws.poles));
  for (auto& [ij, g] : ws.pairs) ws.pair_counts[ij] = count_witnesses(g, ws.poles);
  ws.full_count = count_witnesses(ws.full, ws.poles);

  for (int k = 0; k < 3; ++k) {
    long long rhs = 0;
    for (auto& [ij, wc] : ws.pair_counts) rhs += wc.w[k];
    long long singles = 0;
    for (auto& wc : ws.single_counts) singles += wc.w[k];
    rhs -= static_cast<long long>(r - 2) * singles;
    ws.identity_ok[k] = (ws.full_count.w[k] == rhs);
  }

  // Exhaustive witness membership over subsets of cardinality 1 and 2.
  std::vector<std::pair<std::vector<int>, const GaussianMap3*>> subs;
  for (int i = 0; i < r; ++i) subs.push_back({{i}, &ws.singles[i]});
  for (auto& [ij, g] : ws.pairs) subs.push_back({{ij.first, ij.second}, &g});
  ws.membership_ok = true;
  try {
    for (const auto& [cell, wm] : ws.full_count.per_cell) {
      (void)wm;
      for (const auto& [S, sub] : subs) {
        bool got = witness_membership(ws.full, cell, S, *sub, ws.poles);
        const auto& wsupport =
            ws.full.nodes[ws.full_count.per_cell.at(cell)].label.support;
        bool expected =
            std::includes(S.begin(), S.end(), wsupport.begin(), wsupport.end());
        if (got != expected) ws.membership_ok = false;
        ++ws.membership_checks;
      }
    }
  } catch (const ClaimViolation&) {
    ws.membership_ok = false;
  }

  // Local optimum = western-most, uniquely, for every non-pole cell.
  ws.local_global_ok = true;
  ws.hemisphere_all_ok = true;
  std::vector<std::pair<const GaussianMap3*, const WitnessCount*>> all;
  for (int i = 0; i < r; ++i) all.push_back({&ws.singles[i], &ws.single_counts[i]});
  for (auto& [ij, g] : ws.pairs) all.push_back({&g, &ws.pair_counts.at(ij)});
  all.push_back({&ws.full, &ws.full_count});
  for (auto& [g, wc] : all) {
    for (size_t i = 0; i < g->regions.size(); ++i) {
      CellRef c{CellKind::Region, static_cast<int>(i)};
      bool pole = (static_cast<int>(i) == wc->pole_regions[0] ||
                   static_cast<int>(i) == wc->pole_regions[1]);
      if (!pole) {
        auto opts = region_local_optima(*g, static_cast<int>(i), ws.poles);
        if (opts.size() != 1 || opts[0] != wc->per_cell.at(c))
          ws.local_global_ok = false;
        if (!hemisphere_ok(*g, c, ws.poles)) ws.hemisphere_all_ok = false;
      }
    }
    for (size_t i = 0; i < g->arcs.size(); ++i) {
      CellRef c{CellKind::Arc, static_cast<int>(i)};
      if (west_compare(g->nodes[g->arcs[i].a].ray, g->nodes[g->arcs[i].b].ray,
                       ws.poles) == WestOrder::Tie)
        ws.local_global_ok = false;
      if (!hemisphere_ok(*g, c, ws.poles)) ws.hemisphere_all_ok = false;
    }
  }
  return ws;
}

}  // namespace mink
