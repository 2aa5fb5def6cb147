#include "mink/io.hpp"

#include <fstream>
#include <sstream>

#include "mink/errors.hpp"

namespace mink {

Polytope read_poly(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_data_line(header)) throw Error("POLY: missing header");
  std::istringstream hs(header);
  int d = 0, n = 0;
  if (!(hs >> d >> n) || d < 1 || n < 1) throw Error("POLY: bad header '" + header + "'");
  std::vector<RatVector> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string row;
    if (!next_data_line(row)) throw Error("POLY: expected " + std::to_string(n) + " rows");
    std::istringstream rs(row);
    RatVector v;
    v.reserve(d);
    std::string tok;
    while (rs >> tok) v.push_back(Rational::parse(tok));
    if (static_cast<int>(v.size()) != d)
      throw Error("POLY: row with " + std::to_string(v.size()) + " of " +
                  std::to_string(d) + " coordinates");
    pts.push_back(std::move(v));
  }
  return Polytope::from_points(pts, d);
}

Polytope read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("POLY: cannot open '" + path + "'");
  return read_poly(in);
}

void write_poly(std::ostream& out, const Polytope& p) {
  out << p.ambient_dim() << ' ' << p.vertex_count() << '\n';
  for (const auto& v : p.vertices()) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) out << ' ';
      out << v[j].str();
    }
    out << '\n';
  }
}

void write_poly_file(const std::string& path, const Polytope& p) {
  std::ofstream out(path);
  if (!out) throw Error("POLY: cannot write '" + path + "'");
  write_poly(out, p);
}

json relation_report_json(const RelationReport& rep) {
  json j;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["alpha"] = rep.alpha;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["equal"] = rep.equal;
  json subsets = json::array();
  for (const auto& [mask, fk] : rep.per_subset) {
    json e;
    e["S"] = mask_to_subset(mask);
    e["f_k"] = fk;
    subsets.push_back(std::move(e));
  }
  j["per_subset"] = std::move(subsets);
  return j;
}

json witness_count_json(const WitnessCount& wc) {
  json j;
  j["w"] = {wc.w[0], wc.w[1], wc.w[2]};
  return j;
}

json witness_suite_json(const WitnessSuite& ws) {
  json j;
  j["poles_axis"] = {ws.poles.axis[0].str(), ws.poles.axis[1].str(),
                     ws.poles.axis[2].str()};
  json singles = json::array();
  for (const auto& wc : ws.single_counts) singles.push_back(witness_count_json(wc));
  j["singles"] = std::move(singles);
  json pairs = json::array();
  for (const auto& [ij, wc] : ws.pair_counts) {
    json e = witness_count_json(wc);
    e["pair"] = {ij.first, ij.second};
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["full"] = witness_count_json(ws.full_count);
  j["identity_ok"] = {ws.identity_ok[0], ws.identity_ok[1], ws.identity_ok[2]};
  j["membership_ok"] = ws.membership_ok;
  j["membership_checks"] = ws.membership_checks;
  j["local_global_ok"] = ws.local_global_ok;
  j["hemisphere_ok"] = ws.hemisphere_all_ok;
  return j;
}

json gaussmap_json(const GaussianMap3& m) {
  json j;
  json nodes = json::array();
  for (const auto& n : m.nodes) {
    json e;
    e["ray"] = {n.ray[0].str(), n.ray[1].str(), n.ray[2].str()};
    e["support"] = n.label.support;
    nodes.push_back(std::move(e));
  }
  j["nodes"] = std::move(nodes);
  json arcs = json::array();
  for (const auto& a : m.arcs) arcs.push_back({a.a, a.b});
  j["arcs"] = std::move(arcs);
  json regions = json::array();
  for (const auto& r : m.regions) {
    json e;
    e["arc_cycle"] = r.arcs;
    e["node_cycle"] = r.nodes;
    regions.push_back(std::move(e));
  }
  j["regions"] = std::move(regions);
  return j;
}

}  // namespace mink
