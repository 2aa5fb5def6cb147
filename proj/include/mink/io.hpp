#ifndef MINK_IO_HPP
#define MINK_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mink/formulas.hpp"
#include "mink/gaussmap3d.hpp"
#include "mink/generators.hpp"

namespace mink {

// POLY format: line 1 "d n", then n lines of d whitespace-separated
// rationals ("p/q" or "p"); '#' starts a comment line.
Polytope read_poly(std::istream& in);
Polytope read_poly_file(const std::string& path);
void write_poly(std::ostream& out, const Polytope& p);
void write_poly_file(const std::string& path, const Polytope& p);

using json = nlohmann::ordered_json;

json relation_report_json(const RelationReport& rep);
json witness_count_json(const WitnessCount& wc);
json witness_suite_json(const WitnessSuite& ws);
json gaussmap_json(const GaussianMap3& m);  // cell-complex dump for plotting

}  // namespace mink

#endif
