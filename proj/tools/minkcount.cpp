// minkcount: exact Minkowski-sum face counting, bounds, and the d=3
// spherical witness machinery. See README.md for the subcommands.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mink/errors.hpp"
#include "mink/formulas.hpp"
#include "mink/gaussmap3d.hpp"
#include "mink/generators.hpp"
#include "mink/io.hpp"

namespace fs = std::filesystem;
using namespace mink;

namespace {

constexpr int kExitUsage = 2;      // bad flags or violated preconditions
constexpr int kExitMath = 3;       // degenerate / non-general instance
constexpr int kExitClaim = 4;      // a verified identity failed on valid input

constexpr int kSchemaVersion = 1;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

SumInstance load_instance(const std::vector<std::string>& files) {
  std::vector<Polytope> ps;
  ps.reserve(files.size());
  for (const auto& f : files) ps.push_back(read_poly_file(f));
  if (ps.empty()) throw std::invalid_argument("no input files");
  int d = ps[0].ambient_dim();
  return SumInstance::of(d, std::move(ps));
}

json instance_json(const SumInstance& inst, const std::vector<std::string>& files,
                   const GenSpec* spec) {
  json j;
  j["d"] = inst.dim;
  j["r"] = inst.r();
  std::vector<int> n;
  for (const auto& s : inst.summands) n.push_back(s.vertex_count());
  j["n"] = n;
  if (!files.empty()) j["files"] = files;
  if (spec) {
    j["family"] = spec->family;
    j["seed"] = spec->seed;
  }
  return j;
}

int cmd_gen(const GenSpec& spec, const std::string& out_dir) {
  SumInstance inst = generate(spec);
  fs::create_directories(out_dir);
  json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["family"] = spec.family;
  manifest["d"] = spec.d;
  manifest["r"] = spec.r;
  manifest["n"] = spec.n;
  manifest["seed"] = spec.seed;
  json files = json::array();
  for (int i = 0; i < inst.r(); ++i) {
    std::string name = "summand_" + std::to_string(i) + ".poly";
    write_poly_file((fs::path(out_dir) / name).string(), inst.summands[i]);
    files.push_back(name);
  }
  manifest["files"] = std::move(files);
  std::ofstream mf(fs::path(out_dir) / "manifest.json");
  mf << manifest.dump(2) << '\n';
  std::cout << "wrote " << inst.r() << " summands + manifest to " << out_dir << '\n';
  return 0;
}

int cmd_verify(SumInstance inst, std::vector<int> ks, bool make_general_flag,
               uint64_t seed, const std::string& out_path, json instance_desc) {
  auto t0 = std::chrono::steady_clock::now();
  if (make_general_flag) inst = make_general(inst, seed);

  SumAnalysis analysis(inst);
  if (!analysis.orientation().general) {
    std::cerr << "instance is not in general orientations (face "
              << *analysis.orientation().offending_face
              << " of the sum decomposes inexactly); pass --make-general to rotate\n";
    return kExitMath;
  }

  if (ks.empty())
    for (int k = 0; k < inst.dim; ++k) ks.push_back(k);

  json report;
  report["schema_version"] = kSchemaVersion;
  report["instance"] = std::move(instance_desc);
  report["seed"] = seed;

  bool all_equal = true;
  json per_k = json::array();
  json bounds_k = json::array();
  for (int k : ks) {
    RelationReport rep = verify_theorem1(analysis, k);
    all_equal &= rep.equal;
    per_k.push_back(relation_report_json(rep));
    json bk;
    bk["k"] = k;
    bk["f_k"] = rep.lhs;
    bk["corollary_bound"] = corollary_bound(analysis, k);
    bounds_k.push_back(std::move(bk));
  }
  report["theorem1"] = std::move(per_k);

  std::vector<long long> n;
  long long trivial = 1;
  for (const auto& s : inst.summands) {
    n.push_back(s.vertex_count());
    trivial *= s.vertex_count();
  }
  VertexBounds vb = vertex_bounds(inst.dim, inst.r(), n);
  long long f0 = analysis.f_k(0, 0);
  json bounds;
  bounds["per_k"] = std::move(bounds_k);
  bounds["f_0"] = f0;
  bounds["trivial_bound"] = trivial;
  bounds["product_bound"] = vb.product_bound;
  bounds["choose_total"] = vb.choose_total;
  bounds["choose_each"] = vb.choose_each;
  bool uniform = std::all_of(n.begin(), n.end(), [&](long long v) { return v == n[0]; });
  if (inst.dim % 2 == 0 && uniform)
    bounds["exact_count_even_d"] = exact_count_even_d(inst.dim, inst.r(), n[0]);
  report["bounds"] = std::move(bounds);
  if (f0 > trivial || f0 > vb.product_bound)
    throw ClaimViolation("verify: vertex bound violated");

  auto t1 = std::chrono::steady_clock::now();
  report["timing"] = {
      {"seconds", std::chrono::duration<double>(t1 - t0).count()}};

  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return all_equal ? 0 : kExitClaim;
}

int cmd_identity(int dmax, int rmax) {
  if (dmax > rmax) {
    std::cerr << "identity: requires dmax <= rmax\n";
    return kExitUsage;
  }
  bool all_one = true;
  std::cout << "s,d,r,value\n";
  for (int r = 2; r <= rmax; ++r)
    for (int d = 2; d <= std::min(dmax, r); ++d)
      for (int s = 1; s < d; ++s) {
        long long v = lemma6_sum(s, d, r);
        all_one &= (v == 1);
        std::cout << s << ',' << d << ',' << r << ',' << v << '\n';
      }
  return all_one ? 0 : kExitClaim;
}

int cmd_gauss3(const std::vector<std::string>& files, uint64_t seed,
               const std::string& dump_path, const std::string& out_path) {
  SumInstance inst = load_instance(files);
  if (inst.dim != 3) {
    std::cerr << "gauss3: inputs must be 3-dimensional\n";
    return kExitUsage;
  }
  WitnessSuite ws = run_witness_suite(inst.summands, seed);
  json j = witness_suite_json(ws);
  j["schema_version"] = kSchemaVersion;
  j["seed"] = seed;
  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    dump << gaussmap_json(ws.full).dump(2) << '\n';
  }
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  bool ok = ws.identity_ok[0] && ws.identity_ok[1] && ws.identity_ok[2] &&
            ws.membership_ok && ws.local_global_ok && ws.hemisphere_all_ok;
  return ok ? 0 : kExitClaim;
}

int cmd_bounds(int d, int r, std::vector<int> n, const std::string& format) {
  if (r < d) {
    std::cerr << "bounds: requires r >= d\n";
    return kExitUsage;
  }
  if (n.empty()) n = {d + 1};
  if (static_cast<int>(n.size()) == 1) n.assign(r, n[0]);
  if (static_cast<int>(n.size()) != r) {
    std::cerr << "bounds: need 1 or r vertex counts\n";
    return kExitUsage;
  }
  std::vector<long long> nl(n.begin(), n.end());
  VertexBounds vb = vertex_bounds(d, r, nl);
  bool uniform = std::all_of(n.begin(), n.end(), [&](int v) { return v == n[0]; });
  if (format == "json") {
    json j;
    j["d"] = d;
    j["r"] = r;
    j["n"] = n;
    j["product_bound"] = vb.product_bound;
    j["choose_total"] = vb.choose_total;
    j["choose_each"] = vb.choose_each;
    if (d % 2 == 0 && uniform)
      j["exact_count_even_d"] = exact_count_even_d(d, r, n[0]);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "product_bound,choose_total,choose_each";
    if (d % 2 == 0 && uniform) std::cout << ",exact_count_even_d";
    std::cout << '\n' << vb.product_bound << ',' << vb.choose_total << ',' << vb.choose_each;
    if (d % 2 == 0 && uniform) std::cout << ',' << exact_count_even_d(d, r, n[0]);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Minkowski sum face counting and verification"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance as POLY files");
  GenSpec spec;
  std::string n_list = "4";
  std::string out_dir = ".";
  gen->add_option("--d", spec.d, "ambient dimension");
  gen->add_option("--r", spec.r, "number of summands");
  gen->add_option("--n", n_list, "vertex counts (single value or comma list)");
  gen->add_option("--family", spec.family,
                  "random | segments | ortho-polygons | extremal | cyclic");
  gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_option("--out", out_dir, "output directory");

  // verify
  auto* verify = app.add_subcommand("verify", "check the face-count relation and the bounds");
  std::vector<std::string> v_files;
  GenSpec v_spec;
  std::string v_nlist = "4";
  std::string v_klist;
  std::string v_out;
  bool v_makegeneral = false;
  bool v_use_spec = false;
  verify->add_option("files", v_files, "POLY files (one per summand)");
  verify->add_option("--d", v_spec.d, "ambient dimension (spec mode)")
      ->each([&](const std::string&) { v_use_spec = true; });
  verify->add_option("--r", v_spec.r, "summands (spec mode)")
      ->each([&](const std::string&) { v_use_spec = true; });
  verify->add_option("--n", v_nlist, "vertex counts (spec mode)");
  verify->add_option("--family", v_spec.family, "generator family (spec mode)")
      ->each([&](const std::string&) { v_use_spec = true; });
  verify->add_option("--seed", v_spec.seed, "seed (generation and rotations)");
  verify->add_option("--k", v_klist, "face dimensions to check (comma list, default all)");
  verify->add_flag("--make-general", v_makegeneral, "rotate summands until general");
  verify->add_option("--out", v_out, "write the JSON report here instead of stdout");

  // identity
  auto* identity = app.add_subcommand("identity", "tabulate the alternating binomial identity");
  int dmax = 6, rmax = 12;
  identity->add_option("--dmax", dmax, "max dimension");
  identity->add_option("--rmax", rmax, "max summand count");

  // gauss3
  auto* gauss3 = app.add_subcommand("gauss3", "d=3 witness machinery report");
  std::vector<std::string> g_files;
  uint64_t g_seed = 0;
  std::string g_dump, g_out;
  gauss3->add_option("files", g_files, "POLY files (one per summand)")->required();
  gauss3->add_option("--seed", g_seed, "pole seed");
  gauss3->add_option("--dump-complex", g_dump, "write the overlay cell complex as JSON");
  gauss3->add_option("--out", g_out, "write the report here instead of stdout");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "vertex-count bounds table");
  int b_d = 3, b_r = 3;
  std::string b_nlist;
  std::string b_format = "csv";
  bounds->add_option("--d", b_d, "ambient dimension");
  bounds->add_option("--r", b_r, "number of summands");
  bounds->add_option("--n", b_nlist, "vertex counts (single value or comma list)");
  bounds->add_option("--format", b_format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      spec.n = parse_int_list(n_list);
      return cmd_gen(spec, out_dir);
    }
    if (*verify) {
      std::vector<int> ks;
      if (!v_klist.empty()) ks = parse_int_list(v_klist);
      SumInstance inst = [&] {
        if (!v_files.empty()) return load_instance(v_files);
        if (!v_use_spec)
          throw std::invalid_argument("verify: give POLY files or --d/--r/--family");
        v_spec.n = parse_int_list(v_nlist);
        return generate(v_spec);
      }();
      json desc = instance_json(inst, v_files, v_files.empty() ? &v_spec : nullptr);
      return cmd_verify(std::move(inst), ks, v_makegeneral, v_spec.seed, v_out,
                        std::move(desc));
    }
    if (*identity) return cmd_identity(dmax, rmax);
    if (*gauss3) return cmd_gauss3(g_files, g_seed, g_dump, g_out);
    if (*bounds)
      return cmd_bounds(b_d, b_r,
                        b_nlist.empty() ? std::vector<int>{} : parse_int_list(b_nlist),
                        b_format);
  } catch (const ClaimViolation& e) {
    std::cerr << "claim violation: " << e.what() << '\n';
    return kExitClaim;
  } catch (const NotGeneralOrientation& e) {
    std::cerr << "degenerate instance: " << e.what() << '\n';
    return kExitMath;
  } catch (const DegenerateCoincidence& e) {
    std::cerr << "degenerate instance: " << e.what() << '\n';
    return kExitMath;
  } catch (const GeneralOrientationRequired& e) {
    std::cerr << "instance not in general orientations: " << e.what() << '\n';
    return kExitMath;
  } catch (const NotFullDimensional& e) {
    std::cerr << "dimension precondition: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
