// Command line front end: basis/dimension queries, curve-operator, twist and
// point-push matrices, irreducibility analysis, and the recoupling
// validation gate. All numeric output is exact (JSON of power-basis
// rationals); runs are deterministic.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skeinrep/json_io.hpp"

using namespace skeinrep;

namespace {

struct CommonOpts {
  int genus = 0;
  std::string points;
  int level = 0;
  int threads = 1;
  std::string cache_dir;
  std::string output;
};

void add_surface_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--genus", o.genus, "surface genus")->required();
  cmd->add_option("--points", o.points, "banded point colors k1,k2,...,kn")->required();
  cmd->add_option("--level", o.level, "even level p >= 6")->required();
}

void add_run_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--threads", o.threads, "worker thread count (output-invariant)");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "recoupling cache directory (default from SKEINREP_CACHE_DIR)");
  cmd->add_option("--output", o.output, "write output to this file instead of stdout");
}

std::vector<int> parse_points(const std::string& points) {
  std::vector<int> out;
  std::stringstream ss(points);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw usage_error("malformed --points entry \"" + piece + "\"");
    }
  }
  if (out.empty()) throw usage_error("at least one banded point required (n >= 1)");
  return out;
}

std::string cache_path(const CommonOpts& o, int level) {
  std::string dir = o.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("SKEINREP_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return {};
  return dir + "/recoupling-p" + std::to_string(level) + ".json";
}

RecouplingPtr make_recoupling(const CommonOpts& o, int level) {
  auto rc = std::make_shared<RecouplingContext>(level);
  const std::string path = cache_path(o, level);
  if (!path.empty()) load_recoupling_cache(*rc, path);
  return rc;
}

void finish_cache(const CommonOpts& o, RecouplingContext& rc) {
  const std::string path = cache_path(o, rc.level());
  if (!path.empty()) save_recoupling_cache(rc, path);
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw usage_error("cannot write to " + o.output);
  out << text << "\n";
}

SurfaceSpec make_spec(const CommonOpts& o) {
  SurfaceSpec spec{o.genus, parse_points(o.points), o.level};
  spec.validate();
  return spec;
}

CurveDesc parse_curve(const std::string& text) {
  auto parse_range = [](const std::string& range) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
      throw usage_error("band range must look like i..j, got \"" + range + "\"");
    try {
      return std::pair<int, int>(std::stoi(range.substr(0, dots)),
                                 std::stoi(range.substr(dots + 2)));
    } catch (const std::exception&) {
      throw usage_error("malformed band range \"" + range + "\"");
    }
  };
  if (text.rfind("edge:", 0) == 0) return CurveDesc::edge(text.substr(5));
  if (text.rfind("band:", 0) == 0) {
    auto [i, j] = parse_range(text.substr(5));
    return CurveDesc::band(i, j);
  }
  if (text.rfind("cable:band:", 0) == 0) {
    const std::string rest = text.substr(11);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos)
      throw usage_error("cable descriptor must look like cable:band:i..j:c");
    auto [i, j] = parse_range(rest.substr(0, colon));
    try {
      return CurveDesc::cable(i, j, std::stoi(rest.substr(colon + 1)));
    } catch (const std::exception&) {
      throw usage_error("malformed cable color in \"" + text + "\"");
    }
  }
  throw usage_error("unrecognized curve \"" + text +
                    "\" (expected band:i..j, edge:NAME, or cable:band:i..j:c)");
}

json surface_json(const SurfaceSpec& spec) {
  return json{{"genus", spec.genus}, {"points", spec.colors}, {"level", spec.level}};
}

int run(int argc, char** argv) {
  CLI::App app{"exact curve-operator and quantum-representation toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string curve_text, generators = "point-pushing", method = "both";
  int push_gen = 2, max_color = 4, gate_level = 0;
  bool as_json = false, with_certificate = false;

  CLI::App* dim_cmd = app.add_subcommand("dim", "basis dimension");
  CLI::App* basis_cmd = app.add_subcommand("basis", "admissible colorings as JSON");
  CLI::App* norms_cmd = app.add_subcommand("norms", "basis norms of the hermitian form");
  CLI::App* curve_cmd = app.add_subcommand("curve-op", "curve operator matrix");
  CLI::App* twist_cmd = app.add_subcommand("twist", "dehn twist matrix");
  CLI::App* push_cmd = app.add_subcommand("push", "point-pushing generator matrix");
  CLI::App* check_cmd = app.add_subcommand("check", "irreducibility analysis");
  CLI::App* gate_cmd =
      app.add_subcommand("validate-recoupling", "closed forms vs diagrammatic oracle");

  for (CLI::App* cmd : {dim_cmd, basis_cmd, norms_cmd, curve_cmd, twist_cmd, push_cmd, check_cmd})
    add_surface_options(cmd, o);
  for (CLI::App* cmd :
       {dim_cmd, basis_cmd, norms_cmd, curve_cmd, twist_cmd, push_cmd, check_cmd, gate_cmd})
    add_run_options(cmd, o);

  curve_cmd->add_option("--curve", curve_text, "band:i..j | edge:NAME | cable:band:i..j:c")
      ->required();
  twist_cmd->add_option("--curve", curve_text, "band:i..j | edge:NAME")->required();
  push_cmd->add_option("--gen", push_gen, "generator index j in 2..n-1")->required();
  check_cmd->add_option("--generators", generators, "point-pushing | curves | both")
      ->check(CLI::IsMember({"point-pushing", "curves", "both"}));
  check_cmd->add_option("--method", method, "saturation | commutant | both")
      ->check(CLI::IsMember({"saturation", "commutant", "both"}));
  check_cmd->add_flag("--json", as_json, "emit the full report as JSON");
  check_cmd->add_flag("--certificate", with_certificate,
                      "include the commutant basis when reducible");
  gate_cmd->add_option("--level", gate_level, "even level p >= 6")->required();
  gate_cmd->add_option("--max-color", max_color, "largest color to validate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // flatten CLI11's exit codes onto usage = 1
  }

  if (gate_cmd->parsed()) {
    auto rc = make_recoupling(o, gate_level);
    auto entries = validate_recoupling(*rc, max_color, o.threads);
    std::ostringstream out;
    int fails = 0;
    for (const auto& e : entries) {
      out << (e.pass ? "pass" : "FAIL") << " " << e.kind;
      for (int l : e.labels) out << " " << l;
      if (!e.pass) {
        out << "  " << e.detail;
        ++fails;
      }
      out << "\n";
    }
    out << (fails == 0 ? "all " + std::to_string(entries.size()) + " entries pass"
                       : std::to_string(fails) + " entries FAILED");
    emit(o, out.str());
    finish_cache(o, *rc);
    if (fails > 0) throw integrity_error("recoupling gate failed");
    return 0;
  }

  SurfaceSpec spec = make_spec(o);
  auto rc = make_recoupling(o, spec.level);
  Space sp(spec, rc);

  if (dim_cmd->parsed()) {
    emit(o, std::to_string(sp.dim()));
  } else if (basis_cmd->parsed()) {
    emit(o, basis_to_json(sp.spine(), sp.basis()).dump(2));
  } else if (norms_cmd->parsed()) {
    json out{{"surface", surface_json(spec)}, {"norms", norms_to_json(basis_norms(sp))}};
    emit(o, out.dump(2));
  } else if (curve_cmd->parsed()) {
    CurveDesc curve = parse_curve(curve_text);
    json out{{"surface", surface_json(spec)},
             {"curve", curve.describe()},
             {"matrix", matrix_to_json(curve_operator(sp, curve).matrix)}};
    emit(o, out.dump(2));
  } else if (twist_cmd->parsed()) {
    CurveDesc curve = parse_curve(curve_text);
    json out{{"surface", surface_json(spec)},
             {"curve", curve.describe()},
             {"matrix", matrix_to_json(dehn_twist(sp, curve).matrix)}};
    emit(o, out.dump(2));
  } else if (push_cmd->parsed()) {
    json out{{"surface", surface_json(spec)},
             {"generator", push_gen},
             {"matrix", matrix_to_json(point_push(sp, LoopDesc{push_gen}).matrix)}};
    emit(o, out.dump(2));
  } else if (check_cmd->parsed()) {
    GeneratorMode mode = generators == "point-pushing" ? GeneratorMode::point_pushing
                         : generators == "curves"      ? GeneratorMode::curves
                                                       : GeneratorMode::both;
    Method m = method == "saturation"  ? Method::saturation
               : method == "commutant" ? Method::commutant
                                       : Method::both;
    AlgebraReport rep = analyze(sp, mode, m, with_certificate);
    if (as_json) {
      json out = report_to_json(rep);
      out["surface"] = surface_json(spec);
      out["generator_mode"] = generators;
      out["method"] = method;
      emit(o, out.dump(2));
    } else {
      std::ostringstream out;
      out << (rep.irreducible ? "irreducible" : "reducible") << " (dim " << rep.dim;
      if (rep.algebra_dim >= 0) out << ", algebra " << rep.algebra_dim;
      if (rep.commutant_dim >= 0) out << ", commutant " << rep.commutant_dim;
      out << ")";
      emit(o, out.str());
    }
  }
  finish_cache(o, *rc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
