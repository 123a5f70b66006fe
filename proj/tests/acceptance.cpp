// Acceptance suite: one check per shipped criterion, each printing a single
// PASS/FAIL line (with indented details for failing clauses). Exit status is
// the number of failing criteria. Run all or a single one:
//   skeinrep_acceptance [--criterion N]

#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skeinrep/algebra.hpp"
#include "skeinrep/json_io.hpp"

using namespace skeinrep;

namespace {

struct Clause {
  bool ok;
  std::string detail;
};

struct CriterionResult {
  std::string summary;
  std::vector<Clause> clauses;
  bool ok() const {
    for (const auto& c : clauses)
      if (!c.ok) return false;
    return true;
  }
};

Space make_space(int g, std::vector<int> k, int p) {
  return Space(SurfaceSpec{g, std::move(k), p}, std::make_shared<RecouplingContext>(p));
}

std::string spec_name(int g, const std::vector<int>& k, int p) {
  std::ostringstream os;
  os << "(" << g << "," << k.size() << "),(";
  for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << "),p=" << p;
  return os.str();
}

// ---- criterion 1: recoupling gate --------------------------------------

CriterionResult criterion1() {
  CriterionResult r;
  size_t total = 0;
  for (int p : {6, 8, 10, 12}) {
    RecouplingContext rc(p);
    auto entries = validate_recoupling(rc, 4);
    total += entries.size();
    for (const auto& e : entries) {
      if (e.pass) continue;
      std::ostringstream os;
      os << "p=" << p << " " << e.kind;
      for (int l : e.labels) os << " " << l;
      os << ": " << e.detail;
      r.clauses.push_back({false, os.str()});
    }
  }
  r.clauses.push_back({true, ""});
  r.summary = "recoupling gate: delta/theta/tet vs oracle and admissibility vs theta!=0, "
              "colors<=4, p in {6,8,10,12} (" +
              std::to_string(total) + " entries)";
  return r;
}

// ---- criterion 2: basis integrity ---------------------------------------

CriterionResult criterion2() {
  CriterionResult r;
  r.summary = "basis integrity: pinned dimensions and tree-shape invariance";

  auto dim_clause = [&](int g, std::vector<int> k, int p, long expected) {
    long got = dimension(SurfaceSpec{g, k, p});
    std::ostringstream os;
    os << "dim " << spec_name(g, k, p) << " expected " << expected << ", got " << got;
    r.clauses.push_back({got == expected, os.str()});
  };
  dim_clause(0, {1, 1, 1, 1}, 6, 1);
  dim_clause(0, {1, 1, 1, 1}, 8, 2);
  dim_clause(0, {1, 1, 1, 1, 1}, 8, 3);

  bool shapes_ok = true;
  std::string shape_detail;
  for (int n = 4; n <= 6 && shapes_ok; ++n) {
    std::vector<int> k(n);
    for (int mask = 0; mask < (1 << n) && shapes_ok; ++mask) {
      for (int i = 0; i < n; ++i) k[i] = (mask >> i & 1) ? 2 : 1;
      for (int p : {6, 8, 10}) {
        SurfaceSpec spec{0, k, p};
        auto a = enumerate_tree_colorings(FusionTree::caterpillar(n - 1), spec);
        auto b = enumerate_tree_colorings(FusionTree::right_comb(n - 1), spec);
        if (a.size() != b.size()) {
          shapes_ok = false;
          shape_detail = "shape mismatch at " + spec_name(0, k, p);
          break;
        }
      }
    }
  }
  r.clauses.push_back(
      {shapes_ok, shapes_ok ? "" : shape_detail});
  return r;
}

// ---- criterion 3: operator integrity ------------------------------------

CriterionResult criterion3() {
  CriterionResult r;
  r.summary = "operator integrity: spectra, commutation, cables, self-adjointness, "
              "transport path independence";

  struct Instance {
    int g;
    std::vector<int> k;
    int p;
  };
  const std::vector<Instance> instances{{0, {1, 1, 1, 1}, 8},
                                        {0, {2, 2, 2, 2}, 10},
                                        {0, {1, 2, 2, 1}, 10},
                                        {0, {2, 2, 1, 1, 2}, 10},
                                        {0, {1, 1, 1, 1, 2}, 10}};

  for (const auto& inst : instances) {
    Space sp = make_space(inst.g, inst.k, inst.p);
    const std::string name = spec_name(inst.g, inst.k, inst.p);
    const int n = sp.spec().n();

    std::vector<std::pair<int, int>> bands;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) bands.emplace_back(i, j);
    std::map<std::pair<int, int>, CycloMatrix> ops;

    bool spectra_ok = true;
    std::string spectra_detail;
    for (auto b : bands) {
      CycloMatrix m = curve_operator(sp, CurveDesc::band(b.first, b.second)).matrix;
      ops.emplace(b, m);
      try {
        operator_spectrum_colors(sp, m);
      } catch (const error& e) {
        spectra_ok = false;
        spectra_detail = name + " band " + std::to_string(b.first) + ".." +
                         std::to_string(b.second) + ": " + e.what();
      }
    }
    r.clauses.push_back({spectra_ok, spectra_ok ? "" : spectra_detail});

    bool commute_ok = true;
    std::string commute_detail;
    for (auto a : bands)
      for (auto b : bands) {
        const bool disjoint = a.second < b.first || b.second < a.first;
        const bool nested = (a.first <= b.first && b.second <= a.second) ||
                            (b.first <= a.first && a.second <= b.second);
        if (!disjoint && !nested) continue;
        if (!(ops.at(a) * ops.at(b) - ops.at(b) * ops.at(a)).is_zero()) {
          commute_ok = false;
          commute_detail = name + ": bands " + std::to_string(a.first) + ".." +
                           std::to_string(a.second) + " and " + std::to_string(b.first) +
                           ".." + std::to_string(b.second) + " fail to commute";
        }
      }
    r.clauses.push_back({commute_ok, commute_ok ? "" : commute_detail});

    const auto id = CycloMatrix::identity(sp.cyclo(), sp.dim());
    bool cable_ok = true;
    for (auto b : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
      CycloMatrix z = ops.at(b);
      if (curve_operator(sp, CurveDesc::cable(b.first, b.second, 2)).matrix != z * z - id)
        cable_ok = false;
    }
    r.clauses.push_back({cable_ok, cable_ok ? "" : name + ": cable(-,2) != Z^2 - id"});

    HermitianData h = basis_norms(sp);
    bool adjoint_ok = true;
    std::string adjoint_detail;
    for (auto b : bands)
      if (!self_adjoint(h, ops.at(b))) {
        adjoint_ok = false;
        adjoint_detail = name + ": band " + std::to_string(b.first) + ".." +
                         std::to_string(b.second) + " is not self-adjoint";
      }
    r.clauses.push_back({adjoint_ok, adjoint_ok ? "" : adjoint_detail});
  }

  for (const auto& inst : instances) {
    if (inst.k.size() != 5) continue;
    Space sp = make_space(inst.g, inst.k, inst.p);
    Transport a = fusion_transport(sp, {{1, 4, true}, {1, 4, true}});
    Transport b = fusion_transport(sp, {{1, 3, true}, {1, 4, true}, {2, 4, true}});
    const bool ok = a.tree == b.tree && a.matrix == b.matrix && a.colorings == b.colorings;
    r.clauses.push_back(
        {ok, ok ? "" : spec_name(inst.g, inst.k, inst.p) + ": transport paths disagree"});
  }
  return r;
}

// ---- criterion 4: irreducibility of the point-pushing restriction -------

CriterionResult criterion4() {
  CriterionResult r;
  r.summary = "point-pushing irreducibility desk instances (k1 = 1)";

  auto instance = [&](std::vector<int> k, int p) {
    Space sp = make_space(0, k, p);
    AlgebraReport rep = analyze(sp, GeneratorMode::point_pushing);
    const bool ok = rep.irreducible && rep.algebra_dim == rep.dim * rep.dim &&
                    rep.commutant_dim == 1;
    std::ostringstream os;
    os << spec_name(0, k, p) << ": dim=" << rep.dim << " algebra=" << rep.algebra_dim
       << " commutant=" << rep.commutant_dim << " verdict="
       << (rep.irreducible ? "irreducible" : "reducible");
    r.clauses.push_back({ok, os.str()});
  };

  for (int p : {6, 8, 10, 12}) instance({1, 1, 1, 1}, p);
  for (int p : {8, 10}) instance({1, 1, 1, 1, 1}, p);
  for (int p : {8, 10}) instance({1, 2, 2, 1}, p);
  return r;
}

// ---- criterion 5: curve operators saturate the endomorphism algebra -----

CriterionResult criterion5() {
  CriterionResult r;
  r.summary = "curve-operator saturation (arbitrary colors)";

  auto instance = [&](std::vector<int> k, int p) {
    Space sp = make_space(0, k, p);
    AlgebraReport rep = analyze(sp, GeneratorMode::curves);
    const bool ok = rep.algebra_dim == rep.dim * rep.dim;
    std::ostringstream os;
    os << spec_name(0, k, p) << ": dim=" << rep.dim << " algebra=" << rep.algebra_dim
       << " (dim^2=" << rep.dim * rep.dim << ")";
    r.clauses.push_back({ok, os.str()});
  };
  instance({2, 2, 2, 2}, 10);
  instance({2, 2, 1, 1, 2}, 10);
  return r;
}

// ---- criterion 6: reducibility contrast ----------------------------------

CriterionResult criterion6() {
  CriterionResult r;
  r.summary = "reducibility contrast on (0,4),(2,2,2,2),p=10";

  Space sp = make_space(0, {2, 2, 2, 2}, 10);
  AlgebraReport push = analyze(sp, GeneratorMode::point_pushing, Method::both, true);
  {
    const bool ok = !push.irreducible && push.commutant_dim >= 2;
    std::ostringstream os;
    os << "point-pushing expected reducible with commutant >= 2; got dim=" << push.dim
       << " algebra=" << push.algebra_dim << " commutant=" << push.commutant_dim
       << " verdict=" << (push.irreducible ? "irreducible" : "reducible");
    r.clauses.push_back({ok, os.str()});
  }
  {
    bool cert_ok = !push.certificate.empty();
    std::vector<Operator> gens = point_push_generators(sp);
    for (const auto& x : push.certificate)
      for (const auto& g : gens)
        if (!(x * g.matrix - g.matrix * x).is_zero()) cert_ok = false;
    r.clauses.push_back({cert_ok, cert_ok ? "commutant certificate verifies"
                                          : "no verifying commutant certificate emitted"});
  }
  {
    AlgebraReport curves = analyze(sp, GeneratorMode::curves);
    const bool ok = curves.algebra_dim == curves.dim * curves.dim;
    std::ostringstream os;
    os << "curves on the same surface: algebra=" << curves.algebra_dim
       << " (dim^2=" << curves.dim * curves.dim << ")";
    r.clauses.push_back({ok, os.str()});
  }
  return r;
}

// ---- criterion 7: curve operators lie in the point-pushing algebra ------

CriterionResult criterion7() {
  CriterionResult r;
  r.summary = "curve operators lie in the saturated point-pushing algebra (k1 = 1)";

  auto instance = [&](std::vector<int> k, int p) {
    Space sp = make_space(0, k, p);
    const std::string name = spec_name(0, k, p);
    if (sp.dim() == 0) {
      r.clauses.push_back(
          {true, name + ": zero-dimensional space, membership is vacuous"});
      return;
    }
    AlgebraBasis basis = saturate(sp, point_push_generators(sp));
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= sp.spec().n(); ++i)
      for (int j = i; j <= sp.spec().n(); ++j)
        if (!contains(curve_operator(sp, CurveDesc::band(i, j)), basis)) {
          ok = false;
          detail = name + ": band " + std::to_string(i) + ".." + std::to_string(j) +
                   " escapes the push algebra";
        }
    r.clauses.push_back({ok, ok ? name : detail});
  };
  instance({1, 1, 1, 1}, 8);
  instance({1, 1, 1, 1, 1}, 8);
  return r;
}

// ---- criterion 8: determinism -------------------------------------------

CriterionResult criterion8() {
  CriterionResult r;
  r.summary = "byte-identical JSON outputs across repeated runs and thread counts";

  auto gate_dump = [](int threads) {
    RecouplingContext rc(8);
    auto entries = validate_recoupling(rc, 3, threads);
    json out = json::array();
    for (const auto& e : entries)
      out.push_back(json{{"kind", e.kind}, {"labels", e.labels}, {"pass", e.pass}});
    return out.dump();
  };
  const std::string gate1 = gate_dump(1);
  r.clauses.push_back({gate1 == gate_dump(3) && gate1 == gate_dump(7),
                       "validate-recoupling across thread counts"});

  auto report_dump = [] {
    Space sp = make_space(0, {1, 1, 1, 1}, 8);
    json out = report_to_json(analyze(sp, GeneratorMode::both));
    return out.dump();
  };
  r.clauses.push_back({report_dump() == report_dump(), "analysis reports across runs"});

  auto matrix_dump = [] {
    Space sp = make_space(0, {2, 2, 1, 1, 2}, 10);
    return matrix_to_json(point_push(sp, LoopDesc{3}).matrix).dump();
  };
  r.clauses.push_back({matrix_dump() == matrix_dump(), "operator matrices across runs"});

  auto cache_dump = [](bool warm) {
    const std::string path = "/tmp/skeinrep_acceptance_cache.json";
    if (!warm) std::remove(path.c_str());
    auto rc = std::make_shared<RecouplingContext>(8);
    if (warm) load_recoupling_cache(*rc, path);
    Space sp(SurfaceSpec{0, {1, 1, 1, 1}, 8}, rc);
    std::string out = matrix_to_json(curve_operator(sp, CurveDesc::band(2, 3)).matrix).dump();
    save_recoupling_cache(*rc, path);
    return out;
  };
  const std::string cold = cache_dump(false);
  const std::string warm = cache_dump(true);
  std::remove("/tmp/skeinrep_acceptance_cache.json");
  r.clauses.push_back({cold == warm, "cache off vs cache on"});
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;  // 0 = all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      which = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: skeinrep_acceptance [--criterion N]\n";
      return 1;
    }
  }

  const std::vector<std::function<CriterionResult()>> criteria{
      criterion1, criterion2, criterion3, criterion4,
      criterion5, criterion6, criterion7, criterion8};

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (which != 0 && which != number) continue;
    CriterionResult res;
    try {
      res = criteria[i]();
    } catch (const std::exception& e) {
      res.summary = "criterion aborted";
      res.clauses.push_back({false, std::string("exception: ") + e.what()});
    }
    const bool ok = res.ok();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << res.summary << "\n";
    for (const auto& c : res.clauses)
      if (!c.ok || (which != 0 && !c.detail.empty()))
        std::cout << "    " << (c.ok ? "ok   " : "FAIL ") << c.detail << "\n";
  }
  return failures;
}
