#include "skeinrep/json_io.hpp"

#include <fstream>

namespace skeinrep {

namespace {

constexpr int kCacheFormatVersion = 1;

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw usage_error("malformed rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

}  // namespace

json cyclo_to_json(const CycloNum& x) {
  if (!x.context()) throw usage_error("cannot serialize a context-free zero");
  json coeffs = json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(rational_to_string(q));
  return json{{"p", x.context()->level()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const json& j, CycloContextPtr ctx) {
  const int p = j.at("p").get<int>();
  if (ctx && ctx->level() != p)
    throw usage_error("serialized scalar level does not match the context");
  if (!ctx) ctx = CycloContext::make(p);
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
  if (static_cast<int>(coeffs.size()) != ctx->degree())
    throw usage_error("serialized scalar has wrong coefficient count");
  return CycloNum::from_coeffs(ctx, std::move(coeffs));
}

json matrix_to_json(const CycloMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycloMatrix matrix_from_json(const json& j, const CycloContextPtr& ctx) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  CycloMatrix m(ctx, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols)
      throw usage_error("ragged matrix serialization");
    for (int c = 0; c < cols; ++c) m.at(i, c) = cyclo_from_json(j.at(i).at(c), ctx);
  }
  return m;
}

json basis_to_json(const Spine& spine, const std::vector<Coloring>& basis) {
  json out = json::array();
  for (const auto& col : basis) {
    json entry = json::object();
    for (size_t v = 0; v < spine.internal_edges.size(); ++v)
      entry[spine.edges[spine.internal_edges[v]].name] = col.colors[v];
    out.push_back(std::move(entry));
  }
  return out;
}

json norms_to_json(const HermitianData& h) {
  json out = json::array();
  for (const auto& n : h.norms) out.push_back(cyclo_to_json(n));
  return out;
}

json report_to_json(const AlgebraReport& rep) {
  json out{{"dim", rep.dim},
           {"verdict", rep.irreducible ? "irreducible" : "reducible"},
           {"rounds", rep.rounds},
           {"generators", rep.generator_names}};
  if (rep.algebra_dim >= 0) out["algebra_dim"] = rep.algebra_dim;
  if (rep.commutant_dim >= 0) out["commutant_dim"] = rep.commutant_dim;
  if (!rep.certificate.empty()) {
    json cert = json::array();
    for (const auto& m : rep.certificate) cert.push_back(matrix_to_json(m));
    out["certificate"] = std::move(cert);
  }
  return out;
}

json cache_to_json(int level, const std::vector<CacheEntry>& entries) {
  json out{{"version", kCacheFormatVersion}, {"p", level}};
  json list = json::array();
  for (const auto& e : entries)
    list.push_back(json{{"kind", e.kind}, {"labels", e.labels}, {"value", cyclo_to_json(e.value)}});
  out["entries"] = std::move(list);
  return out;
}

std::vector<CacheEntry> cache_from_json(const json& j, int expected_level,
                                        const CycloContextPtr& ctx) {
  if (j.at("version").get<int>() != kCacheFormatVersion)
    throw usage_error("recoupling cache format version mismatch");
  if (j.at("p").get<int>() != expected_level)
    throw usage_error("recoupling cache level mismatch");
  std::vector<CacheEntry> out;
  for (const auto& e : j.at("entries")) {
    CacheEntry entry;
    entry.kind = e.at("kind").get<std::string>();
    entry.labels = e.at("labels").get<std::vector<int>>();
    entry.value = cyclo_from_json(e.at("value"), ctx);
    out.push_back(std::move(entry));
  }
  return out;
}

bool load_recoupling_cache(RecouplingContext& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  json j;
  try {
    in >> j;
    rc.preload(cache_from_json(j, rc.level(), rc.cyclo()));
  } catch (const std::exception&) {
    return false;  // stale or foreign cache; recompute instead
  }
  return true;
}

void save_recoupling_cache(RecouplingContext& rc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write recoupling cache to " + path);
  out << cache_to_json(rc.level(), rc.dump_cache()).dump(2) << "\n";
}

}  // namespace skeinrep
