#ifndef SKEINREP_JSON_IO_HPP
#define SKEINREP_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "skeinrep/algebra.hpp"
#include "skeinrep/operators.hpp"
#include "skeinrep/recoupling.hpp"
#include "skeinrep/spine.hpp"

namespace skeinrep {

using json = nlohmann::json;

// Scalars serialize as {"p": level, "coeffs": ["num/den", ...]} with one
// exact rational per power-basis coefficient A^0 .. A^{phi(2p)-1}.
// Round-tripping is bit exact.
json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j, CycloContextPtr ctx = nullptr);

// Matrices are nested arrays of scalar serializations.
json matrix_to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(const json& j, const CycloContextPtr& ctx);

json basis_to_json(const Spine& spine, const std::vector<Coloring>& basis);
json norms_to_json(const HermitianData& h);
json report_to_json(const AlgebraReport& rep);

// Versioned advisory cache of recoupling values.
json cache_to_json(int level, const std::vector<CacheEntry>& entries);
std::vector<CacheEntry> cache_from_json(const json& j, int expected_level,
                                        const CycloContextPtr& ctx);

// Returns false (without touching the context) when the file is missing or
// carries a different format version or level.
bool load_recoupling_cache(RecouplingContext& rc, const std::string& path);
void save_recoupling_cache(RecouplingContext& rc, const std::string& path);

}  // namespace skeinrep

#endif
