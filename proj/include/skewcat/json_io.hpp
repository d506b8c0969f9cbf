#ifndef SKEWCAT_JSON_IO_HPP
#define SKEWCAT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "skewcat/bundle.hpp"
#include "skewcat/constructions.hpp"
#include "skewcat/dist_lattice.hpp"
#include "skewcat/duality.hpp"
#include "skewcat/hom.hpp"
#include "skewcat/poset.hpp"
#include "skewcat/skew_lattice.hpp"

namespace skewcat {

// All readers throw InvalidInput with a path-qualified message ("$.meet[2]:
// ...") on malformed input; all writers emit exactly the documented schemas.

// {"size": n, "zero": z, "meet": [[...]], "join": [[...]]}
nlohmann::json algebra_to_json(const SkewLattice& s);
SkewLattice algebra_from_json(const nlohmann::json& j);

// {"map": [...]}
nlohmann::json hom_to_json(const SkewHom& h);
SkewHom hom_from_json(const nlohmann::json& j, const SkewLattice& source,
                      const SkewLattice& target);

// {"points": m, "leq": [[bool]]}
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

// {"poset": {...}, "stalks": [...]}
nlohmann::json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const nlohmann::json& j);

// {"domain": [points], "values": {"x": e, ...}}
nlohmann::json section_to_json(const Section& s);
Section section_from_json(const nlohmann::json& j, const Bundle& b);

// {"base_map": [...], "fiber_maps": [[...], ...]}
nlohmann::json sheaf_morphism_to_json(const SheafMorphism& m);
SheafMorphism sheaf_morphism_from_json(const nlohmann::json& j, const Bundle& source,
                                       const Bundle& target);

// Bundle JSON plus {"hom_labels": [[...]], "class_reps": [[...]]} so element
// names are reproducible.
nlohmann::json dual_bundle_to_json(const DualBundle& db);

// {"poset": {...}, "filters": [[...]], "generators": [...]}
nlohmann::json spectrum_to_json(const SpectrumResult& s);

// {"seed": u64, "caps": {"max_base_points": ..., "max_stalk": ...,
//  "max_generators": ..., "max_closure_size": ...}}
nlohmann::json generator_config_to_json(const GeneratorConfig& cfg);
GeneratorConfig generator_config_from_json(const nlohmann::json& j);

// File helpers; read errors and JSON syntax errors map to InvalidInput.
nlohmann::json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace skewcat

#endif  // SKEWCAT_JSON_IO_HPP
