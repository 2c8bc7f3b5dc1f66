#pragma once

#include "pi1/cohomology_profile.hpp"
#include "pi1/complexes.hpp"
#include "pi1/resolutions.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace pi1 {

using Json = nlohmann::ordered_json;

// Encoders. Matrices serialize as {"rows": r, "cols": c, "entries": [[...]]}
// with entries emitted as numbers when they fit and as decimal strings
// otherwise; relation matrices follow the row convention (one relation per
// row, one column per generator).
Json to_json(const IntMatrix& m);
Json to_json(const FgAbGroup& g);
Json to_json(const FiniteGroup& g);
Json to_json(const GammaModule& m);
Json to_json(const RootDatum& d);
Json to_json(const TwoTermComplex& c);
Json to_json(const TResolution& r);
Json to_json(const GroupHomData& h);
Json to_json(const SESData& s);
Json to_json(const AbCohProfile& p);

// Decoders throw InputError with a JSON-path-prefixed message on schema
// violations; mathematical validation is delegated to the constructors.
IntMatrix matrix_from_json(const Json& j, const std::string& path);
FgAbGroup fgab_from_json(const Json& j, const std::string& path);
FiniteGroup finite_group_from_json(const Json& j, const std::string& path);
GammaModule gamma_module_from_json(const Json& j, const std::string& path);
RootDatum root_datum_from_json(const Json& j, const std::string& path);
GammaAction gamma_action_from_json(const Json& j, const std::string& path);
TwoTermComplex two_term_from_json(const Json& j, const std::string& path);
TResolution t_resolution_from_json(const Json& j, const std::string& path);
GroupHomData group_hom_from_json(const Json& j, const std::string& path);
SESData ses_from_json(const Json& j, const std::string& path);

// Tagged container parse: dispatches on the "type" field.
using ParsedInput =
    std::variant<RootDatum, SESData, TResolution, GammaModule, TwoTermComplex, GroupHomData>;
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& filename);

}  // namespace pi1
