#ifndef ASMKIT_JSON_IO_HPP
#define ASMKIT_JSON_IO_HPP

#include <asmkit/identities.hpp>

#include <json.hpp>

namespace asmkit {

// Counts and coefficients are serialized as decimal strings, never floats.
nlohmann::json to_json(const Cyc& v);
Cyc cyc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatPoly& p);
nlohmann::json to_json(const CycPoly& p);

nlohmann::json to_json(const RefinedTable& t);
std::string table_csv(const RefinedTable& t);

nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json report_json(const std::vector<IdentityCheck>& checks);

}  // namespace asmkit

#endif
