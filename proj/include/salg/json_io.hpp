#pragma once

#include "salg/induced.hpp"
#include "salg/modules.hpp"

#include "json.hpp"

namespace salg {

using nlohmann::json;

// Modes serialize as a plain integer when whole, "m/2" with odd m otherwise.
json mode2_to_json(long mode2);
long mode2_from_json(const json& j);

// "L:2", "G:-1/2", "C1" -> GenIndex
GenIndex gen_from_arg(const std::string& s);

json sv_to_json(const SuperVector& v);
json report_to_json(const CheckReport& rep);
json ind_to_json(const InducedVector& v);

json finite_module_to_json(const FiniteModule& V);
std::shared_ptr<FiniteModule> finite_module_from_json(const json& j);

// Flat "key: value" rendering for --format text.
std::string json_to_text(const json& j);

}  // namespace salg
