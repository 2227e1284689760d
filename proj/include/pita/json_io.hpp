// JSON encodings shared by the CLI and golden tests.
//   FinMap  {"dom": m, "cod": n, "values": [v1, ..., vm]}, 1-based values
//   Chain   {"objects": [T_n, ..., T_0], "maps": [f_n, ..., f_1]}
//   Tensor  {"terms": [{"left": [label], "right": label, "coeff": c}, ...]}
#pragma once

#include <json.hpp>

#include "pita/chain.hpp"
#include "pita/decomp.hpp"
#include "pita/report.hpp"

namespace pita {

using Json = nlohmann::ordered_json;

Json to_json(const FinMap& f);
// Throws InvalidMap on bad values and std::invalid_argument on bad shape.
FinMap finmap_from_json(const Json& j);

Json to_json(const Chain& c);
Chain chain_from_json(const OperadicInstance& inst, const Json& j);

Json to_json(const Ladder& l);
Json to_json(const Report& r);
// Terms in presentation order. Arity 2 only.
Json to_json(const CoalgebraElement& t);

// "[3,2,1]" or "3,2,1" -> values. Throws std::invalid_argument.
std::vector<int> parse_values(const std::string& text);

}  // namespace pita
