#pragma once

#include "vcsirreps/exact.hpp"
#include "vcsirreps/operator.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace vcsirreps::io {

inline constexpr int kSchemaVersion = 1;

/// {"sign": s, "radicand": "p/q"}
nlohmann::json radical_to_json(const Radical& r);
Radical radical_from_json(const nlohmann::json& j);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);
double parse_double(const std::string& s);

enum class Precision { exact, floating };

/// {"name", "construction", "dim", "entries": [[row, col, value], ...]}
nlohmann::json operator_to_json(const OperatorMatrix& op, Precision precision);
OperatorMatrix operator_from_json(const nlohmann::json& j);

nlohmann::json operators_to_json(const OperatorSet& ops, Precision precision);
OperatorSet operators_from_json(const nlohmann::json& j);

}  // namespace vcsirreps::io
