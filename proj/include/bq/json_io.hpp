#pragma once

// JSON interchange: complex numbers are always [re, im] pairs.

#include <string>

#include <json.hpp>

#include "bq/dual.hpp"
#include "bq/fourier.hpp"

namespace bq {

nlohmann::json group_to_json(const FiniteGroup& g);
// Runs validate_group and rejects invalid tables; identity must be index 0.
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json dual_to_json(const UnitaryDual& dual);
// Re-validates against the group.
UnitaryDual dual_from_json(const FiniteGroup& g, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json symbol_to_json(const SymbolField& f);
SymbolField symbol_from_json(const UnitaryDual& dual, int order,
                             const nlohmann::json& j);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// One value per line, header "eigenvalue".
std::string spectrum_csv(const Eigen::VectorXd& values);

} // namespace bq
