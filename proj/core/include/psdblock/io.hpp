#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "psdblock/criteria.hpp"
#include "psdblock/decompose.hpp"
#include "psdblock/norms.hpp"
#include "psdblock/types.hpp"

namespace psdblock {

// Shared matrix file format:
//   {"rows": n, "cols": m, "entries": [[re, im], ...]}  (row-major)
// Block file format:
//   {"n": n, "m": m, "A": <matrix>, "X": <matrix>, "B": <matrix>}

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json block_to_json(const PsdBlockMatrix& m);
PsdBlockMatrix block_from_json(const nlohmann::json& j);

Matrix load_matrix(const std::string& path);
PsdBlockMatrix load_block(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

nlohmann::json dominance_to_json(const DominanceReport& r);
std::string dominance_to_csv(const DominanceReport& r);

nlohmann::json inequality_report_to_json(const InequalityReport& r);
nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json positivity_to_json(const PositivityVerdict& v);

}  // namespace psdblock
