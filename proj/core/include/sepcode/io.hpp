#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sepcode/matrix.hpp"

namespace sepcode {

/// Grid of coefficient tuples, one CSV cell per entry, coefficients joined
/// by ':' low degree first (e.g. "2:1" for 2 + g).
std::string matrix_to_csv(const Matrix& m);

/// Bit-exact reloadable form: field metadata (p, k, modulus) plus entries
/// as coefficient arrays.
nlohmann::ordered_json matrix_to_json(const Matrix& m);

Matrix matrix_from_json(const nlohmann::ordered_json& j);

} // namespace sepcode
