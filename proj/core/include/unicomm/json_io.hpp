#pragma once

#include <nlohmann/json.hpp>

#include "unicomm/types.hpp"

namespace unicomm::io {

using nlohmann::json;

// Matrix format: {"dim": n, "data": [[re, im], ...]} with n*n entries in
// row-major order. Parsers throw Error(ParseError) on wrong shapes, wrong
// lengths, non-numeric or non-finite values.

json to_json(const CMatrix& m);
json to_json(const UnitaryMatrix& m);
json to_json(Complex z);
/// {"u": matrix, "v": matrix}
json to_json(const UnitaryPair& p);
json to_json(const Tolerances& tol);

CMatrix matrix_from_json(const json& j);
UnitaryMatrix unitary_from_json(const json& j, const Tolerances& tol = {});
UnitaryPair pair_from_json(const json& j, const Tolerances& tol = {});
Complex complex_from_json(const json& j);

}  // namespace unicomm::io
