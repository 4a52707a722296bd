#include "unicomm/json_io.hpp"

#include <cmath>
#include <string>

#include "unicomm/error.hpp"

namespace unicomm::io {

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) fail(ErrorCode::ParseError, std::string(what) + " is not a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(ErrorCode::ParseError, std::string(what) + " is not finite");
  return x;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "matrix JSON holds square matrices only");
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) data.push_back(to_json(m(i, j)));
  }
  return json{{"dim", m.rows()}, {"data", std::move(data)}};
}

json to_json(const UnitaryMatrix& m) { return to_json(m.matrix()); }

json to_json(const UnitaryPair& p) { return json{{"u", to_json(p.u())}, {"v", to_json(p.v())}}; }

json to_json(const Tolerances& tol) {
  return json{{"unitarity", tol.unitarity}, {"zero", tol.zero}, {"angle", tol.angle}};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(finite_number(j, "real entry"), 0.0);
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::ParseError, "complex entry must be [re, im]");
  return Complex(finite_number(j[0], "real part"), finite_number(j[1], "imaginary part"));
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "matrix must be a JSON object");
  if (!j.contains("dim") || !j.contains("data")) fail(ErrorCode::ParseError, "matrix needs 'dim' and 'data'");
  const json& dim_j = j.at("dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) {
    fail(ErrorCode::ParseError, "'dim' must be a positive integer");
  }
  const auto n = static_cast<Index>(dim_j.get<long long>());
  const json& data = j.at("data");
  if (!data.is_array()) fail(ErrorCode::ParseError, "'data' must be an array");
  if (static_cast<Index>(data.size()) != n * n) {
    fail(ErrorCode::ParseError, "'data' has " + std::to_string(data.size()) + " entries, expected " +
                                    std::to_string(n * n));
  }
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) m(i, k) = complex_from_json(data[static_cast<std::size_t>(i * n + k)]);
  }
  return m;
}

UnitaryMatrix unitary_from_json(const json& j, const Tolerances& tol) {
  return UnitaryMatrix(matrix_from_json(j), tol.unitarity);
}

UnitaryPair pair_from_json(const json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v")) {
    fail(ErrorCode::ParseError, "pair must be an object with 'u' and 'v'");
  }
  return UnitaryPair(unitary_from_json(j.at("u"), tol), unitary_from_json(j.at("v"), tol));
}

}  // namespace unicomm::io
