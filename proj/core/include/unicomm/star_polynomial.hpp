#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

/// coefficient * (product of letters). Letters: u, v and their adjoints U, V.
/// The empty word is the identity.
struct StarTerm {
  Complex coefficient;
  std::string word;
};

class StarPolynomial {
 public:
  StarPolynomial() = default;
  /// Throws MalformedWord for letters outside {u, U, v, V} and
  /// InvalidArgument for non-finite coefficients.
  explicit StarPolynomial(std::vector<StarTerm> terms);

  /// Parses sums like "uv - vu", "2uV + 0.5", "(0,1)*uv - 1.5 vU".
  /// A term is an optional coefficient (real number or "(re,im)"), an
  /// optional '*', then a word; a bare coefficient or "1" is the identity.
  static StarPolynomial parse(std::string_view text);

  /// uv - vu.
  static StarPolynomial commutator();

  const std::vector<StarTerm>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  std::vector<StarTerm> terms_;
};

/// Sum of coefficient * ordered product of letter matrices.
CMatrix eval_polynomial(const StarPolynomial& poly, const UnitaryPair& p);

}  // namespace unicomm
