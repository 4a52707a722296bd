#include "unicomm/star_polynomial.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "unicomm/error.hpp"

namespace unicomm {

namespace {

bool is_letter(char c) { return c == 'u' || c == 'U' || c == 'v' || c == 'V'; }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<StarTerm> run() {
    std::vector<StarTerm> terms;
    skip();
    if (done()) malformed("empty polynomial");
    bool first = true;
    while (!done()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1.0 : 1.0;
        skip();
      } else if (!first) {
        malformed("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
      skip();
    }
    return terms;
  }

 private:
  StarTerm term(double sign) {
    Complex coef(1.0, 0.0);
    bool have_coef = false;
    if (!done() && peek() == '(') {
      take();
      const double re = number();
      skip();
      expect(',');
      const double im = number();
      skip();
      expect(')');
      coef = Complex(re, im);
      have_coef = true;
    } else if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      coef = Complex(number(), 0.0);
      have_coef = true;
    }
    skip();
    if (have_coef && !done() && peek() == '*') {
      take();
      skip();
    }
    std::string word;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) {
      const char c = take();
      if (!is_letter(c)) malformed(std::string("letter '") + c + "' is not one of u, U, v, V");
      word.push_back(c);
    }
    if (!have_coef && word.empty()) malformed("term has neither a coefficient nor a word");
    return StarTerm{sign * coef, std::move(word)};
  }

  double number() {
    skip();
    if (!done() && (peek() == '+' || peek() == '-')) {
      const double sign = take() == '-' ? -1.0 : 1.0;
      return sign * number();
    }
    double x = 0.0;
    const char* begin = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), x);
    if (ec != std::errc() || ptr == begin) malformed("bad number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return x;
  }

  void expect(char c) {
    if (done() || take() != c) malformed(std::string("expected '") + c + "'");
  }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  [[noreturn]] void malformed(const std::string& why) const {
    fail(ErrorCode::MalformedWord, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

StarPolynomial::StarPolynomial(std::vector<StarTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag())) {
      fail(ErrorCode::InvalidArgument, "polynomial coefficients must be finite");
    }
    for (char c : t.word) {
      if (!is_letter(c)) fail(ErrorCode::MalformedWord, std::string("letter '") + c + "' is not one of u, U, v, V");
    }
  }
}

StarPolynomial StarPolynomial::parse(std::string_view text) { return StarPolynomial(Parser(text).run()); }

StarPolynomial StarPolynomial::commutator() {
  return StarPolynomial({{Complex(1.0, 0.0), "uv"}, {Complex(-1.0, 0.0), "vu"}});
}

std::string StarPolynomial::to_string() const {
  std::string out;
  char buf[96];
  for (const auto& t : terms_) {
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", t.coefficient.real(), t.coefficient.imag());
    if (!out.empty()) out += " + ";
    out += buf;
    if (!t.word.empty()) out += "*" + t.word;
  }
  return out.empty() ? "0" : out;
}

CMatrix eval_polynomial(const StarPolynomial& poly, const UnitaryPair& p) {
  const Index n = p.dim();
  const CMatrix ua = p.u().matrix().adjoint();
  const CMatrix va = p.v().matrix().adjoint();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const auto& t : poly.terms()) {
    CMatrix prod = CMatrix::Identity(n, n);
    for (char c : t.word) {
      switch (c) {
        case 'u': prod = prod * p.u().matrix(); break;
        case 'U': prod = prod * ua; break;
        case 'v': prod = prod * p.v().matrix(); break;
        case 'V': prod = prod * va; break;
        default: fail(ErrorCode::MalformedWord, std::string("letter '") + c + "'");
      }
    }
    sum += t.coefficient * prod;
  }
  return sum;
}

}  // namespace unicomm
