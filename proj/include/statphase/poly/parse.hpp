#ifndef STATPHASE_POLY_PARSE_HPP
#define STATPHASE_POLY_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "statphase/poly/polynomial.hpp"

namespace statphase {

inline constexpr int kDefaultDegreeCap = 24;

namespace detail {

// Recursive-descent parser for
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// Division is allowed only by nonzero constants.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::vector<std::string>& vars, int degree_cap)
      : text_(text), vars_(vars), cap_(degree_cap) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial p = expr(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p.lifted_to(vars_);
  }

 private:
  static constexpr int kMaxNesting = 200;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, "poly", msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void check_cap(int degree) const {
    if (degree > cap_)
      throw Error(ErrorKind::DegreeCapExceeded, "poly",
                  "total degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap_), pos_);
  }

  Polynomial expr(int depth) {
    if (depth > kMaxNesting) fail("expression nested too deeply");
    Polynomial acc = term(depth);
    while (true) {
      if (accept('+')) acc += term(depth);
      else if (accept('-')) acc -= term(depth);
      else return acc;
    }
  }

  Polynomial term(int depth) {
    Polynomial acc = unary(depth);
    while (true) {
      if (accept('*')) {
        Polynomial rhs = unary(depth);
        check_cap(acc.total_degree() + rhs.total_degree());
        acc = acc * rhs;
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial rhs = unary(depth);
        if (!rhs.is_constant() || rhs.is_zero()) {
          pos_ = at;
          fail(rhs.is_zero() ? "division by zero" : "division by a non-constant");
        }
        acc = acc.scaled(1 / rhs.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary(int depth) {
    if (depth > kMaxNesting) fail("expression nested too deeply");
    if (accept('-')) return -unary(depth + 1);
    if (accept('+')) return unary(depth + 1);
    return power(depth);
  }

  Polynomial power(int depth) {
    Polynomial base = atom(depth);
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      unsigned e = static_cast<unsigned>(std::stoul(digits));
      if (!base.is_constant()) check_cap(base.total_degree() * static_cast<int>(e));
      else if (!base.is_zero() && abs(base.constant_term()) != 1) {
        const Rational c = base.constant_term();
        std::size_t bits = mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
        if (static_cast<double>(bits) * e > 1.0e6) fail("constant power too large");
      }
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom(int depth) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr(depth + 1);
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) {
          check_cap(1);
          return Polynomial::variable(vars_, i);
        }
      pos_ = start;
      throw Error(ErrorKind::UnknownVariable, "poly",
                  "undeclared variable '" + name + "' at position " + std::to_string(start), start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  int cap_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression over the declared variables. Rejects total degree above the cap.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                   int degree_cap = kDefaultDegreeCap) {
  return detail::ExpressionParser(text, vars, degree_cap).parse();
}

/// Canonical text: graded-lex descending terms, e.g. "x^2 - 3/2*x*y + 1".
inline std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += p.variables()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

inline std::string format(const QPoly& p, const std::string& var) {
  return format(Polynomial::from_qpoly(p, {var}, 0));
}

/// Structured form: [{"exponents": [..], "coeff": "a/b"}, ...] in canonical order.
inline nlohmann::ordered_json to_structured(const Polynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exponents"] = m.empty() ? Monomial(p.nvars(), 0) : m;
    t["coeff"] = c.get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

inline Polynomial from_structured(const nlohmann::ordered_json& arr, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  if (!arr.is_array()) throw Error(ErrorKind::SyntaxError, "poly", "structured polynomial must be an array");
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
      throw Error(ErrorKind::SyntaxError, "poly", "structured term needs 'exponents' and 'coeff'");
    Monomial m = t.at("exponents").get<Monomial>();
    if (m.size() != vars.size())
      throw Error(ErrorKind::VariableMismatch, "poly", "exponent vector has wrong length");
    p.add_term(m, parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

}  // namespace statphase

#endif  // STATPHASE_POLY_PARSE_HPP
