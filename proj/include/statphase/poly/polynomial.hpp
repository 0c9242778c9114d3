#ifndef STATPHASE_POLY_POLYNOMIAL_HPP
#define STATPHASE_POLY_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "statphase/core/error.hpp"
#include "statphase/core/rational.hpp"
#include "statphase/poly/univariate_q.hpp"
#include "statphase/poly/upoly.hpp"

namespace statphase {

/// Exponent vector, one entry per declared variable.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

/// Graded lexicographic order, largest first; variable 0 is the most significant.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial over Q in an ordered list of named variables.
///
/// A polynomial with an empty variable list is a "free constant": it combines
/// with any variable list. Two polynomials with different non-empty lists are
/// incompatible and arithmetic between them raises VariableMismatch.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  Polynomial(const Rational& c)  // NOLINT: implicit lift of constants is intended
  {
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (sgn(c) != 0) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
    return p;
  }

  static Polynomial variable(std::vector<std::string> vars, const std::string& name) {
    Polynomial p(std::move(vars));
    std::size_t i = p.index_of(name);
    Monomial m(p.vars_.size(), 0);
    m[i] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static Polynomial variable(std::vector<std::string> vars, std::size_t index) {
    Polynomial p(std::move(vars));
    Monomial m(p.vars_.size(), 0);
    m.at(index) = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static Polynomial term(std::vector<std::string> vars, Monomial m, const Rational& c) {
    Polynomial p(std::move(vars));
    if (m.size() != p.vars_.size())
      throw Error(ErrorKind::VariableMismatch, "poly", "monomial length differs from variable count");
    if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && statphase::total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_term() const {
    for (const auto& [m, c] : terms_)
      if (statphase::total_degree(m) == 0) return c;
    return 0;
  }

  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(statphase::total_degree(terms_.begin()->first));
  }

  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
  }
  int degree_in(const std::string& name) const { return degree_in(index_of(name)); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw Error(ErrorKind::UnknownVariable, "poly", "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  // Variables that actually occur.
  std::vector<std::size_t> support_variables() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (degree_in(i) > 0) out.push_back(i);
    return out;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  // ---- arithmetic -------------------------------------------------------

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    Polynomial other = o.lifted_to(vars_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    Polynomial other = o.lifted_to(vars_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.vars_.empty() ? b.vars_ : a.vars_);
    out.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return out;
    Polynomial la = a.lifted_to(out.vars_), lb = b.lifted_to(out.vars_);
    Monomial m(out.vars_.size());
    for (const auto& [ma, ca] : la.terms_)
      for (const auto& [mb, cb] : lb.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& s) const {
    Polynomial out(vars_);
    if (sgn(s) == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = Polynomial::constant(vars_, 1);
    Polynomial b = *this;
    while (e) {
      if (e & 1u) out = out * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.vars_ != b.vars_) {
      // Free constants compare by value.
      if ((a.vars_.empty() || b.vars_.empty()) && a.is_constant() && b.is_constant())
        return a.constant_term() == b.constant_term();
      return false;
    }
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // ---- calculus and substitution ---------------------------------------

  Polynomial derivative(std::size_t var) const {
    if (var >= vars_.size())
      throw Error(ErrorKind::UnknownVariable, "poly", "variable index out of range");
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      --d[var];
      out.add_term(d, c * m[var]);
    }
    return out;
  }
  Polynomial derivative(const std::string& name) const { return derivative(index_of(name)); }

  /// Substitutes the given values; variables not mentioned stay symbolic.
  /// The variable list is kept unchanged.
  Polynomial evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<std::optional<Rational>> vals(vars_.size());
    for (const auto& [name, v] : point) vals[index_of(name)] = v;
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      Rational coeff = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (vals[i] && m[i] > 0) {
          coeff *= statphase::pow(*vals[i], m[i]);
          rest[i] = 0;
        }
      out.add_term(rest, coeff);
    }
    return out;
  }

  /// Full evaluation at a point given in variable order.
  Rational value_at(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size() && !terms_.empty() && !is_constant())
      throw Error(ErrorKind::VariableMismatch, "poly", "point has wrong dimension");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) t *= statphase::pow(point[i], m[i]);
      acc += t;
    }
    return acc;
  }

  /// Replaces variable `var` by the polynomial `value` (same variable list).
  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    UPoly<Polynomial> u = to_univariate(var);
    Polynomial v = value.lifted_to(vars_);
    Polynomial acc(vars_);
    for (std::size_t i = u.size(); i-- > 0;) acc = acc * v + u[i].lifted_to(vars_);
    return acc;
  }

  /// Simultaneous substitution of every variable (values share a variable list).
  Polynomial substitute_all(const std::vector<Polynomial>& values) const {
    if (values.size() != vars_.size())
      throw Error(ErrorKind::VariableMismatch, "poly", "substitution arity mismatch");
    std::vector<std::string> target;
    for (const auto& v : values)
      if (!v.vars_.empty()) { target = v.vars_; break; }
    Polynomial acc(target);
    std::vector<std::vector<Polynomial>> powers(vars_.size());
    for (const auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(target, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
        while (pw.size() <= m[i]) pw.push_back(pw.back() * values[i]);
        t = t * pw[m[i]];
      }
      acc += t;
    }
    return acc;
  }

  /// Rewrites the polynomial over a new variable list. Every occurring
  /// variable must exist in the target list.
  Polynomial lifted_to(const std::vector<std::string>& target) const {
    if (vars_ == target) return *this;
    Polynomial out(target);
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) {
        if (degree_in(i) > 0)
          throw Error(ErrorKind::VariableMismatch, "poly", "variable '" + vars_[i] + "' missing in target list");
        map[i] = target.size();
      } else {
        map[i] = static_cast<std::size_t>(it - target.begin());
      }
    }
    for (const auto& [m, c] : terms_) {
      Monomial nm(target.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) nm[map[i]] = m[i];
      out.add_term(nm, c);
    }
    return out;
  }

  /// View as a polynomial in variable `var` with coefficients in the others.
  UPoly<Polynomial> to_univariate(std::size_t var) const {
    int d = degree_in(var);
    if (d < 0) return {};
    std::vector<Polynomial> coeffs(d + 1, Polynomial(vars_));
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest[var] = 0;
      coeffs[m[var]].add_term(rest, c);
    }
    return UPoly<Polynomial>(std::move(coeffs));
  }

  static Polynomial from_univariate(const UPoly<Polynomial>& u, const std::vector<std::string>& vars,
                                    std::size_t var) {
    Polynomial out(vars);
    for (std::size_t k = 0; k < u.size(); ++k) {
      Polynomial c = u[k].lifted_to(vars);
      for (const auto& [m, coef] : c.terms_) {
        Monomial nm = m;
        nm[var] += static_cast<unsigned>(k);
        out.add_term(nm, coef);
      }
    }
    return out;
  }

  /// Converts a polynomial involving only `var` to a dense univariate one.
  QPoly to_qpoly(std::size_t var) const {
    std::vector<Rational> v(std::max(0, degree_in(var)) + 1);
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != var && m[i])
          throw Error(ErrorKind::VariableMismatch, "poly", "polynomial is not univariate in '" + vars_[var] + "'");
      v[m.empty() ? 0 : m[var]] += c;
    }
    return QPoly(std::move(v));
  }

  static Polynomial from_qpoly(const QPoly& p, const std::vector<std::string>& vars, std::size_t var) {
    Polynomial out(vars);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (sgn(p[k]) == 0) continue;
      Monomial m(vars.size(), 0);
      m[var] = static_cast<unsigned>(k);
      out.terms_.emplace(std::move(m), p[k]);
    }
    return out;
  }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Polynomial> divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly", "division by zero polynomial");
    std::vector<std::string> vars = a.vars_.empty() ? b.vars_ : a.vars_;
    a.check_compatible(b);
    Polynomial r = a.lifted_to(vars), d = b.lifted_to(vars);
    Polynomial q(vars);
    const Monomial& lm = d.leading_monomial();
    const Rational& lc = d.leading_coefficient();
    while (!r.is_zero()) {
      const Monomial& rm = r.leading_monomial();
      Monomial qm(rm.size());
      for (std::size_t i = 0; i < rm.size(); ++i) {
        if (rm[i] < lm[i]) return std::nullopt;
        qm[i] = rm[i] - lm[i];
      }
      Rational qc = r.leading_coefficient() / lc;
      Polynomial t = Polynomial::term(vars, qm, qc);
      q.add_term(qm, qc);
      r -= t * d;
    }
    return q;
  }

  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial normalized() const {
    if (is_zero()) return *this;
    Integer l = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& [m, c] : terms_) {
      Integer v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational s{l, g};
    s.canonicalize();
    if (sgn(leading_coefficient()) < 0) s = -s;
    return scaled(s);
  }

  /// Monic with respect to the graded-lex leading term.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coefficient());
  }

  void check_compatible(const Polynomial& o) const {
    if (!vars_.empty() && !o.vars_.empty() && vars_ != o.vars_)
      throw Error(ErrorKind::VariableMismatch, "poly", "variable lists differ");
  }

 private:
  void adopt(const Polynomial& o) {
    check_compatible(o);
    if (vars_.empty() && !o.vars_.empty()) *this = lifted_to(o.vars_);
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

template <>
struct ring_traits<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(1); }
  static Polynomial from_int(long v) { return Polynomial(v); }
  static bool is_zero(const Polynomial& a) { return a.is_zero(); }
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = Polynomial::divide(a, b);
    if (!q) throw Error(ErrorKind::Internal, "poly", "inexact multivariate division");
    return *q;
  }
};

// Free-function spellings used across modules.
inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline Polynomial partial_derivative(const Polynomial& p, const std::string& var) { return p.derivative(var); }
inline Polynomial evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
  return p.evaluate(point);
}

/// Conversions between bivariate polynomials and UPoly<QPoly> (outer variable `outer`).
inline UPoly<QPoly> to_bivariate(const Polynomial& p, std::size_t outer, std::size_t inner) {
  int d = p.degree_in(outer);
  if (d < 0) return {};
  std::vector<std::vector<Rational>> rows(d + 1);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != outer && i != inner && m[i])
        throw Error(ErrorKind::VariableMismatch, "poly", "polynomial is not bivariate");
    auto& row = rows[m[outer]];
    if (row.size() <= m[inner]) row.resize(m[inner] + 1);
    row[m[inner]] += c;
  }
  std::vector<QPoly> coeffs;
  coeffs.reserve(rows.size());
  for (auto& r : rows) coeffs.emplace_back(std::move(r));
  return UPoly<QPoly>(std::move(coeffs));
}

}  // namespace statphase

#endif  // STATPHASE_POLY_POLYNOMIAL_HPP
