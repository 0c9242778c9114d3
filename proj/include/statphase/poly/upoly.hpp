#ifndef STATPHASE_POLY_UPOLY_HPP
#define STATPHASE_POLY_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "statphase/core/error.hpp"
#include "statphase/core/rational.hpp"

namespace statphase {

// Arithmetic hooks for coefficient domains. Specialised for Rational here,
// for UPoly<T> below and for the multivariate Polynomial in polynomial.hpp.
template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

/// Dense univariate polynomial, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class UPoly {
 public:
  using coeff_type = T;
  using traits = ring_traits<T>;

  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const T& c) { return UPoly(std::vector<T>{c}); }
  static UPoly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, traits::zero());
    v[k] = c;
    return UPoly(std::move(v));
  }
  // The indeterminate itself.
  static UPoly var() { return monomial(traits::one(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : traits::zero(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  void set_coeff(std::size_t i, const T& v) {
    if (i >= c_.size()) c_.resize(i + 1, traits::zero());
    c_[i] = v;
    trim();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.c_) c = traits::zero() - c;
    return a;
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scaled(const T& s) const {
    std::vector<T> v = c_;
    for (auto& c : v) c = c * s;
    return UPoly(std::move(v));
  }

  // Multiply by x^k.
  UPoly shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k, traits::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> v(c_.size() - 1, traits::zero());
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * traits::from_int(static_cast<long>(i));
    return UPoly(std::move(v));
  }

  // Horner evaluation in any ring U that accepts T coefficients.
  template <class U>
  U eval(const U& x) const {
    U acc = U(traits::zero());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
struct ring_traits<UPoly<T>> {
  static UPoly<T> zero() { return {}; }
  static UPoly<T> one() { return UPoly<T>::constant(ring_traits<T>::one()); }
  static UPoly<T> from_int(long v) {
    if (v == 0) return {};
    return UPoly<T>::constant(ring_traits<T>::from_int(v));
  }
  static bool is_zero(const UPoly<T>& a) { return a.is_zero(); }
  static UPoly<T> exact_div(const UPoly<T>& a, const UPoly<T>& b);
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q * b + r, deg r < deg b.
template <class T>
UPoly<T> pseudo_remainder(const UPoly<T>& a, const UPoly<T>& b) {
  using tr = ring_traits<T>;
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly", "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  const T& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    T lead = r[k];
    for (auto& c : r) c = c * lb;
    if (!tr::is_zero(lead)) {
      for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - lead * b[i];
    }
  }
  return UPoly<T>(std::vector<T>(r.begin(), r.begin() + db));
}

/// Exact division over an integral domain; throws if b does not divide a.
template <class T>
UPoly<T> exact_quotient(const UPoly<T>& a, const UPoly<T>& b) {
  using tr = ring_traits<T>;
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly", "division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw Error(ErrorKind::Internal, "poly", "inexact polynomial division");
  std::vector<T> r = a.coeffs();
  std::vector<T> q(a.degree() - b.degree() + 1, tr::zero());
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (tr::is_zero(r[k])) continue;
    T c = tr::exact_div(r[k], b.lead());
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - c * b[i];
  }
  for (int i = 0; i < db; ++i)
    if (!tr::is_zero(r[i])) throw Error(ErrorKind::Internal, "poly", "inexact polynomial division");
  return UPoly<T>(std::move(q));
}

template <class T>
UPoly<T> ring_traits<UPoly<T>>::exact_div(const UPoly<T>& a, const UPoly<T>& b) {
  return exact_quotient(a, b);
}

template <class T>
T power(const T& base, unsigned e) {
  T out = ring_traits<T>::one();
  T b = base;
  while (e) {
    if (e & 1u) out = out * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return out;
}

}  // namespace statphase

#endif  // STATPHASE_POLY_UPOLY_HPP
