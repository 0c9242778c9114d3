#ifndef STATPHASE_POLY_SUBRESULTANT_HPP
#define STATPHASE_POLY_SUBRESULTANT_HPP

#include <utility>

#include "statphase/poly/upoly.hpp"

namespace statphase {

/// Resultant over an integral domain by the subresultant polynomial remainder
/// sequence (Collins/Brown). All divisions are exact in T.
template <class T>
T subresultant_resultant(UPoly<T> a, UPoly<T> b) {
  using tr = ring_traits<T>;
  if (a.is_zero() || b.is_zero()) return tr::zero();
  T sign = tr::one();
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = tr::zero() - sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * power(b.lead(), static_cast<unsigned>(a.degree()));

  T g = tr::one();
  T h = tr::one();
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = tr::zero() - sign;
    UPoly<T> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return tr::zero();
    T divisor = g * power(h, static_cast<unsigned>(delta));
    std::vector<T> rc = r.coeffs();
    for (auto& c : rc) c = tr::exact_div(c, divisor);
    b = UPoly<T>(std::move(rc));
    g = a.lead();
    if (delta > 0)
      h = tr::exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    if (b.degree() == 0) break;
  }
  const unsigned da = static_cast<unsigned>(a.degree());
  T out = tr::exact_div(power(b.lead(), da), power(h, da - 1));
  return sign * out;
}

}  // namespace statphase

#endif  // STATPHASE_POLY_SUBRESULTANT_HPP
