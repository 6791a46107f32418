#pragma once

#include <string>
#include <vector>

#include "qhr/rational.hpp"
#include "qhr/setup.hpp"

namespace qhr {

// Polynomial in t with integer coefficients, coeffs[k] = [t^k].
struct PoincarePolynomial {
  std::vector<Integer> coeffs{Integer(1)};

  bool operator==(const PoincarePolynomial&) const = default;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Integer coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k]
                                                           : Integer(0);
  }
};

// prod_{k=1}^{m} (1 + t^{2k-1}), the odd-generator exterior algebra on a
// rank-m general linear group.
PoincarePolynomial gl_poincare(int m);

PoincarePolynomial kunneth(const PoincarePolynomial& a,
                           const PoincarePolynomial& b);

// Product of gl factors over the retained blocks; (1+t)^rank for tori.
PoincarePolynomial predicted_poincare(const ReductionSetup& s);

// Named closed forms:
//   preprojective-a ell         -> (1+t)^ell
//   preprojective-d ell         -> (1+t)^ell (1+t^3)^{ell-3}
//   sra-a ell n                 -> (1 + t + t^3 + ... + t^{2n-1})^ell
//   hypertoric d                -> (1+t)^d
//   gl-blocks m1 m2 ...         -> prod gl_poincare(m_i)
// Throws UnknownFamily for anything else.
PoincarePolynomial predicted_poincare(const std::string& family,
                                      const std::vector<long>& params);

// Predicted stable truncated dimensions: table[n][k/2] =
// coeff(poincare, n) * lc_dims[k/2].
std::vector<std::vector<long>> predicted_dimension_table(
    const PoincarePolynomial& p, const std::vector<long>& lc_dims);

}  // namespace qhr
