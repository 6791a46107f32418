#include "qhr/derham.hpp"

#include "qhr/errors.hpp"

namespace qhr {

namespace {

PoincarePolynomial from_coeffs(std::vector<Integer> c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return PoincarePolynomial{std::move(c)};
}

PoincarePolynomial power(const PoincarePolynomial& base, int e) {
  PoincarePolynomial out;
  for (int i = 0; i < e; ++i) out = kunneth(out, base);
  return out;
}

PoincarePolynomial one_plus_t_odd(int exponent) {
  std::vector<Integer> c(exponent + 1, Integer(0));
  c[0] = 1;
  c[exponent] = 1;
  return PoincarePolynomial{std::move(c)};
}

}  // namespace

PoincarePolynomial gl_poincare(int m) {
  PoincarePolynomial out;
  for (int k = 1; k <= m; ++k) out = kunneth(out, one_plus_t_odd(2 * k - 1));
  return out;
}

PoincarePolynomial kunneth(const PoincarePolynomial& a,
                           const PoincarePolynomial& b) {
  std::vector<Integer> c(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] += a.coeffs[i] * b.coeffs[j];
  return from_coeffs(std::move(c));
}

PoincarePolynomial predicted_poincare(const ReductionSetup& s) {
  if (s.lie.block_structure.empty()) return power(gl_poincare(1), s.lie.dim);
  PoincarePolynomial out;
  for (const auto& [vertex, size] : s.lie.block_structure)
    out = kunneth(out, gl_poincare(size));
  return out;
}

PoincarePolynomial predicted_poincare(const std::string& family,
                                      const std::vector<long>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw UnknownFamily("family " + family + " expects " +
                          std::to_string(n) + " parameter(s)");
  };
  if (family == "preprojective-a") {
    need(1);
    return power(gl_poincare(1), static_cast<int>(params[0]));
  }
  if (family == "preprojective-d") {
    need(1);
    const int ell = static_cast<int>(params[0]);
    if (ell < 4) throw UnknownFamily("preprojective-d needs ell >= 4");
    return kunneth(power(gl_poincare(1), ell),
                   power(one_plus_t_odd(3), ell - 3));
  }
  if (family == "sra-a") {
    need(2);
    const int ell = static_cast<int>(params[0]);
    const int n = static_cast<int>(params[1]);
    std::vector<Integer> c(2 * n, Integer(0));
    c[0] = 1;
    for (int k = 1; k <= n; ++k) c[2 * k - 1] = 1;
    return power(from_coeffs(std::move(c)), ell);
  }
  if (family == "hypertoric") {
    need(1);
    return power(gl_poincare(1), static_cast<int>(params[0]));
  }
  if (family == "gl-blocks") {
    if (params.empty()) throw UnknownFamily("gl-blocks needs block sizes");
    PoincarePolynomial out;
    for (long m : params) out = kunneth(out, gl_poincare(static_cast<int>(m)));
    return out;
  }
  throw UnknownFamily("unknown family " + family);
}

std::vector<std::vector<long>> predicted_dimension_table(
    const PoincarePolynomial& p, const std::vector<long>& lc_dims) {
  std::vector<std::vector<long>> table;
  for (int n = 0; n <= p.degree(); ++n) {
    std::vector<long> row;
    for (long lc : lc_dims)
      row.push_back(static_cast<long>(p.coeff(n).get_si()) * lc);
    table.push_back(row);
  }
  return table;
}

}  // namespace qhr
