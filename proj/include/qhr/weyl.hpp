#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhr/rational.hpp"

namespace qhr {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Normal-ordered monomial x^alpha d^beta.
struct WeylMono {
  MultiIndex alpha;
  MultiIndex beta;

  auto operator<=>(const WeylMono&) const = default;
  int degree() const { return total_degree(alpha) + total_degree(beta); }
};

// Graded-lexicographic: by total degree, then (alpha, beta) lex.
struct GradedLexLess {
  bool operator()(const WeylMono& a, const WeylMono& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
  }
};

struct WeightResult {
  enum Kind { Zero, Pure, Mixed } kind;
  std::vector<long> weight;  // meaningful only for Pure
};

class PolyElement;

// Element of the Weyl algebra D(V): finitely supported table over
// normal-ordered monomials x^alpha d^beta. Immutable value semantics;
// equality is table equality.
class WeylElement {
 public:
  explicit WeylElement(int n_vars) : n_vars_(n_vars) {}

  static WeylElement zero(int n_vars) { return WeylElement(n_vars); }
  static WeylElement constant(int n_vars, const Rational& c);
  static WeylElement coordinate(int n_vars, int i);  // x_i, 0-based
  static WeylElement derivation(int n_vars, int i);  // d_i, 0-based
  static WeylElement monomial(int n_vars, const WeylMono& m, const Rational& c);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylMono, Rational, GradedLexLess>& terms() const {
    return terms_;
  }
  Rational coeff(const WeylMono& m) const;

  void add_term(const WeylMono& m, const Rational& c);

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator*(const Rational& c) const;
  WeylElement operator-() const { return *this * Rational(-1); }

  bool operator==(const WeylElement& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }

  // nullopt encodes degree -infinity (the zero element).
  std::optional<int> bernstein_degree() const;

  WeightResult torus_weight(
      const std::vector<std::vector<long>>& weights_per_variable) const;

  PolyElement principal_symbol() const;

  std::string to_string() const;

 private:
  int n_vars_;
  std::map<WeylMono, Rational, GradedLexLess> terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);

// Element of the commutative symbol algebra C[T*V]; the beta leg is read
// as xi exponents.
class PolyElement {
 public:
  explicit PolyElement(int n_vars) : n_vars_(n_vars) {}

  static PolyElement monomial(int n_vars, const WeylMono& m, const Rational& c);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylMono, Rational, GradedLexLess>& terms() const {
    return terms_;
  }

  void add_term(const WeylMono& m, const Rational& c);

  PolyElement operator+(const PolyElement& o) const;
  PolyElement operator-(const PolyElement& o) const;
  PolyElement operator*(const PolyElement& o) const;
  PolyElement operator*(const Rational& c) const;

  bool operator==(const PolyElement& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  int n_vars_;
  std::map<WeylMono, Rational, GradedLexLess> terms_;
};

// Round-trip parser for WeylElement::to_string output,
// e.g. "3/2 x1^2 d2 + -1 x1".
WeylElement parse_weyl(const std::string& text, int n_vars);

}  // namespace qhr
