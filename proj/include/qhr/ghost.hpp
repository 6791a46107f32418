#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qhr/rational.hpp"

namespace qhr {

// Basis monomial psi_S psi*_T of Cl(g + g*), indices ascending; S and T
// are bitmasks over 0..g_dim-1. Bidegree (-|S|, |T|), parity (|S|+|T|) mod 2.
struct GhostMono {
  uint32_t S = 0;
  uint32_t T = 0;

  auto operator<=>(const GhostMono&) const = default;
  int s_count() const { return __builtin_popcount(S); }
  int t_count() const { return __builtin_popcount(T); }
  int ghost_degree() const { return t_count() - s_count(); }
  int parity() const { return (s_count() + t_count()) & 1; }
};

class GhostElement {
 public:
  explicit GhostElement(int g_dim) : g_dim_(g_dim) {}

  static GhostElement unit(int g_dim);
  static GhostElement psi(int g_dim, int i);       // 0-based
  static GhostElement psi_star(int g_dim, int i);  // 0-based
  static GhostElement monomial(int g_dim, GhostMono m, const Rational& c);

  int g_dim() const { return g_dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GhostMono, Rational>& terms() const { return terms_; }

  void add_term(GhostMono m, const Rational& c);

  GhostElement operator+(const GhostElement& o) const;
  GhostElement operator-(const GhostElement& o) const;
  GhostElement operator*(const Rational& c) const;

  bool operator==(const GhostElement& o) const {
    return g_dim_ == o.g_dim_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  int g_dim_;
  std::map<GhostMono, Rational> terms_;
};

GhostElement ghost_mul(const GhostElement& a, const GhostElement& b);

// Super-commutator [a, b] = ab - (-1)^{|a||b|} ba for parity-homogeneous
// arguments.
GhostElement ghost_super_commutator(const GhostElement& a,
                                    const GhostElement& b);

}  // namespace qhr
