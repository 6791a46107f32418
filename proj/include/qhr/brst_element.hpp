#pragma once

#include <map>
#include <optional>
#include <string>

#include "qhr/ghost.hpp"
#include "qhr/weyl.hpp"

namespace qhr {

// Element of C(R) = D(V) (x) Cl(g + g*), stored as ghost-monomial ->
// Weyl-element table. The Weyl factor is purely even, so term parity is
// the ghost parity.
class BRSTElement {
 public:
  BRSTElement(int n_vars, int g_dim) : n_vars_(n_vars), g_dim_(g_dim) {}

  static BRSTElement tensor(const WeylElement& a, const GhostElement& w);

  int n_vars() const { return n_vars_; }
  int g_dim() const { return g_dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GhostMono, WeylElement>& terms() const { return terms_; }

  void add_term(GhostMono m, const WeylElement& a);

  BRSTElement operator+(const BRSTElement& o) const;
  BRSTElement operator-(const BRSTElement& o) const;
  BRSTElement operator*(const Rational& c) const;

  bool operator==(const BRSTElement& o) const {
    return n_vars_ == o.n_vars_ && g_dim_ == o.g_dim_ && terms_ == o.terms_;
  }

  // Common ghost degree |T|-|S| of all terms; nullopt if zero or mixed.
  std::optional<int> ghost_degree() const;
  // Common parity; nullopt if zero or mixed.
  std::optional<int> parity() const;

  BRSTElement even_part() const;
  BRSTElement odd_part() const;

  std::optional<int> bernstein_degree() const;

  std::string to_string() const;

 private:
  int n_vars_;
  int g_dim_;
  std::map<GhostMono, WeylElement> terms_;
};

BRSTElement brst_mul(const BRSTElement& a, const BRSTElement& b);

}  // namespace qhr
