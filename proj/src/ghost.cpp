#include "qhr/ghost.hpp"

#include <sstream>

#include "qhr/errors.hpp"

namespace qhr {

namespace {

int bits_above(uint32_t mask, int i) {
  return __builtin_popcount(mask >> (i + 1));
}

int bits_below(uint32_t mask, int i) {
  return __builtin_popcount(mask & ((1u << i) - 1));
}

// Right-multiplication of the basis monomial (S, T) by psi_u, resolved via
// psi*_t psi_u = delta_{t,u} - psi_u psi*_t. Accumulates into out.
void rmul_psi(uint32_t S, uint32_t T, int u, const Rational& coef,
              GhostElement& out) {
  if (T == 0) {
    if (S & (1u << u)) return;  // psi_u^2 = 0
    const int sign = bits_above(S, u) & 1 ? -1 : 1;
    out.add_term({S | (1u << u), 0}, coef * sign);
    return;
  }
  const int t = 31 - __builtin_clz(T);  // largest psi* index
  const uint32_t Tp = T & ~(1u << t);
  if (t == u) out.add_term({S, Tp}, coef);
  // - (psi_S psi*_Tp psi_u) psi*_t; appending psi*_t is sign-free because
  // every psi* index produced below t stays below t.
  GhostElement tmp(out.g_dim());
  rmul_psi(S, Tp, u, coef * -1, tmp);
  for (const auto& [m, c] : tmp.terms()) out.add_term({m.S, m.T | (1u << t)}, c);
}

void rmul_psi_star(uint32_t S, uint32_t T, int u, const Rational& coef,
                   GhostElement& out) {
  if (T & (1u << u)) return;  // (psi*_u)^2 = 0
  const int sign = bits_above(T, u) & 1 ? -1 : 1;
  out.add_term({S, T | (1u << u)}, coef * sign);
}

}  // namespace

GhostElement GhostElement::unit(int g_dim) {
  return monomial(g_dim, {0, 0}, 1);
}

GhostElement GhostElement::psi(int g_dim, int i) {
  return monomial(g_dim, {1u << i, 0}, 1);
}

GhostElement GhostElement::psi_star(int g_dim, int i) {
  return monomial(g_dim, {0, 1u << i}, 1);
}

GhostElement GhostElement::monomial(int g_dim, GhostMono m, const Rational& c) {
  GhostElement e(g_dim);
  e.add_term(m, c);
  return e;
}

void GhostElement::add_term(GhostMono m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GhostElement GhostElement::operator+(const GhostElement& o) const {
  GhostElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GhostElement GhostElement::operator-(const GhostElement& o) const {
  GhostElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GhostElement GhostElement::operator*(const Rational& c) const {
  GhostElement r(g_dim_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

GhostElement ghost_mul(const GhostElement& a, const GhostElement& b) {
  if (a.g_dim() != b.g_dim())
    throw DimensionMismatch("ghost elements over different g_dim");
  GhostElement out(a.g_dim());
  for (const auto& [mb, cb] : b.terms()) {
    // Multiply each term of a on the right by the generators of mb in
    // written order: psi factors ascending, then psi* factors ascending.
    GhostElement acc(a.g_dim());
    for (const auto& [ma, ca] : a.terms()) acc.add_term(ma, ca * cb);
    for (int u = 0; u < a.g_dim(); ++u) {
      if (!(mb.S & (1u << u))) continue;
      GhostElement next(a.g_dim());
      for (const auto& [m, c] : acc.terms()) rmul_psi(m.S, m.T, u, c, next);
      acc = std::move(next);
    }
    for (int u = 0; u < a.g_dim(); ++u) {
      if (!(mb.T & (1u << u))) continue;
      GhostElement next(a.g_dim());
      for (const auto& [m, c] : acc.terms())
        rmul_psi_star(m.S, m.T, u, c, next);
      acc = std::move(next);
    }
    for (const auto& [m, c] : acc.terms()) out.add_term(m, c);
  }
  return out;
}

GhostElement ghost_super_commutator(const GhostElement& a,
                                    const GhostElement& b) {
  int pa = -1, pb = -1;
  for (const auto& [m, c] : a.terms()) {
    if (pa < 0)
      pa = m.parity();
    else if (pa != m.parity())
      throw NotBihomogeneous("super-commutator argument of mixed parity");
  }
  for (const auto& [m, c] : b.terms()) {
    if (pb < 0)
      pb = m.parity();
    else if (pb != m.parity())
      throw NotBihomogeneous("super-commutator argument of mixed parity");
  }
  const int sign = (pa == 1 && pb == 1) ? 1 : -1;
  // ab - (-1)^{|a||b|} ba; sign above is -(-1)^{|a||b|}.
  return ghost_mul(a, b) + ghost_mul(b, a) * Rational(sign);
}

std::string GhostElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    for (int i = 0; i < g_dim_; ++i)
      if (m.S & (1u << i)) os << " ps" << (i + 1);
    for (int i = 0; i < g_dim_; ++i)
      if (m.T & (1u << i)) os << " ps*" << (i + 1);
  }
  return os.str();
}

}  // namespace qhr
