#include "qhr/brst_element.hpp"

#include <sstream>

#include "qhr/errors.hpp"

namespace qhr {

BRSTElement BRSTElement::tensor(const WeylElement& a, const GhostElement& w) {
  BRSTElement e(a.n_vars(), w.g_dim());
  for (const auto& [m, c] : w.terms()) e.add_term(m, a * c);
  return e;
}

void BRSTElement::add_term(GhostMono m, const WeylElement& a) {
  if (a.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, a);
  } else {
    WeylElement s = it->second + a;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

BRSTElement BRSTElement::operator+(const BRSTElement& o) const {
  BRSTElement r = *this;
  for (const auto& [m, a] : o.terms_) r.add_term(m, a);
  return r;
}

BRSTElement BRSTElement::operator-(const BRSTElement& o) const {
  BRSTElement r = *this;
  for (const auto& [m, a] : o.terms_) r.add_term(m, -a);
  return r;
}

BRSTElement BRSTElement::operator*(const Rational& c) const {
  BRSTElement r(n_vars_, g_dim_);
  if (c == 0) return r;
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

std::optional<int> BRSTElement::ghost_degree() const {
  std::optional<int> deg;
  for (const auto& [m, a] : terms_) {
    if (!deg)
      deg = m.ghost_degree();
    else if (*deg != m.ghost_degree())
      return std::nullopt;
  }
  return deg;
}

std::optional<int> BRSTElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, a] : terms_) {
    if (!p)
      p = m.parity();
    else if (*p != m.parity())
      return std::nullopt;
  }
  return p;
}

BRSTElement BRSTElement::even_part() const {
  BRSTElement r(n_vars_, g_dim_);
  for (const auto& [m, a] : terms_)
    if (m.parity() == 0) r.add_term(m, a);
  return r;
}

BRSTElement BRSTElement::odd_part() const {
  BRSTElement r(n_vars_, g_dim_);
  for (const auto& [m, a] : terms_)
    if (m.parity() == 1) r.add_term(m, a);
  return r;
}

std::optional<int> BRSTElement::bernstein_degree() const {
  std::optional<int> deg;
  for (const auto& [m, a] : terms_) {
    const auto d = a.bernstein_degree();
    if (d && (!deg || *d > *deg)) deg = d;
  }
  return deg;
}

BRSTElement brst_mul(const BRSTElement& a, const BRSTElement& b) {
  if (a.n_vars() != b.n_vars() || a.g_dim() != b.g_dim())
    throw DimensionMismatch("brst elements over incompatible dimensions");
  BRSTElement out(a.n_vars(), a.g_dim());
  // (a (x) w)(a' (x) w') = (-1)^{|a'||w|} aa' (x) ww'; the Weyl factor is
  // even, so the sign is always +1.
  for (const auto& [ma, wa] : a.terms()) {
    for (const auto& [mb, wb] : b.terms()) {
      const WeylElement prod = weyl_mul(wa, wb);
      if (prod.is_zero()) continue;
      const GhostElement g =
          ghost_mul(GhostElement::monomial(a.g_dim(), ma, 1),
                    GhostElement::monomial(a.g_dim(), mb, 1));
      for (const auto& [mg, cg] : g.terms()) out.add_term(mg, prod * cg);
    }
  }
  return out;
}

std::string BRSTElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, a] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << '(' << a.to_string() << ')';
    for (int i = 0; i < g_dim_; ++i)
      if (m.S & (1u << i)) os << " ps" << (i + 1);
    for (int i = 0; i < g_dim_; ++i)
      if (m.T & (1u << i)) os << " ps*" << (i + 1);
  }
  return os.str();
}

}  // namespace qhr
