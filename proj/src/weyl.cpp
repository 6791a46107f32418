#include "qhr/weyl.hpp"

#include <sstream>

#include "qhr/errors.hpp"

namespace qhr {

namespace {

void check_same_vars(const WeylElement& a, const WeylElement& b) {
  if (a.n_vars() != b.n_vars())
    throw VariableCountMismatch("weyl elements over different variable counts");
}

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

WeylElement WeylElement::constant(int n_vars, const Rational& c) {
  WeylElement e(n_vars);
  e.add_term({MultiIndex(n_vars, 0), MultiIndex(n_vars, 0)}, c);
  return e;
}

WeylElement WeylElement::coordinate(int n_vars, int i) {
  MultiIndex a(n_vars, 0), b(n_vars, 0);
  a[i] = 1;
  return monomial(n_vars, {a, b}, 1);
}

WeylElement WeylElement::derivation(int n_vars, int i) {
  MultiIndex a(n_vars, 0), b(n_vars, 0);
  b[i] = 1;
  return monomial(n_vars, {a, b}, 1);
}

WeylElement WeylElement::monomial(int n_vars, const WeylMono& m,
                                  const Rational& c) {
  WeylElement e(n_vars);
  e.add_term(m, c);
  return e;
}

Rational WeylElement::coeff(const WeylMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const WeylMono& m, const Rational& c) {
  if (static_cast<int>(m.alpha.size()) != n_vars_ ||
      static_cast<int>(m.beta.size()) != n_vars_)
    throw VariableCountMismatch("multi-index length != n_vars");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  check_same_vars(*this, o);
  WeylElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  check_same_vars(*this, o);
  WeylElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

WeylElement WeylElement::operator*(const Rational& c) const {
  WeylElement r(n_vars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

std::optional<int> WeylElement::bernstein_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Terms are graded-lex ordered, so the last one carries the top degree.
  return terms_.rbegin()->first.degree();
}

WeightResult WeylElement::torus_weight(
    const std::vector<std::vector<long>>& w) const {
  if (static_cast<int>(w.size()) != n_vars_)
    throw VariableCountMismatch("weight table length != n_vars");
  if (terms_.empty()) return {WeightResult::Zero, {}};
  const size_t d = w.empty() ? 0 : w.front().size();
  std::optional<std::vector<long>> common;
  for (const auto& [m, c] : terms_) {
    std::vector<long> wt(d, 0);
    for (int j = 0; j < n_vars_; ++j) {
      const long diff = m.alpha[j] - m.beta[j];
      for (size_t k = 0; k < d; ++k) wt[k] += w[j][k] * diff;
    }
    if (!common)
      common = wt;
    else if (*common != wt)
      return {WeightResult::Mixed, {}};
  }
  return {WeightResult::Pure, *common};
}

PolyElement WeylElement::principal_symbol() const {
  PolyElement p(n_vars_);
  const auto deg = bernstein_degree();
  if (!deg) return p;
  for (const auto& [m, c] : terms_)
    if (m.degree() == *deg) p.add_term(m, c);
  return p;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  check_same_vars(a, b);
  const int n = a.n_vars();
  WeylElement out(n);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // x^a d^b . x^g d^e: contract d^b against x^g variable by variable:
      // d^b x^g = sum_k C(b,k) C(g,k) k! x^{g-k} d^{b-k}.
      MultiIndex kmax(n);
      for (int j = 0; j < n; ++j) kmax[j] = std::min(ma.beta[j], mb.alpha[j]);
      MultiIndex k(n, 0);
      for (;;) {
        Integer f = 1;
        for (int j = 0; j < n; ++j)
          f *= binom(ma.beta[j], k[j]) * binom(mb.alpha[j], k[j]) *
               factorial(k[j]);
        WeylMono m{MultiIndex(n), MultiIndex(n)};
        for (int j = 0; j < n; ++j) {
          m.alpha[j] = ma.alpha[j] + mb.alpha[j] - k[j];
          m.beta[j] = ma.beta[j] + mb.beta[j] - k[j];
        }
        out.add_term(m, ca * cb * Rational(f));
        int j = 0;
        for (; j < n; ++j) {
          if (k[j] < kmax[j]) {
            ++k[j];
            break;
          }
          k[j] = 0;
        }
        if (j == n) break;
      }
    }
  }
  return out;
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

namespace {

void render_exponents(std::ostream& os, const MultiIndex& m, const char* sym) {
  for (size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    os << ' ' << sym << (j + 1);
    if (m[j] > 1) os << '^' << m[j];
  }
}

template <typename Terms>
std::string render_terms(const Terms& terms, const char* beta_sym) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    render_exponents(os, m.alpha, "x");
    render_exponents(os, m.beta, beta_sym);
  }
  return os.str();
}

}  // namespace

std::string WeylElement::to_string() const { return render_terms(terms_, "d"); }

PolyElement PolyElement::monomial(int n_vars, const WeylMono& m,
                                  const Rational& c) {
  PolyElement e(n_vars);
  e.add_term(m, c);
  return e;
}

void PolyElement::add_term(const WeylMono& m, const Rational& c) {
  if (static_cast<int>(m.alpha.size()) != n_vars_ ||
      static_cast<int>(m.beta.size()) != n_vars_)
    throw VariableCountMismatch("multi-index length != n_vars");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyElement PolyElement::operator+(const PolyElement& o) const {
  PolyElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PolyElement PolyElement::operator-(const PolyElement& o) const {
  PolyElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PolyElement PolyElement::operator*(const PolyElement& o) const {
  PolyElement r(n_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      WeylMono m{MultiIndex(n_vars_), MultiIndex(n_vars_)};
      for (int j = 0; j < n_vars_; ++j) {
        m.alpha[j] = ma.alpha[j] + mb.alpha[j];
        m.beta[j] = ma.beta[j] + mb.beta[j];
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

PolyElement PolyElement::operator*(const Rational& c) const {
  PolyElement r(n_vars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

std::string PolyElement::to_string() const {
  return render_terms(terms_, "xi");
}

WeylElement parse_weyl(const std::string& text, int n_vars) {
  WeylElement out(n_vars);
  if (text == "0") return out;
  std::istringstream is(text);
  std::string tok;
  Rational coef;
  WeylMono mono{MultiIndex(n_vars, 0), MultiIndex(n_vars, 0)};
  bool have = false;
  auto flush = [&] {
    if (have) out.add_term(mono, coef);
    mono = {MultiIndex(n_vars, 0), MultiIndex(n_vars, 0)};
    have = false;
  };
  while (is >> tok) {
    if (tok == "+") {
      flush();
      continue;
    }
    if (tok[0] == 'x' || tok[0] == 'd') {
      MultiIndex& leg = tok[0] == 'x' ? mono.alpha : mono.beta;
      const auto caret = tok.find('^');
      const int var = std::stoi(tok.substr(1, caret - 1)) - 1;
      const int exp =
          caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      if (var < 0 || var >= n_vars)
        throw Error("parse_weyl: variable index out of range: " + tok);
      leg[var] += exp;
    } else {
      flush();
      coef = parse_rational(tok);
      have = true;
    }
  }
  flush();
  return out;
}

}  // namespace qhr
