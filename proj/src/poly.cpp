#include "endoscope/poly.hpp"

#include <algorithm>

#include "endoscope/error.hpp"

namespace endoscope {

bool lex_greater(const Monomial& x, const Monomial& y) {
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    const unsigned a = x.exponent(i), b = y.exponent(i);
    if (a != b) return a > b;
  }
  return false;
}

std::string variable_name(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i + 1);
}

Polynomial Polynomial::constant(Scalar c) {
  Polynomial p;
  if (c) p.terms_[Monomial{}] = c;
  return p;
}

Polynomial Polynomial::variable(std::size_t i) {
  Polynomial p;
  p.terms_[Monomial::generator(i)] = 1;
  return p;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(var)) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, Scalar c, const Field& f) {
  if (!c) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (!it->second) terms_.erase(it);
  }
}

void Polynomial::add_shifted(const Polynomial& other, Scalar c, std::size_t var, const Field& f) {
  if (!c) return;
  for (const auto& [m, d] : other.terms_) {
    Monomial s = m;
    const unsigned e = s.exponent(var) + 1;
    if (e > 15) throw Error(ErrorKind::CapExceeded, "polynomial degree above 15 in one variable");
    s.set_exponent(var, e);
    add_term(s, f.mul(c, d), f);
  }
}

Polynomial Polynomial::times(const Polynomial& other, const Field& f) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : other.terms_) {
      Monomial s;
      for (std::size_t i = 0; i < kMaxGenerators; ++i) {
        const unsigned e = m.exponent(i) + n.exponent(i);
        if (e > 15) throw Error(ErrorKind::CapExceeded, "polynomial degree above 15 in one variable");
        if (e) s.set_exponent(i, e);
      }
      out.add_term(s, f.mul(c, d), f);
    }
  return out;
}

std::pair<Monomial, Scalar> Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (lex_greater(it->first, best->first)) best = it;
  return *best;
}

Polynomial Polynomial::monic(const Field& f) const {
  if (is_zero()) return *this;
  const Scalar inv = f.inv(leading().second);
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_[m] = f.mul(c, inv);
  return out;
}

Polynomial Polynomial::restrict_to(const std::vector<std::size_t>& keep) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    bool ok = true;
    for (std::size_t i = 0; i < kMaxGenerators && ok; ++i)
      if (m.exponent(i) && std::find(keep.begin(), keep.end(), i) == keep.end()) ok = false;
    if (ok) out.terms_[m] = c;
  }
  return out;
}

Scalar Polynomial::evaluate(const Field& f, const std::vector<Scalar>& point) const {
  return CompiledPolynomial(*this).evaluate(f, point);
}

std::string Polynomial::to_string(std::size_t n) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return lex_greater(x.first, y.first); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned e = m.exponent(i);
      if (!e) continue;
      if (n > 26 && !mono.empty()) mono += "*";
      mono += variable_name(i, n);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (c != 1 || mono.empty()) out += std::to_string(c) + (mono.empty() ? "" : (n > 26 ? "*" : ""));
    out += mono;
  }
  return out;
}

bool Polynomial::operator<(const Polynomial& rhs) const {
  auto sorted = [](const Polynomial& p) {
    std::vector<std::pair<Monomial, Scalar>> v(p.terms_.begin(), p.terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return lex_greater(x.first, y.first); });
    return v;
  };
  const auto a = sorted(*this), b = sorted(rhs);
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].first != b[i].first) return lex_greater(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    Term t{c, {}};
    for (std::size_t i = 0; i < kMaxGenerators; ++i)
      if (unsigned e = m.exponent(i)) t.factors.emplace_back(i, e);
    terms_.push_back(std::move(t));
  }
}

Scalar CompiledPolynomial::evaluate(const Field& f, const std::vector<Scalar>& point) const {
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (const auto& [i, e] : t.factors) {
      const Scalar x = point[i];
      if (!x) {
        v = 0;
        break;
      }
      for (unsigned k = 0; k < e; ++k) v = f.mul(v, x);
    }
    sum = f.add(sum, v);
  }
  return sum;
}

}  // namespace endoscope
