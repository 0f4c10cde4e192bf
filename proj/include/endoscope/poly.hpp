#pragma once

#include <map>
#include <string>
#include <vector>

#include "endoscope/algebra.hpp"
#include "endoscope/field.hpp"

namespace endoscope {

/// Sparse polynomial over F_p in variables a_1..a_n (n <= 64, degrees <= 15),
/// reusing the packed exponent vector of Monomial.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(Scalar c);
  static Polynomial variable(std::size_t i);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree of the first term (the polynomials here are homogeneous).
  unsigned degree() const;
  bool involves(std::size_t var) const;

  void add_term(const Monomial& m, Scalar c, const Field& f);
  /// this += c * a_var * other
  void add_shifted(const Polynomial& other, Scalar c, std::size_t var, const Field& f);
  Polynomial times(const Polynomial& other, const Field& f) const;

  /// Leading term in lexicographic order with a_1 > a_2 > ...
  std::pair<Monomial, Scalar> leading() const;
  /// Divide by the leading coefficient.
  Polynomial monic(const Field& f) const;
  /// Substitute zero for every variable outside `keep`.
  Polynomial restrict_to(const std::vector<std::size_t>& keep) const;

  /// Value at a point over any field of the same characteristic.
  Scalar evaluate(const Field& f, const std::vector<Scalar>& point) const;

  /// "ab+c^2" with single-letter names when n <= 26, else a1*a2.
  std::string to_string(std::size_t n) const;

  bool operator==(const Polynomial&) const = default;
  /// Canonical order: by leading monomial, then term by term.
  bool operator<(const Polynomial& rhs) const;

 private:
  std::map<Monomial, Scalar> terms_;
};

/// Lex comparison with a_1 most significant: true if x is the larger monomial.
bool lex_greater(const Monomial& x, const Monomial& y);
std::string variable_name(std::size_t i, std::size_t n);

/// A polynomial compiled for repeated evaluation.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& p);
  Scalar evaluate(const Field& f, const std::vector<Scalar>& point) const;

 private:
  struct Term {
    Scalar coef;
    std::vector<std::pair<std::size_t, unsigned>> factors;
  };
  std::vector<Term> terms_;
};

}  // namespace endoscope
