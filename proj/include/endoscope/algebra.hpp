#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endoscope/field.hpp"
#include "endoscope/matrix.hpp"
#include "endoscope/rootdata.hpp"

namespace endoscope {

constexpr std::size_t kMaxGenerators = 64;

/// PBW monomial u_1^{e_1} ... u_n^{e_n}, exponents packed four bits each.
class Monomial {
 public:
  Monomial() = default;

  unsigned exponent(std::size_t i) const { return (words_[i >> 4] >> ((i & 15) * 4)) & 0xF; }
  void set_exponent(std::size_t i, unsigned e) {
    const unsigned shift = (i & 15) * 4;
    words_[i >> 4] = (words_[i >> 4] & ~(std::uint64_t(0xF) << shift)) | (std::uint64_t(e) << shift);
  }
  unsigned degree() const;
  /// Index of the last generator with nonzero exponent, or -1 for the unit.
  int last() const;
  bool is_one() const { return words_ == std::array<std::uint64_t, 4>{}; }

  static Monomial generator(std::size_t i) {
    Monomial m;
    m.set_exponent(i, 1);
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
  std::size_t hash() const;
  std::string to_string(std::size_t n) const;

 private:
  std::array<std::uint64_t, 4> words_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Linear combination of PBW monomials with coefficients in F_p.
struct AlgebraElement {
  std::map<Monomial, Scalar> terms;

  static AlgebraElement one() { return monomial(Monomial{}); }
  static AlgebraElement monomial(const Monomial& m, Scalar c = 1) {
    AlgebraElement a;
    if (c) a.terms[m] = c;
    return a;
  }
  static AlgebraElement generator(std::size_t i, Scalar c = 1) { return monomial(Monomial::generator(i), c); }

  bool is_zero() const { return terms.empty(); }
  Scalar coefficient(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
  }
  void add_term(const Monomial& m, Scalar c, const Field& f);
  bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b, const Field& f);
AlgebraElement scale(const AlgebraElement& a, Scalar c, const Field& f);
AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b, const Field& f);

enum class Coalgebra {
  Primitive,     // generators primitive, antipode -1
  DividedPower,  // Dist(U_r) of the additive group: Delta gamma_t = sum gamma_j (x) gamma_{t-j}
};

struct BracketTerm {
  std::size_t index;
  Scalar coef;
  bool operator==(const BracketTerm&) const = default;
};

using BracketTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>>;

/// Restricted enveloping-type algebra with generators u_1..u_n, brackets
/// [u_i,u_j] (i<j) landing in the span of later generators, all u_i^p = 0,
/// and the PBW basis of the p^n monomials with exponents below p.
class PbwAlgebra {
 public:
  PbwAlgebra(std::uint32_t p, std::size_t n, BracketTable brackets, Coalgebra coalgebra, std::string id,
             std::vector<std::string> labels = {});

  PbwAlgebra(const PbwAlgebra&) = delete;
  PbwAlgebra& operator=(const PbwAlgebra&) = delete;

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }
  Coalgebra coalgebra() const { return coalgebra_; }
  const std::string& id() const { return id_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const FieldPtr& field() const { return field_; }
  const BracketTable& brackets() const { return brackets_; }
  /// p^n, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> dimension() const;

  /// [u_i, u_j] as a combination of generators (any i, j).
  std::vector<BracketTerm> bracket(std::size_t i, std::size_t j) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement power(const AlgebraElement& a, unsigned k) const;
  AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) const;
  /// m * u_j straightened onto the PBW basis (memoised).
  const std::vector<std::pair<Monomial, Scalar>>& times_generator(const Monomial& m, std::size_t j) const;
  /// m1 * m2 straightened onto the PBW basis (memoised).
  const std::vector<std::pair<Monomial, Scalar>>& multiply_monomials(const Monomial& a, const Monomial& b) const;

  /// u_1^{p-1} ... u_n^{p-1}
  Monomial socle_monomial() const;

  std::size_t basis_index(const Monomial& m) const;
  Monomial basis_monomial(std::size_t index) const;
  /// Left multiplication by each generator on the PBW basis (dimension capped at 2^12).
  const std::vector<Matrix>& regular_matrices() const;

  std::string element_to_string(const AlgebraElement& a) const;

 private:
  struct MemoKey {
    Monomial m;
    Monomial other;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const { return k.m.hash() * 1000003u ^ k.other.hash(); }
  };
  using Terms = std::vector<std::pair<Monomial, Scalar>>;

  Terms compute_times_generator(const Monomial& m, std::size_t j) const;
  Terms compute_monomial_product(const Monomial& a, const Monomial& b) const;

  std::uint32_t p_;
  std::size_t n_;
  BracketTable brackets_;
  Coalgebra coalgebra_;
  std::string id_;
  std::vector<std::string> labels_;
  FieldPtr field_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<MemoKey, Terms, MemoKeyHash> gen_memo_;
  mutable std::unordered_map<MemoKey, Terms, MemoKeyHash> mono_memo_;
  mutable std::once_flag regular_once_;
  mutable std::vector<Matrix> regular_;
};

using AlgebraPtr = std::shared_ptr<const PbwAlgebra>;

/// u(n^+) of a root system over F_p: one generator per positive root in
/// ascending height, brackets N_{a,b} mod p. Throws RestrictednessViolation if
/// some (ad u_i)^p is nonzero.
AlgebraPtr build_restricted_enveloping(const RootSystem& rs, std::uint32_t p);
/// Direct product of several root systems (semisimple, not simple); generators
/// of all factors merged by height.
AlgebraPtr build_restricted_enveloping(const std::vector<RootSystem>& factors, std::uint32_t p);
/// k[t_1..t_r]/(t_i^p) with primitive generators.
AlgebraPtr build_elementary_abelian(std::uint32_t p, std::size_t rank);
/// Same algebra with the generator order reversed (for negative checks).
AlgebraPtr reverse_generators(const PbwAlgebra& a);

/// Binomial coefficient C(n, k) mod p by Lucas's theorem.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Divided power algebra Dist(U_r): basis gamma_0..gamma_{p^r-1},
/// gamma_i gamma_j = C(i+j, i) gamma_{i+j} (zero past the top).
class DividedPowerAlgebra {
 public:
  DividedPowerAlgebra(std::uint32_t p, unsigned r);

  std::uint32_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::size_t dimension() const { return dim_; }
  /// gamma_i * gamma_j as (index, coefficient); coefficient 0 means zero.
  std::pair<std::size_t, Scalar> multiply(std::size_t i, std::size_t j) const;
  /// The same algebra presented on generators gamma_1, gamma_p, ..., gamma_{p^{r-1}}.
  const AlgebraPtr& presentation() const { return presentation_; }
  /// gamma_a in the presentation's PBW basis: prod_i gamma_{p^i}^{a_i} / a_i!.
  AlgebraElement gamma(std::size_t a) const;

 private:
  std::uint32_t p_;
  unsigned r_;
  std::size_t dim_;
  AlgebraPtr presentation_;
};

DividedPowerAlgebra build_divided_power(std::uint32_t p, unsigned r);

/// gamma_t in a divided-power presentation (generators gamma_{p^i}).
AlgebraElement divided_power_element(const PbwAlgebra& a, std::uint64_t t);

struct ClauseResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

enum class LiftDisposition { Lifts, UnitMultiple, Neither };
const char* to_string(LiftDisposition d);

struct LiftCheck {
  AlgebraElement x;
  LiftDisposition disposition = LiftDisposition::Neither;
  AlgebraElement power;        // x^p
  AlgebraElement unit_factor;  // y with x^p = y u_n, for UnitMultiple
};

struct HypothesisReport {
  std::string algebra_id;
  std::vector<ClauseResult> clauses;
  std::vector<LiftCheck> lifts;
  bool passed() const;
  const ClauseResult* clause(const std::string& name) const;
};

/// Generator nilpotency, centrality modulo later generators, centrality of
/// u_n, dimension p^n, annihilation of u_s^{p-1}..u_n^{p-1} by u_j (j >= s)
/// for every s, and restrictedness.
HypothesisReport check_hypothesis1(const PbwAlgebra& a);

/// Classifies a coset representative x: x^p = 0, or x^p = y u_n with y a unit.
LiftCheck check_hypothesis3_lift(const PbwAlgebra& a, const AlgebraElement& x);
/// All nonzero F_p-combinations of u_1..u_{n-1} whose p-th power lies in A u_n.
std::vector<LiftCheck> hypothesis3_sweep(const PbwAlgebra& a);

}  // namespace endoscope
