#include "endoscope/algebra.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "endoscope/error.hpp"

namespace endoscope {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto w : words_)
    for (; w; w >>= 4) d += w & 0xF;
  return d;
}

int Monomial::last() const {
  for (int k = 3; k >= 0; --k) {
    if (words_[k] == 0) continue;
    const int top_bit = 63 - std::countl_zero(words_[k]);
    return k * 16 + top_bit / 4;
  }
  return -1;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(std::size_t n) const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned e = exponent(i);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += "u" + std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

void AlgebraElement::add_term(const Monomial& m, Scalar c, const Field& f) {
  if (!c) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second = f.add(it->second, c);
  if (!it->second) terms.erase(it);
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b, const Field& f) {
  AlgebraElement r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c, f);
  return r;
}

AlgebraElement scale(const AlgebraElement& a, Scalar c, const Field& f) {
  AlgebraElement r;
  if (!c) return r;
  for (const auto& [m, x] : a.terms) r.terms[m] = f.mul(x, c);
  return r;
}

AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b, const Field& f) {
  AlgebraElement r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, f.neg(c), f);
  return r;
}

PbwAlgebra::PbwAlgebra(std::uint32_t p, std::size_t n, BracketTable brackets, Coalgebra coalgebra, std::string id,
                       std::vector<std::string> labels)
    : p_(p), n_(n), coalgebra_(coalgebra), id_(std::move(id)), labels_(std::move(labels)) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "characteristic must be prime");
  if (p > 13) throw Error(ErrorKind::CapExceeded, "PBW exponents are packed in 4 bits; p <= 13 required");
  if (n > kMaxGenerators)
    throw Error(ErrorKind::CapExceeded, "at most 64 generators supported, got " + std::to_string(n));
  field_ = Field::make(p);
  for (auto& [key, terms] : brackets) {
    const auto [i, j] = key;
    if (i >= j || j >= n) throw Error(ErrorKind::InvalidArgument, "bracket keys must satisfy i < j < n");
    std::map<std::size_t, Scalar> acc;
    for (const auto& t : terms) {
      if (t.index >= n) throw Error(ErrorKind::InvalidArgument, "bracket term index out of range");
      acc[t.index] = field_->add(acc[t.index], t.coef % p);
    }
    std::vector<BracketTerm> clean;
    for (auto [k, c] : acc)
      if (c) clean.push_back({k, c});
    if (!clean.empty()) brackets_[key] = std::move(clean);
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("u" + std::to_string(i + 1));
  if (labels_.size() != n) throw Error(ErrorKind::InvalidArgument, "label count differs from generator count");
}

std::optional<std::uint64_t> PbwAlgebra::dimension() const {
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (d > UINT64_MAX / p_) return std::nullopt;
    d *= p_;
  }
  return d;
}

std::vector<BracketTerm> PbwAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const bool flip = i > j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return {};
  auto out = it->second;
  if (flip)
    for (auto& t : out) t.coef = field_->neg(t.coef);
  return out;
}

PbwAlgebra::Terms PbwAlgebra::compute_times_generator(const Monomial& m, std::size_t j) const {
  const int k = m.last();
  if (k < static_cast<int>(j)) {
    Monomial r = m;
    r.set_exponent(j, 1);
    return {{r, 1}};
  }
  if (k == static_cast<int>(j)) {
    const unsigned e = m.exponent(j) + 1;
    if (e == p_) return {};  // u_j^p = 0
    Monomial r = m;
    r.set_exponent(j, e);
    return {{r, 1}};
  }
  // m = m0 u_k with k > j:  m0 u_k u_j = (m0 u_j) u_k + m0 [u_k, u_j]
  Monomial m0 = m;
  m0.set_exponent(k, m.exponent(k) - 1);
  std::map<Monomial, Scalar> acc;
  auto put = [&](const Monomial& t, Scalar c) {
    Scalar& slot = acc[t];
    slot = field_->add(slot, c);
  };
  const Terms left = times_generator(m0, j);
  for (const auto& [t, c] : left)
    for (const auto& [t2, c2] : times_generator(t, k)) put(t2, field_->mul(c, c2));
  for (const auto& bt : bracket(k, j))
    for (const auto& [t, c] : times_generator(m0, bt.index)) put(t, field_->mul(bt.coef, c));
  Terms out;
  for (auto& [t, c] : acc)
    if (c) out.emplace_back(t, c);
  return out;
}

const PbwAlgebra::Terms& PbwAlgebra::times_generator(const Monomial& m, std::size_t j) const {
  const MemoKey key{m, Monomial::generator(j)};
  {
    std::shared_lock lock(memo_mutex_);
    auto it = gen_memo_.find(key);
    if (it != gen_memo_.end()) return it->second;
  }
  Terms value = compute_times_generator(m, j);
  std::unique_lock lock(memo_mutex_);
  // a concurrent insert of the same key is identical; keep whichever landed first
  return gen_memo_.try_emplace(key, std::move(value)).first->second;
}

PbwAlgebra::Terms PbwAlgebra::compute_monomial_product(const Monomial& a, const Monomial& b) const {
  std::map<Monomial, Scalar> cur{{a, 1}};
  for (std::size_t g = 0; g < n_ && !cur.empty(); ++g) {
    for (unsigned e = b.exponent(g); e > 0 && !cur.empty(); --e) {
      std::map<Monomial, Scalar> next;
      for (const auto& [m, c] : cur)
        for (const auto& [t, c2] : times_generator(m, g)) {
          Scalar& slot = next[t];
          slot = field_->add(slot, field_->mul(c, c2));
        }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      cur = std::move(next);
    }
  }
  return {cur.begin(), cur.end()};
}

const PbwAlgebra::Terms& PbwAlgebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  const MemoKey key{a, b};
  {
    std::shared_lock lock(memo_mutex_);
    auto it = mono_memo_.find(key);
    if (it != mono_memo_.end()) return it->second;
  }
  Terms value = compute_monomial_product(a, b);
  std::unique_lock lock(memo_mutex_);
  return mono_memo_.try_emplace(key, std::move(value)).first->second;
}

AlgebraElement PbwAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      const Scalar c = field_->mul(ca, cb);
      for (const auto& [t, ct] : multiply_monomials(ma, mb)) r.add_term(t, field_->mul(c, ct), *field_);
    }
  return r;
}

AlgebraElement PbwAlgebra::power(const AlgebraElement& a, unsigned k) const {
  AlgebraElement r = AlgebraElement::one();
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = multiply(r, a);
  return r;
}

AlgebraElement PbwAlgebra::commutator(const AlgebraElement& a, const AlgebraElement& b) const {
  return subtract(multiply(a, b), multiply(b, a), *field_);
}

Monomial PbwAlgebra::socle_monomial() const {
  Monomial m;
  for (std::size_t i = 0; i < n_; ++i) m.set_exponent(i, p_ - 1);
  return m;
}

std::size_t PbwAlgebra::basis_index(const Monomial& m) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n_; ++i) idx = idx * p_ + m.exponent(i);
  return idx;
}

Monomial PbwAlgebra::basis_monomial(std::size_t index) const {
  Monomial m;
  for (std::size_t i = n_; i-- > 0;) {
    m.set_exponent(i, index % p_);
    index /= p_;
  }
  return m;
}

const std::vector<Matrix>& PbwAlgebra::regular_matrices() const {
  const auto dim = dimension();
  if (!dim || *dim > (1u << 12))
    throw Error(ErrorKind::CapExceeded, "regular representation of " + id_ + " exceeds 4096 dimensions");
  std::call_once(regular_once_, [&] {
    const std::size_t d = *dim;
    std::vector<Matrix> mats;
    for (std::size_t g = 0; g < n_; ++g) {
      Matrix m(field_, d, d);
      const Monomial u = Monomial::generator(g);
      for (std::size_t b = 0; b < d; ++b)
        for (const auto& [t, c] : multiply_monomials(u, basis_monomial(b))) m(basis_index(t), b) = c;
      mats.push_back(std::move(m));
    }
    regular_ = std::move(mats);
  });
  return regular_;
}

std::string PbwAlgebra::element_to_string(const AlgebraElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || m.is_one()) os << c;
    if (!m.is_one()) os << (c != 1 ? "*" : "") << m.to_string(n_);
  }
  return os.str();
}

namespace {

std::string root_label(const RootVector& r) {
  std::string s = "x";
  for (int c : r) s += std::to_string(c);
  return s;
}

// (ad u_i)^p on the generating space, as n x n matrices.
void require_restricted(const PbwAlgebra& a) {
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.bracket(i, j)) ad(t.index, j) = t.coef;
    if (!ad.pow(a.p()).is_zero())
      throw Error(ErrorKind::RestrictednessViolation,
                  a.id() + ": (ad " + a.labels()[i] + ")^" + std::to_string(a.p()) + " is nonzero");
  }
}

}  // namespace

AlgebraPtr build_restricted_enveloping(const std::vector<RootSystem>& factors, std::uint32_t p) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one root system");
  struct Gen {
    int height;
    std::size_t factor, root;
  };
  std::vector<Gen> gens;
  std::string id;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (std::size_t r = 0; r < factors[f].size(); ++r) gens.push_back({factors[f].height(r), f, r});
    id += (f ? "x" : "") + factors[f].label();
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) { return a.height < b.height; });
  if (gens.size() > kMaxGenerators)
    throw Error(ErrorKind::CapExceeded, id + " has " + std::to_string(gens.size()) + " positive roots; at most 64 supported");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    where[{gens[g].factor, gens[g].root}] = g;
    labels.push_back((factors.size() > 1 ? std::to_string(gens[g].factor + 1) + ":" : "") +
                     root_label(factors[gens[g].factor].root(gens[g].root)));
  }
  BracketTable table;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const RootSystem& rs = factors[f];
    const StructureConstants sc(rs);
    for (const auto& [key, value] : sc.table()) {
      const auto [i, j] = key;
      if (i >= j) continue;
      RootVector sum = rs.root(i);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += rs.root(j)[c];
      const std::size_t k = *rs.index_of(sum);
      const long long red = ((value % static_cast<long long>(p)) + p) % p;
      if (!red) continue;
      std::size_t gi = where[{f, i}], gj = where[{f, j}], gk = where[{f, k}];
      Scalar coef = static_cast<Scalar>(red);
      if (gi > gj) {
        std::swap(gi, gj);
        coef = static_cast<Scalar>((p - coef) % p);
      }
      table[{gi, gj}].push_back({gk, coef});
    }
  }
  auto alg = std::make_shared<PbwAlgebra>(p, gens.size(), std::move(table), Coalgebra::Primitive,
                                          "u(" + id + ",p=" + std::to_string(p) + ")", std::move(labels));
  require_restricted(*alg);
  return alg;
}

AlgebraPtr build_restricted_enveloping(const RootSystem& rs, std::uint32_t p) {
  return build_restricted_enveloping(std::vector<RootSystem>{rs}, p);
}

AlgebraPtr build_elementary_abelian(std::uint32_t p, std::size_t rank) {
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  return std::make_shared<PbwAlgebra>(p, rank, BracketTable{}, Coalgebra::Primitive,
                                      "E(p=" + std::to_string(p) + ",rank=" + std::to_string(rank) + ")");
}

AlgebraPtr reverse_generators(const PbwAlgebra& a) {
  const std::size_t n = a.n();
  auto flip = [n](std::size_t i) { return n - 1 - i; };
  BracketTable table;
  for (const auto& [key, terms] : a.brackets()) {
    std::size_t i = flip(key.first), j = flip(key.second);
    // [u_i,u_j] = T with i < j; after flipping, the smaller new index is flip(j)
    std::vector<BracketTerm> t;
    for (const auto& bt : terms) t.push_back({flip(bt.index), a.field()->neg(bt.coef)});
    table[{j, i}] = std::move(t);
  }
  std::vector<std::string> labels(a.labels().rbegin(), a.labels().rend());
  return std::make_shared<PbwAlgebra>(a.p(), n, std::move(table), a.coalgebra(), a.id() + "/reversed",
                                      std::move(labels));
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) with ni < p: no factor of p appears
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < ki; ++t) {
      num = num * ((ni - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

DividedPowerAlgebra::DividedPowerAlgebra(std::uint32_t p, unsigned r) : p_(p), r_(r) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "characteristic must be prime");
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  std::uint64_t d = 1;
  for (unsigned i = 0; i < r; ++i) {
    d *= p;
    if (d > (1u << 15)) throw Error(ErrorKind::CapExceeded, "p^r exceeds 2^15");
  }
  dim_ = d;
  std::vector<std::string> labels;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < r; ++i, pi *= p) labels.push_back("g" + std::to_string(pi));
  presentation_ = std::make_shared<PbwAlgebra>(p, r, BracketTable{}, Coalgebra::DividedPower,
                                               "Dist(U_" + std::to_string(r) + ",p=" + std::to_string(p) + ")",
                                               std::move(labels));
}

std::pair<std::size_t, Scalar> DividedPowerAlgebra::multiply(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::InvalidArgument, "divided power index out of range");
  if (i + j >= dim_) return {0, 0};
  return {i + j, binomial_mod(i + j, i, p_)};
}

AlgebraElement DividedPowerAlgebra::gamma(std::size_t a) const {
  if (a >= dim_) throw Error(ErrorKind::InvalidArgument, "divided power index out of range");
  return divided_power_element(*presentation_, a);
}

AlgebraElement divided_power_element(const PbwAlgebra& a, std::uint64_t t) {
  const Field& f = *a.field();
  const std::uint32_t p = a.p();
  Monomial m;
  Scalar coef = 1;
  for (std::size_t i = 0; i < a.n(); ++i) {
    const unsigned digit = t % p;
    t /= p;
    m.set_exponent(i, digit);
    for (unsigned k = 2; k <= digit; ++k) coef = f.mul(coef, f.inv(k));
  }
  if (t) return {};  // beyond the top: gamma_t = 0
  return AlgebraElement::monomial(m, coef);
}

DividedPowerAlgebra build_divided_power(std::uint32_t p, unsigned r) { return DividedPowerAlgebra(p, r); }

const char* to_string(LiftDisposition d) {
  switch (d) {
    case LiftDisposition::Lifts:
      return "a";
    case LiftDisposition::UnitMultiple:
      return "b";
    case LiftDisposition::Neither:
      return "neither";
  }
  return "?";
}

bool HypothesisReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

const ClauseResult* HypothesisReport::clause(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Some exponent at an index strictly above i, in every monomial.
bool in_later_ideal(const AlgebraElement& x, std::size_t i, std::size_t n) {
  for (const auto& [m, c] : x.terms) {
    bool hit = false;
    for (std::size_t l = i + 1; l < n && !hit; ++l) hit = m.exponent(l) > 0;
    if (!hit) return false;
  }
  return true;
}

std::vector<Monomial> sample_monomials(const PbwAlgebra& a) {
  std::vector<Monomial> out;
  const auto dim = a.dimension();
  if (dim && *dim <= 512) {
    for (std::size_t b = 0; b < *dim; ++b) out.push_back(a.basis_monomial(b));
    return out;
  }
  // deterministic sample of low-degree monomials
  std::mt19937_64 rng(0xC0FFEE);
  out.push_back(Monomial{});
  for (std::size_t i = 0; i < a.n(); ++i) out.push_back(Monomial::generator(i));
  for (int s = 0; s < 48; ++s) {
    Monomial m;
    const unsigned deg = 2 + rng() % 3;
    for (unsigned d = 0; d < deg; ++d) {
      const std::size_t g = rng() % a.n();
      m.set_exponent(g, std::min<unsigned>(m.exponent(g) + 1, a.p() - 1));
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace

HypothesisReport check_hypothesis1(const PbwAlgebra& a) {
  HypothesisReport rep;
  rep.algebra_id = a.id();
  const std::size_t n = a.n();
  const Field& f = *a.field();
  auto gen = [](std::size_t i) { return AlgebraElement::generator(i); };

  rep.clauses.push_back({"n_at_least_2", n >= 2, n >= 2 ? "" : "only one generator"});

  {
    ClauseResult c{"a_generator_p_power", true, ""};
    for (std::size_t i = 0; i < n && c.passed; ++i)
      if (!a.power(gen(i), a.p()).is_zero()) {
        c.passed = false;
        c.detail = a.labels()[i] + "^p != 0";
      }
    rep.clauses.push_back(c);
  }
  {
    ClauseResult c{"b_central_mod_later", true, ""};
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        if (i == j) continue;
        const auto com = a.commutator(gen(i), gen(j));
        if (!in_later_ideal(com, i, n)) {
          c.passed = false;
          c.detail = "[" + a.labels()[i] + "," + a.labels()[j] + "] = " + a.element_to_string(com) +
                     " not in the ideal of later generators";
        }
      }
    rep.clauses.push_back(c);
  }
  {
    ClauseResult c{"c_last_central", true, ""};
    for (std::size_t j = 0; j + 1 < n && c.passed; ++j)
      if (!a.commutator(gen(n - 1), gen(j)).is_zero()) {
        c.passed = false;
        c.detail = a.labels()[n - 1] + " does not commute with " + a.labels()[j];
      }
    rep.clauses.push_back(c);
  }
  {
    // The PBW monomials span a p^n-dimensional algebra exactly when the
    // rewriting is consistent: (m u_j) u_k - (m u_k) u_j = m [u_j, u_k].
    ClauseResult c{"d_dimension", true, ""};
    if (!a.dimension()) {
      c.passed = false;
      c.detail = "p^n overflows";
    }
    for (const auto& m : sample_monomials(a)) {
      if (!c.passed) break;
      const auto me = AlgebraElement::monomial(m);
      // and (m u_j) u_j ... u_j (p factors) = 0
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        auto x = me;
        for (unsigned t = 0; t < a.p() && !x.is_zero(); ++t) x = a.multiply(x, gen(j));
        if (!x.is_zero()) {
          c.passed = false;
          c.detail = "rewriting inconsistent at " + m.to_string(n) + " times " + a.labels()[j] + "^p";
        }
      }
      for (std::size_t j = 0; j < n && c.passed; ++j)
        for (std::size_t k = j + 1; k < n && c.passed; ++k) {
          const auto lhs = a.commutator(gen(j), gen(k));
          const auto left = subtract(a.multiply(a.multiply(me, gen(j)), gen(k)),
                                     a.multiply(a.multiply(me, gen(k)), gen(j)), f);
          if (left != a.multiply(me, lhs)) {
            c.passed = false;
            c.detail = "rewriting inconsistent at " + m.to_string(n) + " with " + a.labels()[j] + "," + a.labels()[k];
          }
        }
    }
    if (c.passed) c.detail = "dim = " + std::to_string(a.p()) + "^" + std::to_string(n);
    rep.clauses.push_back(c);
  }
  {
    ClauseResult c{"annihilation", true, ""};
    for (std::size_t s = 0; s < n && c.passed; ++s) {
      Monomial tail;
      for (std::size_t l = s; l < n; ++l) tail.set_exponent(l, a.p() - 1);
      const auto te = AlgebraElement::monomial(tail);
      for (std::size_t j = s; j < n && c.passed; ++j)
        if (!a.multiply(gen(j), te).is_zero()) {
          c.passed = false;
          c.detail = a.labels()[j] + " * " + tail.to_string(n) + " != 0";
        }
    }
    if (c.passed) {
      const auto soc = AlgebraElement::monomial(a.socle_monomial());
      for (std::size_t j = 0; j < n && c.passed; ++j)
        if (!a.multiply(soc, gen(j)).is_zero()) {
          c.passed = false;
          c.detail = "socle monomial times " + a.labels()[j] + " != 0";
        }
    }
    rep.clauses.push_back(c);
  }
  {
    ClauseResult c{"restricted", true, ""};
    try {
      require_restricted(a);
    } catch (const Error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    rep.clauses.push_back(c);
  }
  return rep;
}

LiftCheck check_hypothesis3_lift(const PbwAlgebra& a, const AlgebraElement& x) {
  LiftCheck out;
  out.x = x;
  out.power = a.power(x, a.p());
  if (out.power.is_zero()) {
    out.disposition = LiftDisposition::Lifts;
    return out;
  }
  const std::size_t last = a.n() - 1;
  AlgebraElement y;
  for (const auto& [m, c] : out.power.terms) {
    if (m.exponent(last) == 0) return out;  // not in A u_n
    Monomial q = m;
    q.set_exponent(last, m.exponent(last) - 1);
    y.terms[q] = c;  // u_n central, so m = q u_n
  }
  out.unit_factor = y;
  if (y.coefficient(Monomial{}) != 0) out.disposition = LiftDisposition::UnitMultiple;
  return out;
}

std::vector<LiftCheck> hypothesis3_sweep(const PbwAlgebra& a) {
  std::vector<LiftCheck> out;
  const std::size_t m = a.n() - 1;
  if (m == 0) return out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= a.p();
  std::vector<Scalar> coef(m);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = m; i-- > 0;) {
      coef[i] = c % a.p();
      c /= a.p();
    }
    // projective representative: first nonzero coordinate is 1
    auto first = std::find_if(coef.begin(), coef.end(), [](Scalar s) { return s != 0; });
    if (*first != 1) continue;
    AlgebraElement x;
    for (std::size_t i = 0; i < m; ++i)
      if (coef[i]) x.terms[Monomial::generator(i)] = coef[i];
    auto check = check_hypothesis3_lift(a, x);
    bool in_ideal = true;
    for (const auto& [mono, v] : check.power.terms) in_ideal = in_ideal && mono.exponent(a.n() - 1) > 0;
    if (in_ideal) out.push_back(std::move(check));
  }
  return out;
}

}  // namespace endoscope
