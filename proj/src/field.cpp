#include "endoscope/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "endoscope/error.hpp"

namespace endoscope {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotNilpotentOfOrderP: return "NotNilpotentOfOrderP";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::RestrictednessViolation: return "RestrictednessViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::SplittingFailure: return "SplittingFailure";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::NotEndotrivialLocally: return "NotEndotrivialLocally";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownType: return "UnknownType";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g over F_p (g nonzero).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(f.back()) * lead_inv % p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + std::uint64_t(p - c) * g[i]) % p);
    trim(f);
  }
  return f;
}

Poly monic_from_code(std::uint32_t p, std::uint32_t deg, std::uint64_t code) {
  Poly f(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[deg] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(p, d, code), p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return {0, 1};
  const std::uint64_t count = ipow(p, e);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(p, e, code);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p) || p >= (1u << 16))
    throw Error(ErrorKind::InvalidArgument, "characteristic must be a prime below 65536");
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t q = ipow(p, e);
  if (e > 1 && q > 4096)
    throw Error(ErrorKind::CapExceeded, "extension fields are limited to 4096 elements");
  desc_.p = p;
  desc_.e = e;
  desc_.modulus = least_irreducible(p, e);
  if (!is_irreducible(p, desc_.modulus))
    throw Error(ErrorKind::InvalidArgument, "modulus is reducible");
  q_ = static_cast<std::uint32_t>(q);
  if (e == 1) {
    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = inv_mod(a, p);
    return;
  }
  auto digits = [&](std::uint32_t a) {
    Poly d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto encode = [&](const Poly& d) {
    std::uint32_t a = 0;
    for (std::uint32_t i = e; i-- > 0;) a = a * p + (i < d.size() ? d[i] : 0);
    return a;
  };
  add_.assign(std::size_t(q_) * q_, 0);
  mul_.assign(std::size_t(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly da = digits(a);
    Poly dn(e);
    for (std::uint32_t i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = encode(dn);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly db = digits(b);
      Poly s(e), prod(2 * e, 0);
      for (std::uint32_t i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = encode(s);
      for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
      mul_[a * q_ + b] = encode(poly_mod(prod, desc_.modulus, p));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, e}];
  if (!slot) slot = std::shared_ptr<const Field>(new Field(p, e));
  return slot;
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return inv_[a];
}

Scalar Field::pow(Scalar a, std::uint64_t k) const {
  Scalar r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Scalar Field::from_int(std::int64_t v) const {
  const std::int64_t p = desc_.p;
  return static_cast<Scalar>(((v % p) + p) % p);
}

std::string Field::name() const {
  if (desc_.e == 1) return "F" + std::to_string(desc_.p);
  return "F" + std::to_string(desc_.p) + "^" + std::to_string(desc_.e);
}

}  // namespace endoscope
