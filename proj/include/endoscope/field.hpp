#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace endoscope {

using Scalar = std::uint32_t;

/// Characteristic, degree and defining polynomial of a finite field F_{p^e}.
/// The modulus is monic, coefficients stored low to high (size e+1).
struct FieldDesc {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;
};

bool is_prime(std::uint64_t n);

/// Lexicographically least monic irreducible polynomial of degree e over F_p,
/// where candidates are ordered by the integer sum_i c_i p^i of their lower
/// coefficients.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e);

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Finite field F_{p^e}. Elements are encoded as integers 0..q-1 whose base-p
/// digits are the coefficients of the residue polynomial, so the prime
/// subfield is {0..p-1} with its usual encoding in every extension.
class Field {
 public:
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e = 1);

  std::uint32_t p() const { return desc_.p; }
  std::uint32_t e() const { return desc_.e; }
  std::uint32_t size() const { return q_; }
  const FieldDesc& desc() const { return desc_; }
  bool prime() const { return desc_.e == 1; }

  Scalar add(Scalar a, Scalar b) const {
    if (desc_.e == 1) {
      Scalar s = a + b;
      return s >= desc_.p ? s - desc_.p : s;
    }
    return add_[a * q_ + b];
  }
  Scalar neg(Scalar a) const {
    if (desc_.e == 1) return a == 0 ? 0 : desc_.p - a;
    return neg_[a];
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (desc_.e == 1) return static_cast<Scalar>((std::uint64_t(a) * b) % desc_.p);
    return mul_[a * q_ + b];
  }
  /// Throws InvalidArgument on zero.
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t k) const;
  Scalar from_int(std::int64_t v) const;

  std::string name() const;

 private:
  Field(std::uint32_t p, std::uint32_t e);

  FieldDesc desc_;
  std::uint32_t q_;
  std::vector<Scalar> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace endoscope
