#include <doctest.h>

#include <random>

#include "endoscope/error.hpp"
#include "endoscope/field.hpp"

using namespace endoscope;

TEST_CASE("primality and modulus choice") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  // x^2 + x + 1 over F_2, x^2 + 1 over F_3 (coefficients low to high)
  CHECK(least_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(least_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(least_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
  CHECK(Field::make(2, 2)->desc().modulus == least_irreducible(2, 2));
}

TEST_CASE("field axioms on random scalars") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
  std::mt19937 rng(7);
  for (auto [p, e] : cases) {
    auto f = Field::make(p, e);
    CAPTURE(f->name());
    const std::uint32_t q = f->size();
    for (int t = 0; t < 300; ++t) {
      const Scalar a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->mul(a, b) == f->mul(b, a));
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
    }
    // multiplicative group has order q-1
    for (Scalar a = 1; a < q; ++a) CHECK(f->pow(a, q - 1) == 1);
  }
}

TEST_CASE("prime subfield embeds with the same encoding") {
  auto f9 = Field::make(3, 2);
  auto f3 = Field::make(3);
  for (Scalar a = 0; a < 3; ++a)
    for (Scalar b = 0; b < 3; ++b) {
      CHECK(f9->add(a, b) == f3->add(a, b));
      CHECK(f9->mul(a, b) == f3->mul(a, b));
    }
  CHECK(f9->from_int(-1) == 2);
}

TEST_CASE("invalid fields") {
  CHECK_THROWS_AS(Field::make(4), Error);
  CHECK_THROWS_AS(Field::make(2)->inv(0), Error);
}
