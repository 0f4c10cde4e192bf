#include "endoscope/sl2weyl.hpp"

#include <map>
#include <mutex>

#include "endoscope/error.hpp"
#include "endoscope/parallel.hpp"

namespace endoscope {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string to_decimal(unsigned __int128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return s;
}

}  // namespace

AlgebraPtr divided_power_algebra(std::uint32_t p, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, r}];
  if (!slot) slot = build_divided_power(p, r).presentation();
  return slot;
}

WeylModule weyl_module(std::uint32_t p, unsigned r, std::uint64_t lambda) {
  const auto alg = divided_power_algebra(p, r);
  if ((lambda + 1) * ipow(p, r) > (1u << 16)) throw Error(ErrorKind::CapExceeded, "Weyl module too large");
  WeylModule v{p, r, lambda, {}};
  std::vector<Matrix> acts;
  for (unsigned i = 0; i < r; ++i) acts.push_back(weyl_gamma_action(v, ipow(p, i)));
  v.module = make_module(alg, std::move(acts));
  return v;
}

Matrix weyl_gamma_action(const WeylModule& v, std::uint64_t j) {
  const std::size_t d = v.lambda + 1;
  Matrix m(divided_power_algebra(v.p, v.r)->field(), d, d);
  for (std::uint64_t t = 0; t + j <= v.lambda; ++t) m(t + j, t) = binomial_mod(t + j, j, v.p);
  return m;
}

Matrix symmetric_tensor_action(std::uint32_t p, std::uint64_t lambda, std::uint64_t j) {
  if (lambda > 12) throw Error(ErrorKind::CapExceeded, "tensor model limited to lambda <= 12");
  const auto f = Field::make(p);
  const std::size_t d = lambda + 1;
  // Tensors are bitmasks over lambda positions, bit set = x. w_t is the sum of
  // all masks with t bits. u(s) sends each y to y + s x, so the s^j part of
  // u(s) applied to a mask adds x at j of its y positions.
  Matrix out(f, d, d);
  const std::uint64_t full = (std::uint64_t(1) << lambda) - 1;
  for (std::uint64_t t = 0; t < d; ++t) {
    std::vector<std::uint64_t> image(std::uint64_t(1) << lambda, 0);
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != t) continue;
      const std::uint64_t ys = full & ~mask;
      for (std::uint64_t sub = ys;; sub = (sub - 1) & ys) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(sub)) == j) ++image[mask | sub];
        if (sub == 0) break;
      }
    }
    // the image is symmetric; read the coefficient of w_{t+j} off any one mask
    if (t + j < d) {
      const std::uint64_t probe = (std::uint64_t(1) << (t + j)) - 1;
      out(t + j, t) = static_cast<Scalar>(image[probe] % p);
    }
  }
  return out;
}

Decomposition weyl_restriction_decomposition(std::uint32_t p, unsigned r, std::uint64_t n) {
  const std::uint64_t q = ipow(p, r);
  const auto v = weyl_module(p, r, n * q);
  const auto s = strip_projectives(v.module);
  Decomposition d;
  d.free_rank = s.free_rank;
  d.residual_dim = s.residual.dim();
  d.residual_trivial = d.residual_dim == 1;  // local algebra: the only 1-dim module is k
  for (std::uint64_t i = 1; i <= n; ++i)
    if (binomial_mod((i - 1) * q + q - 1, q - 1, p) == 0) d.binomials_nonzero = false;
  return d;
}

bool expected_weyl_verdict(std::uint32_t p, unsigned r, std::uint64_t lambda) {
  const std::uint64_t q = ipow(p, r);
  return lambda % q == 0 || (lambda + 2) % q == 0;
}

std::vector<WeylScanRow> endotrivial_weyl_scan(std::uint32_t p, unsigned r, std::uint64_t lambda_max,
                                               unsigned threads) {
  std::vector<WeylScanRow> rows(lambda_max + 1);
  parallel_chunks(rows.size(), rows.size(), threads, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t lambda = b; lambda < e; ++lambda) {
      const auto v = weyl_module(p, r, lambda);
      const auto cert = is_endotrivial(v.module);
      auto& row = rows[lambda];
      row.lambda = lambda;
      row.dim = v.module.dim();
      row.free_rank = cert.free_rank;
      row.residual_dim = cert.residual_dim;
      row.verdict = cert.verdict;
      row.expected = expected_weyl_verdict(p, r, lambda);
    }
  });
  return rows;
}

ScreenResult dimension_screen(const RootSystem& rs, std::uint32_t p, unsigned r, const std::vector<long long>& lambda) {
  ScreenResult s;
  s.lambda = lambda;
  s.dim = weyl_dimension(rs, lambda);
  const std::size_t exponent = r * rs.size();
  unsigned __int128 modulus = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (modulus > (~static_cast<unsigned __int128>(0)) / p) throw Error(ErrorKind::CapExceeded, "screen modulus too large");
    modulus *= p;
  }
  const unsigned __int128 dim = static_cast<unsigned __int128>(s.dim);
  const unsigned __int128 res = dim % modulus;
  s.modulus = to_decimal(modulus);
  s.residue = to_decimal(res);
  s.passed = res == 1 % modulus || res == modulus - 1;
  if (p == 2)
    s.note = "at p=2, dim^2 = 1 mod 2^n does not force dim = +-1 mod 2^n; a failed screen is not an obstruction";
  return s;
}

std::vector<RangeRow> simple_tilting_range_check(std::uint32_t p, unsigned r) {
  std::vector<RangeRow> rows;
  const auto a1 = build_root_system("A", 1);
  for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
    RangeRow row;
    row.lambda = lambda;
    row.endotrivial = is_endotrivial(weyl_module(p, r, lambda).module).verdict;
    row.screen_passed = dimension_screen(a1, p, r, {static_cast<long long>(lambda)}).passed;
    rows.push_back(row);
  }
  return rows;
}

StrippedModule self_inverse_check(std::uint32_t p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  const auto v = weyl_module(p, 1, p - 2);
  return strip_projectives(tensor(v.module, v.module));
}

}  // namespace endoscope
