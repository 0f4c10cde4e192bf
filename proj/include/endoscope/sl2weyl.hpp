#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "endoscope/endotest.hpp"
#include "endoscope/modrep.hpp"
#include "endoscope/rootdata.hpp"

namespace endoscope {

/// Dist(U_r) for the additive group, presented on gamma_1, gamma_p, ...; shared per (p, r).
AlgebraPtr divided_power_algebra(std::uint32_t p, unsigned r);

/// V(lambda) for SL_2 restricted to U_r: basis w_0..w_lambda with
/// gamma_j w_t = C(t+j, j) w_{t+j}.
struct WeylModule {
  std::uint32_t p = 2;
  unsigned r = 1;
  std::uint64_t lambda = 0;
  ModuleRep module;
};

WeylModule weyl_module(std::uint32_t p, unsigned r, std::uint64_t lambda);
/// rho(gamma_j) from the closed form, for any j (zero when j >= p^r is not asked for).
Matrix weyl_gamma_action(const WeylModule& v, std::uint64_t j);
/// rho(gamma_j) on the symmetric tensors of W^{(x) lambda}, W = <x, y>, with
/// u(s): y -> y + s x; the coefficient of s^j, computed by expanding tensors.
Matrix symmetric_tensor_action(std::uint32_t p, std::uint64_t lambda, std::uint64_t j);

struct Decomposition {
  std::size_t free_rank = 0;
  std::size_t residual_dim = 0;
  bool residual_trivial = false;
  /// C((i-1)p^r + p^r - 1, p^r - 1) != 0 mod p for 1 <= i <= n.
  bool binomials_nonzero = true;
};

/// strip_projectives(V(n p^r)).
Decomposition weyl_restriction_decomposition(std::uint32_t p, unsigned r, std::uint64_t n);

struct WeylScanRow {
  std::uint64_t lambda = 0;
  std::size_t dim = 0;
  std::size_t free_rank = 0;
  std::size_t residual_dim = 0;
  bool verdict = false;
  /// lambda = 0 or -2 mod p^r
  bool expected = false;
};

std::vector<WeylScanRow> endotrivial_weyl_scan(std::uint32_t p, unsigned r, std::uint64_t lambda_max,
                                               unsigned threads = 1);
bool expected_weyl_verdict(std::uint32_t p, unsigned r, std::uint64_t lambda);

struct ScreenResult {
  std::vector<long long> lambda;
  long long dim = 0;
  /// p^{r |Phi+|} as a decimal string (may exceed 64 bits).
  std::string modulus;
  /// dim mod modulus, decimal
  std::string residue;
  bool passed = false;
  std::string note;
};

/// dim V(lambda) = +-1 mod p^{r |Phi+|}; a necessary condition for odd p only.
ScreenResult dimension_screen(const RootSystem& rs, std::uint32_t p, unsigned r, const std::vector<long long>& lambda);

struct RangeRow {
  std::uint64_t lambda = 0;
  bool endotrivial = false;
  bool screen_passed = false;
};

/// lambda = 0..p-1, where V = L = T; certificate on V(lambda)|U_r.
std::vector<RangeRow> simple_tilting_range_check(std::uint32_t p, unsigned r);

/// V(p-2) (x) V(p-2) over U_1 stripped: the residual, expected to be k.
StrippedModule self_inverse_check(std::uint32_t p);

}  // namespace endoscope
