#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endoscope/modrep.hpp"

namespace endoscope {

/// Tensor-socle certificate: M (x) M* = k (+) A^r exactly when dim^2 = 1 + r p^n.
struct EndotrivialCertificate {
  std::size_t module_dim = 0;
  std::uint64_t algebra_dim = 0;
  std::size_t free_rank = 0;
  std::size_t residual_dim = 0;
  bool verdict = false;
  /// d^2 = 1 mod p^n (necessary).
  bool congruence = false;
};

EndotrivialCertificate is_endotrivial(const ModuleRep& m);

/// v = sum a_i u_i over F_{p^e}.
struct PPoint {
  FieldPtr field;
  std::vector<Scalar> coords;

  std::string to_string() const;
};

/// rho(v) over the point's field (the module is embedded if needed).
Matrix point_action(const ModuleRep& m, const PPoint& pt);
JordanType jordan_type_at_point(const ModuleRep& m, const PPoint& pt);

/// Points of V(A) over F_{p^e}, in canonical order.
std::vector<PPoint> p_points(const PbwAlgebra& a, unsigned e, unsigned threads = 1);

/// [1] + m[p] or [p-1] + m[p]
bool is_endotrivial_type(const JordanType& t, std::uint32_t p);

struct JordanScan {
  bool passed = true;
  std::size_t points_checked = 0;
  std::optional<PPoint> witness;
  std::optional<JordanType> witness_type;
};

/// Necessary condition only: every enumerated point has an endotrivial Jordan type.
JordanScan constant_jordan_scan(const ModuleRep& m, unsigned e, unsigned threads = 1);

/// The rank-2 elementary abelian algebra E(p,2) used for E_a = <v_a, u_n>.
AlgebraPtr local_algebra(std::uint32_t p);
/// M restricted to E_a.
ModuleRep restrict_to_local(const ModuleRep& m, const PPoint& pt);
/// m with M|E_a = Omega^m(k) + projective. Throws InvalidArgument if a is not
/// a valid point, NotEndotrivialLocally if the residual is no syzygy of k.
int local_syzygy_degree(const ModuleRep& m, const PPoint& pt);

struct RankProfileEntry {
  PPoint point;
  JordanType jordan;
  std::size_t w_rank = 0;
  std::optional<int> syzygy_degree;
};

struct RankProfile {
  std::vector<RankProfileEntry> entries;
  /// Every recorded w-rank equal.
  bool constant_rank() const;
};

/// Points of V(A) with some a_i != 0 for i < n; w_a = rho(v)^{p-1} rho(u_n)^{p-1}.
RankProfile rank_profile(const ModuleRep& m, unsigned e, bool with_degrees = false, unsigned threads = 1);

/// Which Omega^m(k) the projective-free part of M is, for |m| <= max_degree.
std::optional<int> identify_syzygy(const ModuleRep& m, int max_degree = 6);

enum class CensusMode { Exhaustive, Random };

struct CensusOptions {
  CensusMode mode = CensusMode::Exhaustive;
  /// Matrix tuples examined at most.
  std::uint64_t budget = std::uint64_t(1) << 18;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct CensusClass {
  ModuleRep representative;
  std::size_t hits = 0;
  std::optional<int> syzygy_degree;
};

struct CensusResult {
  std::size_t dimension = 0;
  std::uint64_t tuples_examined = 0;
  std::uint64_t tuples_total = 0;
  std::size_t modules_found = 0;
  std::size_t endotrivial_found = 0;
  /// Budget ran out before the search space was covered.
  bool partial = false;
  std::vector<CensusClass> classes;
};

/// Endotrivial modules of dimension d up to isomorphism. Exhaustive mode walks
/// all tuples of p-nilpotent d x d matrices in a fixed order; random mode draws
/// strictly upper triangular tuples conjugated by a random invertible matrix
/// (every module over a local algebra has such a basis).
CensusResult census(const AlgebraPtr& a, std::size_t d, const CensusOptions& opt = {});

}  // namespace endoscope
