#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endoscope/algebra.hpp"
#include "endoscope/matrix.hpp"
#include "endoscope/rootdata.hpp"

namespace endoscope {

/// A finite-dimensional module: one action matrix per algebra generator, over
/// F_p or an extension F_{p^e} (algebra constants embed as prime-field values).
class ModuleRep {
 public:
  ModuleRep() = default;
  /// Unchecked; use make_module for validated construction.
  ModuleRep(AlgebraPtr algebra, FieldPtr field, std::size_t dim, std::vector<Matrix> actions);

  const AlgebraPtr& algebra() const { return algebra_; }
  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& actions() const { return actions_; }
  const Matrix& action(std::size_t i) const { return actions_.at(i); }

  /// rho(x) for an algebra element.
  Matrix action_of(const AlgebraElement& x) const;
  /// rho(u_1)^{p-1} ... rho(u_n)^{p-1}
  Matrix socle_action() const;
  /// Same module read over an extension field.
  ModuleRep embed(FieldPtr extension) const;

 private:
  AlgebraPtr algebra_;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> actions_;
};

/// Throws RelationViolation naming the first failing relation.
void validate_relations(const ModuleRep& m);
ModuleRep make_module(AlgebraPtr algebra, std::vector<Matrix> actions);
/// Zero-dimensional module over F_p (or the given field).
ModuleRep zero_module(AlgebraPtr algebra, FieldPtr field = nullptr);
ModuleRep trivial_module(AlgebraPtr algebra, std::size_t copies = 1, FieldPtr field = nullptr);
ModuleRep regular_module(AlgebraPtr algebra);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts);

/// Coproduct from the algebra: primitive u -> u(x)1 + 1(x)u, or
/// gamma_t -> sum_j gamma_j (x) gamma_{t-j} for divided powers.
ModuleRep tensor(const ModuleRep& a, const ModuleRep& b);
/// rho*(x) = rho(S x)^T with S = -1 on primitives, (-1)^t on gamma_t.
ModuleRep dual(const ModuleRep& m);
/// Pullback along the algebra map sending source generator i to images[i].
ModuleRep restrict_along(const ModuleRep& m, AlgebraPtr source, const std::vector<AlgebraElement>& images);
/// Pullback along explicit matrices (e.g. points over an extension field).
ModuleRep restrict_to_matrices(AlgebraPtr source, std::vector<Matrix> images);

/// The subspace with the given column basis, if it is invariant.
ModuleRep submodule(const ModuleRep& m, const Matrix& basis);
/// Common kernel of the listed generators, with the induced action of the rest.
ModuleRep invariants(const ModuleRep& m, const std::vector<std::size_t>& generators);

/// Number of free summands: the rank of the socle generator's action.
std::size_t free_rank(const ModuleRep& m);

struct StrippedModule {
  std::size_t free_rank = 0;
  ModuleRep residual;
};

/// M = A^r (+) N with N projective-free, split explicitly.
StrippedModule strip_projectives(const ModuleRep& m);

/// Kernel of a minimal projective cover, with projective summands removed.
ModuleRep syzygy(const ModuleRep& m);
ModuleRep cosyzygy(const ModuleRep& m);
/// Omega^k for k >= 0, Omega^{-k} via cosyzygies for k < 0.
ModuleRep syzygy_power(const ModuleRep& m, int k);

struct IsoResult {
  bool isomorphic = false;
  std::optional<Matrix> witness;  // intertwiner N <- M, when found over the module's field
  std::string method;
};

/// Basis of Hom_A(M, N) as dim N x dim M matrices.
std::vector<Matrix> intertwiners(const ModuleRep& m, const ModuleRep& n);
/// Exact when the intertwiner space is small enough to enumerate; otherwise
/// random search over the field and small extensions, then Inconclusive.
IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0x5eed);

/// Strictly upper triangular action of u(n^+) of type A_l on k^{l+1}.
ModuleRep natural_rep_typeA(const RootSystem& rs, AlgebraPtr algebra);

}  // namespace endoscope
