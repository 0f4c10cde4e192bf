#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endoscope/algebra.hpp"
#include "endoscope/poly.hpp"

namespace endoscope {

/// Coefficients of v^p on the PBW basis, v = sum a_i u_i with symbolic a_i.
struct NullconeVariety {
  std::string algebra_id;
  std::uint32_t p = 2;
  std::size_t n = 0;
  /// Distinct nonzero equations, each divided by its leading coefficient,
  /// in canonical order.
  std::vector<Polynomial> equations;

  std::vector<std::string> equation_strings() const;
  bool contains(const Field& f, const std::vector<Scalar>& point) const;
};

/// Symbolic p-th power of the generic element (coefficient polynomials by PBW monomial).
std::map<Monomial, Polynomial> generic_power(const PbwAlgebra& a, unsigned k);

/// The equations of V(A). Verifies they do not involve a_n (throws
/// InvalidArgument otherwise: u_n would not be central).
NullconeVariety nullcone_equations(const PbwAlgebra& a);

/// Projective points over F_{p^e} in canonical form (first nonzero coordinate 1),
/// ordered by position of that coordinate then lexicographically.
/// `coords` picks how many leading coordinates to use (n for V, n-1 for the projection).
std::vector<std::vector<Scalar>> projective_points(const NullconeVariety& v, const FieldPtr& f, std::size_t coords,
                                                   unsigned threads = 1);
/// Points of V(A) over F_{p^e}. CapExceeded when q^n > 2^24.
std::vector<std::vector<Scalar>> nullcone_points(const PbwAlgebra& a, unsigned e, unsigned threads = 1);

struct ComponentReport {
  std::string algebra_id;
  unsigned e = 1;
  /// Points of the projected variety over F_{p^e}; empty when not enumerated.
  std::optional<std::uint64_t> num_points;
  std::size_t num_components = 0;
  std::vector<std::vector<Scalar>> representatives;
  /// cone | line-graph | hub | empty | undecided
  std::string method;
  std::string note;
};

struct ConnectivityOptions {
  unsigned threads = 1;
  /// Largest point set for the all-pairs line graph.
  std::size_t line_graph_cap = 3000;
  /// Largest q^{n-1} the enumeration will walk.
  std::uint64_t enumeration_cap = std::uint64_t(1) << 24;
};

/// Connectedness of the projected variety (coordinates a_1..a_{n-1}).
ComponentReport connectedness_certificate(const PbwAlgebra& a, unsigned e, const ConnectivityOptions& opt = {});
ComponentReport connectedness_certificate(const NullconeVariety& v, unsigned e, const ConnectivityOptions& opt = {});

}  // namespace endoscope
