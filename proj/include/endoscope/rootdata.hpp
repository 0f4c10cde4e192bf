#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace endoscope {

using RootVector = std::vector<int>;  // coefficients over the simple roots

/// Positive roots of a simple root system in Bourbaki numbering, sorted by
/// height and, within a height, by descending coefficient vector (so the
/// simple roots come out as alpha_1, ..., alpha_l).
class RootSystem {
 public:
  RootSystem(std::string type, int rank);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return type_ + std::to_string(rank_); }

  std::size_t size() const { return roots_.size(); }
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  const RootVector& root(std::size_t i) const { return roots_.at(i); }
  int height(std::size_t i) const { return heights_.at(i); }
  const std::vector<int>& heights() const { return heights_; }

  std::optional<std::size_t> index_of(const RootVector& r) const;
  bool is_root(const RootVector& r) const;  // positive or negative
  /// Symmetric form with short roots of squared length 2 (or 2 in simply laced type).
  int inner(const RootVector& a, const RootVector& b) const;
  int norm(const RootVector& a) const { return inner(a, a); }
  /// <r, alpha_i^vee>
  int cartan_pairing(const RootVector& r, int simple) const;
  const std::vector<std::vector<int>>& gram() const { return gram_; }

 private:
  std::string type_;
  int rank_;
  std::vector<std::vector<int>> gram_;
  std::vector<RootVector> roots_;
  std::vector<int> heights_;
  std::map<RootVector, std::size_t> index_;
};

/// Throws InvalidType for anything but A_l (l>=1), B_l, C_l (l>=2), D_l (l>=3),
/// E6-E8, F4, G2 with rank at most 8.
RootSystem build_root_system(const std::string& type, int rank);

/// Indices of the three highest roots, ascending. Throws RankTooSmall for rank 1.
std::array<std::size_t, 3> top_three_roots(const RootSystem& rs);

/// Integer structure constants N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b} for
/// positive roots, normalised by N = p+1 > 0 on extraspecial pairs.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs);

  /// N for positive root indices i, j; zero when root(i)+root(j) is not a root.
  long long operator()(std::size_t i, std::size_t j) const;
  /// Largest k with s - k r a root.
  int string_length(const RootVector& r, const RootVector& s) const;
  const std::map<std::pair<std::size_t, std::size_t>, long long>& table() const { return table_; }

 private:
  long long positive(std::size_t i, std::size_t j);
  long long mixed(const RootVector& r, const RootVector& s);

  RootSystem rs_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;  // per root index, or (npos,npos)
  std::map<std::pair<std::size_t, std::size_t>, long long> table_;
};

StructureConstants structure_constants(const RootSystem& rs);

/// dim H^0(lambda) by Weyl's product formula; lambda in fundamental weight
/// coordinates. Throws NotDominant for negative coordinates.
long long weyl_dimension(const RootSystem& rs, const std::vector<long long>& lambda);

}  // namespace endoscope
