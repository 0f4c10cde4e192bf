#include "endoscope/rootdata.hpp"

#include <algorithm>
#include <numeric>

#include "endoscope/error.hpp"

namespace endoscope {

namespace {

// Symmetric Gram matrix of the simple roots, Bourbaki numbering.
std::vector<std::vector<int>> gram_matrix(const std::string& type, int l) {
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  auto link = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  auto norm = [&](int i, int v) { g[i - 1][i - 1] = v; };
  if (type == "A" || type == "D" || type == "E") {
    for (int i = 1; i <= l; ++i) norm(i, 2);
    if (type == "A") {
      for (int i = 1; i < l; ++i) link(i, i + 1, -1);
    } else if (type == "D") {
      for (int i = 1; i + 1 < l - 1; ++i) link(i, i + 1, -1);
      link(l - 2, l - 1, -1);
      link(l - 2, l, -1);
    } else {
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < l; ++i) link(i, i + 1, -1);
    }
  } else if (type == "B") {
    for (int i = 1; i < l; ++i) norm(i, 4);
    norm(l, 2);
    for (int i = 1; i < l; ++i) link(i, i + 1, -2);
  } else if (type == "C") {
    for (int i = 1; i < l; ++i) norm(i, 2);
    norm(l, 4);
    for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
    link(l - 1, l, -2);
  } else if (type == "F") {
    norm(1, 4);
    norm(2, 4);
    norm(3, 2);
    norm(4, 2);
    link(1, 2, -2);
    link(2, 3, -2);
    link(3, 4, -1);
  } else if (type == "G") {
    norm(1, 2);
    norm(2, 6);
    link(1, 2, -3);
  }
  return g;
}

bool valid_type(const std::string& t, int l) {
  if (l < 1 || l > 8) return false;
  if (t == "A") return true;
  if (t == "B" || t == "C") return l >= 2;
  if (t == "D") return l >= 3;
  if (t == "E") return l >= 6;
  if (t == "F") return l == 4;
  if (t == "G") return l == 2;
  return false;
}

RootVector negate(RootVector r) {
  for (auto& x : r) x = -x;
  return r;
}

RootVector add(const RootVector& a, const RootVector& b) {
  RootVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RootVector sub(const RootVector& a, const RootVector& b) { return add(a, negate(b)); }

bool positive_vector(const RootVector& r) {
  for (int x : r)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

RootSystem::RootSystem(std::string type, int rank) : type_(std::move(type)), rank_(rank) {
  if (!valid_type(type_, rank_))
    throw Error(ErrorKind::InvalidType, type_ + std::to_string(rank_) + " is not a simple type of rank <= 8");
  gram_ = gram_matrix(type_, rank_);
  std::vector<RootVector> layer;
  for (int i = 0; i < rank_; ++i) {
    RootVector r(rank_, 0);
    r[i] = 1;
    layer.push_back(r);
  }
  std::map<RootVector, bool> seen;
  for (auto& r : layer) seen[r] = true;
  std::vector<RootVector> all = layer;
  // grow by simple roots using alpha_i-strings: beta + alpha_i is a root iff q > 0
  while (!layer.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        RootVector ei(rank_, 0);
        ei[i] = 1;
        if (beta == ei) continue;
        int down = 0;
        RootVector cur = beta;
        while (true) {
          cur = sub(cur, ei);
          if (!seen.count(cur)) break;
          ++down;
        }
        const int up = down - cartan_pairing(beta, i);
        if (up > 0) {
          RootVector nb = add(beta, ei);
          if (!seen.count(nb)) {
            seen[nb] = true;
            next.push_back(nb);
            all.push_back(nb);
          }
        }
      }
    }
    layer = std::move(next);
  }
  auto ht = [](const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::sort(all.begin(), all.end(), [&](const RootVector& a, const RootVector& b) {
    const int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = std::move(all);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    heights_.push_back(ht(roots_[i]));
    index_[roots_[i]] = i;
  }
}

std::optional<std::size_t> RootSystem::index_of(const RootVector& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const RootVector& r) const {
  return index_.count(r) > 0 || index_.count(negate(r)) > 0;
}

int RootSystem::inner(const RootVector& a, const RootVector& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

int RootSystem::cartan_pairing(const RootVector& r, int simple) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += r[j] * gram_[j][simple];
  return 2 * s / gram_[simple][simple];
}

RootSystem build_root_system(const std::string& type, int rank) { return RootSystem(type, rank); }

std::array<std::size_t, 3> top_three_roots(const RootSystem& rs) {
  if (rs.rank() < 2) throw Error(ErrorKind::RankTooSmall, "need rank >= 2 for three highest roots");
  const std::size_t n = rs.size();
  std::array<std::size_t, 3> top{n - 3, n - 2, n - 1};
  // ties at the same height keep the system's ordering; ascending order as stored
  return top;
}

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(rs) {
  const std::size_t n = rs_.size();
  const auto none = std::make_pair(n, n);
  extraspecial_.assign(n, none);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < k; ++a) {
      auto b = rs_.index_of(sub(rs_.root(k), rs_.root(a)));
      if (b) {
        extraspecial_[k] = {a, *b};
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rs_.index_of(add(rs_.root(i), rs_.root(j)))) positive(i, j);
}

int StructureConstants::string_length(const RootVector& r, const RootVector& s) const {
  int k = 0;
  RootVector cur = s;
  while (true) {
    cur = sub(cur, r);
    if (!rs_.is_root(cur)) return k;
    ++k;
  }
}

long long StructureConstants::operator()(std::size_t i, std::size_t j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? 0 : it->second;
}

long long StructureConstants::mixed(const RootVector& r, const RootVector& s) {
  const RootVector xi = add(r, s);
  if (!rs_.is_root(xi)) return 0;
  const bool rp = positive_vector(r), sp = positive_vector(s);
  if (rp && sp) return positive(*rs_.index_of(r), *rs_.index_of(s));
  if (!rp && !sp) return -mixed(negate(r), negate(s));
  if (!rp && sp) return -mixed(s, r);
  // r > 0 > s
  if (!positive_vector(xi)) return -mixed(negate(r), negate(s));
  // triple (r, s, -xi): N_{r,s} = (xi,xi)/(r,r) N_{s,-xi} = -(xi,xi)/(r,r) N_{-s,xi}
  const long long num = -static_cast<long long>(rs_.norm(xi)) * mixed(negate(s), xi);
  const long long den = rs_.norm(r);
  if (num % den != 0) throw Error(ErrorKind::InvalidArgument, "non-integral structure constant");
  return num / den;
}

long long StructureConstants::positive(std::size_t i, std::size_t j) {
  if (auto it = table_.find({i, j}); it != table_.end()) return it->second;
  const RootVector& alpha = rs_.root(i);
  const RootVector& beta = rs_.root(j);
  const RootVector xi = add(alpha, beta);
  auto k = rs_.index_of(xi);
  if (!k) return 0;
  const auto [g, d] = extraspecial_[*k];
  long long value;
  if (i == g && j == d) {
    value = string_length(alpha, beta) + 1;
  } else if (i == d && j == g) {
    value = -(string_length(beta, alpha) + 1);
  } else if (i > j) {
    value = -positive(j, i);
  } else {
    const RootVector& gamma = rs_.root(g);
    const RootVector& delta = rs_.root(d);
    const long long ngd = positive(g, d);
    // N_{a,b} = (xi,xi)/N_{g,d} * ( N_{b,-g} N_{a,-d} / |b-g|^2 + N_{-g,a} N_{b,-d} / |a-g|^2 )
    long long num = 0, den = 1;
    auto accumulate_term = [&](long long n1, long long n2, const RootVector& diff) {
      if (n1 == 0 || n2 == 0) return;
      const long long tn = n1 * n2, td = rs_.norm(diff);
      num = num * td + tn * den;
      den *= td;
      const long long gg = std::gcd(num, den);
      if (gg) {
        num /= gg;
        den /= gg;
      }
    };
    const RootVector bg = sub(beta, gamma), ag = sub(alpha, gamma);
    if (rs_.is_root(bg)) accumulate_term(mixed(beta, negate(gamma)), mixed(alpha, negate(delta)), bg);
    if (rs_.is_root(ag)) accumulate_term(mixed(negate(gamma), alpha), mixed(beta, negate(delta)), ag);
    num *= rs_.norm(xi);
    den *= ngd;
    if (num % den != 0) throw Error(ErrorKind::InvalidArgument, "non-integral structure constant");
    value = num / den;
  }
  table_[{i, j}] = value;
  return value;
}

StructureConstants structure_constants(const RootSystem& rs) { return StructureConstants(rs); }

long long weyl_dimension(const RootSystem& rs, const std::vector<long long>& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw Error(ErrorKind::InvalidArgument, "weight has wrong number of coordinates");
  for (auto x : lambda)
    if (x < 0) throw Error(ErrorKind::NotDominant, "weight coordinates must be >= 0");
  // running product num/den kept reduced; the final value is integral
  __int128 num = 1, den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    long long top = 0, bottom = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      const long long s = alpha[i] * rs.gram()[i][i];
      top += s * (lambda[i] + 1);
      bottom += s;
    }
    // ratio <lambda+rho, alpha^vee> / <rho, alpha^vee>; the common factor 2/(alpha,alpha) cancels
    num *= top;
    den *= bottom;
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  if (den != 1) throw Error(ErrorKind::InvalidArgument, "Weyl dimension not integral");
  return static_cast<long long>(num);
}

}  // namespace endoscope
