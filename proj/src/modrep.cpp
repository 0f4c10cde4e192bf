#include "endoscope/modrep.hpp"

#include <random>

#include "endoscope/error.hpp"

namespace endoscope {

namespace {

void require_same_algebra(const ModuleRep& a, const ModuleRep& b) {
  if (a.algebra() != b.algebra()) throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras");
  if (a.field() != b.field()) throw Error(ErrorKind::AlgebraMismatch, "modules over different fields");
}

Vector unit_vector(std::size_t d, std::size_t i) {
  Vector v(d, 0);
  v[i] = 1;
  return v;
}

// rho(b) m for every PBW monomial b, indexed by the algebra's basis_index.
std::vector<Vector> orbit(const ModuleRep& m, const Vector& start) {
  const PbwAlgebra& a = *m.algebra();
  const std::size_t n = a.n(), p = a.p();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Vector> out(total);
  // rho(b) = rho(u_1)^{e_1} ... rho(u_n)^{e_n}: apply the last factor first
  auto rec = [&](auto&& self, std::ptrdiff_t i, const Vector& v, std::size_t idx, std::size_t weight) -> void {
    if (i < 0) {
      out[idx] = v;
      return;
    }
    Vector cur = v;
    for (std::size_t e = 0; e < p; ++e) {
      self(self, i - 1, cur, idx + e * weight, weight * p);
      if (e + 1 < p) cur = m.action(i).apply(cur);
    }
  };
  rec(rec, static_cast<std::ptrdiff_t>(n) - 1, start, 0, 1);
  return out;
}

// g rho(b) for every PBW monomial b, same indexing.
std::vector<Vector> row_orbit(const ModuleRep& m, const Vector& start) {
  const PbwAlgebra& a = *m.algebra();
  const std::size_t n = a.n(), p = a.p();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Vector> out(total);
  std::vector<std::size_t> weight(n);
  for (std::size_t i = n, w = 1; i-- > 0; w *= p) weight[i] = w;
  auto rec = [&](auto&& self, std::size_t i, const Vector& v, std::size_t idx) -> void {
    if (i == n) {
      out[idx] = v;
      return;
    }
    Vector cur = v;
    for (std::size_t e = 0; e < p; ++e) {
      self(self, i + 1, cur, idx + e * weight[i]);
      if (e + 1 < p) cur = m.action(i).apply_left(cur);
    }
  };
  rec(rec, 0, start, 0);
  return out;
}

Matrix stack_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix out(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  return out;
}

}  // namespace

ModuleRep::ModuleRep(AlgebraPtr algebra, FieldPtr field, std::size_t dim, std::vector<Matrix> actions)
    : algebra_(std::move(algebra)), field_(std::move(field)), dim_(dim), actions_(std::move(actions)) {
  if (!algebra_) throw Error(ErrorKind::InvalidArgument, "module needs an algebra");
  if (!field_) field_ = algebra_->field();
  if (field_->p() != algebra_->p()) throw Error(ErrorKind::AlgebraMismatch, "field characteristic differs from algebra");
  if (actions_.size() != algebra_->n())
    throw Error(ErrorKind::InvalidArgument, "need one action matrix per generator");
  for (const auto& a : actions_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw Error(ErrorKind::InvalidArgument, "action matrix has wrong shape");
    if (a.field() != field_) throw Error(ErrorKind::InvalidArgument, "action matrix over a different field");
  }
}

Matrix ModuleRep::action_of(const AlgebraElement& x) const {
  const Field& f = *field_;
  Matrix out(field_, dim_, dim_);
  std::vector<std::vector<Matrix>> powers(actions_.size());
  auto power = [&](std::size_t i, unsigned e) -> const Matrix& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Matrix::identity(field_, dim_));
    while (pw.size() <= e) pw.push_back(pw.back() * actions_[i]);
    return pw[e];
  };
  for (const auto& [m, c] : x.terms) {
    Matrix term = Matrix::identity(field_, dim_);
    bool zero = false;
    for (std::size_t i = 0; i < actions_.size() && !zero; ++i)
      if (unsigned e = m.exponent(i)) {
        term = term * power(i, e);
        zero = term.is_zero();
      }
    if (!zero) out.axpy(f.from_int(c), term);
  }
  return out;
}

Matrix ModuleRep::socle_action() const {
  Matrix out = Matrix::identity(field_, dim_);
  for (const auto& a : actions_)
    for (unsigned e = 1; e < algebra_->p() && !out.is_zero(); ++e) out = out * a;
  return out;
}

ModuleRep ModuleRep::embed(FieldPtr extension) const {
  if (extension->p() != field_->p()) throw Error(ErrorKind::InvalidArgument, "extension of different characteristic");
  if (field_->e() != 1 && extension != field_)
    throw Error(ErrorKind::InvalidArgument, "can only embed modules defined over the prime field");
  std::vector<Matrix> acts;
  for (const auto& a : actions_) acts.push_back(a.embed(extension));
  return ModuleRep(algebra_, extension, dim_, std::move(acts));
}

void validate_relations(const ModuleRep& m) {
  const PbwAlgebra& a = *m.algebra();
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.action(i).pow(a.p()).is_zero())
      throw Error(ErrorKind::RelationViolation, "rho(" + a.labels()[i] + ")^" + std::to_string(a.p()) + " != 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = m.action(i) * m.action(j) - m.action(j) * m.action(i);
      for (const auto& t : a.bracket(i, j)) lhs.axpy(m.field()->neg(t.coef), m.action(t.index));
      if (!lhs.is_zero())
        throw Error(ErrorKind::RelationViolation,
                    "bracket [" + a.labels()[i] + "," + a.labels()[j] + "] not respected");
    }
  }
}

ModuleRep make_module(AlgebraPtr algebra, std::vector<Matrix> actions) {
  FieldPtr field = actions.empty() ? algebra->field() : actions.front().field();
  const std::size_t d = actions.empty() ? 0 : actions.front().rows();
  ModuleRep m(std::move(algebra), field, d, std::move(actions));
  validate_relations(m);
  return m;
}

ModuleRep zero_module(AlgebraPtr algebra, FieldPtr field) { return trivial_module(std::move(algebra), 0, field); }

ModuleRep trivial_module(AlgebraPtr algebra, std::size_t copies, FieldPtr field) {
  if (!field) field = algebra->field();
  std::vector<Matrix> acts(algebra->n(), Matrix(field, copies, copies));
  return ModuleRep(std::move(algebra), field, copies, std::move(acts));
}

ModuleRep regular_module(AlgebraPtr algebra) {
  const auto& reg = algebra->regular_matrices();
  const std::size_t d = reg.empty() ? 1 : reg.front().rows();
  return ModuleRep(algebra, algebra->field(), d, reg);
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) { return direct_sum(std::vector<ModuleRep>{a, b}); }

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of nothing");
  std::size_t d = 0;
  for (const auto& p : parts) {
    require_same_algebra(parts.front(), p);
    d += p.dim();
  }
  const auto& alg = parts.front().algebra();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < alg->n(); ++i) {
    Matrix out(parts.front().field(), d, d);
    std::size_t off = 0;
    for (const auto& p : parts) {
      const Matrix& a = p.action(i);
      for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < p.dim(); ++c) out(off + r, off + c) = a(r, c);
      off += p.dim();
    }
    acts.push_back(std::move(out));
  }
  return ModuleRep(alg, parts.front().field(), d, std::move(acts));
}

ModuleRep tensor(const ModuleRep& a, const ModuleRep& b) {
  require_same_algebra(a, b);
  const auto& alg = a.algebra();
  const std::size_t d = a.dim() * b.dim();
  std::vector<Matrix> acts;
  if (alg->coalgebra() == Coalgebra::Primitive) {
    const Matrix ia = Matrix::identity(a.field(), a.dim()), ib = Matrix::identity(b.field(), b.dim());
    for (std::size_t i = 0; i < alg->n(); ++i) acts.push_back(kron(a.action(i), ib) + kron(ia, b.action(i)));
  } else {
    // gamma_{p^i} acts by sum_j rho(gamma_j) (x) rho(gamma_{p^i - j})
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < alg->n(); ++i, t *= alg->p()) {
      Matrix out(a.field(), d, d);
      for (std::uint64_t j = 0; j <= t; ++j) {
        const Matrix ga = a.action_of(divided_power_element(*alg, j));
        if (ga.is_zero()) continue;
        const Matrix gb = b.action_of(divided_power_element(*alg, t - j));
        out = out + kron(ga, gb);
      }
      acts.push_back(std::move(out));
    }
  }
  return ModuleRep(alg, a.field(), d, std::move(acts));
}

ModuleRep dual(const ModuleRep& m) {
  // Antipode: -u on primitives, (-1)^t gamma_t on divided powers. The
  // generators gamma_{p^i} have (-1)^{p^i} = -1 in characteristic p, so both
  // cases act on generators by -rho^T.
  std::vector<Matrix> acts;
  for (const auto& a : m.actions()) acts.push_back(-a.transpose());
  return ModuleRep(m.algebra(), m.field(), m.dim(), std::move(acts));
}

ModuleRep restrict_along(const ModuleRep& m, AlgebraPtr source, const std::vector<AlgebraElement>& images) {
  if (images.size() != source->n()) throw Error(ErrorKind::InvalidArgument, "need one image per source generator");
  std::vector<Matrix> acts;
  for (const auto& x : images) acts.push_back(m.action_of(x));
  return restrict_to_matrices(std::move(source), std::move(acts));
}

ModuleRep restrict_to_matrices(AlgebraPtr source, std::vector<Matrix> images) {
  if (source->p() != (images.empty() ? source->p() : images.front().field()->p()))
    throw Error(ErrorKind::AlgebraMismatch, "characteristic mismatch in restriction");
  return make_module(std::move(source), std::move(images));
}

ModuleRep submodule(const ModuleRep& m, const Matrix& basis) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < m.algebra()->n(); ++i) {
    auto x = solve(basis, m.action(i) * basis);
    if (!x) throw Error(ErrorKind::RelationViolation, "subspace is not stable under " + m.algebra()->labels()[i]);
    acts.push_back(std::move(*x));
  }
  return ModuleRep(m.algebra(), m.field(), basis.cols(), std::move(acts));
}

ModuleRep invariants(const ModuleRep& m, const std::vector<std::size_t>& generators) {
  std::vector<Vector> rows;
  for (auto g : generators) {
    if (g >= m.algebra()->n()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    for (std::size_t r = 0; r < m.dim(); ++r) {
      auto row = m.action(g).row(r);
      rows.emplace_back(row.begin(), row.end());
    }
  }
  const Matrix k = rows.empty() ? Matrix::identity(m.field(), m.dim()) : nullspace(stack_rows(m.field(), m.dim(), rows));
  ModuleRep sub = submodule(m, k);
  validate_relations(sub);
  return sub;
}

std::size_t free_rank(const ModuleRep& m) {
  if (m.dim() == 0) return 0;
  return rank(m.socle_action());
}

StrippedModule strip_projectives(const ModuleRep& m) {
  const std::size_t d = m.dim();
  if (d == 0) return {0, m};
  const Matrix s = m.socle_action();
  SpanBuilder image(m.field(), d);
  std::vector<std::size_t> gens;
  for (std::size_t c = 0; c < d; ++c)
    if (image.add(s.column(c))) gens.push_back(c);
  const std::size_t r = gens.size();
  if (r == 0) return {0, m};

  // P = sum of the free cyclic submodules A e_c; complete to a basis of M.
  const std::size_t top = m.algebra()->dimension().value();
  std::vector<Vector> basis;
  SpanBuilder span(m.field(), d);
  for (auto c : gens)
    for (auto& v : orbit(m, unit_vector(d, c))) {
      if (!span.add(v)) throw Error(ErrorKind::SplittingFailure, "socle preimages do not generate a free submodule");
      basis.push_back(std::move(v));
    }
  for (std::size_t c = 0; c < d && basis.size() < d; ++c) {
    Vector e = unit_vector(d, c);
    if (span.add(e)) basis.push_back(std::move(e));
  }
  const auto inv = inverse(columns_to_matrix(m.field(), d, basis));
  if (!inv) throw Error(ErrorKind::SplittingFailure, "basis completion is singular");

  // g_j reads the coefficient of rho(socle) e_{c_j}; N = {x : g_j rho(b) x = 0 for all b, j}
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t pos = j * top + (top - 1);
    auto row = inv->row(pos);
    for (auto& v : row_orbit(m, Vector(row.begin(), row.end()))) rows.push_back(std::move(v));
  }
  const Matrix nbasis = nullspace(stack_rows(m.field(), d, rows));
  if (nbasis.cols() + r * top != d) throw Error(ErrorKind::SplittingFailure, "complement has the wrong dimension");
  ModuleRep residual = submodule(m, nbasis);
  return {r, std::move(residual)};
}

ModuleRep syzygy(const ModuleRep& m) {
  const std::size_t d = m.dim();
  if (d == 0) return m;
  const PbwAlgebra& alg = *m.algebra();
  const std::size_t top = alg.dimension().value();
  // rad M = sum of generator images; cover generators complete it to M.
  SpanBuilder span(m.field(), d);
  for (const auto& a : m.actions())
    for (std::size_t c = 0; c < d; ++c) span.add(a.column(c));
  std::vector<std::size_t> gens;
  for (std::size_t c = 0; c < d; ++c)
    if (span.add(unit_vector(d, c))) gens.push_back(c);
  const std::size_t g = gens.size();

  std::vector<Vector> cols;
  for (auto c : gens)
    for (auto& v : orbit(m, unit_vector(d, c))) cols.push_back(std::move(v));
  const Matrix phi = columns_to_matrix(m.field(), d, cols);
  const Matrix k = nullspace(phi);

  const auto& reg = alg.regular_matrices();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < alg.n(); ++i) {
    const Matrix ri = m.field()->prime() ? reg[i] : reg[i].embed(m.field());
    Matrix rk(m.field(), g * top, k.cols());
    // block-diagonal action on A^g
    for (std::size_t blk = 0; blk < g; ++blk)
      for (std::size_t row = 0; row < top; ++row)
        for (std::size_t mid = 0; mid < top; ++mid) {
          const Scalar x = ri(row, mid);
          if (!x) continue;
          for (std::size_t c = 0; c < k.cols(); ++c) {
            const Scalar y = k(blk * top + mid, c);
            if (y) rk(blk * top + row, c) = m.field()->add(rk(blk * top + row, c), m.field()->mul(x, y));
          }
        }
    auto x = solve(k, rk);
    if (!x) throw Error(ErrorKind::SplittingFailure, "kernel of the projective cover is not a submodule");
    acts.push_back(std::move(*x));
  }
  ModuleRep kernel(m.algebra(), m.field(), k.cols(), std::move(acts));
  return strip_projectives(kernel).residual;
}

ModuleRep cosyzygy(const ModuleRep& m) { return dual(syzygy(dual(m))); }

ModuleRep syzygy_power(const ModuleRep& m, int k) {
  ModuleRep cur = m;
  for (int i = 0; i < k; ++i) cur = syzygy(cur);
  for (int i = 0; i > k; --i) cur = cosyzygy(cur);
  return cur;
}

std::vector<Matrix> intertwiners(const ModuleRep& m, const ModuleRep& n) {
  require_same_algebra(m, n);
  const std::size_t dm = m.dim(), dn = n.dim(), unknowns = dm * dn;
  if (unknowns == 0) return {};
  if (unknowns > 2500) throw Error(ErrorKind::CapExceeded, "intertwiner system too large");
  const Field& f = *m.field();
  // X is dn x dm, unknown X(a,b) at a*dm + b; solve generator by generator
  Matrix basis = Matrix::identity(m.field(), unknowns);
  for (std::size_t i = 0; i < m.algebra()->n() && basis.cols() > 0; ++i) {
    const Matrix& am = m.action(i);
    const Matrix& bn = n.action(i);
    Matrix eq(m.field(), unknowns, unknowns);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b) {
        const std::size_t row = a * dm + b;
        for (std::size_t c = 0; c < dm; ++c)
          if (am(c, b)) eq(row, a * dm + c) = f.add(eq(row, a * dm + c), am(c, b));
        for (std::size_t c = 0; c < dn; ++c)
          if (bn(a, c)) eq(row, c * dm + b) = f.sub(eq(row, c * dm + b), bn(a, c));
      }
    const Matrix restricted = eq * basis;
    basis = basis * nullspace(restricted);
  }
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    Matrix x(m.field(), dn, dm);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b) x(a, b) = basis(a * dm + b, j);
    out.push_back(std::move(x));
  }
  return out;
}

IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed) {
  require_same_algebra(m, n);
  IsoResult res;
  if (m.dim() != n.dim()) {
    res.method = "dimension";
    return res;
  }
  if (m.dim() == 0) {
    res.isomorphic = true;
    res.method = "zero";
    return res;
  }
  const std::uint32_t p = m.algebra()->p();
  for (std::size_t i = 0; i < m.algebra()->n(); ++i)
    if (rank_sequence(m.action(i), p) != rank_sequence(n.action(i), p)) {
      res.method = "rank sequence of " + m.algebra()->labels()[i];
      return res;
    }
  if (free_rank(m) != free_rank(n)) {
    res.method = "free rank";
    return res;
  }
  const auto hom = intertwiners(m, n);
  if (intertwiners(m, m).size() != hom.size() || intertwiners(n, n).size() != hom.size()) {
    res.method = "hom dimensions";
    return res;
  }
  const std::size_t k = hom.size();
  if (k == 0) {
    res.method = "no intertwiners";
    return res;
  }
  const FieldPtr& field = m.field();
  const std::uint32_t q = field->size();
  auto combo = [&](const std::vector<Scalar>& c) {
    Matrix x(field, n.dim(), m.dim());
    for (std::size_t j = 0; j < k; ++j)
      if (c[j]) x.axpy(c[j], hom[j]);
    return x;
  };
  std::mt19937_64 rng(seed);
  std::vector<Scalar> c(k);
  for (int trial = 0; trial < 64; ++trial) {
    for (auto& x : c) x = rng() % q;
    Matrix x = combo(c);
    if (determinant(x) != 0) {
      res.isomorphic = true;
      res.witness = std::move(x);
      res.method = "random intertwiner";
      return res;
    }
  }
  // exhaustive over the field: exact
  double space = 1;
  for (std::size_t j = 0; j < k; ++j) space *= q;
  if (space <= 65536.0) {
    std::fill(c.begin(), c.end(), 0);
    for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(space); ++code) {
      std::uint64_t t = code;
      for (std::size_t j = 0; j < k; ++j, t /= q) c[j] = t % q;
      Matrix x = combo(c);
      if (determinant(x) != 0) {
        res.isomorphic = true;
        res.witness = std::move(x);
        res.method = "exhaustive intertwiner";
        return res;
      }
    }
    res.method = "exhaustive: no invertible intertwiner";
    return res;
  }
  // A nonzero generic determinant anywhere over an extension means the
  // modules become isomorphic there, hence already over the base field.
  if (field->prime()) {
    for (std::uint32_t e = 2; e <= 3; ++e) {
      std::uint64_t qe = 1;
      for (std::uint32_t t = 0; t < e; ++t) qe *= p;
      if (qe > 4096) break;
      const auto ext = Field::make(p, e);
      std::vector<Matrix> hext;
      for (const auto& h : hom) hext.push_back(h.embed(ext));
      for (int trial = 0; trial < 64; ++trial) {
        Matrix x(ext, n.dim(), m.dim());
        for (std::size_t j = 0; j < k; ++j) x.axpy(rng() % qe, hext[j]);
        if (determinant(x) != 0) {
          res.isomorphic = true;
          res.method = "invertible intertwiner over F_" + std::to_string(qe);
          return res;
        }
      }
    }
  }
  throw Error(ErrorKind::Inconclusive, "no invertible intertwiner found in " + std::to_string(k) +
                                           "-dimensional space and exhaustive search too large");
}

ModuleRep natural_rep_typeA(const RootSystem& rs, AlgebraPtr algebra) {
  if (rs.type() != "A") throw Error(ErrorKind::InvalidType, "natural representation needs type A");
  if (algebra->n() != rs.size()) throw Error(ErrorKind::AlgebraMismatch, "algebra does not match the root system");
  const std::size_t d = rs.rank() + 1;
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < rs.size(); ++g) {
    // alpha_i + ... + alpha_j = eps_i - eps_{j+1} acts as the elementary matrix E_{i, j+1}
    const RootVector& r = rs.root(g);
    std::size_t i = 0;
    while (r[i] == 0) ++i;
    std::size_t j = i;
    while (j + 1 < r.size() && r[j + 1] == 1) ++j;
    Matrix e(algebra->field(), d, d);
    e(i, j + 1) = 1;
    acts.push_back(std::move(e));
  }
  return make_module(std::move(algebra), std::move(acts));
}

}  // namespace endoscope
