#include "endoscope/endotest.hpp"

#include <map>
#include <mutex>
#include <random>

#include "endoscope/error.hpp"
#include "endoscope/nullcone.hpp"
#include "endoscope/parallel.hpp"

namespace endoscope {

namespace {

Matrix random_invertible(const FieldPtr& f, std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    Matrix g(f, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) g(r, c) = rng() % f->size();
    if (determinant(g) != 0) return g;
  }
}

// cheap isomorphism invariant used before the intertwiner test
std::vector<std::size_t> screen_key(const ModuleRep& m) {
  std::vector<std::size_t> key{m.dim(), free_rank(m)};
  for (const auto& a : m.actions())
    for (auto r : rank_sequence(a, m.algebra()->p())) key.push_back(r);
  return key;
}

}  // namespace

EndotrivialCertificate is_endotrivial(const ModuleRep& m) {
  EndotrivialCertificate c;
  c.module_dim = m.dim();
  c.algebra_dim = m.algebra()->dimension().value();
  const std::uint64_t d2 = std::uint64_t(m.dim()) * m.dim();
  c.congruence = d2 % c.algebra_dim == 1 % c.algebra_dim;
  if (m.dim() == 0) return c;
  const ModuleRep t = tensor(m, dual(m));
  c.free_rank = free_rank(t);
  c.residual_dim = static_cast<std::size_t>(d2 - c.free_rank * c.algebra_dim);
  c.verdict = c.residual_dim == 1;
  return c;
}

std::string PPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
  return s + "]";
}

Matrix point_action(const ModuleRep& m, const PPoint& pt) {
  if (pt.coords.size() != m.algebra()->n()) throw Error(ErrorKind::InvalidArgument, "point has the wrong length");
  const FieldPtr& f = pt.field ? pt.field : m.field();
  const bool same = f == m.field();
  if (!same && !m.field()->prime()) throw Error(ErrorKind::InvalidArgument, "module and point fields are incompatible");
  Matrix out(f, m.dim(), m.dim());
  for (std::size_t i = 0; i < pt.coords.size(); ++i)
    if (pt.coords[i]) out.axpy(pt.coords[i], same ? m.action(i) : m.action(i).embed(f));
  return out;
}

JordanType jordan_type_at_point(const ModuleRep& m, const PPoint& pt) {
  return nilpotent_jordan_type(point_action(m, pt), m.algebra()->p());
}

std::vector<PPoint> p_points(const PbwAlgebra& a, unsigned e, unsigned threads) {
  const auto field = Field::make(a.p(), e);
  std::vector<PPoint> out;
  for (auto& x : nullcone_points(a, e, threads)) out.push_back({field, std::move(x)});
  return out;
}

bool is_endotrivial_type(const JordanType& t, std::uint32_t p) {
  std::size_t odd = 0;
  for (std::size_t s = 1; s < p; ++s) odd += t.blocks(s);
  if (odd != 1) return false;
  return t.blocks(1) == 1 || t.blocks(p - 1) == 1;
}

JordanScan constant_jordan_scan(const ModuleRep& m, unsigned e, unsigned threads) {
  JordanScan scan;
  const auto points = p_points(*m.algebra(), e, threads);
  scan.points_checked = points.size();
  const std::uint32_t p = m.algebra()->p();
  const std::size_t chunks = std::min<std::size_t>(points.size(), 64);
  std::vector<std::optional<std::size_t>> first_bad(chunks);
  std::vector<JordanType> types(points.size());
  parallel_chunks(points.size(), chunks, threads, [&](std::size_t c, std::size_t b, std::size_t end) {
    for (std::size_t i = b; i < end; ++i) {
      types[i] = jordan_type_at_point(m, points[i]);
      if (!first_bad[c] && !is_endotrivial_type(types[i], p)) first_bad[c] = i;
    }
  });
  for (const auto& bad : first_bad)
    if (bad) {
      scan.passed = false;
      scan.witness = points[*bad];
      scan.witness_type = types[*bad];
      break;
    }
  return scan;
}

AlgebraPtr local_algebra(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = build_elementary_abelian(p, 2);
  return slot;
}

ModuleRep restrict_to_local(const ModuleRep& m, const PPoint& pt) {
  const std::size_t n = m.algebra()->n();
  bool valid = false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (pt.coords.at(i)) valid = true;
  if (!valid) throw Error(ErrorKind::InvalidArgument, "point " + pt.to_string() + " has no coordinate before u_n");
  const Matrix v = point_action(m, pt);
  Matrix un = v.field() == m.field() ? m.action(n - 1) : m.action(n - 1).embed(v.field());
  return restrict_to_matrices(local_algebra(m.algebra()->p()), {v, un});
}

int local_syzygy_degree(const ModuleRep& m, const PPoint& pt) {
  const ModuleRep local = restrict_to_local(m, pt);
  const ModuleRep n = strip_projectives(local).residual;
  const std::size_t d = n.dim();
  const std::size_t p2 = std::size_t(m.algebra()->p()) * m.algebra()->p();
  if (d == 1) return 0;
  int abs_m;
  if (d > 1 && (d - 1) % p2 == 0)
    abs_m = static_cast<int>(2 * ((d - 1) / p2));
  else if ((d + 1) % p2 == 0)
    abs_m = static_cast<int>(2 * ((d + 1) / p2) - 1);
  else
    throw Error(ErrorKind::NotEndotrivialLocally,
                "residual of dimension " + std::to_string(d) + " at " + pt.to_string() + " is no syzygy of k");
  const ModuleRep k = trivial_module(n.algebra(), 1, n.field());
  const ModuleRep up = syzygy_power(n, -abs_m);
  if (up.dim() == 1 && is_isomorphic(up, k).isomorphic) return abs_m;
  const ModuleRep down = syzygy_power(n, abs_m);
  if (down.dim() == 1 && is_isomorphic(down, k).isomorphic) return -abs_m;
  throw Error(ErrorKind::NotEndotrivialLocally,
              "residual at " + pt.to_string() + " has a syzygy dimension but is not Omega^{+-" +
                  std::to_string(abs_m) + "}(k)");
}

bool RankProfile::constant_rank() const {
  for (const auto& e : entries)
    if (e.w_rank != entries.front().w_rank) return false;
  return true;
}

RankProfile rank_profile(const ModuleRep& m, unsigned e, bool with_degrees, unsigned threads) {
  RankProfile prof;
  const std::size_t n = m.algebra()->n();
  const std::uint32_t p = m.algebra()->p();
  std::vector<PPoint> points;
  for (auto& pt : p_points(*m.algebra(), e, threads)) {
    bool valid = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (pt.coords[i]) valid = true;
    if (valid) points.push_back(std::move(pt));
  }
  prof.entries.resize(points.size());
  const std::size_t chunks = std::min<std::size_t>(points.size(), 64);
  parallel_chunks(points.size(), chunks, threads, [&](std::size_t, std::size_t b, std::size_t end) {
    for (std::size_t i = b; i < end; ++i) {
      auto& entry = prof.entries[i];
      entry.point = points[i];
      const Matrix v = point_action(m, points[i]);
      entry.jordan = nilpotent_jordan_type(v, p);
      const Matrix un = v.field() == m.field() ? m.action(n - 1) : m.action(n - 1).embed(v.field());
      entry.w_rank = rank(v.pow(p - 1) * un.pow(p - 1));
      if (with_degrees) {
        try {
          entry.syzygy_degree = local_syzygy_degree(m, points[i]);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NotEndotrivialLocally) throw;
        }
      }
    }
  });
  return prof;
}

std::optional<int> identify_syzygy(const ModuleRep& m, int max_degree) {
  const ModuleRep n = strip_projectives(m).residual;
  const ModuleRep k = trivial_module(m.algebra(), 1, m.field());
  if (n.dim() == 1) return 0;
  ModuleRep up = k, down = k;
  for (int s = 1; s <= max_degree; ++s) {
    up = syzygy(up);
    if (up.dim() == n.dim() && is_isomorphic(up, n).isomorphic) return s;
    down = cosyzygy(down);
    if (down.dim() == n.dim() && is_isomorphic(down, n).isomorphic) return -s;
  }
  return std::nullopt;
}

CensusResult census(const AlgebraPtr& a, std::size_t d, const CensusOptions& opt) {
  CensusResult res;
  res.dimension = d;
  const FieldPtr f = a->field();
  const std::uint32_t p = a->p();
  const std::size_t n = a->n();
  if (d == 0) return res;

  std::vector<Matrix> candidates;  // exhaustive mode: all X with X^p = 0
  std::uint64_t total = 0;
  if (opt.mode == CensusMode::Exhaustive) {
    double raw = 1;
    for (std::size_t i = 0; i < d * d; ++i) raw *= p;
    if (raw > double(1 << 20)) throw Error(ErrorKind::CapExceeded, "too many d x d matrices to enumerate");
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(raw); ++code) {
      Matrix x(f, d, d);
      std::uint64_t t = code;
      for (std::size_t k = d * d; k-- > 0; t /= p) x(k / d, k % d) = t % p;
      if (x.pow(p).is_zero()) candidates.push_back(std::move(x));
    }
    double tuples = 1;
    for (std::size_t i = 0; i < n; ++i) tuples *= candidates.size();
    total = tuples > 1e18 ? std::uint64_t(1e18) : static_cast<std::uint64_t>(tuples);
  } else {
    total = opt.budget;
  }
  res.tuples_total = total;
  res.tuples_examined = std::min(total, opt.budget);
  res.partial = total > opt.budget;

  const std::size_t chunks = std::min<std::uint64_t>(res.tuples_examined, 256);
  std::vector<std::vector<ModuleRep>> found(chunks);
  std::vector<std::size_t> valid(chunks, 0);
  parallel_chunks(res.tuples_examined, chunks, opt.threads, [&](std::size_t c, std::size_t b, std::size_t end) {
    for (std::size_t idx = b; idx < end; ++idx) {
      std::vector<Matrix> acts;
      if (opt.mode == CensusMode::Exhaustive) {
        std::uint64_t t = idx;
        acts.resize(n);
        for (std::size_t g = n; g-- > 0; t /= candidates.size()) acts[g] = candidates[t % candidates.size()];
      } else {
        std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
        const Matrix g = random_invertible(f, d, rng);
        const Matrix gi = *inverse(g);
        for (std::size_t k = 0; k < n; ++k) {
          Matrix u(f, d, d);
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t col = r + 1; col < d; ++col) u(r, col) = rng() % p;
          acts.push_back(g * u * gi);
        }
      }
      ModuleRep m(a, f, d, std::move(acts));
      try {
        validate_relations(m);
      } catch (const Error&) {
        continue;
      }
      ++valid[c];
      if (is_endotrivial(m).verdict) found[c].push_back(std::move(m));
    }
  });
  for (auto v : valid) res.modules_found += v;

  std::vector<std::vector<std::size_t>> keys;
  for (auto& part : found)
    for (auto& m : part) {
      ++res.endotrivial_found;
      const auto key = screen_key(m);
      bool placed = false;
      for (std::size_t c = 0; c < res.classes.size() && !placed; ++c)
        if (keys[c] == key && is_isomorphic(res.classes[c].representative, m).isomorphic) {
          ++res.classes[c].hits;
          placed = true;
        }
      if (!placed) {
        keys.push_back(key);
        res.classes.push_back({std::move(m), 1, std::nullopt});
      }
    }
  for (auto& cls : res.classes) cls.syzygy_degree = identify_syzygy(cls.representative);
  return res;
}

}  // namespace endoscope
