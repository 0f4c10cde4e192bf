#include "endoscope/nullcone.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "endoscope/error.hpp"
#include "endoscope/parallel.hpp"

namespace endoscope {

namespace {

using Point = std::vector<Scalar>;

struct CompiledVariety {
  std::vector<CompiledPolynomial> eqs;
  explicit CompiledVariety(const NullconeVariety& v) {
    for (const auto& e : v.equations) eqs.emplace_back(e);
  }
  bool contains(const Field& f, const Point& x) const {
    for (const auto& e : eqs)
      if (e.evaluate(f, x)) return false;
    return true;
  }
  // every point of the projective line through x and y
  bool line_inside(const Field& f, const Point& x, const Point& y) const {
    Point z(x.size());
    for (Scalar t = 0; t < f.size(); ++t) {
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.add(x[i], f.mul(t, y[i]));
      if (!contains(f, z)) return false;
    }
    return contains(f, y);
  }
};

std::uint64_t ipow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string point_string(const Point& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + "]";
}

}  // namespace

std::vector<std::string> NullconeVariety::equation_strings() const {
  std::vector<std::string> out;
  for (const auto& e : equations) out.push_back(e.to_string(n));
  return out;
}

bool NullconeVariety::contains(const Field& f, const std::vector<Scalar>& point) const {
  for (const auto& e : equations)
    if (e.evaluate(f, point)) return false;
  return true;
}

std::map<Monomial, Polynomial> generic_power(const PbwAlgebra& a, unsigned k) {
  const Field& f = *a.field();
  std::map<Monomial, Polynomial> cur{{Monomial{}, Polynomial::constant(1)}};
  for (unsigned step = 0; step < k; ++step) {
    std::map<Monomial, Polynomial> next;
    for (const auto& [m, poly] : cur)
      for (std::size_t j = 0; j < a.n(); ++j)
        for (const auto& [m2, c] : a.times_generator(m, j)) next[m2].add_shifted(poly, c, j, f);
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return cur;
}

NullconeVariety nullcone_equations(const PbwAlgebra& a) {
  NullconeVariety v;
  v.algebra_id = a.id();
  v.p = a.p();
  v.n = a.n();
  const Field& f = *a.field();
  std::set<Polynomial> distinct;
  for (const auto& [m, poly] : generic_power(a, a.p())) {
    if (a.n() && poly.involves(a.n() - 1))
      throw Error(ErrorKind::InvalidArgument,
                  "equation " + poly.to_string(a.n()) + " involves the last coordinate; u_n is not central");
    distinct.insert(poly.monic(f));
  }
  v.equations.assign(distinct.begin(), distinct.end());
  return v;
}

std::vector<std::vector<Scalar>> projective_points(const NullconeVariety& v, const FieldPtr& field, std::size_t coords,
                                                   unsigned threads) {
  const Field& f = *field;
  const std::uint64_t q = f.size();
  const std::uint64_t cap = std::uint64_t(1) << 24;
  if (ipow(q, coords, cap) > cap) throw Error(ErrorKind::CapExceeded, "too many projective points to enumerate");
  const CompiledVariety cv(v);
  std::vector<Point> out;
  for (std::size_t lead = 0; lead < coords; ++lead) {
    const std::size_t free = coords - lead - 1;
    const std::uint64_t count = ipow(q, free, cap);
    const std::size_t chunks = std::min<std::uint64_t>(64, count);
    std::vector<std::vector<Point>> parts(chunks);
    parallel_chunks(count, chunks, threads, [&](std::size_t c, std::size_t b, std::size_t e) {
      Point x(v.n, 0);
      x[lead] = 1;
      for (std::size_t idx = b; idx < e; ++idx) {
        // most significant digit first, so the order is lexicographic
        std::uint64_t t = idx;
        for (std::size_t k = coords; k-- > lead + 1;) {
          x[k] = static_cast<Scalar>(t % q);
          t /= q;
        }
        if (cv.contains(f, x)) parts[c].emplace_back(x.begin(), x.begin() + coords);
      }
    });
    for (auto& part : parts)
      for (auto& x : part) out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<Scalar>> nullcone_points(const PbwAlgebra& a, unsigned e, unsigned threads) {
  const auto v = nullcone_equations(a);
  return projective_points(v, Field::make(a.p(), e), a.n(), threads);
}

ComponentReport connectedness_certificate(const PbwAlgebra& a, unsigned e, const ConnectivityOptions& opt) {
  return connectedness_certificate(nullcone_equations(a), e, opt);
}

ComponentReport connectedness_certificate(const NullconeVariety& v, unsigned e, const ConnectivityOptions& opt) {
  ComponentReport rep;
  rep.algebra_id = v.algebra_id;
  rep.e = e;
  if (v.n <= 1) {
    rep.method = "empty";
    rep.num_points = 0;
    rep.note = "the projection forgets the only coordinate";
    return rep;
  }
  const auto field = Field::make(v.p, e);
  const Field& f = *field;
  const std::size_t coords = v.n - 1;
  const bool enumerable = ipow(f.size(), coords, opt.enumeration_cap) <= opt.enumeration_cap;
  std::vector<Point> points;
  if (enumerable) {
    for (auto& x : projective_points(v, field, coords, opt.threads)) {
      x.resize(v.n, 0);
      points.push_back(std::move(x));
    }
    rep.num_points = points.size();
  }
  auto finish_point = [&](Point x) {
    x.resize(coords);
    return x;
  };

  // A coordinate absent from every equation is a cone vertex: each point lies
  // on a line through it, so the variety is connected (Zariski, not just over F_q).
  for (std::size_t i = coords; i-- > 0;) {
    bool absent = true;
    for (const auto& eq : v.equations)
      if (eq.involves(i)) absent = false;
    if (!absent) continue;
    Point vertex(coords, 0);
    vertex[i] = 1;
    rep.method = "cone";
    rep.num_components = 1;
    rep.representatives = {vertex};
    rep.note = "equations do not involve " + variable_name(i, v.n) + "; vertex " + point_string(vertex);
    return rep;
  }

  if (!enumerable) {
    rep.method = "undecided";
    rep.note = "no cone vertex and too many points to enumerate";
    return rep;
  }
  const CompiledVariety cv(v);
  const std::size_t np = points.size();
  if (np == 0) {
    rep.method = "line-graph";
    rep.note = "no rational points";
    return rep;
  }

  if (np <= opt.line_graph_cap) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(std::min<std::size_t>(np, 64));
    parallel_chunks(np, edges.size(), opt.threads, [&](std::size_t c, std::size_t b, std::size_t end) {
      for (std::size_t i = b; i < end; ++i)
        for (std::size_t j = i + 1; j < np; ++j)
          if (cv.line_inside(f, points[i], points[j])) edges[c].emplace_back(i, j);
    });
    UnionFind uf(np);
    for (const auto& part : edges)
      for (auto [i, j] : part) uf.unite(i, j);
    for (std::size_t i = 0; i < np; ++i)
      if (uf.find(i) == i) rep.representatives.push_back(finish_point(points[i]));
    rep.num_components = rep.representatives.size();
    rep.method = "line-graph";
    rep.note = "edges join points whose whole F_q-line lies in the variety; a proxy for Zariski connectedness";
    return rep;
  }

  // Hub: a coordinate plane H inside the variety that every point reaches by a line.
  std::vector<std::vector<std::size_t>> hubs;
  for (std::size_t i = coords; i-- > 0 && hubs.size() < 6;)
    for (std::size_t j = i; j-- > 0 && j + 3 >= i;) hubs.push_back({j, i});
  for (std::size_t i = coords; i-- > 0 && i + 3 >= coords;) hubs.push_back({i});
  for (const auto& hub : hubs) {
    bool inside = true;
    for (const auto& eq : v.equations)
      if (!eq.restrict_to(hub).is_zero()) inside = false;
    if (!inside) continue;
    std::vector<Point> hub_points;
    for (std::size_t lead = 0; lead < hub.size(); ++lead) {
      const std::size_t free = hub.size() - lead - 1;
      const std::uint64_t count = ipow(f.size(), free, 1 << 20);
      for (std::uint64_t t = 0; t < count; ++t) {
        Point x(v.n, 0);
        x[hub[lead]] = 1;
        std::uint64_t r = t;
        for (std::size_t k = lead + 1; k < hub.size(); ++k, r /= f.size()) x[hub[k]] = r % f.size();
        hub_points.push_back(std::move(x));
      }
    }
    const std::size_t chunks = std::min<std::size_t>(np, 256);
    std::vector<std::size_t> misses(chunks, 0);
    std::vector<Point> first_miss(chunks);
    parallel_chunks(np, chunks, opt.threads, [&](std::size_t c, std::size_t b, std::size_t end) {
      for (std::size_t i = b; i < end; ++i) {
        bool joined = false;
        for (const auto& h : hub_points)
          if (h == points[i] || cv.line_inside(f, points[i], h)) {
            joined = true;
            break;
          }
        if (!joined && misses[c]++ == 0) first_miss[c] = points[i];
      }
    });
    const std::size_t total = std::accumulate(misses.begin(), misses.end(), std::size_t(0));
    if (total) continue;
    std::string names;
    for (auto k : hub) names += variable_name(k, v.n);
    rep.method = "hub";
    rep.num_components = 1;
    rep.representatives = {finish_point(hub_points.front())};
    rep.note = "every point joins the plane spanned by " + names + " along a line inside the variety";
    return rep;
  }
  rep.method = "undecided";
  rep.note = std::to_string(np) + " points: too many for the line graph and no hub reaches them all";
  return rep;
}

}  // namespace endoscope
