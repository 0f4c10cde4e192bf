#include <doctest.h>

#include <random>

#include "endoscope/error.hpp"
#include "endoscope/nullcone.hpp"

using namespace endoscope;

namespace {

AlgebraPtr u_of(const std::string& type, int rank, std::uint32_t p) {
  return build_restricted_enveloping(build_root_system(type, rank), p);
}

// v^p by plain multiplication at a concrete coefficient vector
AlgebraElement concrete_power(const PbwAlgebra& a, const std::vector<Scalar>& coeffs) {
  AlgebraElement v;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) v.terms[Monomial::generator(i)] = coeffs[i];
  return a.power(v, a.p());
}

}  // namespace

TEST_CASE("polynomial basics") {
  auto f = Field::make(3);
  Polynomial a = Polynomial::variable(0), b = Polynomial::variable(1);
  Polynomial s;
  s.add_shifted(b, 2, 0, *f);  // 2ab
  s.add_shifted(Polynomial::variable(2), 1, 2, *f);  // + c^2
  CHECK(s.to_string(3) == "2ab+c^2");
  CHECK(s.monic(*f).to_string(3) == "ab+2c^2");
  CHECK(s.evaluate(*f, {1, 1, 1}) == 0);
  CHECK(s.evaluate(*f, {1, 2, 0}) == 1);
  CHECK(s.restrict_to({0, 1}).to_string(3) == "2ab");
  CHECK(a.times(b, *f) == s.restrict_to({0, 1}).monic(*f));
  CHECK(s.involves(2));
  CHECK_FALSE(s.involves(3));
}

TEST_CASE("symbolic p-th power agrees with concrete powers") {
  std::mt19937 rng(21);
  for (auto [type, rank, p] : std::vector<std::tuple<std::string, int, std::uint32_t>>{
           {"A", 2, 2}, {"B", 2, 3}, {"G", 2, 2}, {"A", 3, 3}, {"C", 3, 2}, {"B", 3, 3}}) {
    CAPTURE(type + std::to_string(rank) + " p=" + std::to_string(p));
    const auto a = u_of(type, rank, p);
    const auto sym = generic_power(*a, p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Scalar> x(a->n());
      for (auto& c : x) c = rng() % p;
      const AlgebraElement direct = concrete_power(*a, x);
      AlgebraElement viaSym;
      for (const auto& [m, poly] : sym) viaSym.add_term(m, poly.evaluate(*a->field(), x), *a->field());
      CHECK(direct == viaSym);
    }
  }
}

TEST_CASE("equations of small types") {
  const auto a2 = nullcone_equations(*u_of("A", 2, 2));
  CHECK(a2.equation_strings() == std::vector<std::string>{"ab"});
  CHECK(nullcone_equations(*u_of("A", 2, 3)).equations.empty());
  CHECK(nullcone_equations(*u_of("A", 3, 5)).equations.empty());
  // B2, G2 at p=2 with the brackets N = +-2 vanishing mod 2
  CHECK(nullcone_equations(*u_of("B", 2, 2)).equation_strings() == std::vector<std::string>{"ab"});
  CHECK(nullcone_equations(*u_of("G", 2, 2)).equation_strings() == std::vector<std::string>{"ab", "ad", "be+cd"});
}

TEST_CASE("equation invariants across the corpus") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (auto [type, rank] : std::vector<std::pair<std::string, int>>{
             {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"C", 3}, {"D", 4}, {"G", 2}}) {
      CAPTURE(type + std::to_string(rank) + " p=" + std::to_string(p));
      const auto a = u_of(type, rank, p);
      const auto v = nullcone_equations(*a);
      for (const auto& eq : v.equations) {
        CHECK_FALSE(eq.involves(a->n() - 1));
        for (const auto& [m, c] : eq.terms()) CHECK(m.degree() == p);
        CHECK(eq.leading().second == 1);
      }
      // indicator points are in V(A)
      for (std::size_t i = 0; i < a->n(); ++i) {
        std::vector<Scalar> x(a->n(), 0);
        x[i] = 1;
        CHECK(v.contains(*a->field(), x));
      }
      // scaling invariance
      std::mt19937 rng(p * 100 + rank);
      const auto f4 = Field::make(p, 2);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Scalar> x(a->n()), y(a->n());
        for (auto& c : x) c = rng() % f4->size();
        const Scalar s = 1 + rng() % (f4->size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = f4->mul(s, x[i]);
        CHECK(v.contains(*f4, x) == v.contains(*f4, y));
      }
    }
  // a reversed presentation makes u_n non-central
  CHECK_THROWS_AS(nullcone_equations(*reverse_generators(*u_of("A", 2, 2))), Error);
}

TEST_CASE("rational points") {
  const auto a2 = u_of("A", 2, 3);
  const auto pts = nullcone_points(*a2, 1);
  CHECK(pts.size() == 13);
  CHECK(pts.front() == std::vector<Scalar>{1, 0, 0});
  CHECK(pts.back() == std::vector<Scalar>{0, 0, 1});

  // B2, p=2: ab = 0 in P^3 with c, d free: 3 choices of (a,b) up to the zero pair
  const auto b2 = u_of("B", 2, 2);
  const auto bp = nullcone_points(*b2, 1);
  std::size_t brute = 0;
  for (unsigned code = 1; code < 16; ++code) {
    const unsigned a = code & 1, b = (code >> 1) & 1;
    if (a * b == 0) ++brute;
  }
  CHECK(bp.size() == brute);
  for (const auto& x : bp) {
    CHECK(x[0] * x[1] == 0);
    CHECK(concrete_power(*b2, x).is_zero());
  }
  // extension degree 2: every point still has v^2 = 0
  const auto a22 = u_of("A", 2, 2);
  const auto f4 = Field::make(2, 2);
  for (const auto& x : nullcone_points(*a22, 2)) CHECK(f4->mul(x[0], x[1]) == 0);
  CHECK(nullcone_points(*a22, 2).size() == 5 + 5 - 1);
}

TEST_CASE("connectedness certificates") {
  const auto a2 = connectedness_certificate(*u_of("A", 2, 2), 1);
  CHECK(a2.num_components == 2);
  CHECK(a2.method == "line-graph");
  CHECK(connectedness_certificate(*u_of("A", 2, 2), 2).num_components == 2);

  const auto g2 = connectedness_certificate(*u_of("G", 2, 2), 1);
  CHECK(g2.num_components == 1);
  CHECK(connectedness_certificate(*u_of("G", 2, 2), 2).num_components == 1);
  CHECK(connectedness_certificate(*u_of("A", 3, 2), 1).num_components == 1);
  // B2 at p=2: ab = 0 with c free is a cone over [0,0,1]
  const auto b2 = connectedness_certificate(*u_of("B", 2, 2), 1);
  CHECK(b2.num_components == 1);
  CHECK(b2.method == "cone");

  for (std::uint32_t p : {3u, 5u})
    for (auto [type, rank] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"B", 2}, {"G", 2}, {"A", 3}, {"C", 3}})
      CHECK(connectedness_certificate(*u_of(type, rank, p), 1).num_components == 1);

  const auto a1a1 = build_restricted_enveloping({build_root_system("A", 1), build_root_system("A", 1)}, 2);
  CHECK(nullcone_equations(*a1a1).equations.empty());
  CHECK(connectedness_certificate(*a1a1, 1).num_components == 1);
  const auto a1 = connectedness_certificate(*u_of("A", 1, 2), 1);
  CHECK(a1.method == "empty");
  CHECK(a1.num_components == 0);
}

TEST_CASE("hub certificate on a large point set") {
  ConnectivityOptions opt;
  opt.line_graph_cap = 10;  // force the hub path
  opt.threads = 4;
  const auto rep = connectedness_certificate(*u_of("D", 4, 2), 1, opt);
  CHECK(rep.method == "hub");
  CHECK(rep.num_components == 1);
  opt.threads = 1;
  const auto again = connectedness_certificate(*u_of("D", 4, 2), 1, opt);
  CHECK(again.representatives == rep.representatives);
}
