#include <doctest.h>

#include <random>

#include "endoscope/endotest.hpp"
#include "endoscope/error.hpp"

using namespace endoscope;

namespace {

AlgebraPtr u_of(const std::string& type, int rank, std::uint32_t p) {
  return build_restricted_enveloping(build_root_system(type, rank), p);
}

PPoint point(const AlgebraPtr& a, std::vector<Scalar> coords) { return {a->field(), std::move(coords)}; }

}  // namespace

TEST_CASE("endotriviality certificates") {
  const auto e3 = build_elementary_abelian(3, 2);
  const ModuleRep k = trivial_module(e3);
  auto c = is_endotrivial(k);
  CHECK(c.verdict);
  CHECK(c.free_rank == 0);
  const auto om = is_endotrivial(syzygy(k));
  CHECK(om.module_dim == 8);
  CHECK(om.free_rank == 7);
  CHECK(om.residual_dim == 1);
  CHECK(om.verdict);
  CHECK(64 == 1 + 7 * 9);

  // free modules and sums of trivials are not endotrivial
  CHECK_FALSE(is_endotrivial(regular_module(e3)).verdict);
  CHECK_FALSE(is_endotrivial(trivial_module(e3, 2)).verdict);
  CHECK_FALSE(is_endotrivial(zero_module(e3)).verdict);

  // natural module of A2 at p=2: 9 = 1 + 8, endotrivial over the dihedral-type algebra
  const auto a2 = u_of("A", 2, 2);
  const auto nat = is_endotrivial(natural_rep_typeA(build_root_system("A", 2), a2));
  CHECK(nat.verdict);
  CHECK(nat.free_rank == 1);
  const auto a3 = u_of("A", 3, 2);
  CHECK_FALSE(is_endotrivial(natural_rep_typeA(build_root_system("A", 3), a3)).verdict);
}

TEST_CASE("jordan types at points") {
  const auto a2 = u_of("A", 2, 3);
  const ModuleRep k = trivial_module(a2);
  CHECK(jordan_type_at_point(k, point(a2, {1, 2, 0})).to_string() == "1[1]");
  const ModuleRep reg = regular_module(a2);
  for (const auto& pt : p_points(*a2, 1)) CHECK(jordan_type_at_point(reg, pt).to_string() == "9[3]");
  const ModuleRep om = syzygy(k);
  CHECK(om.dim() == 26);
  CHECK(jordan_type_at_point(om, point(a2, {1, 0, 0})).to_string() == "8[3]+1[2]");
  // over F_9
  const auto f9 = Field::make(3, 2);
  CHECK(jordan_type_at_point(om, {f9, {1, 5, 7}}).to_string() == "8[3]+1[2]");
}

TEST_CASE("constant jordan scans") {
  const auto a2 = u_of("A", 2, 3);
  const ModuleRep k = trivial_module(a2);
  CHECK(constant_jordan_scan(k, 1).passed);
  CHECK(constant_jordan_scan(syzygy(k), 1).passed);
  const auto bad = constant_jordan_scan(trivial_module(a2, 2), 1);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witness_type);
  CHECK(bad.witness_type->to_string() == "2[1]");
  const auto b2 = u_of("B", 2, 3);
  CHECK(constant_jordan_scan(cosyzygy(trivial_module(b2)), 1, 4).passed);
  CHECK(is_endotrivial_type(JordanType{{0, 1, 3}}, 3));
  CHECK(is_endotrivial_type(JordanType{{1, 0, 3}}, 3));
  CHECK_FALSE(is_endotrivial_type(JordanType{{0, 0, 3}}, 3));
  CHECK_FALSE(is_endotrivial_type(JordanType{{1, 1, 3}}, 3));
}

TEST_CASE("local syzygy degrees") {
  const auto a2 = u_of("A", 2, 3);
  const ModuleRep k = trivial_module(a2), om = syzygy(k), co = cosyzygy(k);
  for (const auto& pt : p_points(*a2, 1)) {
    if (!pt.coords[0] && !pt.coords[1]) {
      CHECK_THROWS_AS(local_syzygy_degree(k, pt), Error);
      continue;
    }
    CHECK(local_syzygy_degree(k, pt) == 0);
    CHECK(local_syzygy_degree(om, pt) == 1);
    CHECK(local_syzygy_degree(co, pt) == -1);
  }
  const ModuleRep om2 = syzygy(om);
  CHECK(local_syzygy_degree(om2, point(a2, {0, 1, 0})) == 2);
  // k + k restricts to k + k, which is no syzygy
  CHECK_THROWS_AS(local_syzygy_degree(trivial_module(a2, 2), point(a2, {1, 0, 0})), Error);
}

TEST_CASE("rank profiles") {
  const auto a2 = u_of("A", 2, 3);
  const auto pk = rank_profile(trivial_module(a2), 1);
  for (const auto& e : pk.entries) CHECK(e.w_rank == 0);
  const auto reg = rank_profile(regular_module(a2), 1);
  CHECK(reg.entries.size() == 12);
  for (const auto& e : reg.entries) CHECK(e.w_rank == 3);
  // k + A: m = 0 everywhere, rank (dim - 1)/p^2
  const ModuleRep m = direct_sum(trivial_module(a2), regular_module(a2));
  const auto pm = rank_profile(m, 1, true);
  CHECK(pm.constant_rank());
  for (const auto& e : pm.entries) {
    CHECK(e.w_rank == (m.dim() - 1) / 9);
    CHECK(e.syzygy_degree == 0);
    CHECK(e.jordan.dimension() == m.dim());
  }
}

TEST_CASE("identify syzygies") {
  const auto e2 = build_elementary_abelian(2, 2);
  const ModuleRep k = trivial_module(e2);
  CHECK(identify_syzygy(k) == 0);
  CHECK(identify_syzygy(syzygy_power(k, 3)) == 3);
  CHECK(identify_syzygy(direct_sum(cosyzygy(k), regular_module(e2))) == -1);
  CHECK_FALSE(identify_syzygy(trivial_module(e2, 2)).has_value());
}

TEST_CASE("census over the Klein four algebra") {
  const auto e2 = build_elementary_abelian(2, 2);
  const auto d1 = census(e2, 1);
  REQUIRE(d1.classes.size() == 1);
  CHECK(d1.classes[0].syzygy_degree == 0);
  CHECK(census(e2, 2).classes.empty());

  CensusOptions opt;
  opt.threads = 4;
  const auto d3 = census(e2, 3, opt);
  CHECK_FALSE(d3.partial);
  CHECK(d3.tuples_examined <= (std::uint64_t(1) << 18));
  REQUIRE(d3.classes.size() == 2);
  std::vector<int> degrees;
  for (const auto& c : d3.classes) degrees.push_back(c.syzygy_degree.value_or(99));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{-1, 1});
  opt.threads = 1;
  const auto again = census(e2, 3, opt);
  CHECK(again.endotrivial_found == d3.endotrivial_found);
  CHECK(again.classes[0].representative.actions() == d3.classes[0].representative.actions());

  CensusOptions small;
  small.budget = 100;
  const auto part = census(e2, 3, small);
  CHECK(part.partial);
  CHECK(part.tuples_examined == 100);

  CensusOptions rnd;
  rnd.mode = CensusMode::Random;
  rnd.seed = 7;
  rnd.budget = 3000;
  const auto r = census(e2, 3, rnd);
  CHECK(r.classes.size() <= 2);
  for (const auto& c : r.classes) CHECK(c.syzygy_degree.has_value());
}

TEST_CASE("endotrivial modules form a group") {
  const auto e3 = build_elementary_abelian(3, 2);
  const ModuleRep k = trivial_module(e3);
  const ModuleRep om = syzygy(k), co = cosyzygy(k);
  CHECK(is_endotrivial(tensor(om, om)).verdict);
  CHECK(is_endotrivial(dual(om)).verdict);
  CHECK(is_endotrivial(syzygy(om)).verdict);
  const auto st = strip_projectives(tensor(om, dual(om)));
  CHECK(st.residual.dim() == 1);
  CHECK(identify_syzygy(tensor(om, co)) == 0);
}

TEST_CASE("restriction to local subalgebras keeps endotriviality") {
  const auto a2 = u_of("A", 2, 3);
  const ModuleRep om = syzygy(trivial_module(a2));
  for (const auto& pt : p_points(*a2, 1)) {
    if (!pt.coords[0] && !pt.coords[1]) continue;
    CHECK(is_endotrivial(restrict_to_local(om, pt)).verdict);
  }
}
