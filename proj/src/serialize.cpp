#include "endoscope/serialize.hpp"

#include <cstdio>

#include "endoscope/error.hpp"

namespace endoscope {

namespace {

Json point_json(const std::vector<Scalar>& x) { return Json(x); }

}  // namespace

Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type();
  j["rank"] = rs.rank();
  j["positive_roots"] = rs.positive_roots();
  j["heights"] = rs.heights();
  return j;
}

Json to_json(const PbwAlgebra& a) {
  Json j;
  j["id"] = a.id();
  j["p"] = a.p();
  j["n"] = a.n();
  j["coalgebra"] = a.coalgebra() == Coalgebra::Primitive ? "primitive" : "divided_power";
  j["labels"] = a.labels();
  Json br = Json::array();
  for (const auto& [key, terms] : a.brackets()) {
    Json t = Json::array();
    for (const auto& term : terms) t.push_back({term.index, term.coef});
    br.push_back({{"i", key.first}, {"j", key.second}, {"terms", t}});
  }
  j["brackets"] = br;
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  BracketTable table;
  for (const auto& b : j.at("brackets")) {
    std::vector<BracketTerm> terms;
    for (const auto& t : b.at("terms")) terms.push_back({t.at(0).get<std::size_t>(), t.at(1).get<Scalar>()});
    table[{b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>()}] = std::move(terms);
  }
  const Coalgebra co = j.at("coalgebra") == "primitive" ? Coalgebra::Primitive : Coalgebra::DividedPower;
  return std::make_shared<const PbwAlgebra>(j.at("p").get<std::uint32_t>(), j.at("n").get<std::size_t>(),
                                            std::move(table), co, j.at("id").get<std::string>(),
                                            j.value("labels", std::vector<std::string>{}));
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<Scalar>(row.begin(), row.end()));
  }
  return rows;
}

Json to_json(const ModuleRep& m) {
  Json j;
  j["algebra_id"] = m.algebra()->id();
  j["dim"] = m.dim();
  j["field"] = {{"p", m.field()->p()}, {"e", m.field()->e()}};
  Json mats = Json::array();
  for (const auto& a : m.actions()) mats.push_back(to_json(a));
  j["matrices"] = mats;
  return j;
}

ModuleRep module_from_json(const Json& j, AlgebraPtr algebra) {
  if (j.contains("algebra_id") && j.at("algebra_id") != algebra->id())
    throw Error(ErrorKind::AlgebraMismatch, "module record is over " + j.at("algebra_id").get<std::string>());
  const std::size_t d = j.at("dim").get<std::size_t>();
  FieldPtr field = algebra->field();
  if (j.contains("field"))
    field = Field::make(j["field"].at("p").get<std::uint32_t>(), j["field"].at("e").get<std::uint32_t>());
  std::vector<Matrix> acts;
  for (const auto& mj : j.at("matrices")) {
    Matrix m(field, d, d);
    if (mj.size() != d) throw Error(ErrorKind::InvalidArgument, "matrix has the wrong number of rows");
    for (std::size_t r = 0; r < d; ++r) {
      if (mj[r].size() != d) throw Error(ErrorKind::InvalidArgument, "matrix has the wrong number of columns");
      for (std::size_t c = 0; c < d; ++c) {
        const auto v = mj[r][c].get<long long>();
        if (v < 0 || v >= static_cast<long long>(field->size()))
          throw Error(ErrorKind::InvalidArgument, "matrix entry outside the field");
        m(r, c) = static_cast<Scalar>(v);
      }
    }
    acts.push_back(std::move(m));
  }
  if (acts.size() != algebra->n()) throw Error(ErrorKind::InvalidArgument, "need one matrix per generator");
  ModuleRep m(std::move(algebra), field, d, std::move(acts));
  validate_relations(m);
  return m;
}

Json to_json(const JordanType& t) { return t.to_string(); }

Json to_json(const HypothesisReport& r) {
  Json j;
  j["algebra"] = r.algebra_id;
  j["passed"] = r.passed();
  Json clauses = Json::array();
  for (const auto& c : r.clauses) clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["clauses"] = clauses;
  return j;
}

Json to_json(const NullconeVariety& v) {
  Json j;
  j["algebra"] = v.algebra_id;
  j["p"] = v.p;
  j["n"] = v.n;
  j["equations"] = v.equation_strings();
  Json terms = Json::array();
  for (const auto& eq : v.equations) {
    Json t = Json::array();
    for (const auto& [m, c] : eq.terms()) {
      std::vector<unsigned> exps(v.n);
      for (std::size_t i = 0; i < v.n; ++i) exps[i] = m.exponent(i);
      t.push_back({{"exponents", exps}, {"coef", c}});
    }
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

NullconeVariety variety_from_json(const Json& j) {
  NullconeVariety v;
  v.algebra_id = j.at("algebra");
  v.p = j.at("p");
  v.n = j.at("n");
  const auto f = Field::make(v.p);
  for (const auto& t : j.at("terms")) {
    Polynomial poly;
    for (const auto& term : t) {
      Monomial m;
      const auto exps = term.at("exponents").get<std::vector<unsigned>>();
      for (std::size_t i = 0; i < exps.size(); ++i) m.set_exponent(i, exps[i]);
      poly.add_term(m, term.at("coef").get<Scalar>(), *f);
    }
    v.equations.push_back(std::move(poly));
  }
  return v;
}

Json to_json(const ComponentReport& r) {
  Json j;
  j["algebra"] = r.algebra_id;
  j["e"] = r.e;
  j["num_points"] = r.num_points ? Json(*r.num_points) : Json(nullptr);
  j["num_components"] = r.num_components;
  Json reps = Json::array();
  for (const auto& x : r.representatives) reps.push_back(point_json(x));
  j["representatives"] = reps;
  j["method"] = r.method;
  j["note"] = r.note;
  return j;
}

Json to_json(const EndotrivialCertificate& c) {
  return {{"module_dim", c.module_dim},   {"algebra_dim", c.algebra_dim}, {"free_rank", c.free_rank},
          {"residual_dim", c.residual_dim}, {"verdict", c.verdict},       {"congruence", c.congruence}};
}

Json to_json(const RankProfile& p) {
  Json rows = Json::array();
  for (const auto& e : p.entries) {
    Json r;
    r["point"] = point_json(e.point.coords);
    r["jordan_type"] = e.jordan.to_string();
    r["w_rank"] = e.w_rank;
    r["syzygy_degree"] = e.syzygy_degree ? Json(*e.syzygy_degree) : Json(nullptr);
    rows.push_back(r);
  }
  return {{"constant_rank", p.constant_rank()}, {"points", rows}};
}

Json to_json(const CensusResult& c) {
  Json j;
  j["dimension"] = c.dimension;
  j["tuples_total"] = c.tuples_total;
  j["tuples_examined"] = c.tuples_examined;
  j["partial"] = c.partial;
  j["modules_found"] = c.modules_found;
  j["endotrivial_found"] = c.endotrivial_found;
  Json classes = Json::array();
  for (const auto& cls : c.classes)
    classes.push_back({{"hits", cls.hits},
                       {"syzygy_degree", cls.syzygy_degree ? Json(*cls.syzygy_degree) : Json(nullptr)},
                       {"module", to_json(cls.representative)}});
  j["classes"] = classes;
  return j;
}

Json to_json(const WeylScanRow& r) {
  return {{"lambda", r.lambda},         {"dim", r.dim},         {"free_rank", r.free_rank},
          {"residual_dim", r.residual_dim}, {"verdict", r.verdict}, {"expected", r.expected}};
}

Json to_json(const Decomposition& d) {
  return {{"free_rank", d.free_rank},
          {"residual_dim", d.residual_dim},
          {"residual_trivial", d.residual_trivial},
          {"binomials_nonzero", d.binomials_nonzero}};
}

Json to_json(const ScreenResult& s) {
  Json j{{"lambda", s.lambda}, {"dim", s.dim}, {"modulus", s.modulus}, {"residue", s.residue}, {"passed", s.passed}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace endoscope
