#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "endoscope/error.hpp"
#include "endoscope/serialize.hpp"
#include "jobs.hpp"

namespace py = pybind11;
using namespace endoscope;

namespace {

// pybind11 holders cannot be shared_ptr<const T>
using PyAlgebra = std::shared_ptr<PbwAlgebra>;
PyAlgebra wrap(const AlgebraPtr& a) { return std::const_pointer_cast<PbwAlgebra>(a); }

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<std::vector<Scalar>>> matrices_of(const ModuleRep& m) {
  std::vector<std::vector<std::vector<Scalar>>> out;
  for (const auto& a : m.actions()) out.push_back(to_json(a).get<std::vector<std::vector<Scalar>>>());
  return out;
}

ModuleRep from_matrices(const PyAlgebra& a, const std::vector<std::vector<std::vector<long long>>>& mats) {
  std::vector<Matrix> acts;
  for (const auto& m : mats) acts.push_back(Matrix::from_ints(a->field(), m));
  return make_module(a, std::move(acts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact endotriviality computations over restricted enveloping and divided-power algebras";

  py::register_exception<Error>(m, "Error");

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init(&build_root_system), py::arg("type"), py::arg("rank"))
      .def_property_readonly("label", &RootSystem::label)
      .def_property_readonly("positive_roots", &RootSystem::positive_roots)
      .def_property_readonly("heights", &RootSystem::heights)
      .def("__len__", &RootSystem::size)
      .def("to_json", [](const RootSystem& rs) { return to_py(to_json(rs)); });
  m.def("weyl_dimension", &weyl_dimension, py::arg("root_system"), py::arg("weights"));

  py::class_<PbwAlgebra, PyAlgebra>(m, "Algebra")
      .def_property_readonly("id", &PbwAlgebra::id)
      .def_property_readonly("p", &PbwAlgebra::p)
      .def_property_readonly("n", &PbwAlgebra::n)
      .def_property_readonly("labels", &PbwAlgebra::labels)
      .def_property_readonly("dimension", &PbwAlgebra::dimension)
      .def("to_json", [](const PbwAlgebra& a) { return to_py(to_json(a)); })
      .def("check_hypothesis", [](const PbwAlgebra& a) { return to_py(to_json(check_hypothesis1(a))); })
      .def("__repr__", [](const PbwAlgebra& a) { return "<Algebra " + a.id() + ">"; });

  m.def("restricted_enveloping",
        [](const std::string& type, int rank, std::uint32_t p) {
          return wrap(build_restricted_enveloping(build_root_system(type, rank), p));
        },
        py::arg("type"), py::arg("rank"), py::arg("p"));
  m.def(
      "elementary_abelian", [](std::uint32_t p, std::size_t r) { return wrap(build_elementary_abelian(p, r)); },
      py::arg("p"), py::arg("rank"));
  m.def(
      "divided_power", [](std::uint32_t p, unsigned r) { return wrap(divided_power_algebra(p, r)); }, py::arg("p"),
      py::arg("r"));

  py::class_<ModuleRep>(m, "Module")
      .def(py::init(&from_matrices), py::arg("algebra"), py::arg("matrices"))
      .def_property_readonly("dim", &ModuleRep::dim)
      .def_property_readonly("algebra", [](const ModuleRep& x) { return wrap(x.algebra()); })
      .def_property_readonly("matrices", &matrices_of)
      .def("to_json", [](const ModuleRep& x) { return to_py(to_json(x)); })
      .def("__repr__", [](const ModuleRep& x) {
        return "<Module dim=" + std::to_string(x.dim()) + " over " + x.algebra()->id() + ">";
      });

  m.def("trivial", [](const PyAlgebra& a, std::size_t copies) { return trivial_module(a, copies); }, py::arg("algebra"),
        py::arg("copies") = 1);
  m.def("regular", [](const PyAlgebra& a) { return regular_module(a); });
  m.def("natural", [](const PyAlgebra& a, int rank) { return natural_rep_typeA(build_root_system("A", rank), a); },
        py::arg("algebra"), py::arg("rank"));
  m.def("weyl_module", [](std::uint32_t p, unsigned r, std::uint64_t l) { return weyl_module(p, r, l).module; },
        py::arg("p"), py::arg("r"), py::arg("lam"));
  m.def("tensor", &tensor);
  m.def("dual", &dual);
  m.def("direct_sum", py::overload_cast<const ModuleRep&, const ModuleRep&>(&direct_sum));
  m.def("syzygy", &syzygy);
  m.def("cosyzygy", &cosyzygy);
  m.def("syzygy_power", &syzygy_power, py::arg("module"), py::arg("k"));
  m.def("strip_projectives", [](const ModuleRep& x) {
    auto s = strip_projectives(x);
    return py::make_tuple(s.free_rank, s.residual);
  });
  m.def("is_isomorphic", [](const ModuleRep& a, const ModuleRep& b) { return is_isomorphic(a, b).isomorphic; });
  m.def("is_endotrivial", [](const ModuleRep& x) { return to_py(to_json(is_endotrivial(x))); });
  m.def("identify_syzygy", &identify_syzygy, py::arg("module"), py::arg("max_degree") = 6);
  m.def("constant_jordan_scan", [](const ModuleRep& x, unsigned e) { return constant_jordan_scan(x, e).passed; },
        py::arg("module"), py::arg("e") = 1);

  m.def("nullcone_equations", [](const PyAlgebra& a) { return nullcone_equations(*a).equation_strings(); });
  m.def("components",
        [](const PyAlgebra& a, unsigned e, unsigned threads) {
          ConnectivityOptions opt;
          opt.threads = threads;
          return to_py(to_json(connectedness_certificate(*a, e, opt)));
        },
        py::arg("algebra"), py::arg("e") = 1, py::arg("threads") = 1);

  m.def("weyl_scan",
        [](std::uint32_t p, unsigned r, std::uint64_t lmax) {
          Json rows = Json::array();
          for (const auto& row : endotrivial_weyl_scan(p, r, lmax)) rows.push_back(to_json(row));
          return to_py(rows);
        },
        py::arg("p"), py::arg("r"), py::arg("lambda_max"));

  m.def("census",
        [](const PyAlgebra& a, std::size_t d, std::uint64_t budget, std::uint64_t seed, bool random) {
          CensusOptions opt;
          opt.budget = budget;
          opt.seed = seed;
          opt.mode = random ? CensusMode::Random : CensusMode::Exhaustive;
          return to_py(to_json(census(a, d, opt)));
        },
        py::arg("algebra"), py::arg("dimension"), py::arg("budget") = std::uint64_t(1) << 18, py::arg("seed") = 0,
        py::arg("random") = false);

  m.def("run_job",
        [](const std::string& command, const std::string& config, unsigned threads) {
          cli::JobContext ctx;
          ctx.threads = threads;
          ctx.cache_dir = cli::default_cache_dir();
          auto res = cli::run_job(command, Json::parse(config), ctx);
          return py::make_tuple(to_py(res.report), res.mismatches);
        },
        py::arg("command"), py::arg("config"), py::arg("threads") = 1);
}
