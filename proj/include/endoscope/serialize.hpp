#pragma once

#include <json.hpp>

#include "endoscope/algebra.hpp"
#include "endoscope/endotest.hpp"
#include "endoscope/modrep.hpp"
#include "endoscope/nullcone.hpp"
#include "endoscope/rootdata.hpp"
#include "endoscope/sl2weyl.hpp"

namespace endoscope {

using Json = nlohmann::ordered_json;

Json to_json(const RootSystem& rs);
/// Presentation: id, p, n, coalgebra, labels, brackets.
Json to_json(const PbwAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j);
/// {algebra_id, dim, field, matrices: [[row-major scalars]]}
Json to_json(const ModuleRep& m);
/// The algebra must match the record's algebra_id.
ModuleRep module_from_json(const Json& j, AlgebraPtr algebra);
Json to_json(const Matrix& m);
Json to_json(const JordanType& t);

Json to_json(const HypothesisReport& r);
Json to_json(const NullconeVariety& v);
NullconeVariety variety_from_json(const Json& j);
Json to_json(const ComponentReport& r);
Json to_json(const EndotrivialCertificate& c);
Json to_json(const RankProfile& p);
Json to_json(const CensusResult& c);
Json to_json(const WeylScanRow& r);
Json to_json(const Decomposition& d);
Json to_json(const ScreenResult& s);

/// 64-bit FNV-1a
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t x);

}  // namespace endoscope
