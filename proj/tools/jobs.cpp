#include "jobs.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "endoscope/error.hpp"
#include "endoscope/parallel.hpp"

#ifndef ENDOSCOPE_VERSION
#define ENDOSCOPE_VERSION "0.0.0"
#endif

namespace endoscope::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCacheVersion = "v1";

// ---- cache ---------------------------------------------------------------

std::optional<Json> cache_load(const JobContext& ctx, const std::string& key) {
  if (ctx.cache_dir.empty()) return std::nullopt;
  std::ifstream in(ctx.cache_dir / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const std::exception&) {
    return std::nullopt;  // torn or foreign file: rebuild
  }
}

void cache_store(const JobContext& ctx, const std::string& key, const Json& j) {
  if (ctx.cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(ctx.cache_dir, ec);
  if (ec) return;
  // write then rename so concurrent runs never see half a file
  const auto tmp = ctx.cache_dir / (key + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  fs::rename(tmp, ctx.cache_dir / (key + ".json"), ec);
  if (ec) fs::remove(tmp, ec);
}

std::string cache_key(const std::string& what) { return hex64(fnv1a(what + "|" + kCacheVersion)); }

// ---- config helpers --------------------------------------------------------

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

const std::set<std::string> kTypes{"A", "B", "C", "D", "E", "F", "G"};

std::string checked_type(const Json& spec) {
  require(spec.contains("type"), "root system spec needs a type");
  const auto t = spec.at("type").get<std::string>();
  if (!kTypes.count(t)) throw Error(ErrorKind::UnknownType, "unknown root system type '" + t + "'");
  return t;
}

/// Simple types up to max_rank, one per isomorphism class.
std::vector<std::pair<std::string, int>> simple_types(int min_rank, int max_rank) {
  std::vector<std::pair<std::string, int>> out;
  for (int r = std::max(1, min_rank); r <= max_rank; ++r) {
    out.push_back({"A", r});
    if (r >= 2) out.push_back({"B", r});
    if (r >= 3) out.push_back({"C", r});
    if (r >= 4) out.push_back({"D", r});
    if (r >= 6 && r <= 8) out.push_back({"E", r});
    if (r == 4) out.push_back({"F", r});
    if (r == 2) out.push_back({"G", r});
  }
  return out;
}

/// "algebras" list plus an optional "corpus" {min_rank, max_rank, primes, types}.
std::vector<Json> algebra_specs(const Json& config) {
  std::vector<Json> out;
  if (config.contains("algebras"))
    for (const auto& s : config.at("algebras")) out.push_back(s);
  if (config.contains("corpus")) {
    const auto& c = config.at("corpus");
    const auto primes = c.at("primes").get<std::vector<std::uint32_t>>();
    std::set<std::string> only;
    if (c.contains("types")) only = c.at("types").get<std::set<std::string>>();
    for (auto p : primes)
      for (const auto& [t, r] : simple_types(get_or(c, "min_rank", 1), c.at("max_rank").get<int>()))
        if (only.empty() || only.count(t)) out.push_back({{"kind", "root_system"}, {"type", t}, {"rank", r}, {"p", p}});
  }
  require(!out.empty(), "config lists no algebras");
  return out;
}

std::string spec_label(const Json& spec) {
  const auto kind = get_or<std::string>(spec, "kind", "root_system");
  if (kind == "root_system") return spec.at("type").get<std::string>() + std::to_string(spec.at("rank").get<int>());
  return kind;
}

// ---- expectations ------------------------------------------------------------

class Checks {
 public:
  void add(const std::string& name, const Json& expected, const Json& actual, const std::string& source) {
    const bool met = expected == actual;
    if (!met) ++mismatches_;
    list_.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"source", source}, {"met", met}});
  }
  Json json() const { return list_; }
  std::size_t mismatches() const { return mismatches_; }

 private:
  Json list_ = Json::array();
  std::size_t mismatches_ = 0;
};

/// Item-level "expect" over the config-level one.
Json merged_expect(const Json& config, const Json& item) {
  Json e = config.value("expect", Json::object());
  if (item.is_object() && item.contains("expect"))
    for (const auto& [k, v] : item.at("expect").items()) e[k] = v;
  return e;
}

std::string source_of(const Json& expect) { return expect.value("source", "config"); }

Json sorted_strings(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---- commands --------------------------------------------------------------

struct Item {
  Json json;
  Checks checks;
  std::map<std::string, std::string> artifacts;
};

template <class Fn>
std::vector<Item> run_items(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<Item> items(count);
  parallel_chunks(count, count, threads, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) items[i] = fn(i);
  });
  return items;
}

Json lift_json(const PbwAlgebra& a, const LiftCheck& c) {
  Json j{{"x", a.element_to_string(c.x)}, {"disposition", to_string(c.disposition)}, {"x^p", a.element_to_string(c.power)}};
  if (c.disposition == LiftDisposition::UnitMultiple) j["unit_factor"] = a.element_to_string(c.unit_factor);
  return j;
}

std::vector<Item> cmd_hypothesis(const Json& config, const JobContext& ctx) {
  const auto specs = algebra_specs(config);
  const bool sweep = get_or(config, "sweep", true);
  const std::size_t sweep_max_n = get_or<std::size_t>(config, "sweep_max_n", 6);
  JobContext inner = ctx;
  inner.threads = 1;
  return run_items(specs.size(), ctx.threads, [&](std::size_t i) {
    Item it;
    const auto& spec = specs[i];
    const auto expect = merged_expect(config, spec);
    const auto a = resolve_algebra(spec, inner);
    it.json = {{"algebra", a->id()}, {"n", a->n()}};
    if (a->n() <= 1) {
      it.json["status"] = "skipped";
      it.json["note"] = "n = 1: the hypothesis is vacuous";
      if (expect.contains("skipped")) it.checks.add("skipped", expect["skipped"], true, source_of(expect));
      return it;
    }
    it.json["status"] = "checked";
    const auto rep = check_hypothesis1(*a);
    it.json["report"] = to_json(rep);
    if (expect.contains("pass")) it.checks.add("pass", expect["pass"], rep.passed(), source_of(expect));
    if (expect.contains("skipped")) it.checks.add("skipped", expect["skipped"], false, source_of(expect));
    if (sweep && a->n() <= sweep_max_n) {
      const auto lifts = hypothesis3_sweep(*a);
      std::map<std::string, std::size_t> counts{{"lifts", 0}, {"unit_multiple", 0}, {"neither", 0}};
      Json cands = Json::array();
      for (const auto& c : lifts) {
        ++counts[c.disposition == LiftDisposition::Lifts          ? "lifts"
                 : c.disposition == LiftDisposition::UnitMultiple ? "unit_multiple"
                                                                  : "neither"];
        if (cands.size() < 64) cands.push_back(lift_json(*a, c));
      }
      const bool all_ab = counts["neither"] == 0;
      it.json["lift_sweep"] = {{"candidates", lifts.size()},
                               {"lifts", counts["lifts"]},
                               {"unit_multiple", counts["unit_multiple"]},
                               {"neither", counts["neither"]},
                               {"all_a_or_b", all_ab},
                               {"listed", cands}};
      if (expect.contains("sweep_all_a_or_b"))
        it.checks.add("sweep_all_a_or_b", expect["sweep_all_a_or_b"], all_ab, source_of(expect));
    }
    return it;
  });
}

NullconeVariety cached_variety(const Json& spec, const AlgebraPtr& a, const JobContext& ctx) {
  const auto key = cache_key("nullcone|" + spec.dump());
  if (auto j = cache_load(ctx, key); j && j->value("algebra", "") == a->id()) return variety_from_json(*j);
  auto v = nullcone_equations(*a);
  cache_store(ctx, key, to_json(v));
  return v;
}

std::vector<Item> cmd_nullcone(const Json& config, const JobContext& ctx) {
  const auto specs = algebra_specs(config);
  const auto extensions = get_or(config, "extensions", std::vector<unsigned>{1});
  ConnectivityOptions opt;
  opt.threads = ctx.threads;
  opt.line_graph_cap = get_or(config, "line_graph_cap", opt.line_graph_cap);
  opt.enumeration_cap = get_or(config, "enumeration_cap", opt.enumeration_cap);
  // items run in sequence; the point enumeration inside each is parallel
  return run_items(specs.size(), 1, [&](std::size_t i) {
    Item it;
    const auto& spec = specs[i];
    const auto expect = merged_expect(config, spec);
    const auto a = resolve_algebra(spec, ctx);
    const auto v = cached_variety(spec, a, ctx);
    it.json = {{"algebra", a->id()}, {"variety", to_json(v)}};
    if (expect.contains("equations"))
      it.checks.add("equations", sorted_strings(expect["equations"].get<std::vector<std::string>>()),
                    sorted_strings(v.equation_strings()), source_of(expect));
    Json comps = Json::array();
    for (unsigned e : extensions) {
      const auto rep = connectedness_certificate(v, e, opt);
      comps.push_back(to_json(rep));
      if (expect.contains("num_components")) {
        const auto& want = expect["num_components"];
        if (want.is_number())
          it.checks.add("num_components[e=" + std::to_string(e) + "]", want, rep.num_components, source_of(expect));
        else if (want.contains(std::to_string(e)))
          it.checks.add("num_components[e=" + std::to_string(e) + "]", want[std::to_string(e)], rep.num_components,
                        source_of(expect));
      }
    }
    it.json["components"] = comps;
    it.json["note"] = "components are those of the graph on F_{p^e}-points joined by lines in the variety";
    return it;
  });
}

std::string weyl_table(const std::vector<WeylScanRow>& rows) {
  std::ostringstream os;
  os << "lambda\tdim\tfree_rank\tresidual_dim\tverdict\texpected\n";
  for (const auto& r : rows)
    os << r.lambda << '\t' << r.dim << '\t' << r.free_rank << '\t' << r.residual_dim << '\t' << (r.verdict ? 1 : 0)
       << '\t' << (r.expected ? 1 : 0) << '\n';
  return os.str();
}

Item weyl_task(const Json& task, const JobContext& ctx) {
  Item it;
  const auto kind = task.at("kind").get<std::string>();
  const auto expect = task.value("expect", Json::object());
  const auto src = source_of(expect);
  it.json = {{"kind", kind}};
  if (kind == "scan") {
    const auto p = task.at("p").get<std::uint32_t>();
    const auto r = task.at("r").get<unsigned>();
    const auto lmax = task.at("lambda_max").get<std::uint64_t>();
    const auto rows = endotrivial_weyl_scan(p, r, lmax, ctx.threads);
    Json js = Json::array();
    std::vector<std::uint64_t> got, predicted;
    for (const auto& row : rows) {
      js.push_back(to_json(row));
      if (row.verdict) got.push_back(row.lambda);
      if (row.expected) predicted.push_back(row.lambda);
    }
    it.json.update({{"p", p}, {"r", r}, {"lambda_max", lmax}, {"rows", js}});
    it.json["note"] = "verdicts are computed over U_r; for SL_2 the G_r verdict reduces to this one";
    it.checks.add("endotrivial set = {lambda = 0 or -2 mod p^r}", Json(predicted), Json(got),
                  expect.value("source", "published"));
    if (expect.contains("endotrivial")) it.checks.add("endotrivial", expect["endotrivial"], Json(got), src);
    it.artifacts["weyl_scan_p" + std::to_string(p) + "_r" + std::to_string(r) + ".tsv"] = weyl_table(rows);
  } else if (kind == "decomposition") {
    const auto p = task.at("p").get<std::uint32_t>();
    const auto r = task.at("r").get<unsigned>();
    Json rows = Json::array();
    for (auto n : task.at("n").get<std::vector<std::uint64_t>>()) {
      const auto d = weyl_restriction_decomposition(p, r, n);
      Json row = to_json(d);
      row["n"] = n;
      rows.push_back(row);
      it.checks.add("V(" + std::to_string(n) + "p^r) = A^" + std::to_string(n) + " + k",
                    Json{{"free_rank", n}, {"residual_trivial", true}},
                    Json{{"free_rank", d.free_rank}, {"residual_trivial", d.residual_trivial}},
                    expect.value("source", "published"));
    }
    it.json.update({{"p", p}, {"r", r}, {"rows", rows}});
  } else if (kind == "screen") {
    const auto rs = build_root_system(checked_type(task), task.at("rank").get<int>());
    const auto p = task.at("p").get<std::uint32_t>();
    const auto r = get_or(task, "r", 1u);
    Json rows = Json::array();
    Json passed = Json::array();
    for (const auto& l : task.at("lambdas")) {
      const auto s = dimension_screen(rs, p, r, l.get<std::vector<long long>>());
      rows.push_back(to_json(s));
      passed.push_back(s.passed);
    }
    it.json.update({{"type", rs.label()}, {"p", p}, {"r", r}, {"rows", rows}});
    if (expect.contains("passed")) {
      Json want = expect["passed"];
      if (want.is_boolean()) want = Json(std::vector<bool>(passed.size(), want.get<bool>()));
      it.checks.add("screen passed", want, passed, src);
    }
  } else if (kind == "range") {
    const auto p = task.at("p").get<std::uint32_t>();
    const auto r = get_or(task, "r", 1u);
    Json rows = Json::array();
    std::vector<std::uint64_t> endo;
    for (const auto& row : simple_tilting_range_check(p, r)) {
      rows.push_back({{"lambda", row.lambda}, {"endotrivial", row.endotrivial}, {"screen_passed", row.screen_passed}});
      if (row.endotrivial) endo.push_back(row.lambda);
    }
    it.json.update({{"p", p}, {"r", r}, {"rows", rows}});
    if (expect.contains("endotrivial")) it.checks.add("endotrivial", expect["endotrivial"], Json(endo), src);
  } else if (kind == "self_inverse") {
    const auto p = task.at("p").get<std::uint32_t>();
    const auto s = self_inverse_check(p);
    it.json.update({{"p", p}, {"free_rank", s.free_rank}, {"residual_dim", s.residual.dim()}});
    it.checks.add("V(p-2) (x) V(p-2) strips to k", 1, s.residual.dim(), expect.value("source", "published"));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown weyl task kind '" + kind + "'");
  }
  return it;
}

std::vector<Item> cmd_weyl(const Json& config, const JobContext& ctx) {
  require(config.contains("tasks"), "weyl config needs tasks");
  const auto& tasks = config.at("tasks");
  std::vector<Item> items;
  for (const auto& t : tasks) items.push_back(weyl_task(t, ctx));
  return items;
}

std::vector<Item> cmd_census(const Json& config, const JobContext& ctx) {
  require(config.contains("algebra"), "census config needs an algebra");
  const auto a = resolve_algebra(config.at("algebra"), ctx);
  std::vector<std::size_t> dims;
  if (config.contains("dimensions")) dims = config.at("dimensions").get<std::vector<std::size_t>>();
  if (config.contains("dimension")) dims.push_back(config.at("dimension").get<std::size_t>());
  require(!dims.empty(), "census config needs a dimension");
  CensusOptions opt;
  const auto mode = get_or<std::string>(config, "mode", "exhaustive");
  require(mode == "exhaustive" || mode == "random", "census mode is exhaustive or random");
  opt.mode = mode == "random" ? CensusMode::Random : CensusMode::Exhaustive;
  if (opt.mode == CensusMode::Random) require(config.contains("seed"), "random census needs a seed");
  opt.seed = get_or<std::uint64_t>(config, "seed", 0);
  opt.budget = get_or(config, "budget", opt.budget);
  opt.threads = ctx.threads;
  std::vector<Item> items;
  for (auto d : dims) {
    Item it;
    const auto expect = merged_expect(config, Json(nullptr));
    const auto key = std::to_string(d);
    const auto res = census(a, d, opt);
    it.json = {{"algebra", a->id()}, {"mode", mode}, {"result", to_json(res)}};
    std::vector<int> degrees;
    for (std::size_t c = 0; c < res.classes.size(); ++c) {
      if (res.classes[c].syzygy_degree) degrees.push_back(*res.classes[c].syzygy_degree);
      it.artifacts["census_d" + key + "_class" + std::to_string(c) + ".json"] =
          to_json(res.classes[c].representative).dump(2) + "\n";
    }
    std::sort(degrees.begin(), degrees.end());
    const auto per_dim = expect.value(key, Json::object());
    const auto src = per_dim.value("source", source_of(expect));
    if (per_dim.contains("classes")) it.checks.add("classes[d=" + key + "]", per_dim["classes"], res.classes.size(), src);
    if (per_dim.contains("syzygy_degrees"))
      it.checks.add("syzygy_degrees[d=" + key + "]", per_dim["syzygy_degrees"], Json(degrees), src);
    if (per_dim.contains("partial")) it.checks.add("partial[d=" + key + "]", per_dim["partial"], res.partial, src);
    items.push_back(std::move(it));
  }
  return items;
}

std::vector<Item> cmd_jordan(const Json& config, const JobContext& ctx) {
  require(config.contains("algebra") && config.contains("modules"), "jordan config needs an algebra and modules");
  const auto& aspec = config.at("algebra");
  const auto a = resolve_algebra(aspec, ctx);
  const auto e = get_or(config, "e", 1u);
  const bool profile = get_or(config, "profile", true);
  const bool degrees = get_or(config, "degrees", false);
  std::vector<Item> items;
  for (const auto& mspec : config.at("modules")) {
    Item it;
    const auto expect = mspec.value("expect", Json::object());
    const auto src = source_of(expect);
    const auto m = resolve_module(mspec, a, aspec);
    const auto cert = is_endotrivial(m);
    const auto scan = constant_jordan_scan(m, e, ctx.threads);
    it.json = {{"algebra", a->id()}, {"module", mspec}, {"dim", m.dim()}, {"certificate", to_json(cert)}};
    Json sj{{"passed", scan.passed}, {"points_checked", scan.points_checked}};
    if (scan.witness) sj["witness"] = scan.witness->to_string();
    if (scan.witness_type) sj["witness_type"] = scan.witness_type->to_string();
    it.json["jordan_scan"] = sj;
    if (profile) it.json["rank_profile"] = to_json(rank_profile(m, e, degrees && cert.verdict, ctx.threads));
    std::optional<int> deg;
    if (mspec.value("identify", false) || expect.contains("syzygy_degree")) {
      deg = identify_syzygy(m);
      it.json["syzygy_degree"] = deg ? Json(*deg) : Json(nullptr);
    }
    if (expect.contains("endotrivial")) it.checks.add("endotrivial", expect["endotrivial"], cert.verdict, src);
    if (expect.contains("free_rank")) it.checks.add("free_rank", expect["free_rank"], cert.free_rank, src);
    if (expect.contains("constant_jordan")) it.checks.add("constant_jordan", expect["constant_jordan"], scan.passed, src);
    if (expect.contains("syzygy_degree"))
      it.checks.add("syzygy_degree", expect["syzygy_degree"], deg ? Json(*deg) : Json(nullptr), src);
    items.push_back(std::move(it));
  }
  return items;
}

}  // namespace

fs::path default_cache_dir() {
  if (const char* d = std::getenv("ENDOSCOPE_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "endoscope";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "endoscope";
  return {};
}

AlgebraPtr resolve_algebra(const Json& spec, const JobContext& ctx) {
  require(spec.is_object(), "algebra spec must be an object");
  const auto kind = get_or<std::string>(spec, "kind", "root_system");
  if (kind == "elementary_abelian")
    return build_elementary_abelian(spec.at("p").get<std::uint32_t>(), spec.at("rank").get<std::size_t>());
  if (kind == "divided_power") return divided_power_algebra(spec.at("p").get<std::uint32_t>(), spec.at("r").get<unsigned>());
  if (kind == "reversed") return reverse_generators(*resolve_algebra(spec.at("of"), ctx));
  const auto p = spec.at("p").get<std::uint32_t>();
  std::vector<RootSystem> factors;
  std::string key = "algebra|" + std::to_string(p);
  if (kind == "root_system") {
    factors.push_back(build_root_system(checked_type(spec), spec.at("rank").get<int>()));
  } else if (kind == "product") {
    for (const auto& f : spec.at("factors")) factors.push_back(build_root_system(checked_type(f), f.at("rank").get<int>()));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown algebra kind '" + kind + "'");
  }
  for (const auto& rs : factors) key += "|" + rs.label();
  key = cache_key(key);
  if (auto j = cache_load(ctx, key)) {
    try {
      return algebra_from_json(*j);
    } catch (const std::exception&) {
      // stale entry; rebuild below
    }
  }
  auto a = factors.size() == 1 ? build_restricted_enveloping(factors[0], p) : build_restricted_enveloping(factors, p);
  cache_store(ctx, key, to_json(*a));
  return a;
}

ModuleRep resolve_module(const Json& spec, const AlgebraPtr& algebra, const Json& algebra_spec) {
  const auto kind = spec.at("kind").get<std::string>();
  if (kind == "trivial") return trivial_module(algebra, get_or<std::size_t>(spec, "copies", 1));
  if (kind == "regular") return regular_module(algebra);
  if (kind == "natural") {
    const Json& src = spec.contains("type") ? spec : algebra_spec;
    const auto rs = build_root_system(checked_type(src), src.at("rank").get<int>());
    return natural_rep_typeA(rs, algebra);
  }
  if (kind == "syzygy") {
    const auto base = spec.contains("of") ? resolve_module(spec.at("of"), algebra, algebra_spec) : trivial_module(algebra);
    return syzygy_power(base, spec.at("degree").get<int>());
  }
  if (kind == "weyl") {
    require(get_or<std::string>(algebra_spec, "kind", "") == "divided_power", "weyl modules need a divided_power algebra");
    return weyl_module(algebra_spec.at("p").get<std::uint32_t>(), algebra_spec.at("r").get<unsigned>(),
                       spec.at("lambda").get<std::uint64_t>())
        .module;
  }
  if (kind == "matrices") return module_from_json(spec, algebra);
  if (kind == "file") {
    std::ifstream in(spec.at("path").get<std::string>());
    require(static_cast<bool>(in), "cannot read module file " + spec.at("path").get<std::string>());
    return module_from_json(Json::parse(in), algebra);
  }
  if (kind == "dual") return dual(resolve_module(spec.at("of"), algebra, algebra_spec));
  if (kind == "tensor" || kind == "sum") {
    std::vector<ModuleRep> parts;
    for (const auto& f : spec.at("of")) parts.push_back(resolve_module(f, algebra, algebra_spec));
    require(!parts.empty(), kind + " needs at least one part");
    if (kind == "sum") return direct_sum(parts);
    ModuleRep acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = tensor(acc, parts[i]);
    return acc;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown module kind '" + kind + "'");
}

JobResult run_job(const std::string& command, const Json& config, const JobContext& ctx) {
  require(config.is_object(), "config must be a JSON object");
  if (config.contains("command"))
    require(config.at("command") == command, "config is for '" + config.at("command").get<std::string>() + "'");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Item> items;
  if (command == "hypothesis") items = cmd_hypothesis(config, ctx);
  else if (command == "nullcone") items = cmd_nullcone(config, ctx);
  else if (command == "weyl") items = cmd_weyl(config, ctx);
  else if (command == "census") items = cmd_census(config, ctx);
  else if (command == "jordan") items = cmd_jordan(config, ctx);
  else throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");

  JobResult out;
  Json list = Json::array();
  std::size_t checked = 0;
  for (auto& it : items) {
    it.json["expectations"] = it.checks.json();
    checked += it.checks.json().size();
    out.mismatches += it.checks.mismatches();
    list.push_back(std::move(it.json));
    for (auto& [k, v] : it.artifacts) out.artifacts[k] = std::move(v);
  }
  Json report;
  report["tool"] = "endoscope";
  report["version"] = ENDOSCOPE_VERSION;
  report["command"] = command;
  report["config"] = config;
  report["items"] = list;
  report["summary"] = {{"items", items.size()}, {"expectations", checked}, {"mismatches", out.mismatches}};
  report["fingerprint"] = hex64(fnv1a(report.dump()));
  out.report = std::move(report);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace endoscope::cli
