#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "endoscope/error.hpp"
#include "endoscope/parallel.hpp"
#include "jobs.hpp"

namespace fs = std::filesystem;
using namespace endoscope;

int main(int argc, char** argv) {
  CLI::App app{"Endotriviality toolkit for unipotent group algebras"};
  app.require_subcommand(1);
  std::string config_path, out_dir;
  unsigned threads = 1;
  bool no_cache = false;
  for (const char* name : {"hypothesis", "nullcone", "weyl", "census", "jordan"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON job file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "directory for report.json and artifacts (default: stdout)");
    sub->add_option("--threads", threads, "worker threads, 0 = all cores");
    sub->add_flag("--no-cache", no_cache, "ignore the algebra cache");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::ifstream in(config_path);
    const auto config = Json::parse(in);
    cli::JobContext ctx;
    ctx.threads = resolve_threads(threads);
    if (!no_cache) ctx.cache_dir = cli::default_cache_dir();
    const auto res = cli::run_job(command, config, ctx);

    const std::string text = res.report.dump(2) + "\n";
    if (out_dir.empty()) {
      std::cout << text;
    } else {
      fs::create_directories(out_dir);
      std::ofstream(fs::path(out_dir) / "report.json") << text;
      for (const auto& [name, body] : res.artifacts) std::ofstream(fs::path(out_dir) / name) << body;
      // kept apart so report.json stays byte-identical between runs
      std::ofstream(fs::path(out_dir) / "timing.json")
          << Json{{"command", command}, {"seconds", res.seconds}, {"threads", ctx.threads}}.dump(2) << "\n";
    }
    std::cerr << command << ": " << res.report["summary"]["items"] << " items, "
              << res.report["summary"]["expectations"] << " expectations, " << res.mismatches << " mismatches, "
              << res.seconds << " s, fingerprint " << res.report["fingerprint"].get<std::string>() << "\n";
    return res.mismatches ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "endoscope: " << e.what() << "\n";
    return 1;
  }
}
