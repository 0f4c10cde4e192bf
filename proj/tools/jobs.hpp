#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "endoscope/serialize.hpp"

namespace endoscope::cli {

struct JobResult {
  Json report;
  /// Extra files for the output directory, name -> contents.
  std::map<std::string, std::string> artifacts;
  std::size_t mismatches = 0;
  double seconds = 0;
};

struct JobContext {
  unsigned threads = 1;
  /// Empty disables the cache.
  std::filesystem::path cache_dir;
};

/// ENDOSCOPE_CACHE_DIR, else $XDG_CACHE_HOME/endoscope, else ~/.cache/endoscope.
std::filesystem::path default_cache_dir();

/// command is one of hypothesis, nullcone, weyl, census, jordan.
JobResult run_job(const std::string& command, const Json& config, const JobContext& ctx);

/// Algebra from a spec object; root systems go through the on-disk cache.
AlgebraPtr resolve_algebra(const Json& spec, const JobContext& ctx);
/// algebra_spec supplies the root system for "natural" modules.
ModuleRep resolve_module(const Json& spec, const AlgebraPtr& algebra, const Json& algebra_spec);

}  // namespace endoscope::cli
