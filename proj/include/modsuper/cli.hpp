#pragma once

// Experiment configuration, orchestration and structured reports.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "json.hpp"
#include "modsuper/invariants.hpp"
#include "modsuper/kwverify.hpp"

namespace modsuper {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string type;
  std::uint32_t p = 0;
  std::uint32_t k_max = 8;
  std::vector<std::string> chi_specs;  // zero | regular_semisimple[:seed] | nonregular_semisimple | explicit:v,.. | nilpotent_root:i
  std::vector<std::string> checks;
  int samples = 20;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& known_checks();

/// Flat key = value file; keys type, p, k_max, chi (repeatable), checks, samples, seed.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& file);
/// Throws ConfigError on an invalid prime, type, check name or character spec shape.
void validate(const ExperimentConfig& cfg);

struct NamedCharacter {
  std::string label;
  PCharacter chi;
};
/// Resolves a character spec; nonregular_semisimple falls back to zero when no
/// such character exists (noted in the label).
NamedCharacter resolve_character(const LieSuperalgebra& g, const std::string& spec, std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json report;
  std::string summary;
};

struct RunResult {
  std::vector<CheckResult> checks;
  bool passed() const;
};

RunResult run_experiment(const ExperimentConfig& cfg);

/// One <check>.json per check plus summary.txt.
void write_reports(const RunResult& r, const std::filesystem::path& dir);
std::string summary_text(const RunResult& r);

/// Individual checks, usable without a config.
CheckResult check_verma(const LieSuperalgebra& g, const std::vector<NamedCharacter>& chis, std::uint32_t k_max);
CheckResult check_phi(const LieSuperalgebra& g, const std::vector<NamedCharacter>& chis, std::uint32_t k_max);
CheckResult check_reflect(const LieSuperalgebra& g, const std::vector<NamedCharacter>& chis, std::uint32_t k_max);
/// Root-level reflection suite for any type (no algebra needed).
CheckResult check_reflect_roots(const TypeSpec& t);
/// Phi' invariance under reflections at random weights over GF(p^2).
CheckResult check_phi_roots(const TypeSpec& t, std::uint32_t p, int samples, std::uint64_t seed);
CheckResult check_sym(const LieSuperalgebra& g, const std::vector<NamedCharacter>& chis, int samples, std::uint64_t seed);
CheckResult check_coinduced(const LieSuperalgebra& g);
CheckResult check_family(const LieSuperalgebra& g, int samples, std::uint64_t seed);
CheckResult check_kw(const LieSuperalgebra& g, const std::vector<NamedCharacter>& chis, std::uint32_t k_max);
CheckResult check_semisimple(const LieSuperalgebra& g, const std::vector<NamedCharacter>& chis, std::uint32_t k_max);

struct CatalogRow {
  std::string type;
  std::uint32_t p;
  std::vector<std::string> checks;
  std::string note;
};
std::vector<CatalogRow> catalog();

std::string format_elem(const Field& F, Elem a);
std::string format_weight(const Field& F, const std::vector<Elem>& w);

}  // namespace modsuper
