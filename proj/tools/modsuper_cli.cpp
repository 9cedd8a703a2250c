#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "modsuper/cli.hpp"

using namespace modsuper;

namespace {

struct Common {
  std::uint64_t seed = 1;
  std::uint32_t k_max = 8;
  int samples = 20;
  std::string out;
  std::string format = "text";
};

int emit(const RunResult& r, const Common& c) {
  if (!c.out.empty()) write_reports(r, c.out);
  if (c.format == "structured") {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& x : r.checks) all.push_back(x.report);
    std::cout << all.dump(2) << "\n";
  } else {
    std::cout << summary_text(r);
  }
  return r.passed() ? 0 : 1;
}

ExperimentConfig base(const Common& c, const std::string& type, std::uint32_t p) {
  ExperimentConfig cfg;
  cfg.type = type;
  cfg.p = p;
  cfg.k_max = c.k_max;
  cfg.samples = c.samples;
  cfg.seed = c.seed;
  return cfg;
}

int single_lambda(const ExperimentConfig& cfg, const std::string& lambda) {
  validate(cfg);
  const auto g = LieSuperalgebra::build(TypeSpec::parse(cfg.type), Field::create(cfg.p));
  const auto nc = resolve_character(g, cfg.chi_specs.empty() ? "zero" : cfg.chi_specs.front(), cfg.seed);
  const LambdaSet L = lambda_set(g, nc.chi, cfg.k_max);
  if (L.k != 1) throw ConfigError("explicit lambda needs Lambda_chi inside GF(p); use --lambda all");
  std::vector<Elem> lam;
  std::stringstream ss(lambda);
  for (std::string tok; std::getline(ss, tok, ',');) lam.push_back(L.field().from_int(std::stoll(tok)));
  if (!in_lambda_set(*L.g, L.chi, lam)) throw ConfigError("lambda is not in Lambda_chi");
  VermaFamily fam(L.g, L.g->simple_system(), L.chi);
  const BabyVerma Z = fam.build(lam);
  const bool o = is_irreducible_oracle(Z).irreducible;
  const Elem pc = fam.criterion_value(lam);
  std::cout << "chi: " << nc.label << "\nlambda: " << format_weight(L.field(), lam) << "\ndim Z: " << Z.dim()
            << "\nphi (module): " << L.field().format(Z.phi_via_module()) << "\nphi (product): " << L.field().format(pc)
            << "\nirreducible (oracle): " << (o ? "yes" : "no") << "\nirreducible (criterion): " << (pc.v ? "yes" : "no")
            << "\n";
  return o == (pc.v != 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Lie superalgebras over prime fields"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--k-max", c.k_max, "largest extension degree tried for Lambda_chi")->check(CLI::Range(1, 8));
  app.add_option("--samples", c.samples, "random samples per property")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "directory for JSON reports");
  app.add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"text", "structured"}));

  std::string config, type, lambda = "all";
  std::uint32_t p = 0;
  std::vector<std::string> chis;

  auto* run = app.add_subcommand("run", "run the checks of a config file");
  run->add_option("config", config)->required()->check(CLI::ExistingFile);
  auto* list = app.add_subcommand("list", "list supported types and checks");
  auto* verma = app.add_subcommand("verma", "irreducibility of baby Verma modules");
  verma->add_option("--type", type)->required();
  verma->add_option("--p", p)->required();
  verma->add_option("--chi", chis, "character spec (repeatable)");
  verma->add_option("--lambda", lambda, "'all' or comma-separated values on the Cartan basis");
  auto* reflect = app.add_subcommand("reflect", "odd reflection suite");
  reflect->add_option("--type", type)->required();
  reflect->add_option("--p", p, "also check singular vectors and Phi over GF(p)");
  auto* kw = app.add_subcommand("kw", "Kac-Weisfeiler divisibility of simple heads");
  kw->add_option("--type", type)->required();
  kw->add_option("--p", p)->required();
  kw->add_option("--chi", chis, "character spec (repeatable)");
  auto* sym = app.add_subcommand("sym", "invariant ideals of S_xi");
  sym->add_option("--type", type)->required();
  sym->add_option("--p", p)->required();
  sym->add_option("--xi", chis, "character spec (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      std::cout << "checks:";
      for (const auto& k : known_checks()) std::cout << " " << k;
      std::cout << "\n";
      for (const auto& row : catalog()) {
        std::cout << row.type << "  p=" << row.p << "  ";
        for (std::size_t i = 0; i < row.checks.size(); ++i) std::cout << (i ? "," : "") << row.checks[i];
        if (!row.note.empty()) std::cout << "  [" << row.note << "]";
        std::cout << "\n";
      }
      return 0;
    }
    if (*run) {
      ExperimentConfig cfg = load_config(config);
      if (app.count("--seed")) cfg.seed = c.seed;
      if (app.count("--k-max")) cfg.k_max = c.k_max;
      if (app.count("--samples")) cfg.samples = c.samples;
      return emit(run_experiment(cfg), c);
    }
    if (*reflect) {
      const TypeSpec t = TypeSpec::parse(type);
      if (p == 0) {
        RunResult r;
        r.checks.push_back(check_reflect_roots(t));
        return emit(r, c);
      }
      auto cfg = base(c, type, p);
      cfg.checks = {"reflect"};
      return emit(run_experiment(cfg), c);
    }
    auto cfg = base(c, type, p);
    cfg.chi_specs = chis;
    if (*verma) {
      if (lambda != "all") return single_lambda(cfg, lambda);
      cfg.checks = {"verma"};
    } else if (*kw) {
      cfg.checks = {"kw"};
    } else if (*sym) {
      cfg.checks = {"sym"};
    }
    return emit(run_experiment(cfg), c);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RootSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return 1;
  }
}
