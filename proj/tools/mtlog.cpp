#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtlog/engines.hpp"
#include "mtlog/errors.hpp"
#include "mtlog/eval.hpp"
#include "mtlog/parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mtlog::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string program_path;
  std::string dataset_path;
  std::string interpretation_path;
  std::string check_path;
  std::string output_path;
  std::string atom_text;
  mtlog::TimePoint at = 0;
  bool three_valued = false;
  bool enumerate = false;
  std::vector<mtlog::TimePoint> window;
  int max_iters = 10'000;
  std::uint64_t budget = 1'000'000;
  int random_count = 100;
  std::uint64_t seed = 0;
};

mtlog::EngineConfig engine_config(const Options& opt) {
  mtlog::EngineConfig cfg;
  cfg.max_iters = opt.max_iters;
  cfg.enumeration_budget = opt.budget;
  if (opt.window.size() == 2) {
    cfg.mode = mtlog::EngineConfig::Mode::Bounded;
    cfg.window_lo = opt.window[0];
    cfg.window_hi = opt.window[1];
  }
  return cfg;
}

mtlog::Program load_program(const Options& opt) {
  return mtlog::parse_program(read_file(opt.program_path));
}

mtlog::Dataset load_dataset(const Options& opt) {
  if (opt.dataset_path.empty()) return {};
  return mtlog::parse_dataset(read_file(opt.dataset_path));
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw mtlog::Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

int cmd_check(const Options& opt) {
  Output out(opt.output_path);
  out.stream() << load_program(opt).to_string();
  return kExitOk;
}

int cmd_ground(const Options& opt) {
  mtlog::Program program = load_program(opt);
  mtlog::Dataset dataset = load_dataset(opt);
  Output out(opt.output_path);
  for (const mtlog::Rule& r : mtlog::ground(program, mtlog::active_constants(program, dataset))) {
    out.stream() << r.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_model(const Options& opt, bool well_founded) {
  mtlog::ReasoningInstance inst = mtlog::make_instance(load_program(opt), load_dataset(opt));
  mtlog::EngineConfig cfg = engine_config(opt);
  mtlog::ModelReport report =
      well_founded ? mtlog::well_founded_model(inst, cfg) : mtlog::kripke_kleene_model(inst, cfg);
  Output out(opt.output_path);
  out.stream() << report.serialize();
  return kExitOk;
}

int cmd_stable(const Options& opt) {
  mtlog::ReasoningInstance inst = mtlog::make_instance(load_program(opt), load_dataset(opt));
  mtlog::EngineConfig cfg = engine_config(opt);
  Output out(opt.output_path);
  if (opt.enumerate) {
    if (cfg.mode != mtlog::EngineConfig::Mode::Bounded) {
      throw mtlog::Error("--enumerate requires --window LO HI");
    }
    mtlog::EnumerationResult res = mtlog::enumerate_stable2_bounded(inst, cfg);
    out.stream() << "window: [" << res.window_lo << "," << res.window_hi << "]\n";
    out.stream() << "complete: " << (res.complete ? "true" : "false") << "\n";
    out.stream() << "models: " << res.models.size() << "\n";
    for (const mtlog::Interpretation& m : res.models) {
      out.stream() << "# model\n" << m.dump();
    }
    return kExitOk;
  }
  mtlog::Interpretation candidate = mtlog::parse_interpretation(read_file(opt.check_path));
  bool ok = mtlog::is_stable2(inst, candidate, cfg);
  out.stream() << "stable: " << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitNegative;
}

int cmd_supported(const Options& opt) {
  mtlog::ReasoningInstance inst = mtlog::make_instance(load_program(opt), load_dataset(opt));
  mtlog::Interpretation candidate = mtlog::parse_interpretation(read_file(opt.check_path));
  bool ok = mtlog::is_supported_model(inst, mtlog::exact_pair(candidate), engine_config(opt));
  Output out(opt.output_path);
  out.stream() << "supported: " << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitNegative;
}

int cmd_eval(const Options& opt) {
  mtlog::MetricAtom atom = mtlog::parse_ground_metric_atom(opt.atom_text);
  mtlog::ThreeValuedInterpretation j;
  if (!opt.interpretation_path.empty()) {
    j = mtlog::exact_pair(mtlog::parse_interpretation(read_file(opt.interpretation_path)));
  } else {
    mtlog::ReasoningInstance inst = mtlog::make_instance(load_program(opt), load_dataset(opt));
    j = mtlog::well_founded_model(inst, engine_config(opt)).value;
  }
  Output out(opt.output_path);
  if (opt.three_valued) {
    out.stream() << mtlog::to_string(mtlog::eval3_at(atom, j, opt.at)) << "\n";
    return kExitOk;
  }
  if (!j.exact()) {
    throw mtlog::Error("the well-founded model is not exact here; use --three for a three-valued answer");
  }
  out.stream() << (mtlog::eval2_at(atom, j.lo, opt.at) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_diff(const Options& opt) {
  mtlog::EngineConfig cfg = engine_config(opt);
  if (cfg.mode != mtlog::EngineConfig::Mode::Bounded) {
    cfg.mode = mtlog::EngineConfig::Mode::Bounded;
    cfg.window_lo = 0;
    cfg.window_hi = 3;
  }
  mtlog::HarnessReport report = mtlog::run_differential_harness(opt.random_count, opt.seed, cfg);
  Output out(opt.output_path);
  out.stream() << report.serialize();
  return report.discrepancies == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DatalogMTL reasoner with negation: Kripke-Kleene, well-founded, supported and stable models"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool need_program) {
    auto* p = cmd->add_option("--program", opt.program_path, "program file (.mtl)");
    if (need_program) p->required();
    cmd->add_option("--dataset", opt.dataset_path, "dataset file (.facts)");
    cmd->add_option("--output,-o", opt.output_path, "write output to a file instead of stdout");
    cmd->add_option("--max-iters", opt.max_iters, "fixpoint iteration cap");
    cmd->add_option("--budget", opt.budget, "enumeration budget (candidate count)");
    cmd->add_option("--window", opt.window, "timepoint window LO HI")->expected(2);
  };

  CLI::App* check = app.add_subcommand("check", "parse and safety-check a program, print it normalized");
  add_common(check, true);

  CLI::App* ground = app.add_subcommand("ground", "print the grounding of a program");
  add_common(ground, true);

  CLI::App* kk = app.add_subcommand("kk", "compute the Kripke-Kleene model");
  add_common(kk, true);

  CLI::App* wf = app.add_subcommand("wf", "compute the well-founded model");
  add_common(wf, true);

  CLI::App* stable = app.add_subcommand("stable", "check or enumerate two-valued stable models");
  add_common(stable, true);
  stable->add_option("--check", opt.check_path, "interpretation file to verify");
  stable->add_flag("--enumerate", opt.enumerate, "enumerate window-supported stable models");

  CLI::App* supported = app.add_subcommand("supported", "check a supported model");
  add_common(supported, true);
  supported->add_option("--check", opt.check_path, "interpretation file to verify")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate a ground metric atom at a timepoint");
  add_common(eval, false);
  eval->add_option("--interpretation", opt.interpretation_path, "evaluate under this interpretation file");
  eval->add_option("--atom", opt.atom_text, "ground metric atom")->required();
  eval->add_option("--at", opt.at, "timepoint")->required();
  eval->add_flag("--three", opt.three_valued, "print a three-valued answer");

  CLI::App* diff = app.add_subcommand("diff", "differential stable-semantics harness on random instances");
  add_common(diff, false);
  diff->add_option("--random", opt.random_count, "number of random instances");
  diff->add_option("--seed", opt.seed, "generator seed (echoed in the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (ground->parsed()) return cmd_ground(opt);
    if (kk->parsed()) return cmd_model(opt, false);
    if (wf->parsed()) return cmd_model(opt, true);
    if (stable->parsed()) {
      bool exactly_one = opt.enumerate != !opt.check_path.empty();
      if (!exactly_one) {
        std::cerr << "error: pass exactly one of --check FILE or --enumerate\n";
        return kExitUsage;
      }
      return cmd_stable(opt);
    }
    if (supported->parsed()) return cmd_supported(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (diff->parsed()) return cmd_diff(opt);
  } catch (const mtlog::NonTermination& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const mtlog::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const mtlog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
