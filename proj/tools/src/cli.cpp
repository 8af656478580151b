#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "fracbam/errors.hpp"
#include "fracbam_cli/commands.hpp"

namespace fracbam::cli {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional delayed BAM network analysis"};
  app.require_subcommand(1);

  std::string config_path, out_dir, mode;
  std::uint64_t seed = 0;
  double fix_tau1 = 0.0, fix_tau2 = 0.0;
  bool verify = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (overrides output.directory)");
    sub->add_option("--seed", seed, "sampling seed (overrides analysis.sensitivity.seed)");
  };
  CLI::App* simulate = app.add_subcommand("simulate", "integrate the network");
  CLI::App* stability = app.add_subcommand("stability", "zero-delay coefficient and Hurwitz report");
  CLI::App* hopf = app.add_subcommand("hopf", "critical delay and transversality");
  CLI::App* sweep = app.add_subcommand("order-sweep", "critical frequency and delay versus order");
  CLI::App* sens = app.add_subcommand("sensitivity", "LHS sampling of the delays and PRCC");
  for (CLI::App* s : {simulate, stability, hopf, sweep, sens}) common(s);
  hopf->add_option("--mode", mode, "tau3 or tau4")->check(CLI::IsMember({"tau3", "tau4"}));
  auto* f1 = hopf->add_option("--fix-tau1", fix_tau1, "hold the leakage delay fixed");
  auto* f2 = hopf->add_option("--fix-tau2", fix_tau2, "hold the communication delay fixed");
  f1->excludes(f2);
  hopf->add_flag("--verify", verify, "run bracketing simulations around the critical delay");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    RunConfig cfg = load_config(config_path);
    CLI::App* sub = app.get_subcommands().front();
    if (!sub->get_option("--out")->empty()) cfg.output.directory = out_dir;
    if (!sub->get_option("--seed")->empty()) cfg.sensitivity.seed = seed;
    if (sub == hopf) {
      if (!mode.empty()) cfg.hopf.mode = mode;
      if (!f1->empty()) {
        cfg.hopf.fix_tau1 = fix_tau1;
        cfg.hopf.fix_tau2.reset();
      }
      if (!f2->empty()) {
        cfg.hopf.fix_tau2 = fix_tau2;
        cfg.hopf.fix_tau1.reset();
      }
    }
    cfg.validate();

    if (sub == simulate) return cmd_simulate(cfg, out);
    if (sub == stability) return cmd_stability(cfg, out);
    if (sub == hopf) return cmd_hopf(cfg, verify, out);
    if (sub == sweep) return cmd_order_sweep(cfg, out);
    return cmd_sensitivity(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DivergenceError& e) {
    err << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace fracbam::cli
