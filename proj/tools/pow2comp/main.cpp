#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "pow2comp/commands.hpp"
#include "pow2comp/errors.hpp"

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kCapacity = 3, kUnverified = 4 };

int report_error(const cli::Context& ctx, const std::string& command, const char* kind, const std::exception& e,
                 int status, const std::vector<std::uint64_t>* trace = nullptr) {
  std::cerr << "pow2comp: " << e.what() << '\n';
  if (ctx.mode.json) {
    cli::Json j;
    j["command"] = command;
    j["error"] = {{"kind", kind}, {"message", e.what()}, {"exit_code", status}};
    if (trace) j["error"]["trace"] = *trace;
    std::cout << j.dump(2) << '\n';
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compositions of integers into powers of two: exact values, residues, congruence tables."};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Context ctx;
  std::optional<std::string> cache_dir;
  app.add_flag("--json", ctx.mode.json, "Machine-readable output");
  app.add_option("--cache-dir", cache_dir, "Directory for synthesized tables")->envname("POW2COMP_CACHE");

  cli::EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "v(n), exactly or modulo 2^N");
  eval_cmd->add_option("n", eval.indices, "Indices: decimal or sums like 2^100-2, 3*2^50-2")->required();
  eval_cmd->add_option("--mod", eval.mod_exp, "Reduce modulo 2^N")->check(CLI::Range(1, 62));
  eval_cmd->add_option("--method", eval.method, "Evaluator")
      ->check(CLI::IsMember({"auto", "exact", "dense", "sparse", "classify", "halving"}));
  eval_cmd->add_option("--table", eval.table_path, "Table file for classify")->check(CLI::ExistingFile);
  eval_cmd->add_option("--exact-cap", eval.exact_cap, "Largest n for exact values");
  eval_cmd->add_option("--budget", eval.budget, "Memo budget for sparse/halving");

  cli::EvalRangeOptions range;
  auto* range_cmd = app.add_subcommand("eval-range", "v(a..b), exactly or modulo 2^N");
  range_cmd->add_option("a", range.first)->required();
  range_cmd->add_option("b", range.last)->required();
  range_cmd->add_option("--mod", range.mod_exp, "Reduce modulo 2^N")->check(CLI::Range(1, 62));
  range_cmd->add_flag("--csv", range.csv, "CSV with header n,value");

  cli::TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Synthesize a congruence table modulo 2^N");
  table_cmd->add_option("--mod-exp", table.mod_exp, "N")->required()->check(CLI::Range(1, 5));
  table_cmd->add_option("--cap", table.cap, "Pattern cap D (default N+4)")->check(CLI::Range(2, 64));
  table_cmd->add_option("--window", table.window, "Saturation window W");
  table_cmd->add_option("--horizon", table.horizon, "Only patterns whose smallest instance is below 2^H (default 16 for N >= 4)");
  table_cmd->add_option("--max-ell", table.max_ell, "Only patterns with at most this many powers");
  table_cmd->add_flag("--grid", table.grid, "Full grid over saturated parameters");
  table_cmd->add_flag("--keep-zero", table.keep_zero, "Store zero entries explicitly");
  table_cmd->add_option("--out", table.out, "Write the table here");

  cli::ThetaOptions theta;
  auto* theta_cmd = app.add_subcommand("theta", "2-adic limit of v(2^k + a)");
  theta_cmd->add_option("a", theta.a)->required();
  theta_cmd->add_option("--precision", theta.precision, "N")->check(CLI::Range(1, 62));
  theta_cmd->add_option("--kmax", theta.kmax, "Largest k scanned")->check(CLI::Range(4, 100'000));

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = cli::verify_suite_names();
  suite_choices.emplace_back("all");
  verify_cmd->add_option("suite", verify.suites, "Suites (default all)")->check(CLI::IsMember(suite_choices));

  cli::RhoOptions rho;
  auto* rho_cmd = app.add_subcommand("rho", "Growth constants rho and c");
  rho_cmd->add_option("--tol", rho.tol, "Bisection bracket width")->check(CLI::Range(1e-15, 0.1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (cache_dir) ctx.cache = cli::TableCache(std::filesystem::path(*cache_dir));

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "eval") return cli::run_eval(eval, ctx);
    if (command == "eval-range") return cli::run_eval_range(range, ctx);
    if (command == "table") return cli::run_table(table, ctx);
    if (command == "theta") return cli::run_theta(theta, ctx);
    if (command == "verify") return cli::run_verify(verify, ctx);
    if (command == "rho") return cli::run_rho(rho, ctx);
  } catch (const pow2comp::UnverifiedClassError& e) {
    return report_error(ctx, command, "unverified-class", e, kUnverified);
  } catch (const pow2comp::CapacityError& e) {
    return report_error(ctx, command, "capacity", e, kCapacity);
  } catch (const pow2comp::BudgetError& e) {
    return report_error(ctx, command, "budget", e, kCapacity);
  } catch (const pow2comp::RangeError& e) {
    return report_error(ctx, command, "range", e, kCapacity);
  } catch (const pow2comp::NonStabilizedError& e) {
    return report_error(ctx, command, "non-stabilized", e, kFailed, &e.trace());
  } catch (const pow2comp::ParseError& e) {
    return report_error(ctx, command, "parse", e, kUsage);
  } catch (const pow2comp::DomainError& e) {
    return report_error(ctx, command, "domain", e, kUsage);
  } catch (const std::exception& e) {
    return report_error(ctx, command, "error", e, kFailed);
  }
  return kUsage;
}
