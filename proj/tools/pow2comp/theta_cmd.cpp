#include "pow2comp/auto_source.hpp"
#include "pow2comp/commands.hpp"
#include "pow2comp/padic.hpp"

namespace cli {

using namespace pow2comp;

int run_theta(const ThetaOptions& opts, const Context& ctx) {
  AutoSource source;
  std::vector<std::string> warnings;
  for (const auto& t : ctx.cache.load_for(opts.precision, warnings)) source.attach_table(t);

  const TwoAdicApprox t = theta(opts.a, opts.precision, opts.kmax, source);
  Record rec;
  rec.command = "theta";
  rec.inputs = {{"a", opts.a}, {"precision", opts.precision}, {"kmax", opts.kmax}};
  rec.results = {{"residue", t.value.value()},
                 {"modulus", t.value.modulus()},
                 {"binary", t.value.binary()},
                 {"k0", t.k0},
                 {"k_first", t.k_first},
                 {"trace", t.trace}};
  rec.provenance = {{"engine", "auto"}, {"stable_run", kStableRun}};

  rec.line("theta(" + std::to_string(opts.a) + ") = " + describe_residue(t.value) + ", settled from k=" +
           std::to_string(t.k0));
  std::string trace = "trace from k=" + std::to_string(t.k_first) + ":";
  for (const auto v : t.trace) trace += " " + std::to_string(v);
  rec.line(trace);
  emit(rec, ctx.mode);
  return 0;
}

}  // namespace cli
