#include <iomanip>
#include <sstream>

#include "pow2comp/analytic.hpp"
#include "pow2comp/commands.hpp"
#include "pow2comp/exact.hpp"

namespace cli {

using namespace pow2comp;

namespace {

std::string show(const Real& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

std::string show(double x) {
  std::ostringstream out;
  out << std::setprecision(3) << x;
  return out.str();
}

}  // namespace

int run_rho(const RhoOptions& opts, const Context& ctx) {
  const Real tol(opts.tol);
  const auto cert = find_rho(tol);
  const auto c = find_c(cert.rho);
  // The deviation scan needs rho well beyond --tol: an error e in rho shows up as n*e/rho.
  const auto fine_rho = find_rho(Real("1e-40")).rho;
  const auto fine_c = find_c(fine_rho);
  const auto table = build_exact_table(2001);
  const auto report = asymptotic_report(table, fine_rho, fine_c, 200, 2000);
  const auto at500 = asymptotic_report(table, fine_rho, fine_c, 500, 500);
  // By n = 200 the deviation is already at the precision floor, so the trend starts earlier.
  const auto trend = asymptotic_report(table, fine_rho, fine_c, 100, 2000);
  const double gap = ratio_gap(table, 2000, fine_rho);

  Record rec;
  rec.command = "rho";
  rec.inputs = {{"tol", show(opts.tol)}};
  rec.results["rho"] = show(cert.rho.value, 30);
  rec.results["rho_error"] = show(cert.rho.error_bound, 3);
  rec.results["bracket"] = {{"lo", show(cert.lo, 30)},
                            {"hi", show(cert.hi, 30)},
                            {"f_lo", show(cert.f_lo, 6)},
                            {"f_hi", show(cert.f_hi, 6)},
                            {"iterations", cert.iterations}};
  rec.results["c"] = show(c.value, 30);
  rec.results["c_error"] = show(c.error_bound, 3);
  rec.results["asymptotics"] = {{"range", {200, 2000}},
                                {"max_delta", show(report.max_delta)},
                                {"max_at", report.max_at},
                                {"delta_500", show(at500.max_delta)},
                                {"trend_range", {100, 2000}},
                                {"decreasing_on_average", trend.decreasing_on_average()},
                                {"ratio_gap_2000", show(gap)}};
  rec.provenance = {{"engine", "bisection"}, {"digits", 50}};

  rec.line("rho = " + show(cert.rho.value, 30) + " +/- " + show(cert.rho.error_bound, 3));
  rec.line("bracket [" + show(cert.lo, 20) + ", " + show(cert.hi, 20) + "], f = " + show(cert.f_lo, 3) + " / " +
           show(cert.f_hi, 3) + " after " + std::to_string(cert.iterations) + " steps");
  rec.line("c   = " + show(c.value, 30) + " +/- " + show(c.error_bound, 3));
  rec.line("max |log v(n) + (n+1) log rho - log c| on [200, 2000] = " + show(report.max_delta) + " at n=" +
           std::to_string(report.max_at) + "; at n=500: " + show(at500.max_delta));
  rec.line("|v(2001)/v(2000) - 1/rho| = " + show(gap));
  emit(rec, ctx.mode);
  return 0;
}

}  // namespace cli
