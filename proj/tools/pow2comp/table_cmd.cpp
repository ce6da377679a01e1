#include <iostream>

#include "pow2comp/commands.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/published_tables.hpp"
#include "pow2comp/table_io.hpp"
#include "pow2comp/table_synth.hpp"

namespace cli {

using namespace pow2comp;

int run_table(const TableOptions& opts, const Context& ctx) {
  const int n_exp = opts.mod_exp;
  const std::uint32_t cap = opts.cap.value_or(static_cast<std::uint32_t>(n_exp + 4));
  SynthOptions synth;
  synth.max_ell = opts.max_ell;
  synth.horizon = opts.horizon;
  if (n_exp >= 4 && !synth.horizon && !synth.max_ell) synth.horizon = 16;
  synth.grid = opts.grid;
  synth.keep_zero_entries = opts.keep_zero;

  Record rec;
  rec.command = "table";
  rec.inputs = {{"mod_exp", n_exp}, {"cap", cap}, {"window", opts.window}};
  rec.inputs["horizon"] = synth.horizon ? Json(*synth.horizon) : Json(nullptr);
  rec.inputs["max_ell"] = synth.max_ell ? Json(*synth.max_ell) : Json(nullptr);
  rec.inputs["grid"] = opts.grid;

  HalvingEvaluator source(kDefaultHalvingBudget, /*evict_when_full=*/true);
  const CongruenceTable table = synthesize(n_exp, cap, opts.window, source, synth);

  std::size_t unstabilized = 0;
  std::size_t unreachable = 0;
  Json residue_counts = Json::object();
  for (const auto& [key, entry] : table.entries()) {
    if (!entry.reachable) {
      ++unreachable;
      continue;
    }
    if (!entry.stabilized) ++unstabilized;
    auto& slot = residue_counts[std::to_string(entry.residue.value())];
    slot = slot.is_null() ? 1 : slot.get<int>() + 1;
  }
  rec.results["entries"] = table.entries().size();
  rec.results["omitted_zero"] = table.omitted_zero_count();
  rec.results["unstabilized"] = unstabilized;
  rec.results["unreachable"] = unreachable;
  rec.results["residues"] = residue_counts;
  rec.line("mod " + std::to_string(1 << n_exp) + ": " + std::to_string(table.entries().size()) + " entries, " +
           std::to_string(table.omitted_zero_count()) + " zero classes, " + std::to_string(unstabilized) +
           " unstabilized");

  bool ok = true;
  if (n_exp >= 2 && n_exp <= 4) {
    const auto report = verify_published_tables(table);
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      Json r{{"label", row.label},   {"residue", row.expected}, {"samples", row.samples},
             {"passed", row.passed()}, {"remark", row.remark}, {"notes", row.notes.size()}};
      Json failures = Json::array();
      for (std::size_t i = 0; i < row.failures.size() && i < 5; ++i) failures.push_back(row.failures[i]);
      r["failures"] = failures;
      rows.push_back(r);
      rec.line(std::string(row.passed() ? "PASS " : "FAIL ") + row.label + " -> " + std::to_string(row.expected) +
               " (" + std::to_string(row.samples) + " samples)");
      for (const auto& f : failures) rec.line("     " + f.get<std::string>());
    }
    rec.results["published_rows"] = rows;
    rec.results["published_passed"] = report.passed();
    ok = report.passed();
  }

  Json written = Json::array();
  if (opts.out) {
    save_table(table, *opts.out);
    written.push_back(*opts.out);
  }
  if (ctx.cache.enabled()) {
    ctx.cache.store(table);
    written.push_back(ctx.cache.path_for(n_exp).string());
  }
  for (const auto& w : written) rec.line("wrote " + w.get<std::string>());
  rec.results["written"] = written;
  rec.provenance = {{"engine", "halving"}, {"budget", kDefaultHalvingBudget}};
  emit(rec, ctx.mode);
  return ok ? 0 : 1;
}

}  // namespace cli
