#include <algorithm>
#include <iostream>
#include <memory>

#include "pow2comp/auto_source.hpp"
#include "pow2comp/commands.hpp"
#include "pow2comp/errors.hpp"
#include "pow2comp/exact.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/index_spec.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/residue_source.hpp"
#include "pow2comp/sparse_eval.hpp"
#include "pow2comp/table_synth.hpp"

namespace cli {

using namespace pow2comp;

namespace {

std::size_t largest_small_index(const std::vector<SparseIndex>& indices, std::size_t cap, const char* what) {
  std::uint64_t largest = 0;
  for (const auto& n : indices) {
    const auto small = n.to_u64();
    if (!small || *small > cap) {
      throw CapacityError(std::string(what) + " needs n <= " + std::to_string(cap) + ", got " + (n.to_u64() ? std::to_string(*n.to_u64()) : n.to_string()), cap);
    }
    largest = std::max(largest, *small);
  }
  return static_cast<std::size_t>(largest);
}

std::vector<std::shared_ptr<const CongruenceTable>> gather_tables(const EvalOptions& opts, const Context& ctx, int n_exp,
                                                                  Record& rec) {
  std::vector<std::shared_ptr<const CongruenceTable>> tables;
  if (opts.table_path) tables.push_back(load_validated(*opts.table_path));
  std::vector<std::string> warnings;
  for (auto& t : ctx.cache.load_for(n_exp, warnings)) tables.push_back(std::move(t));
  for (const auto& w : warnings) std::cerr << "pow2comp: " << w << '\n';
  Json used = Json::array();
  for (const auto& t : tables) {
    if (t->n_exp() < n_exp) continue;
    Json info{{"n_exp", t->n_exp()}, {"cap", t->cap()}, {"window", t->window()}};
    info["horizon"] = t->horizon() ? Json(*t->horizon()) : Json(nullptr);
    used.push_back(info);
  }
  rec.provenance["tables"] = used;
  return tables;
}

}  // namespace

int run_eval(const EvalOptions& opts, const Context& ctx) {
  Record rec;
  rec.command = "eval";
  rec.inputs["n"] = opts.indices;
  rec.inputs["mod_exp"] = opts.mod_exp ? Json(*opts.mod_exp) : Json(nullptr);
  rec.inputs["method"] = opts.method;

  std::vector<SparseIndex> indices;
  for (const auto& text : opts.indices) indices.push_back(parse_index_spec(text));
  Json values = Json::array();

  if (!opts.mod_exp) {
    if (opts.method != "auto" && opts.method != "exact") {
      throw DomainError("method " + opts.method + " computes residues; pass --mod N");
    }
    const std::size_t limit = largest_small_index(indices, opts.exact_cap, "an exact value");
    const ExactTable table = build_exact_table(limit, opts.exact_cap);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      const auto n = static_cast<std::size_t>(*indices[i].to_u64());
      const std::string value = table[n].get_str();
      values.push_back(Json{{"n", opts.indices[i]}, {"value", value}, {"method", "exact"}});
      rec.line("v(" + opts.indices[i] + ") = " + value);
    }
    rec.results["values"] = values;
    rec.provenance = {{"engine", "exact"}, {"exact_cap", opts.exact_cap}};
    emit(rec, ctx.mode);
    return 0;
  }

  const int n_exp = *opts.mod_exp;
  rec.provenance["engine"] = opts.method;
  std::unique_ptr<ResidueSource> source;
  std::unique_ptr<ExactTable> exact;
  AutoSource* auto_source = nullptr;
  if (opts.method == "exact") {
    exact = std::make_unique<ExactTable>(
        build_exact_table(largest_small_index(indices, opts.exact_cap, "an exact value"), opts.exact_cap));
    rec.provenance["exact_cap"] = opts.exact_cap;
  } else if (opts.method == "dense") {
    const std::size_t limit = largest_small_index(indices, kDefaultModCap, "a dense table");
    source = std::make_unique<DenseSource>(std::make_shared<const ModTable>(build_mod_table(limit, n_exp)));
    rec.provenance["dense_limit"] = limit;
  } else if (opts.method == "sparse") {
    const std::size_t budget = opts.budget ? opts.budget : kDefaultSparseBudget;
    source = std::make_unique<SparseEvaluator>(n_exp, budget);
    rec.provenance["budget"] = budget;
  } else if (opts.method == "halving") {
    const std::size_t budget = opts.budget ? opts.budget : kDefaultHalvingBudget;
    source = std::make_unique<HalvingEvaluator>(budget);
    rec.provenance["budget"] = budget;
  } else if (opts.method == "classify") {
    const auto tables = gather_tables(opts, ctx, n_exp, rec);
    const auto fit = std::find_if(tables.begin(), tables.end(), [&](const auto& t) { return t->n_exp() >= n_exp; });
    if (fit == tables.end()) {
      throw UnverifiedClassError("no verified table for mod 2^" + std::to_string(n_exp) +
                                 "; build one with `pow2comp table --mod-exp " + std::to_string(n_exp) +
                                 "` and pass --table or --cache-dir");
    }
    source = std::make_unique<TableSource>(*fit);
  } else {
    AutoSourceOptions options;
    if (opts.budget) options.halving_budget = opts.budget;
    auto a = std::make_unique<AutoSource>(options);
    for (const auto& t : gather_tables(opts, ctx, n_exp, rec)) a->attach_table(t);
    rec.provenance["dense_limit"] = options.dense_limit;
    rec.provenance["budget"] = options.halving_budget;
    auto_source = a.get();
    source = std::move(a);
  }

  for (std::size_t i = 0; i < indices.size(); ++i) {
    Residue r;
    std::string method = opts.method;
    if (exact) {
      r = Residue(low_bits((*exact)[static_cast<std::size_t>(*indices[i].to_u64())], n_exp), n_exp);
    } else {
      r = source->residue(indices[i], n_exp);
      if (auto_source) method = auto_source->last_method();
    }
    values.push_back(Json{{"n", opts.indices[i]},
                          {"residue", r.value()},
                          {"modulus", r.modulus()},
                          {"binary", r.binary()},
                          {"method", method}});
    rec.line("v(" + opts.indices[i] + ") = " + describe_residue(r) + " via " + method);
  }
  rec.results["values"] = values;
  emit(rec, ctx.mode);
  return 0;
}

int run_eval_range(const EvalRangeOptions& opts, const Context& ctx) {
  if (opts.last < opts.first) throw DomainError("empty range");
  Record rec;
  rec.command = "eval-range";
  rec.inputs = {{"a", opts.first}, {"b", opts.last}};
  rec.inputs["mod_exp"] = opts.mod_exp ? Json(*opts.mod_exp) : Json(nullptr);

  Json values = Json::array();
  std::vector<std::string> rows;
  if (opts.mod_exp) {
    if (opts.last > kDefaultModCap) throw CapacityError("dense range beyond cap", kDefaultModCap);
    const ModTable table = build_mod_table(static_cast<std::size_t>(opts.last), *opts.mod_exp);
    for (std::uint64_t n = opts.first; n <= opts.last; ++n) {
      const auto v = table[static_cast<std::size_t>(n)];
      values.push_back(Json{{"n", n}, {"value", v}});
      rows.push_back(std::to_string(n) + "," + std::to_string(v));
    }
    rec.provenance = {{"engine", "dense"}};
  } else {
    if (opts.last > kDefaultExactCap) throw CapacityError("exact range beyond cap", kDefaultExactCap);
    const ExactTable table = build_exact_table(static_cast<std::size_t>(opts.last));
    for (std::uint64_t n = opts.first; n <= opts.last; ++n) {
      const auto v = table[static_cast<std::size_t>(n)].get_str();
      values.push_back(Json{{"n", n}, {"value", v}});
      rows.push_back(std::to_string(n) + "," + v);
    }
    rec.provenance = {{"engine", "exact"}};
  }
  rec.results["values"] = values;

  if (opts.csv && !ctx.mode.json) {
    std::cout << "n,value\n";
    for (const auto& row : rows) std::cout << row << '\n';
    return 0;
  }
  for (auto row : rows) {
    row[row.find(',')] = ' ';
    rec.line(row);
  }
  emit(rec, ctx.mode);
  return 0;
}

}  // namespace cli
