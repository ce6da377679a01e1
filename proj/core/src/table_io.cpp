#include "pow2comp/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace pow2comp {
namespace {

using nlohmann::ordered_json;

ordered_json param_json(const Param& p) {
  if (p.at_least) return ">=" + std::to_string(p.value);
  return p.value;
}

Param param_from(const ordered_json& j, std::uint32_t cap, std::uint32_t min_exact) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s != ">=" + std::to_string(cap)) throw ParseError("saturated parameter '" + s + "' does not match cap");
    return Param{cap, true};
  }
  if (!j.is_number_unsigned()) throw ParseError("pattern parameter must be an integer or \">=D\"");
  const auto v = j.get<std::uint64_t>();
  if (v < min_exact || v >= cap) throw ParseError("exact pattern parameter " + std::to_string(v) + " out of range");
  return Param{static_cast<std::uint32_t>(v), false};
}

template <class T>
T required(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string table_to_json(const CongruenceTable& table, int indent) {
  ordered_json out;
  out["format"] = "pow2comp-table";
  out["version"] = 1;
  out["n_exp"] = table.n_exp();
  out["cap"] = table.cap();
  out["window"] = table.window();
  out["max_ell"] = table.max_ell() ? ordered_json(*table.max_ell()) : ordered_json(nullptr);
  out["horizon"] = table.horizon() ? ordered_json(*table.horizon()) : ordered_json(nullptr);
  out["zero_default"] = table.zero_default();
  out["omitted_zero"] = table.omitted_zero_count();
  ordered_json entries = ordered_json::array();
  for (const auto& [key, e] : table.entries()) {
    ordered_json item;
    item["ell"] = e.pattern.ell();
    ordered_json gaps = ordered_json::array();
    for (const auto& g : e.pattern.gaps) gaps.push_back(param_json(g));
    item["gaps"] = std::move(gaps);
    item["low_exp"] = param_json(e.pattern.low);
    item["residue"] = e.residue.value();
    item["stabilized"] = e.stabilized;
    item["reachable"] = e.reachable;
    item["window_checked"] = e.window_checked
                                 ? ordered_json::array({e.window_checked->first, e.window_checked->second})
                                 : ordered_json(nullptr);
    item["instances"] = e.instances;
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out.dump(indent);
}

CongruenceTable table_from_json(std::string_view text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table is not valid JSON: ") + e.what());
  }
  if (!in.is_object()) throw ParseError("table must be a JSON object");
  const int n_exp = required<int>(in, "n_exp");
  if (n_exp < 1 || n_exp > kMaxModExp) throw ParseError("n_exp out of range");
  const auto cap = required<std::uint32_t>(in, "cap");
  const auto window = required<std::uint32_t>(in, "window");
  std::optional<std::size_t> max_ell;
  std::optional<std::uint32_t> horizon;
  if (in.contains("max_ell") && !in["max_ell"].is_null()) max_ell = required<std::size_t>(in, "max_ell");
  if (in.contains("horizon") && !in["horizon"].is_null()) horizon = required<std::uint32_t>(in, "horizon");
  const bool zero_default = in.contains("zero_default") ? required<bool>(in, "zero_default") : false;
  if (cap < 2) throw ParseError("cap must be at least 2");

  CongruenceTable table(n_exp, cap, window, max_ell, horizon, zero_default);
  if (in.contains("omitted_zero")) table.set_omitted_zero_count(required<std::size_t>(in, "omitted_zero"));
  if (!in.contains("entries") || !in["entries"].is_array()) throw ParseError("missing entries array");
  for (const auto& item : in["entries"]) {
    TableEntry e;
    e.pattern.n_exp = n_exp;
    e.pattern.cap = cap;
    const auto ell = required<std::size_t>(item, "ell");
    if (ell < 1 || ell >= (std::size_t{1} << std::min(n_exp, 24))) throw ParseError("entry ell out of range");
    const auto& gaps = item.at("gaps");
    if (!gaps.is_array() || gaps.size() != ell - 1) throw ParseError("entry gaps must have ell-1 items");
    for (const auto& g : gaps) e.pattern.gaps.push_back(param_from(g, cap, 1));
    if (!item.contains("low_exp")) throw ParseError("missing field 'low_exp'");
    e.pattern.low = param_from(item["low_exp"], cap, 0);
    const auto residue = required<std::uint64_t>(item, "residue");
    if (residue > residue_mask(n_exp)) throw ParseError("residue exceeds the modulus");
    e.residue = Residue(residue, n_exp);
    e.stabilized = required<bool>(item, "stabilized");
    e.reachable = item.contains("reachable") ? required<bool>(item, "reachable") : true;
    if (item.contains("window_checked") && !item["window_checked"].is_null()) {
      const auto w = item["window_checked"].get<std::vector<std::uint32_t>>();
      if (w.size() != 2) throw ParseError("window_checked must be a pair");
      e.window_checked = std::make_pair(w[0], w[1]);
    }
    if (item.contains("instances")) e.instances = required<std::size_t>(item, "instances");
    if (table.find(e.pattern)) throw ParseError("duplicate entry " + e.pattern.to_string());
    table.add(std::move(e));
  }
  return table;
}

void save_table(const CongruenceTable& table, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << table_to_json(table) << '\n';
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CongruenceTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return table_from_json(text.str());
}

std::vector<std::string> revalidate_table(const CongruenceTable& table, ResidueSource& source,
                                          std::size_t sample, std::uint64_t seed) {
  std::vector<const TableEntry*> all;
  all.reserve(table.entries().size());
  for (const auto& [key, e] : table.entries()) all.push_back(&e);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > sample) all.resize(sample);

  std::vector<std::string> bad;
  for (const TableEntry* e : all) {
    const TableEntry fresh = synthesize_entry(e->pattern, table.window(), false, source);
    if (fresh.residue != e->residue || fresh.stabilized != e->stabilized) bad.push_back(e->pattern.to_string());
  }
  return bad;
}

}  // namespace pow2comp
