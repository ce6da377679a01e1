#include "pow2comp/cache.hpp"

#include "pow2comp/errors.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/table_io.hpp"

namespace cli {

namespace fs = std::filesystem;
using namespace pow2comp;

fs::path TableCache::path_for(int n_exp) const { return *dir_ / ("mod" + std::to_string(n_exp) + ".json"); }

void TableCache::store(const CongruenceTable& table) const {
  if (!dir_) return;
  fs::create_directories(*dir_);
  save_table(table, path_for(table.n_exp()));
}

std::vector<std::shared_ptr<const CongruenceTable>> TableCache::load_for(int n_exp,
                                                                         std::vector<std::string>& warnings) const {
  std::vector<std::shared_ptr<const CongruenceTable>> out;
  if (!dir_) return out;
  for (int m = n_exp; m <= 8; ++m) {
    const auto path = path_for(m);
    if (!fs::exists(path)) continue;
    try {
      out.push_back(load_validated(path));
    } catch (const Error& e) {
      warnings.push_back("ignoring cached table " + path.string() + ": " + e.what());
    }
  }
  return out;
}

std::shared_ptr<const CongruenceTable> load_validated(const fs::path& path) {
  auto table = std::make_shared<const CongruenceTable>(load_table(path));
  HalvingEvaluator source(kDefaultHalvingBudget, true);
  const auto bad = revalidate_table(*table, source, kRevalidateSample);
  if (!bad.empty()) throw Error("table " + path.string() + " failed re-validation at " + bad.front());
  return table;
}

}  // namespace cli
