#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pow2comp/cache.hpp"
#include "pow2comp/output.hpp"

namespace cli {

struct Context {
  OutputMode mode;
  TableCache cache{std::nullopt};
};

struct EvalOptions {
  std::vector<std::string> indices;
  std::optional<int> mod_exp;
  std::string method = "auto";
  std::optional<std::string> table_path;
  std::size_t exact_cap = 20'000;
  std::size_t budget = 0;  // 0: the method's default
};

struct EvalRangeOptions {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::optional<int> mod_exp;
  bool csv = false;
};

struct TableOptions {
  int mod_exp = 2;
  std::optional<std::uint32_t> cap;
  std::uint32_t window = 4;
  std::optional<std::uint32_t> horizon;
  std::optional<std::size_t> max_ell;
  bool grid = false;
  bool keep_zero = false;
  std::optional<std::string> out;
};

struct ThetaOptions {
  std::int64_t a = 0;
  int precision = 3;
  std::uint32_t kmax = 16;
};

struct VerifyOptions {
  std::vector<std::string> suites;
};

struct RhoOptions {
  double tol = 1e-12;
};

// Each returns the process exit status; engine errors propagate as exceptions.
int run_eval(const EvalOptions& opts, const Context& ctx);
int run_eval_range(const EvalRangeOptions& opts, const Context& ctx);
int run_table(const TableOptions& opts, const Context& ctx);
int run_theta(const ThetaOptions& opts, const Context& ctx);
int run_verify(const VerifyOptions& opts, const Context& ctx);
int run_rho(const RhoOptions& opts, const Context& ctx);

const std::vector<std::string>& verify_suite_names();

}  // namespace cli
