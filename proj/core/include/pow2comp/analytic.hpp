#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pow2comp/exact.hpp"

namespace pow2comp {

/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

struct RealApprox {
  Real value;
  Real error_bound;
};

inline const Real kDefaultTailTol = Real("1e-45");

/// 1 - sum_k x^(2^k), truncated once the tail bound x^(2^(K+1)) / (1 - x) drops below tail_tol.
Real eval_f(const Real& x, const Real& tail_tol = kDefaultTailTol);
/// f'(x) = -sum_k 2^k x^(2^k - 1).
Real eval_f_prime(const Real& x, const Real& tail_tol = kDefaultTailTol);
/// f''(x) = -sum_k 2^k (2^k - 1) x^(2^k - 2).
Real eval_f_second(const Real& x, const Real& tail_tol = kDefaultTailTol);

struct RootCertificate {
  RealApprox rho;
  Real lo;
  Real hi;
  Real f_lo;  // > 0
  Real f_hi;  // < 0
  std::size_t iterations = 0;
};

/// Bisection for the zero of f on [0.5, 0.7] down to a bracket narrower than tol.
RootCertificate find_rho(const Real& tol, const Real& tail_tol = kDefaultTailTol);

/// c = -1 / f'(rho), with the bracket error carried through f''.
RealApprox find_c(const RealApprox& rho, const Real& tail_tol = kDefaultTailTol);

struct AsymptoticReport {
  /// (n, |log v(n) + (n+1) log rho - log c|)
  std::vector<std::pair<std::size_t, double>> deltas;
  double max_delta = 0;
  std::size_t max_at = 0;
  double mean_first_half = 0;
  double mean_second_half = 0;

  bool decreasing_on_average() const { return mean_second_half < mean_first_half; }
};

AsymptoticReport asymptotic_report(const ExactTable& table, const RealApprox& rho, const RealApprox& c,
                                   std::size_t n_lo, std::size_t n_hi);

/// |v(n+1) / v(n) - 1/rho|.
double ratio_gap(const ExactTable& table, std::size_t n, const RealApprox& rho);

}  // namespace pow2comp
