#include "pow2comp/analytic.hpp"

#include <cmath>
#include <string>

#include "pow2comp/errors.hpp"

namespace pow2comp {
namespace {

void check_open_unit(const Real& x) {
  if (!(x > 0 && x < 1)) throw DomainError("argument must lie in (0, 1)");
}

// log x at full Real precision: the leading 200 bits as a mantissa plus a power of two.
Real log_real(const Natural& x) {
  constexpr std::size_t kMantissaBits = 200;
  const std::size_t bits = bit_length(x);
  if (bits <= kMantissaBits) return log(Real(x.get_str()));
  const std::size_t shift = bits - kMantissaBits;
  const Natural top = x >> static_cast<mp_bitcnt_t>(shift);
  return log(Real(top.get_str())) + Real(shift) * boost::multiprecision::log(Real(2));
}

void check_tol(const Real& tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
}

// Largest K with a term that still matters: walks x^(2^k) until the tail bound holds.
template <class Term>
Real lacunary_sum(const Real& x, const Real& tail_tol, Term term) {
  Real sum = 0;
  Real power = x;  // x^(2^k)
  for (unsigned k = 0; k < 4096; ++k) {
    sum += term(k, power);
    const Real next = power * power;
    // Beyond this point the weighted terms shrink at least geometrically.
    if (term(k + 1, next) * 2 / (1 - x) < tail_tol && next * 4 < 1) return sum;
    power = next;
  }
  throw Error("lacunary series did not converge");
}

}  // namespace

Real eval_f(const Real& x, const Real& tail_tol) {
  check_open_unit(x);
  check_tol(tail_tol);
  return 1 - lacunary_sum(x, tail_tol, [](unsigned, const Real& p) { return p; });
}

Real eval_f_prime(const Real& x, const Real& tail_tol) {
  check_open_unit(x);
  check_tol(tail_tol);
  return -lacunary_sum(x, tail_tol, [&](unsigned k, const Real& p) { return ldexp(p / x, static_cast<int>(k)); });
}

Real eval_f_second(const Real& x, const Real& tail_tol) {
  check_open_unit(x);
  check_tol(tail_tol);
  return -lacunary_sum(x, tail_tol, [&](unsigned k, const Real& p) {
    const Real weight = ldexp(Real(1), static_cast<int>(k));
    return weight * (weight - 1) * p / (x * x);
  });
}

RootCertificate find_rho(const Real& tol, const Real& tail_tol) {
  check_tol(tol);
  RootCertificate cert;
  cert.lo = Real("0.5");
  cert.hi = Real("0.7");
  cert.f_lo = eval_f(cert.lo, tail_tol);
  cert.f_hi = eval_f(cert.hi, tail_tol);
  if (!(cert.f_lo > 0 && cert.f_hi < 0)) throw Error("f does not change sign on [0.5, 0.7]");
  while (cert.hi - cert.lo >= tol) {
    const Real mid = (cert.lo + cert.hi) / 2;
    if (mid <= cert.lo || mid >= cert.hi) break;  // at working precision
    const Real fm = eval_f(mid, tail_tol);
    if (fm > 0) {
      cert.lo = mid;
      cert.f_lo = fm;
    } else {
      cert.hi = mid;
      cert.f_hi = fm;
    }
    ++cert.iterations;
  }
  cert.rho.value = (cert.lo + cert.hi) / 2;
  cert.rho.error_bound = (cert.hi - cert.lo) / 2 + tail_tol;
  return cert;
}

RealApprox find_c(const RealApprox& rho, const Real& tail_tol) {
  const Real fp = eval_f_prime(rho.value, tail_tol);
  if (!(fp < 0)) throw Error("f' is not negative at rho");
  RealApprox c;
  c.value = -1 / fp;
  // |dc/drho| = |f''| / f'^2; f'' is monotone on (0,1), so evaluate at the upper end.
  const Real upper = rho.value + rho.error_bound;
  const Real fpp = abs(eval_f_second(upper < 1 ? upper : rho.value, tail_tol));
  c.error_bound = fpp / (fp * fp) * rho.error_bound * 2 + tail_tol;
  return c;
}

AsymptoticReport asymptotic_report(const ExactTable& table, const RealApprox& rho, const RealApprox& c,
                                   std::size_t n_lo, std::size_t n_hi) {
  if (n_hi < n_lo) throw DomainError("empty range");
  if (n_hi > table.limit()) {
    throw RangeError("asymptotic report needs v up to " + std::to_string(n_hi), n_hi);
  }
  if (n_lo == 0) throw DomainError("asymptotic report starts at n >= 1");
  const Real log_rho = log(rho.value);
  const Real log_c = log(c.value);
  AsymptoticReport report;
  double first = 0;
  double second = 0;
  std::size_t first_count = 0;
  std::size_t second_count = 0;
  const std::size_t mid = n_lo + (n_hi - n_lo) / 2;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const Real predicted = log_c - Real(n + 1) * log_rho;
    const double delta = static_cast<double>(abs(log_real(table[n]) - predicted));
    report.deltas.emplace_back(n, delta);
    if (delta > report.max_delta) {
      report.max_delta = delta;
      report.max_at = n;
    }
    if (n <= mid) {
      first += delta;
      ++first_count;
    } else {
      second += delta;
      ++second_count;
    }
  }
  report.mean_first_half = first / static_cast<double>(first_count);
  report.mean_second_half = second_count ? second / static_cast<double>(second_count) : report.mean_first_half;
  return report;
}

double ratio_gap(const ExactTable& table, std::size_t n, const RealApprox& rho) {
  if (n + 1 > table.limit()) throw RangeError("ratio needs v(" + std::to_string(n + 1) + ")", n + 1);
  const double log_ratio = log_natural(table[n + 1]) - log_natural(table[n]);
  return std::fabs(std::exp(log_ratio) - static_cast<double>(1 / rho.value));
}

}  // namespace pow2comp
