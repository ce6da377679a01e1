#include "pow2comp/padic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pow2comp {
namespace {

void check_polynomial(const Polynomial& p) {
  if (p.coeffs.size() < 2) throw DomainError("polynomial must have degree at least 1");
  if (p.coeffs.back() < 1) throw DomainError("leading coefficient must be positive");
}

}  // namespace

TwoAdicApprox theta(std::int64_t a, int n_exp, std::uint32_t kmax, ResidueSource& source) {
  check_mod_exp(n_exp);
  if (kmax < 4) throw DomainError("theta needs kmax >= 4");
  TwoAdicApprox out;
  out.a = a;
  out.n_exp = n_exp;
  out.kmax = kmax;
  bool started = false;
  for (std::uint32_t k = 0; k <= kmax; ++k) {
    if (a < 0 && (k < 63 && (std::int64_t{1} << k) + a < 1)) continue;
    if (!started) {
      out.k_first = k;
      started = true;
    }
    out.trace.push_back(source.residue(SparseIndex::pow2_plus(k, a), n_exp).value());
  }
  if (out.trace.empty()) throw NonStabilizedError("no index 2^k + a >= 1 up to kmax", {});
  const std::uint64_t last = out.trace.back();
  std::size_t run = 0;
  while (run < out.trace.size() && out.trace[out.trace.size() - 1 - run] == last) ++run;
  if (run < kStableRun) {
    throw NonStabilizedError("v(2^k" + std::string(a < 0 ? "" : "+") + std::to_string(a) + ") mod 2^" +
                                 std::to_string(n_exp) + " not settled by k=" + std::to_string(kmax),
                             out.trace);
  }
  out.value = Residue(last, n_exp);
  out.k0 = out.k_first + static_cast<std::uint32_t>(out.trace.size() - run);
  return out;
}

Residue theta0_mod32(std::uint32_t kmax, ResidueSource& source) {
  if (kmax < 12) throw DomainError("theta0_mod32 needs kmax >= 12");
  return theta(0, 5, kmax, source).value;
}

Natural Polynomial::at_pow2(std::uint32_t k) const {
  Natural total = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Natural term = pow2(static_cast<std::size_t>(k) * i);
    if (coeffs[i] >= 0) {
      total += term * static_cast<unsigned long>(coeffs[i]);
    } else {
      total -= term * static_cast<unsigned long>(-coeffs[i]);
    }
  }
  return total;
}

std::string Polynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (!first || c < 0) out << (c < 0 ? "-" : "+");
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return first ? "0" : out.str();
}

bool Polynomial::has_negative_nonconstant() const {
  return std::any_of(coeffs.begin() + (coeffs.empty() ? 0 : 1), coeffs.end(), [](std::int64_t c) { return c < 0; });
}

Polynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  Polynomial p;
  std::size_t i = 0;
  auto number = [&](std::int64_t& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    if (i - start > 15) throw ParseError("polynomial coefficient too large");
    out = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected + or - in polynomial at position " + std::to_string(i));
    }
    std::int64_t coef = 1;
    const bool has_coef = number(coef);
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t degree = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::int64_t d = 0;
        if (!number(d) || d > 64) throw ParseError("bad exponent in polynomial");
        degree = static_cast<std::size_t>(d);
      }
    } else if (!has_coef) {
      throw ParseError("expected a term in polynomial at position " + std::to_string(i));
    }
    if (p.coeffs.size() <= degree) p.coeffs.resize(degree + 1, 0);
    p.coeffs[degree] += sign * coef;
  }
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

PolyLimitReport poly_limit_check(const Polynomial& p, int n_exp, std::uint32_t k_lo, std::uint32_t k_hi,
                                 ResidueSource& source) {
  check_mod_exp(n_exp);
  check_polynomial(p);
  if (std::any_of(p.coeffs.begin(), p.coeffs.end(), [](std::int64_t c) { return c < 0; })) {
    throw DomainError("poly_limit_check needs non-negative coefficients");
  }
  if (k_hi < k_lo) throw DomainError("empty k window");
  PolyLimitReport report;
  for (std::uint32_t k = k_lo; k <= k_hi; ++k) {
    const SparseIndex n = SparseIndex::from_natural(p.at_pow2(k));
    report.trace.emplace_back(k, source.residue(n, n_exp).value());
  }
  const std::uint64_t last = report.trace.back().second;
  std::size_t run = 0;
  while (run < report.trace.size() && report.trace[report.trace.size() - 1 - run].second == last) ++run;
  if (run >= kStableRun) {
    report.stabilized = true;
    report.k0 = report.trace[report.trace.size() - run].first;
    report.value = Residue(last, n_exp);
  }
  return report;
}

PolyNullityReport poly_nullity_check(const Polynomial& p, int n_exp, std::uint32_t k_lo, std::uint32_t k_hi,
                                     ResidueSource* source) {
  check_mod_exp(n_exp);
  check_polynomial(p);
  if (!p.has_negative_nonconstant()) {
    throw DomainError("poly_nullity_check needs a negative coefficient of x^i with i >= 1");
  }
  if (k_hi < k_lo) throw DomainError("empty k window");
  PolyNullityReport report;
  for (std::uint32_t k = k_lo; k <= k_hi; ++k) {
    const Natural value = p.at_pow2(k);
    if (sgn(value) < 0) continue;
    report.support_trace.emplace_back(k, in_support(SparseIndex::from_natural(value), n_exp));
  }
  // Walk back from k_hi while outside the support.
  std::size_t tail = report.support_trace.size();
  while (tail > 0 && !report.support_trace[tail - 1].second) --tail;
  if (tail < report.support_trace.size()) report.exit_k = report.support_trace[tail].first;
  report.passed = report.exit_k.has_value();
  if (report.exit_k && source) {
    std::vector<std::uint32_t> ks = {*report.exit_k, (*report.exit_k + k_hi) / 2, k_hi};
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (const auto k : ks) {
      const std::uint64_t r = source->residue(SparseIndex::from_natural(p.at_pow2(k)), n_exp).value();
      report.sampled.emplace_back(k, r);
      if (r != 0) report.passed = false;
    }
  }
  return report;
}

}  // namespace pow2comp
