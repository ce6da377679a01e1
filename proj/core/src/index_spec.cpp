#include "pow2comp/index_spec.hpp"

#include <cctype>
#include <string>

#include "pow2comp/errors.hpp"

namespace pow2comp {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SparseIndex run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty index");
    SparseIndex plus;
    SparseIndex minus;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (!first) {
        if (text_[pos_] != '+' && text_[pos_] != '-') fail("expected '+' or '-'");
        negative = text_[pos_] == '-';
        ++pos_;
        skip_space();
      }
      const SparseIndex value = term();
      (negative ? minus : plus) = sparse_add(negative ? minus : plus, value);
      first = false;
      skip_space();
    }
    if (plus < minus) throw DomainError("index '" + std::string(text_) + "' is negative");
    return sparse_sub(plus, minus);
  }

 private:
  // number | 2^number | number*2^number
  SparseIndex term() {
    const Natural lead = number();
    skip_space();
    if (at('^')) {
      if (lead != 2) fail("only powers of 2 are supported");
      ++pos_;
      return SparseIndex::from_exponents({exponent()});
    }
    if (at('*')) {
      ++pos_;
      skip_space();
      const Natural base = number();
      if (base != 2) fail("only powers of 2 are supported");
      skip_space();
      if (!at('^')) fail("expected '^'");
      ++pos_;
      const std::uint32_t e = exponent();
      SparseIndex out;
      const SparseIndex multiplier = SparseIndex::from_natural(lead);
      for (const auto bit : multiplier.exponents()) out = sparse_add_pow2(out, bit + e);
      return out;
    }
    return SparseIndex::from_natural(lead);
  }

  std::uint32_t exponent() {
    skip_space();
    const Natural e = number();
    if (e > 4'000'000'000U) fail("exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  Natural number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Natural(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad index '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparseIndex parse_index_spec(std::string_view text) { return Parser(text).run(); }

}  // namespace pow2comp
