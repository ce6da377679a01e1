#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pow2comp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested size exceeds a configured cap (exact table, dense table, oracle).
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An index lies outside a built table. `required` is the limit that would be needed.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, std::size_t required)
      : Error(what), required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// A memoizing evaluator hit its entry budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(std::size_t memo_size)
      : Error("memo budget exhausted after " + std::to_string(memo_size) + " entries"),
        memo_size_(memo_size) {}
  std::size_t memo_size() const noexcept { return memo_size_; }

 private:
  std::size_t memo_size_;
};

/// classify() hit a class that was never certified by synthesis.
class UnverifiedClassError : public Error {
 public:
  using Error::Error;
};

/// A residue sequence did not settle within the scanned range.
class NonStabilizedError : public Error {
 public:
  NonStabilizedError(const std::string& what, std::vector<std::uint64_t> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<std::uint64_t>& trace() const noexcept { return trace_; }

 private:
  std::vector<std::uint64_t> trace_;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (index specs, table files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pow2comp
