#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lodeg {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text. `column` is 1-based within the parsed string.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

// Invalid variety description (unit ideal, whole space, bad flags, ...).
class InputError : public Error {
public:
  using Error::Error;
};

// A Groebner computation ran past its time allowance.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// Randomized trials disagreed and retries were exhausted.
class Instability : public Error {
public:
  Instability(const std::string& what, std::vector<long long> observed)
      : Error(what), observed_(std::move(observed)) {}
  const std::vector<long long>& observed() const noexcept { return observed_; }

private:
  std::vector<long long> observed_;
};

class NotZeroDimensional : public Error {
public:
  using Error::Error;
};

// Quotient dimension reached the field characteristic; separation by a
// random linear form is no longer guaranteed.
class CharacteristicHazard : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class DegenerateSlice : public Error {
public:
  using Error::Error;
};

class NotACone : public Error {
public:
  using Error::Error;
};

// A rational coefficient whose denominator vanishes modulo the working prime.
class BadPrime : public Error {
public:
  using Error::Error;
};

}  // namespace lodeg
