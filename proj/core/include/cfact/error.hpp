#pragma once

#include <stdexcept>
#include <string>

namespace cfact {

enum class Errc {
  NotAssociative,
  NoIdentityAtZero,
  NotLatinSquare,
  IndexOutOfRange,
  NotAPermutation,
  ClosureExceedsCap,
  SingularGenerator,
  NotPrime,
  DimensionMismatch,
  InvalidAction,
  ProductExceedsCap,
  NotNormal,
  OrderExceedsCap,
  PrimeDoesNotDivideOrder,
  ValidationFailed,
  ParseError,
  UnknownFormat,
  QuotientTooLarge,
  Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace cfact
