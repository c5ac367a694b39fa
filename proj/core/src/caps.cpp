#include "cfact/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "cfact/error.hpp"

namespace cfact {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentityAtZero: return "NoIdentityAtZero";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::ClosureExceedsCap: return "ClosureExceedsCap";
    case Errc::SingularGenerator: return "SingularGenerator";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::ProductExceedsCap: return "ProductExceedsCap";
    case Errc::NotNormal: return "NotNormal";
    case Errc::OrderExceedsCap: return "OrderExceedsCap";
    case Errc::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::QuotientTooLarge: return "QuotientTooLarge";
    case Errc::Io: return "Io";
  }
  return "Error";
}

namespace {

Caps caps_from_env() {
  Caps c;
  const char* env = std::getenv("CFACT_CAPS");
  if (!env) return c;
  std::istringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    int val = std::atoi(item.c_str() + eq + 1);
    if (val <= 0) continue;
    if (key == "closure") c.closure = val;
    else if (key == "normal") c.normal_enum = val;
    else if (key == "subgroups") c.subgroup_enum = val;
    else if (key == "quotient") c.quotient = val;
  }
  return c;
}

}  // namespace

Caps& caps() {
  static Caps c = caps_from_env();
  return c;
}

}  // namespace cfact
