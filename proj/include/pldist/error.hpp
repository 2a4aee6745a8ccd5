#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pldist {

enum class ErrorKind {
  LengthMismatch,
  NegativeValue,
  NonFinite,
  EmptySupport,
  NotNondecreasing,
  NonzeroEndpoint,
  ZeroMass,
  NotNormalized,
  OutOfSupport,
  BadProbability,
  OrderTooLarge,
  BadOrder,
  NotIncreasing,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure in the library surfaces as this exception; the kind
// lets callers (the CLI in particular) branch without parsing messages.
class DensityError : public std::runtime_error {
 public:
  DensityError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pldist
