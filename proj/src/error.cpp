#include "pldist/error.hpp"

namespace pldist {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::NotNondecreasing: return "NotNondecreasing";
    case ErrorKind::NonzeroEndpoint: return "NonzeroEndpoint";
    case ErrorKind::ZeroMass: return "ZeroMass";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::OutOfSupport: return "OutOfSupport";
    case ErrorKind::BadProbability: return "BadProbability";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace pldist
