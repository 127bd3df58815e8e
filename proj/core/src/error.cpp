#include "trd/error.hpp"

namespace trd {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EdgeExists: return "EdgeExists";
    case Errc::NotANonEdge: return "NotANonEdge";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::MalformedEdgeList: return "MalformedEdgeList";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ValueTooSmall: return "ValueTooSmall";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::TooFewLegs: return "TooFewLegs";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::IncompatibleUniverse: return "IncompatibleUniverse";
    case Errc::UnknownQuestion: return "UnknownQuestion";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace trd
