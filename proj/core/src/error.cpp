#include "linset/error.hpp"

namespace linset {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::EvenP: return "EvenP";
    case Errc::TSmall: return "TSmall";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::BadK: return "BadK";
    case Errc::BadParams: return "BadParams";
    case Errc::NotScattered: return "NotScattered";
    case Errc::NotDisjointFromSigma: return "NotDisjointFromSigma";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadHypotheses: return "BadHypotheses";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace linset
