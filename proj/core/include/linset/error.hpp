#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linset {

enum class Errc {
  NonPrimeP,
  EvenP,
  TSmall,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  CtxMismatch,
  BadK,
  BadParams,
  NotScattered,
  NotDisjointFromSigma,
  BudgetExceeded,
  BadHypotheses,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace linset
