#pragma once

#include <stdexcept>
#include <string>

namespace toepdet {

/// Error codes for contract violations. The names double as the diagnostic
/// vocabulary of the CLI ("invalid spec" exits name the violated invariant).
enum class Errc {
  ZeroLeadingCoefficient,             // a_s == 0
  ZeroTrailingCoefficient,            // a_{s+r} == 0
  LengthMismatch,                     // coeffs.size() != s + r + 1
  CompanionNeedsSuperdiagonal,        // companion build requires s >= 1
  BandwidthMismatch,                  // closed form applied to the wrong band shape
  InvalidRootMultiset,                // multiplicities do not sum to k, or repeated roots
  NonFiniteInput,                     // scaled_from on NaN/inf
  ModulusNotPrime,                    // prime-field modulus failed validation
  ModulusDividesLeadingCoefficient,   // a_s == 0 (mod p)
  ModulusDividesTrailingCoefficient,  // a_{s+r} == 0 (mod p)
  ModulusDividesDenominator,          // rational coefficient has no image mod p
  ModulusMismatch,                    // arithmetic across two different prime fields
  DivisionByZero,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace toepdet
