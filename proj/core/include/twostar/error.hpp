#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twostar {

inline constexpr std::string_view kVersion = "1.0.0";

// Every failure the library reports is an Error carrying one of these codes.
enum class Errc {
  NotLatinSquare,
  NoIdentityAtZero,
  NotAssociative,
  MalformedInput,
  NotNormal,
  NotAutomorphism,
  NotInvolutory,
  NotGenerating,
  XNotInvolution,
  ZeroVector,
  NotModule,
  CohomologyTooLarge,
  NotNormalized,
  NotCocycle,
  SeedVerificationFailed,
  CapExceeded,
  NotTypeI,
  XCentral,
  NotAsymmetric,
  NotRotaryMap,
  NotRegularMap,
  NotReflexible,
  NotAntipodal,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace twostar
