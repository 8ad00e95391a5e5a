#include "twostar/error.hpp"

namespace twostar {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentityAtZero: return "NoIdentityAtZero";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotInvolutory: return "NotInvolutory";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::XNotInvolution: return "XNotInvolution";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotModule: return "NotModule";
    case Errc::CohomologyTooLarge: return "CohomologyTooLarge";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotCocycle: return "NotCocycle";
    case Errc::SeedVerificationFailed: return "SeedVerificationFailed";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotTypeI: return "NotTypeI";
    case Errc::XCentral: return "XCentral";
    case Errc::NotAsymmetric: return "NotAsymmetric";
    case Errc::NotRotaryMap: return "NotRotaryMap";
    case Errc::NotRegularMap: return "NotRegularMap";
    case Errc::NotReflexible: return "NotReflexible";
    case Errc::NotAntipodal: return "NotAntipodal";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace twostar
