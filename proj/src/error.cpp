#include "kmb/error.hpp"

namespace kmb {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotGCM: return "NotGCM";
    case Err::NotFree: return "NotFree";
    case Err::NotSimplyConnected: return "NotSimplyConnected";
    case Err::NoIntegralSolution: return "NoIntegralSolution";
    case Err::NotAutomorphism: return "NotAutomorphism";
    case Err::NotInGroup: return "NotInGroup";
    case Err::NotFiniteType: return "NotFiniteType";
    case Err::RankMismatch: return "RankMismatch";
    case Err::DivisionNotExact: return "DivisionNotExact";
    case Err::WordNotReduced: return "WordNotReduced";
    case Err::NotDominant: return "NotDominant";
    case Err::NotInvariant: return "NotInvariant";
    case Err::NotABasis: return "NotABasis";
    case Err::NoBasisFound: return "NoBasisFound";
    case Err::UnsupportedTwist: return "UnsupportedTwist";
    case Err::RingMismatch: return "RingMismatch";
    case Err::MiddleMismatch: return "MiddleMismatch";
    case Err::NotDivisible: return "NotDivisible";
    case Err::AmbientInfinite: return "AmbientInfinite";
    case Err::BadInput: return "BadInput";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace kmb
