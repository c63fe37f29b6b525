#pragma once

#include <stdexcept>
#include <string>

namespace reebcirc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REEBCIRC_DEFINE_ERROR(Name)     \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

REEBCIRC_DEFINE_ERROR(IdenticalCircles);
REEBCIRC_DEFINE_ERROR(PointNotOnCircles);
REEBCIRC_DEFINE_ERROR(GenericityViolation);
REEBCIRC_DEFINE_ERROR(InvalidRegion);
REEBCIRC_DEFINE_ERROR(NotATree);
REEBCIRC_DEFINE_ERROR(PointOutsideRegion);
REEBCIRC_DEFINE_ERROR(NoCandidatePoint);
REEBCIRC_DEFINE_ERROR(NoCandidatePair);
REEBCIRC_DEFINE_ERROR(SearchBudgetExceeded);
REEBCIRC_DEFINE_ERROR(WindowUnsatisfiable);
REEBCIRC_DEFINE_ERROR(CaseInapplicable);
REEBCIRC_DEFINE_ERROR(ArcPairNotFound);
REEBCIRC_DEFINE_ERROR(ReplayDivergence);
REEBCIRC_DEFINE_ERROR(NotInFamily);
REEBCIRC_DEFINE_ERROR(GeometricSearchFailed);
REEBCIRC_DEFINE_ERROR(VerificationFailed);
REEBCIRC_DEFINE_ERROR(InvalidParams);
REEBCIRC_DEFINE_ERROR(BudgetExceeded);
REEBCIRC_DEFINE_ERROR(InvalidSpec);
REEBCIRC_DEFINE_ERROR(ParseError);

#undef REEBCIRC_DEFINE_ERROR

}  // namespace reebcirc
