#pragma once

#include <stdexcept>
#include <string>

namespace latint {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LATINT_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// Lattice construction.
LATINT_DEFINE_ERROR(UnknownLabel);
LATINT_DEFINE_ERROR(DuplicateLabel);
LATINT_DEFINE_ERROR(CycleError);
LATINT_DEFINE_ERROR(NotTransitivelyReduced);
LATINT_DEFINE_ERROR(NoBottom);
LATINT_DEFINE_ERROR(NoTop);
LATINT_DEFINE_ERROR(NotALattice);

// Order structure queries.
LATINT_DEFINE_ERROR(NotLLDError);
LATINT_DEFINE_ERROR(OrderError);
LATINT_DEFINE_ERROR(DimensionMismatch);
LATINT_DEFINE_ERROR(InvalidElement);
LATINT_DEFINE_ERROR(SizeError);

// Derivatives and indices.
LATINT_DEFINE_ERROR(NotJoinIrreducible);
LATINT_DEFINE_ERROR(NotBoolean);
LATINT_DEFINE_ERROR(NotInLtilde);
LATINT_DEFINE_ERROR(EmptyTarget);
LATINT_DEFINE_ERROR(NotDistributive);
LATINT_DEFINE_ERROR(NotLinear);
LATINT_DEFINE_ERROR(SupportNotIrreducible);

// Classical capacities.
LATINT_DEFINE_ERROR(IndexOutOfRange);
LATINT_DEFINE_ERROR(EmptyCoalition);
LATINT_DEFINE_ERROR(NotDisjoint);

// Input parsing.
LATINT_DEFINE_ERROR(ParseError);

#undef LATINT_DEFINE_ERROR

}  // namespace latint
