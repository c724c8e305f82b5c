#pragma once

#include <stdexcept>
#include <string>

namespace pfm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PFM_ERROR(Name)                 \
    struct Name : Error {               \
        using Error::Error;             \
    }

PFM_ERROR(InvalidDegree);
PFM_ERROR(InvalidK);
PFM_ERROR(IdentityHasAllFixed);
PFM_ERROR(DegenerateEndpoints);
PFM_ERROR(BallTooLarge);
PFM_ERROR(NotACovering);
PFM_ERROR(PeriodOverflow);
PFM_ERROR(UnsupportedFamily);
PFM_ERROR(HypothesisViolation);
PFM_ERROR(NoFixedVertices);
PFM_ERROR(OrbitTooLarge);
PFM_ERROR(NoFixedPoint);
PFM_ERROR(NonNestedPreimages);
PFM_ERROR(LeafOutsideResolution);
PFM_ERROR(NotHyperbolic);
PFM_ERROR(ParseError);
PFM_ERROR(IOError);

#undef PFM_ERROR

// Errors that carry an index.
struct Discontinuous : Error {
    int index;
    Discontinuous(int j, const std::string& what) : Error(what), index(j) {}
};

struct NotMarkov : Error {
    int index;
    NotMarkov(int j, const std::string& what) : Error(what), index(j) {}
};

}  // namespace pfm
