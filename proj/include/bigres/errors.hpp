#ifndef BIGRES_ERRORS_HPP
#define BIGRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bigres {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit status 1; anything else is a usage or internal error.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define BIGRES_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
       public:                               \
        using Error::Error;                  \
    }

BIGRES_DEFINE_ERROR(ParseError);
BIGRES_DEFINE_ERROR(RingMismatchError);
BIGRES_DEFINE_ERROR(InhomogeneousError);
BIGRES_DEFINE_ERROR(ZeroPolynomialError);
BIGRES_DEFINE_ERROR(MissingWeightsError);
BIGRES_DEFINE_ERROR(ModeMismatchError);
BIGRES_DEFINE_ERROR(InfiniteDimensionalError);
BIGRES_DEFINE_ERROR(NotAComplexError);
BIGRES_DEFINE_ERROR(NotMinimalError);
BIGRES_DEFINE_ERROR(HypothesisError);
BIGRES_DEFINE_ERROR(LiftError);
BIGRES_DEFINE_ERROR(NotDivisibleError);
BIGRES_DEFINE_ERROR(InvalidInputError);

#undef BIGRES_DEFINE_ERROR

}  // namespace bigres

#endif
