#ifndef QHEUN_ERRORS_HPP
#define QHEUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qheun {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QHEUN_DEFINE_ERROR(Name)         \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

QHEUN_DEFINE_ERROR(DivisionByZero);
QHEUN_DEFINE_ERROR(ZeroScale);
QHEUN_DEFINE_ERROR(ZeroMultiplier);
QHEUN_DEFINE_ERROR(BaseMismatch);
QHEUN_DEFINE_ERROR(NegativeExponent);
QHEUN_DEFINE_ERROR(InvalidParameters);
QHEUN_DEFINE_ERROR(DegenerateSpectrum);
QHEUN_DEFINE_ERROR(FitFailure);
QHEUN_DEFINE_ERROR(SingularParameters);
QHEUN_DEFINE_ERROR(NoRationalScale);
QHEUN_DEFINE_ERROR(NotHeunShape);
QHEUN_DEFINE_ERROR(ExpansionFailure);
QHEUN_DEFINE_ERROR(BoundaryLeak);
QHEUN_DEFINE_ERROR(SolverBlowup);
QHEUN_DEFINE_ERROR(ConfigError);
QHEUN_DEFINE_ERROR(ParseError);

#undef QHEUN_DEFINE_ERROR

}  // namespace qheun

#endif  // QHEUN_ERRORS_HPP
