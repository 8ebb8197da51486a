#pragma once

#include <stdexcept>
#include <string>

namespace qfd {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QFD_DEFINE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

QFD_DEFINE_ERROR(DimensionMismatch);
QFD_DEFINE_ERROR(NonHermitianInput);
QFD_DEFINE_ERROR(NotSkewHermitian);
QFD_DEFINE_ERROR(NotPSD);
QFD_DEFINE_ERROR(ConvergenceFailure);
QFD_DEFINE_ERROR(WeightNotNormalized);
QFD_DEFINE_ERROR(TailTooHeavy);
QFD_DEFINE_ERROR(BlochOutOfBall);
QFD_DEFINE_ERROR(LevelOutOfRange);
QFD_DEFINE_ERROR(EqualLevels);
QFD_DEFINE_ERROR(PowerExceedsTruncation);
QFD_DEFINE_ERROR(ParamOutOfDomain);
QFD_DEFINE_ERROR(SeriesNotConverged);
QFD_DEFINE_ERROR(ParseError);

#undef QFD_DEFINE_ERROR

}  // namespace qfd
