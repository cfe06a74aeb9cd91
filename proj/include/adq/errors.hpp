#pragma once

#include <stdexcept>
#include <string>

namespace adq {

/// Root of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ADQ_ERROR(Name)                     \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

ADQ_ERROR(DomainError);
ADQ_ERROR(ExponentOverflow);
ADQ_ERROR(NonInvertibleImage);
ADQ_ERROR(NonConfluentIdeal);
ADQ_ERROR(PoleAtPoint);
ADQ_ERROR(ParseError);
ADQ_ERROR(UnsupportedFamily);
ADQ_ERROR(UnknownGenerator);
ADQ_ERROR(NotInvariant);
ADQ_ERROR(ConstraintDegenerate);
ADQ_ERROR(RelationViolation);
ADQ_ERROR(UnsupportedStratum);

#undef ADQ_ERROR

}  // namespace adq
