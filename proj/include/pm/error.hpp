#pragma once

#include <stdexcept>
#include <string>

#include "pm/subset.hpp"

namespace pm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AxiomKind { Normalization, Monotone, Submodular, ElementRank };

const char* to_string(AxiomKind kind);

/// A rank table failed one of the 2-polymatroid axioms. For Monotone and
/// Submodular the pair (x, y) is the witness; for ElementRank `element` is.
class AxiomViolation : public Error {
 public:
  AxiomViolation(AxiomKind kind, Subset x, Subset y, int element, const std::string& what)
      : Error(what), kind(kind), x(x), y(y), element(element) {}
  AxiomKind kind;
  Subset x;
  Subset y;
  int element;
};

#define PM_DEFINE_ERROR(Name)          \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

PM_DEFINE_ERROR(UnknownElement)
PM_DEFINE_ERROR(DuplicateLabel)
PM_DEFINE_ERROR(SizeOutOfRange)
PM_DEFINE_ERROR(PreconditionViolated)
PM_DEFINE_ERROR(NotAFlat)
PM_DEFINE_ERROR(BasepointRankMismatch)
PM_DEFINE_ERROR(DegenerateBasepoint)
PM_DEFINE_ERROR(TooSmall)
PM_DEFINE_ERROR(NotAnExact2Separation)
PM_DEFINE_ERROR(Undefined)
PM_DEFINE_ERROR(NoTwoSeparation)
PM_DEFINE_ERROR(AmbiguousSide)
PM_DEFINE_ERROR(NotCompact)
PM_DEFINE_ERROR(HypothesisViolated)

#undef PM_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line), reason(reason) {}
  int line;
  std::string reason;
};

}  // namespace pm
