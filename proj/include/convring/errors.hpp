#pragma once

#include <stdexcept>
#include <string>

namespace convring {

// Domain errors carry a stable name so the CLI can report it verbatim.
class DomainError : public std::runtime_error {
   public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

   private:
    std::string name_;
};

#define CONVRING_ERROR(NAME)                                       \
    class NAME : public DomainError {                              \
       public:                                                     \
        explicit NAME(const std::string& detail = "")              \
            : DomainError(#NAME, detail) {}                        \
    }

CONVRING_ERROR(NotSquarefree);
CONVRING_ERROR(IndexOutOfRange);
CONVRING_ERROR(ShapeMismatch);
CONVRING_ERROR(ComponentCountMismatch);
CONVRING_ERROR(SizeOutOfRange);
CONVRING_ERROR(ShapeError);
CONVRING_ERROR(MixedRings);
CONVRING_ERROR(RankDeficient);
CONVRING_ERROR(DegreeCapExceeded);
CONVRING_ERROR(NotInjective);
CONVRING_ERROR(NonConstantDegree);
CONVRING_ERROR(ZeroColumnDegree);
CONVRING_ERROR(NotObservable);
CONVRING_ERROR(RingMismatch);
CONVRING_ERROR(NotColumnReduced);
CONVRING_ERROR(DimensionMismatch);
CONVRING_ERROR(NotMinimal);
CONVRING_ERROR(NoCommonSplit);
CONVRING_ERROR(NotReachable);
CONVRING_ERROR(Inconclusive);
CONVRING_ERROR(StageMismatch);
CONVRING_ERROR(ParseError);

#undef CONVRING_ERROR

}  // namespace convring
