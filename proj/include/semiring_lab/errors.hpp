#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "semiring_lab/types.hpp"

namespace semiring_lab {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    /// Stable machine-readable identifier, used in JSON error reports.
    [[nodiscard]] virtual const char* kind() const noexcept { return "Error"; }
};

#define SEMIRING_LAB_ERROR(Name)                                      \
    class Name : public Error {                                       \
      public:                                                         \
        using Error::Error;                                           \
        [[nodiscard]] const char* kind() const noexcept override {    \
            return #Name;                                             \
        }                                                             \
    }

SEMIRING_LAB_ERROR(TableShapeError);
SEMIRING_LAB_ERROR(BoundExceeded);
SEMIRING_LAB_ERROR(NotCancellative);
SEMIRING_LAB_ERROR(NoZero);
SEMIRING_LAB_ERROR(EmptySet);
SEMIRING_LAB_ERROR(LiftingViolation);
SEMIRING_LAB_ERROR(PreconditionUnmet);
SEMIRING_LAB_ERROR(NonPositive);
SEMIRING_LAB_ERROR(NotMember);
SEMIRING_LAB_ERROR(InvalidArgument);
SEMIRING_LAB_ERROR(InternalError);

#undef SEMIRING_LAB_ERROR

enum class Axiom {
    add_commutative,
    add_associative,
    mul_associative,
    left_distributive,
    right_distributive,
};

[[nodiscard]] const char* axiom_name(Axiom axiom) noexcept;

/// A failed semiring identity together with the elements that witness it.
struct AxiomFailure {
    Axiom axiom;
    std::vector<Elem> witness;
};

class AxiomViolation : public Error {
  public:
    explicit AxiomViolation(AxiomFailure failure);
    [[nodiscard]] const char* kind() const noexcept override { return "AxiomViolation"; }
    [[nodiscard]] const AxiomFailure& failure() const noexcept { return failure_; }

  private:
    AxiomFailure failure_;
};

}  // namespace semiring_lab
