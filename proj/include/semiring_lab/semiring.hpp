#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/errors.hpp"
#include "semiring_lab/types.hpp"

namespace semiring_lab {

using Table = std::vector<std::vector<Elem>>;

/// A finite semiring on the elements 0..n-1, given by its Cayley tables.
///
/// Instances are immutable. The only ways to obtain one are `validate`
/// (which checks every axiom instance) and `FiniteSemiring::trusted`, which
/// is reserved for constructions that are semirings by construction and
/// perform their own verification.
class FiniteSemiring {
  public:
    /// Builds a semiring without checking the axioms. Shape is still checked.
    static FiniteSemiring trusted(std::size_t order, std::vector<std::uint16_t> add,
                                  std::vector<std::uint16_t> mul, std::string name = {});

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return add_[a * order_ + b]; }
    [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }

    /// m·a = a + ... + a (m times), m >= 1.
    [[nodiscard]] Elem multiple(std::size_t m, Elem a) const noexcept;

    [[nodiscard]] Table add_table() const;
    [[nodiscard]] Table mul_table() const;

    /// Flat row-major tables.
    [[nodiscard]] const std::vector<std::uint16_t>& add_data() const noexcept { return add_; }
    [[nodiscard]] const std::vector<std::uint16_t>& mul_data() const noexcept { return mul_; }

    [[nodiscard]] FiniteSemiring with_name(std::string name) const;

    /// Tables are equal; the name is ignored.
    friend bool operator==(const FiniteSemiring& x, const FiniteSemiring& y) noexcept {
        return x.order_ == y.order_ && x.add_ == y.add_ && x.mul_ == y.mul_;
    }

  private:
    FiniteSemiring(std::size_t order, std::vector<std::uint16_t> add,
                   std::vector<std::uint16_t> mul, std::string name);

    std::size_t order_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::string name_;
};

/// First failing axiom instance of the flat tables, scanning identities in
/// the order of `Axiom` and triples lexicographically. `nullopt` if the
/// tables define a semiring. Shapes must already be correct.
[[nodiscard]] std::optional<AxiomFailure> find_axiom_failure(
    std::size_t order, const std::vector<std::uint16_t>& add,
    const std::vector<std::uint16_t>& mul);

/// Checks shapes and all 3n^3 axiom instances, then returns the semiring.
/// Throws TableShapeError or AxiomViolation.
FiniteSemiring validate(const Table& add_table, const Table& mul_table, std::string name = {});

/// As above for flat row-major tables.
FiniteSemiring validate(std::size_t order, const std::vector<Elem>& add,
                        const std::vector<Elem>& mul, std::string name = {});

}  // namespace semiring_lab
