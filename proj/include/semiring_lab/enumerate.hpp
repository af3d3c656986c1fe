#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

struct EnumerationOptions {
    /// Orders above 4 need this flag; order 5 is the hard limit.
    bool allow_order_five = false;
};

/// Calls sink once per isomorphism class of semirings of the given order.
/// Each emitted semiring is the canonical representative of its class and
/// the sequence is ordered by canonical form. Throws BoundExceeded.
void for_each_semiring(std::size_t order, const std::function<void(const FiniteSemiring&)>& sink,
                       EnumerationOptions options = {});

[[nodiscard]] std::vector<FiniteSemiring> enumerate_semirings(std::size_t order,
                                                              EnumerationOptions options = {});

/// Result of comparing a finite additively cancellative semiring with the
/// matrix rings over finite fields.
struct CancellativeClassification {
    std::string name;
    std::size_t order = 0;
    bool cancellative = false;
    /// M_2(S) congruence-simple; nullopt if M_2(S) exceeds the bound.
    std::optional<bool> matrix_simple;
    /// (k, q) with S isomorphic to M_k(F_q), when one exists.
    std::optional<std::pair<std::size_t, std::size_t>> matrix_ring;
    /// M_2(S) simple iff S is a matrix ring over a finite field.
    std::optional<bool> equivalence_holds;
};

[[nodiscard]] CancellativeClassification classify_finite_cancellative(
    const FiniteSemiring& s, std::size_t bound = kDefaultMaterializeBound);

[[nodiscard]] std::vector<CancellativeClassification> classify_finite_cancellative(
    const std::vector<FiniteSemiring>& corpus, std::size_t bound = kDefaultMaterializeBound);

}  // namespace semiring_lab
