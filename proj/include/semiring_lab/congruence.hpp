#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semiring_lab/partition.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

using ElemPair = std::pair<Elem, Elem>;

/// a ~ b implies a + c ~ b + c, ac ~ bc and ca ~ cb for every c.
[[nodiscard]] bool is_congruence(const FiniteSemiring& s, const Partition& p);

/// First compatibility failure of p as (a, b, c), if any.
[[nodiscard]] std::optional<std::vector<Elem>> congruence_failure(const FiniteSemiring& s,
                                                                  const Partition& p);

/// Least congruence containing every generator pair.
[[nodiscard]] Partition congruence_generated(const FiniteSemiring& s,
                                             std::span<const ElemPair> generators);

/// Least congruence containing (a, b).
[[nodiscard]] Partition principal_congruence(const FiniteSemiring& s, Elem a, Elem b);

struct SimplicityVerdict {
    bool simple = false;
    /// For a non-simple semiring of order >= 2: the lexicographically first
    /// pair a < b whose principal congruence is proper, and that congruence.
    std::optional<ElemPair> witness;
    std::optional<Partition> congruence;
};

/// Order 1 is never simple (it has a single congruence). Otherwise simple iff
/// every principal congruence of a pair a != b is the full relation.
[[nodiscard]] SimplicityVerdict congruence_simplicity(const FiniteSemiring& s);

[[nodiscard]] bool is_congruence_simple(const FiniteSemiring& s);

inline constexpr std::size_t kDefaultCongruenceElementBound = 100;
inline constexpr std::size_t kDefaultCongruenceCountBound = 1'000'000;

/// Every congruence once, ordered by canonical label vector. Throws
/// BoundExceeded when the order exceeds element_bound or more than
/// count_bound congruences exist.
[[nodiscard]] std::vector<Partition> all_congruences(
    const FiniteSemiring& s, std::size_t element_bound = kDefaultCongruenceElementBound,
    std::size_t count_bound = kDefaultCongruenceCountBound);

/// First pair a != b admitting no c with ca != cb or no d with ad != bd.
[[nodiscard]] std::optional<ElemPair> separating_pair_failure(const FiniteSemiring& s);

/// For all a != b there are c, d with ca != cb and ad != bd.
[[nodiscard]] bool separating_pair_check(const FiniteSemiring& s);

}  // namespace semiring_lab
