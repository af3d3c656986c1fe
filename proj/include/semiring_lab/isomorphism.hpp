#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// Add then mul table, row-major, minimized over all relabelings.
struct CanonicalForm {
    std::size_t order = 0;
    std::vector<std::uint16_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t kCanonicalFormMaxOrder = 8;

/// Exhaustive minimization over all n! permutations. Throws BoundExceeded
/// above kCanonicalFormMaxOrder.
[[nodiscard]] CanonicalForm canonical_form(const FiniteSemiring& s);

/// The semiring whose tables are the canonical form.
[[nodiscard]] FiniteSemiring canonical_representative(const FiniteSemiring& s);

/// Tables of s relabeled by perm: element x becomes perm[x].
[[nodiscard]] FiniteSemiring relabel(const FiniteSemiring& s, const std::vector<Elem>& perm);

/// A bijection f with f(x + y) = f(x) + f(y) and f(xy) = f(x)f(y), found by
/// backtracking over invariant-compatible images with forced propagation.
[[nodiscard]] std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemiring& s,
                                                                const FiniteSemiring& t);

[[nodiscard]] bool is_isomorphism(const FiniteSemiring& s, const FiniteSemiring& t,
                                  const std::vector<Elem>& f);

}  // namespace semiring_lab
