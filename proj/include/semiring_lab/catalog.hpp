#pragma once

#include <cstddef>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab::catalog {

/// {0, 1} with max and min.
[[nodiscard]] FiniteSemiring boolean();

/// Integers modulo n.
[[nodiscard]] FiniteSemiring integers_mod(std::size_t n);

/// Integers modulo n with xy = 0 for all x, y.
[[nodiscard]] FiniteSemiring zero_product_ring(std::size_t n);

/// {0, ..., n-1} with max as both operations.
[[nodiscard]] FiniteSemiring max_chain(std::size_t n);

/// {0, 1} with x + y = 0 for all x, y and min as multiplication.
[[nodiscard]] FiniteSemiring constant_sum();

/// The one-element semiring.
[[nodiscard]] FiniteSemiring trivial();

/// Whether q is a prime power p^e with e >= 1; sets p and e.
[[nodiscard]] bool prime_power(std::size_t q, std::size_t& p, std::size_t& e);

/// The finite field of order q (a prime power), elements as base-p digit
/// vectors of polynomial coefficients. Throws InvalidArgument.
[[nodiscard]] FiniteSemiring finite_field(std::size_t q);

/// M_k(F_q). Throws BoundExceeded past the materialization bound.
[[nodiscard]] FiniteSemiring matrix_ring(std::size_t k, std::size_t q);

}  // namespace semiring_lab::catalog
