#pragma once

#include <cstddef>
#include <cstdint>

namespace semiring_lab {

/// Index of a semiring element; elements of an order-n semiring are 0..n-1.
using Elem = std::uint32_t;

/// Largest order representable in table storage.
inline constexpr std::size_t kMaxOrder = 65535;

/// Default cap on |S|^(n*n) when materializing a matrix semiring.
inline constexpr std::size_t kDefaultMaterializeBound = 6561;

}  // namespace semiring_lab
