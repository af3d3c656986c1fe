#pragma once

#include <cstddef>
#include <vector>

#include "semiring_lab/types.hpp"

namespace semiring_lab {

/// A subset of the elements 0..n-1 of some semiring.
class ElementSet {
  public:
    explicit ElementSet(std::size_t universe) : bits_(universe, 0) {}
    static ElementSet of(std::size_t universe, const std::vector<Elem>& members);
    static ElementSet all(std::size_t universe);

    [[nodiscard]] std::size_t universe() const noexcept { return bits_.size(); }
    [[nodiscard]] bool contains(Elem x) const noexcept { return bits_[x] != 0; }
    /// Returns true if x was not yet a member.
    bool insert(Elem x) noexcept {
        if (bits_[x] != 0) {
            return false;
        }
        bits_[x] = 1;
        ++count_;
        return true;
    }

    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] bool empty() const noexcept { return count_ == 0; }
    [[nodiscard]] bool is_all() const noexcept { return count_ == bits_.size(); }

    [[nodiscard]] std::vector<Elem> members() const;
    [[nodiscard]] bool subset_of(const ElementSet& other) const noexcept;
    [[nodiscard]] ElementSet intersect(const ElementSet& other) const;

    friend bool operator==(const ElementSet& x, const ElementSet& y) noexcept {
        return x.bits_ == y.bits_;
    }

  private:
    std::vector<unsigned char> bits_;
    std::size_t count_ = 0;
};

}  // namespace semiring_lab
