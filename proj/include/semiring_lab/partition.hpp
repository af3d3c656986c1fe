#pragma once

#include <cstddef>
#include <vector>

#include "semiring_lab/types.hpp"

namespace semiring_lab {

/// Disjoint-set forest over 0..n-1 with path compression and union by size.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
    [[nodiscard]] std::size_t class_count() const noexcept { return classes_; }

    Elem find(Elem x) noexcept;

    /// Merges the classes of x and y; false if they were already merged.
    bool unite(Elem x, Elem y) noexcept;

  private:
    std::vector<Elem> parent_;
    std::vector<std::size_t> size_;
    std::size_t classes_;
};

/// An equivalence relation on 0..n-1 in canonical form.
///
/// Blocks are numbered by their least element, so two partitions are equal
/// exactly when their label vectors are equal.
class Partition {
  public:
    /// Every element in its own block.
    static Partition identity(std::size_t n);
    /// A single block.
    static Partition full(std::size_t n);
    /// Partition with x ~ y iff key[x] == key[y].
    static Partition from_keys(const std::vector<std::size_t>& key);
    static Partition from_union_find(UnionFind& uf);
    /// Throws InvalidArgument unless the blocks partition 0..n-1.
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);

    [[nodiscard]] std::size_t size() const noexcept { return label_.size(); }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_; }
    [[nodiscard]] Elem block_of(Elem x) const noexcept { return label_[x]; }
    [[nodiscard]] bool related(Elem x, Elem y) const noexcept { return label_[x] == label_[y]; }
    [[nodiscard]] bool is_identity() const noexcept { return blocks_ == label_.size(); }
    [[nodiscard]] bool is_full() const noexcept { return blocks_ == 1; }

    /// Blocks sorted by least element, members ascending.
    [[nodiscard]] std::vector<std::vector<Elem>> blocks() const;

    /// Every block of *this is contained in a block of other.
    [[nodiscard]] bool refines(const Partition& other) const noexcept;

    /// Least equivalence relation containing both.
    [[nodiscard]] Partition join(const Partition& other) const;

    [[nodiscard]] const std::vector<Elem>& labels() const noexcept { return label_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) { return x.label_ <=> y.label_; }

  private:
    explicit Partition(std::vector<Elem> label);

    std::vector<Elem> label_;
    std::size_t blocks_ = 0;
};

}  // namespace semiring_lab
