#include "semiring_lab/partition.hpp"

#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), Elem{0});
}

Elem UnionFind::find(Elem x) noexcept {
    Elem root = x;
    while (parent_[root] != root) {
        root = parent_[root];
    }
    while (parent_[x] != root) {
        Elem next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool UnionFind::unite(Elem x, Elem y) noexcept {
    Elem rx = find(x);
    Elem ry = find(y);
    if (rx == ry) {
        return false;
    }
    if (size_[rx] < size_[ry]) {
        std::swap(rx, ry);
    }
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    --classes_;
    return true;
}

Partition::Partition(std::vector<Elem> label) : label_(std::move(label)) {
    for (Elem l : label_) {
        if (l + 1 > blocks_) {
            blocks_ = l + 1;
        }
    }
}

Partition Partition::identity(std::size_t n) {
    std::vector<Elem> label(n);
    std::iota(label.begin(), label.end(), Elem{0});
    return Partition(std::move(label));
}

Partition Partition::full(std::size_t n) { return Partition(std::vector<Elem>(n, 0)); }

Partition Partition::from_keys(const std::vector<std::size_t>& key) {
    // Relabel in order of first appearance, which numbers blocks by least element.
    std::vector<Elem> label(key.size());
    std::map<std::size_t, Elem> seen;
    for (std::size_t x = 0; x < key.size(); ++x) {
        auto [it, inserted] = seen.try_emplace(key[x], static_cast<Elem>(seen.size()));
        label[x] = it->second;
    }
    return Partition(std::move(label));
}

Partition Partition::from_union_find(UnionFind& uf) {
    const std::size_t n = uf.size();
    std::vector<Elem> root_label(n, static_cast<Elem>(n));
    std::vector<Elem> label(n);
    Elem next = 0;
    for (Elem x = 0; x < n; ++x) {
        Elem r = uf.find(x);
        if (root_label[r] == n) {
            root_label[r] = next++;
        }
        label[x] = root_label[r];
    }
    return Partition(std::move(label));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
    std::vector<bool> covered(n, false);
    UnionFind uf(n);
    for (const auto& block : blocks) {
        if (block.empty()) {
            throw InvalidArgument("partition blocks must be nonempty");
        }
        for (Elem x : block) {
            if (x >= n || covered[x]) {
                throw InvalidArgument("element " + std::to_string(x) +
                                      " is out of range or appears twice in the blocks");
            }
            covered[x] = true;
            uf.unite(block.front(), x);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!covered[x]) {
            throw InvalidArgument("element " + std::to_string(x) + " is missing from the blocks");
        }
    }
    return from_union_find(uf);
}

std::vector<std::vector<Elem>> Partition::blocks() const {
    std::vector<std::vector<Elem>> out(blocks_);
    for (Elem x = 0; x < label_.size(); ++x) {
        out[label_[x]].push_back(x);
    }
    return out;
}

bool Partition::refines(const Partition& other) const noexcept {
    // Each block of *this maps to one block of other.
    std::vector<Elem> image(blocks_, static_cast<Elem>(other.size()));
    for (Elem x = 0; x < label_.size(); ++x) {
        Elem& target = image[label_[x]];
        if (target == other.size()) {
            target = other.label_[x];
        } else if (target != other.label_[x]) {
            return false;
        }
    }
    return true;
}

Partition Partition::join(const Partition& other) const {
    const std::size_t n = label_.size();
    UnionFind uf(n);
    std::vector<Elem> first_a(blocks_, static_cast<Elem>(n));
    std::vector<Elem> first_b(other.blocks_, static_cast<Elem>(n));
    for (Elem x = 0; x < n; ++x) {
        Elem& a = first_a[label_[x]];
        Elem& b = first_b[other.label_[x]];
        if (a == n) {
            a = x;
        } else {
            uf.unite(a, x);
        }
        if (b == n) {
            b = x;
        } else {
            uf.unite(b, x);
        }
    }
    return from_union_find(uf);
}

}  // namespace semiring_lab
