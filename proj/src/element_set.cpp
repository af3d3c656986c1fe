#include "semiring_lab/element_set.hpp"

#include <string>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

ElementSet ElementSet::of(std::size_t universe, const std::vector<Elem>& members) {
    ElementSet out(universe);
    for (Elem x : members) {
        if (x >= universe) {
            throw InvalidArgument("element " + std::to_string(x) + " outside 0.." +
                                  std::to_string(universe - 1));
        }
        out.insert(x);
    }
    return out;
}

ElementSet ElementSet::all(std::size_t universe) {
    ElementSet out(universe);
    for (Elem x = 0; x < universe; ++x) {
        out.insert(x);
    }
    return out;
}

std::vector<Elem> ElementSet::members() const {
    std::vector<Elem> out;
    out.reserve(count_);
    for (Elem x = 0; x < bits_.size(); ++x) {
        if (bits_[x] != 0) {
            out.push_back(x);
        }
    }
    return out;
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept {
    for (std::size_t x = 0; x < bits_.size(); ++x) {
        if (bits_[x] != 0 && other.bits_[x] == 0) {
            return false;
        }
    }
    return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    ElementSet out(bits_.size());
    for (Elem x = 0; x < bits_.size(); ++x) {
        if (bits_[x] != 0 && other.bits_[x] != 0) {
            out.insert(x);
        }
    }
    return out;
}

}  // namespace semiring_lab
