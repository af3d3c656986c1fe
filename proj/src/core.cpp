#include "semiring_lab/core.hpp"

#include <algorithm>
#include <string>

#include "semiring_lab/congruence.hpp"

namespace semiring_lab {

QuasiOrder::QuasiOrder(const FiniteSemiring& s) : n_(s.order()), leq_(n_ * n_, 0) {
    for (Elem a = 0; a < n_; ++a) {
        leq_[a * n_ + a] = 1;
        for (Elem c = 0; c < n_; ++c) {
            leq_[a * n_ + s.add(a, c)] = 1;
        }
    }
}

std::vector<std::pair<Elem, Elem>> QuasiOrder::pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < n_; ++a) {
        for (Elem b = 0; b < n_; ++b) {
            if (leq(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

QuasiOrder standard_quasiorder(const FiniteSemiring& s) { return QuasiOrder(s); }

namespace {

template <typename Pred>
std::optional<Elem> unique_with(const FiniteSemiring& s, Pred pred, const char* what) {
    std::optional<Elem> found;
    for (Elem w = 0; w < s.order(); ++w) {
        if (pred(w)) {
            if (found) {
                throw InternalError(std::string("two distinct elements are ") + what);
            }
            found = w;
        }
    }
    return found;
}

}  // namespace

SpecialElements special_elements(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    auto for_all = [n](auto pred) {
        for (Elem a = 0; a < n; ++a) {
            if (!pred(a)) {
                return false;
            }
        }
        return true;
    };
    SpecialElements out;
    out.unity = unique_with(
        s, [&](Elem w) { return for_all([&](Elem a) { return s.mul(a, w) == a && s.mul(w, a) == a; }); },
        "unities");
    out.add_neutral = unique_with(
        s, [&](Elem w) { return for_all([&](Elem a) { return s.add(a, w) == a; }); },
        "additively neutral");
    out.add_absorbing = unique_with(
        s, [&](Elem w) { return for_all([&](Elem a) { return s.add(a, w) == w; }); },
        "additively absorbing");
    out.mul_absorbing = unique_with(
        s, [&](Elem w) { return for_all([&](Elem a) { return s.mul(a, w) == w && s.mul(w, a) == w; }); },
        "multiplicatively absorbing");
    if (out.mul_absorbing && out.add_neutral == out.mul_absorbing) {
        out.zero = out.mul_absorbing;
    }
    if (out.mul_absorbing && out.add_absorbing == out.mul_absorbing) {
        out.bi_absorbing = out.mul_absorbing;
    }
    return out;
}

bool is_commutative(const FiniteSemiring& s) {
    for (Elem a = 0; a < s.order(); ++a) {
        for (Elem b = a + 1; b < s.order(); ++b) {
            if (s.mul(a, b) != s.mul(b, a)) {
                return false;
            }
        }
    }
    return true;
}

bool is_add_idempotent(const FiniteSemiring& s) {
    for (Elem a = 0; a < s.order(); ++a) {
        if (s.add(a, a) != a) {
            return false;
        }
    }
    return true;
}

bool is_mul_idempotent(const FiniteSemiring& s) {
    for (Elem a = 0; a < s.order(); ++a) {
        if (s.mul(a, a) != a) {
            return false;
        }
    }
    return true;
}

bool is_add_cancellative(const FiniteSemiring& s) {
    // Each translation x -> x + c must be injective.
    const std::size_t n = s.order();
    std::vector<unsigned char> hit(n);
    for (Elem c = 0; c < n; ++c) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Elem a = 0; a < n; ++a) {
            Elem v = s.add(a, c);
            if (hit[v]) {
                return false;
            }
            hit[v] = 1;
        }
    }
    return true;
}

bool is_ring(const FiniteSemiring& s) {
    auto special = special_elements(s);
    if (!special.add_neutral) {
        return false;
    }
    for (Elem a = 0; a < s.order(); ++a) {
        bool has_inverse = false;
        for (Elem b = 0; b < s.order() && !has_inverse; ++b) {
            has_inverse = s.add(a, b) == *special.add_neutral;
        }
        if (!has_inverse) {
            return false;
        }
    }
    return true;
}

bool is_add_archimedean(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    QuasiOrder q(s);
    std::vector<unsigned char> reached(n), seen(n);
    for (Elem b = 0; b < n; ++b) {
        // Union of the down-sets of m·b for m = 1..2n; the multiples repeat
        // within the first n + 1 terms, so stop at the first repeat.
        std::fill(reached.begin(), reached.end(), 0);
        std::fill(seen.begin(), seen.end(), 0);
        Elem mb = b;
        for (std::size_t m = 1; m <= 2 * n && !seen[mb]; ++m) {
            seen[mb] = 1;
            for (Elem a = 0; a < n; ++a) {
                if (q.leq(a, mb)) {
                    reached[a] = 1;
                }
            }
            mb = s.add(mb, b);
        }
        if (std::find(reached.begin(), reached.end(), 0) != reached.end()) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<std::size_t> preimage_counts(const FiniteSemiring& s, std::size_t m) {
    std::vector<std::size_t> count(s.order(), 0);
    for (Elem b = 0; b < s.order(); ++b) {
        ++count[s.multiple(m, b)];
    }
    return count;
}

}  // namespace

bool is_m_divisible(const FiniteSemiring& s, std::size_t m) {
    auto count = preimage_counts(s, m);
    return std::none_of(count.begin(), count.end(), [](std::size_t c) { return c == 0; });
}

bool is_uniquely_m_divisible(const FiniteSemiring& s, std::size_t m) {
    auto count = preimage_counts(s, m);
    return std::all_of(count.begin(), count.end(), [](std::size_t c) { return c == 1; });
}

std::optional<Elem> common_lower_bound(const FiniteSemiring& s, const QuasiOrder& q, Elem a,
                                       Elem b) {
    for (Elem c = 0; c < s.order(); ++c) {
        if (q.leq(c, a) && q.leq(c, b)) {
            return c;
        }
    }
    return std::nullopt;
}

bool is_downwards_directed(const FiniteSemiring& s) {
    QuasiOrder q(s);
    for (Elem a = 0; a < s.order(); ++a) {
        for (Elem b = a + 1; b < s.order(); ++b) {
            if (!common_lower_bound(s, q, a, b)) {
                return false;
            }
        }
    }
    return true;
}

Partition quasiorder_kernel(const FiniteSemiring& s) {
    QuasiOrder q(s);
    UnionFind uf(s.order());
    for (Elem a = 0; a < s.order(); ++a) {
        for (Elem b = a + 1; b < s.order(); ++b) {
            if (q.leq(a, b) && q.leq(b, a)) {
                uf.unite(a, b);
            }
        }
    }
    return Partition::from_union_find(uf);
}

Partition k_multiple_congruence(const FiniteSemiring& s, std::size_t k) {
    if (k < 2) {
        throw InvalidArgument("k_multiple_congruence requires k >= 2");
    }
    std::vector<std::size_t> key(s.order());
    for (Elem x = 0; x < s.order(); ++x) {
        key[x] = s.multiple(k, x);
    }
    return Partition::from_keys(key);
}

namespace {

std::vector<Elem> image_set(const FiniteSemiring& s, bool products) {
    std::vector<unsigned char> hit(s.order(), 0);
    for (Elem a = 0; a < s.order(); ++a) {
        for (Elem b = 0; b < s.order(); ++b) {
            hit[products ? s.mul(a, b) : s.add(a, b)] = 1;
        }
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < s.order(); ++x) {
        if (hit[x]) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace

std::vector<Elem> product_set(const FiniteSemiring& s) { return image_set(s, true); }
std::vector<Elem> sum_set(const FiniteSemiring& s) { return image_set(s, false); }

DifferenceRing difference_ring(const FiniteSemiring& s) {
    if (!is_add_cancellative(s)) {
        throw NotCancellative("difference ring requires an additively cancellative semiring");
    }
    const std::size_t n = s.order();
    // Class representatives as pairs (a, b), standing for "a - b".
    std::vector<std::pair<Elem, Elem>> reps;
    std::vector<Elem> class_of(n * n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            Elem found = static_cast<Elem>(reps.size());
            for (Elem r = 0; r < reps.size(); ++r) {
                auto [c, d] = reps[r];
                if (s.add(a, d) == s.add(b, c)) {
                    found = r;
                    break;
                }
            }
            if (found == reps.size()) {
                reps.emplace_back(a, b);
            }
            class_of[a * n + b] = found;
        }
    }
    const std::size_t order = reps.size();
    auto cls = [&](Elem a, Elem b) { return class_of[a * n + b]; };
    std::vector<std::uint16_t> add(order * order), mul(order * order);
    for (Elem x = 0; x < order; ++x) {
        auto [a, b] = reps[x];
        for (Elem y = 0; y < order; ++y) {
            auto [c, d] = reps[y];
            add[x * order + y] = static_cast<std::uint16_t>(cls(s.add(a, c), s.add(b, d)));
            mul[x * order + y] = static_cast<std::uint16_t>(
                cls(s.add(s.mul(a, c), s.mul(b, d)), s.add(s.mul(a, d), s.mul(b, c))));
        }
    }
    DifferenceRing out{
        FiniteSemiring::trusted(order, std::move(add), std::move(mul),
                                s.name().empty() ? std::string() : s.name() + " - " + s.name()),
        std::vector<Elem>(n), cls(0, 0), std::vector<Elem>(order)};
    for (Elem a = 0; a < n; ++a) {
        out.embed[a] = cls(s.add(a, a), a);
    }
    for (Elem x = 0; x < order; ++x) {
        out.neg[x] = cls(reps[x].second, reps[x].first);
    }
    return out;
}

bool is_conical(const FiniteSemiring& s) {
    return is_congruence_simple(difference_ring(s).ring);
}

bool difference_order_leq(const DifferenceRing& d, Elem r, Elem s) {
    if (r == s) {
        return true;
    }
    Elem diff = d.ring.add(s, d.neg[r]);
    return std::find(d.embed.begin(), d.embed.end(), diff) != d.embed.end();
}

}  // namespace semiring_lab
