#include "semiring_lab/congruence.hpp"

#include <set>
#include <string>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

std::optional<std::vector<Elem>> congruence_failure(const FiniteSemiring& s, const Partition& p) {
    if (p.size() != s.order()) {
        throw InvalidArgument("partition size does not match the semiring order");
    }
    const std::size_t n = s.order();
    // Comparing each element with its block's least member suffices.
    std::vector<Elem> first(p.block_count(), static_cast<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
        Elem& rep = first[p.block_of(a)];
        if (rep == n) {
            rep = a;
            continue;
        }
        for (Elem c = 0; c < n; ++c) {
            if (!p.related(s.add(rep, c), s.add(a, c)) || !p.related(s.mul(rep, c), s.mul(a, c)) ||
                !p.related(s.mul(c, rep), s.mul(c, a))) {
                return std::vector<Elem>{rep, a, c};
            }
        }
    }
    return std::nullopt;
}

bool is_congruence(const FiniteSemiring& s, const Partition& p) {
    return !congruence_failure(s, p).has_value();
}

namespace {

/// Closes uf under translations, starting from the pending pairs. Stops
/// early when everything is merged or a pair flagged in known_full is merged.
/// Returns true if the result is known to be the full relation.
bool close(const FiniteSemiring& s, UnionFind& uf, std::vector<ElemPair>& pending,
           const std::vector<unsigned char>* known_full = nullptr) {
    const std::size_t n = s.order();
    while (!pending.empty()) {
        auto [x, y] = pending.back();
        pending.pop_back();
        if (!uf.unite(x, y)) {
            continue;
        }
        if (uf.class_count() == 1 || (known_full != nullptr && (*known_full)[x * n + y])) {
            return true;
        }
        for (Elem c = 0; c < n; ++c) {
            Elem u = s.add(x, c), v = s.add(y, c);
            if (u != v) {
                pending.emplace_back(u, v);
            }
            u = s.mul(x, c), v = s.mul(y, c);
            if (u != v) {
                pending.emplace_back(u, v);
            }
            u = s.mul(c, x), v = s.mul(c, y);
            if (u != v) {
                pending.emplace_back(u, v);
            }
        }
    }
    return uf.class_count() == 1;
}

}  // namespace

Partition congruence_generated(const FiniteSemiring& s, std::span<const ElemPair> generators) {
    UnionFind uf(s.order());
    std::vector<ElemPair> pending;
    for (auto [a, b] : generators) {
        if (a >= s.order() || b >= s.order()) {
            throw InvalidArgument("generator pair out of range");
        }
        if (a != b) {
            pending.emplace_back(a, b);
        }
    }
    if (close(s, uf, pending)) {
        return Partition::full(s.order());
    }
    return Partition::from_union_find(uf);
}

Partition principal_congruence(const FiniteSemiring& s, Elem a, Elem b) {
    const ElemPair gen{a, b};
    return congruence_generated(s, std::span<const ElemPair>(&gen, 1));
}

SimplicityVerdict congruence_simplicity(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    SimplicityVerdict out;
    if (n == 1) {
        return out;
    }
    std::vector<unsigned char> known_full(n * n, 0);
    std::vector<ElemPair> pending;
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = a + 1; b < n; ++b) {
            UnionFind uf(n);
            pending.assign(1, {a, b});
            if (close(s, uf, pending, &known_full)) {
                known_full[a * n + b] = known_full[b * n + a] = 1;
                continue;
            }
            out.witness = ElemPair{a, b};
            out.congruence = Partition::from_union_find(uf);
            return out;
        }
    }
    out.simple = true;
    return out;
}

bool is_congruence_simple(const FiniteSemiring& s) { return congruence_simplicity(s).simple; }

std::vector<Partition> all_congruences(const FiniteSemiring& s, std::size_t element_bound,
                                       std::size_t count_bound) {
    const std::size_t n = s.order();
    if (n > element_bound) {
        throw BoundExceeded("all_congruences: order " + std::to_string(n) + " exceeds bound " +
                            std::to_string(element_bound));
    }
    std::set<Partition> principals;
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = a + 1; b < n; ++b) {
            principals.insert(principal_congruence(s, a, b));
        }
    }
    // Every congruence is a join of principal ones; joins of congruences are congruences.
    std::set<Partition> found{Partition::identity(n)};
    std::vector<Partition> frontier{Partition::identity(n)};
    while (!frontier.empty()) {
        Partition current = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& p : principals) {
            if (p.refines(current)) {
                continue;
            }
            Partition joined = current.join(p);
            if (found.insert(joined).second) {
                if (found.size() > count_bound) {
                    throw BoundExceeded("all_congruences: more than " +
                                        std::to_string(count_bound) + " congruences");
                }
                frontier.push_back(std::move(joined));
            }
        }
    }
    return {found.begin(), found.end()};
}

std::optional<ElemPair> separating_pair_failure(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (a == b) {
                continue;
            }
            bool left = false, right = false;
            for (Elem c = 0; c < n && !(left && right); ++c) {
                left = left || s.mul(c, a) != s.mul(c, b);
                right = right || s.mul(a, c) != s.mul(b, c);
            }
            if (!left || !right) {
                return ElemPair{a, b};
            }
        }
    }
    return std::nullopt;
}

bool separating_pair_check(const FiniteSemiring& s) { return !separating_pair_failure(s); }

}  // namespace semiring_lab
