#include "semiring_lab/ideal.hpp"

#include <set>
#include <string>

#include "semiring_lab/core.hpp"
#include "semiring_lab/matrix.hpp"

namespace semiring_lab {

bool is_bi_ideal(const FiniteSemiring& s, const ElementSet& set) {
    if (set.empty()) {
        throw EmptySet("a bi-ideal must be nonempty");
    }
    for (Elem a : set.members()) {
        for (Elem x = 0; x < s.order(); ++x) {
            if (!set.contains(s.add(a, x)) || !set.contains(s.mul(a, x)) ||
                !set.contains(s.mul(x, a))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

/// Closes `set` in place; stops early once an element flagged in `saturating`
/// is reached (its bi-ideal is all of S) and then returns true.
bool close_bi_ideal(const FiniteSemiring& s, ElementSet& set,
                    const std::vector<unsigned char>* saturating = nullptr) {
    std::vector<Elem> work = set.members();
    auto visit = [&](Elem y) {
        if (set.insert(y)) {
            work.push_back(y);
        }
        return saturating != nullptr && (*saturating)[y];
    };
    for (Elem x : work) {
        if (saturating != nullptr && (*saturating)[x]) {
            return true;
        }
    }
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        for (Elem c = 0; c < s.order(); ++c) {
            if (visit(s.add(x, c)) | visit(s.mul(x, c)) | visit(s.mul(c, x))) {
                return true;
            }
        }
        if (set.is_all()) {
            return true;
        }
    }
    return set.is_all();
}

}  // namespace

ElementSet bi_ideal_generated(const FiniteSemiring& s, const ElementSet& generators) {
    if (generators.empty()) {
        throw EmptySet("bi-ideal generators must be nonempty");
    }
    ElementSet out = generators;
    close_bi_ideal(s, out);
    return out;
}

std::vector<ElementSet> principal_bi_ideals(const FiniteSemiring& s) {
    std::vector<ElementSet> out;
    out.reserve(s.order());
    for (Elem x = 0; x < s.order(); ++x) {
        out.push_back(bi_ideal_generated(s, ElementSet::of(s.order(), {x})));
    }
    return out;
}

ElementSet least_bi_ideal(const FiniteSemiring& s) {
    ElementSet out = ElementSet::all(s.order());
    for (Elem x = 0; x < s.order(); ++x) {
        out = out.intersect(bi_ideal_generated(s, ElementSet::of(s.order(), {x})));
    }
    return out;
}

const char* reason_name(BiIdealReason reason) noexcept {
    switch (reason) {
        case BiIdealReason::holds: return "holds";
        case BiIdealReason::order_below_two: return "order < 2";
        case BiIdealReason::proper_bi_ideal: return "proper bi-ideal";
    }
    return "unknown";
}

namespace {

BiIdealVerdict scan_principal(const FiniteSemiring& s, bool allow_singletons) {
    BiIdealVerdict v;
    if (s.order() < 2) {
        v.reason = BiIdealReason::order_below_two;
        return v;
    }
    // Every bi-ideal contains the bi-ideal generated by any of its members.
    std::vector<unsigned char> saturating(s.order(), 0);
    for (Elem x = 0; x < s.order(); ++x) {
        ElementSet set = ElementSet::of(s.order(), {x});
        if (close_bi_ideal(s, set, &saturating)) {
            saturating[x] = 1;
            continue;
        }
        if (allow_singletons && set.size() == 1) {
            continue;
        }
        v.reason = BiIdealReason::proper_bi_ideal;
        v.generator = x;
        v.closure_size = set.size();
        return v;
    }
    v.holds = true;
    return v;
}

}  // namespace

BiIdealVerdict bi_ideal_simplicity(const FiniteSemiring& s) { return scan_principal(s, true); }
BiIdealVerdict bi_ideal_freeness(const FiniteSemiring& s) { return scan_principal(s, false); }

bool is_bi_ideal_simple(const FiniteSemiring& s) { return bi_ideal_simplicity(s).holds; }
bool is_bi_ideal_free(const FiniteSemiring& s) { return bi_ideal_freeness(s).holds; }

ElementSet n_fold_sum_set(const FiniteSemiring& s, std::size_t k) {
    if (k == 0) {
        throw InvalidArgument("n_fold_sum_set requires k >= 1");
    }
    ElementSet current = ElementSet::all(s.order());
    for (std::size_t step = 1; step < k; ++step) {
        ElementSet next(s.order());
        for (Elem x : current.members()) {
            for (Elem y = 0; y < s.order(); ++y) {
                next.insert(s.add(x, y));
            }
        }
        current = std::move(next);
    }
    return current;
}

ElementSet sandwich_set(const FiniteSemiring& s, std::size_t k, Elem a) {
    const auto sums = n_fold_sum_set(s, k).members();
    ElementSet out(s.order());
    for (Elem c : sums) {
        const Elem ca = s.mul(c, a);
        for (Elem d : sums) {
            const Elem cad = s.mul(ca, d);
            for (Elem e = 0; e < s.order(); ++e) {
                out.insert(s.add(cad, e));
            }
        }
    }
    return out;
}

namespace {

/// Calls f(c, d) for every pair of vectors over `values` of length n.
template <typename F>
void for_each_vector_pair(const std::vector<Elem>& values, std::size_t n, F&& f) {
    const std::size_t q = values.size();
    std::vector<std::size_t> idx(2 * n, 0);
    std::vector<Elem> c(n), d(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = values[idx[i]];
            d[i] = values[idx[n + i]];
        }
        f(c, d);
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == q) {
            idx[p++] = 0;
        }
        if (p == idx.size()) {
            return;
        }
    }
}

/// Distinct matrices (c_i a d_j) for c, d over `values`.
std::set<std::vector<Elem>> rank_one_forms(const FiniteSemiring& s, const std::vector<Elem>& values,
                                           std::size_t n, Elem a) {
    std::set<std::vector<Elem>> out;
    std::vector<Elem> f(n * n);
    for_each_vector_pair(values, n, [&](const std::vector<Elem>& c, const std::vector<Elem>& d) {
        for (std::size_t i = 0; i < n; ++i) {
            const Elem ca = s.mul(c[i], a);
            for (std::size_t j = 0; j < n; ++j) {
                f[i * n + j] = s.mul(ca, d[j]);
            }
        }
        out.insert(f);
    });
    return out;
}

}  // namespace

ElementSet q_a(const MatrixSemiring& t, Elem a) {
    const auto& s = t.base();
    const auto& prod = t.product();
    const auto sums = n_fold_sum_set(s, t.dim()).members();
    ElementSet out(prod.order());
    for (const auto& f : rank_one_forms(s, sums, t.dim(), a)) {
        const Elem fx = t.encode(f);
        for (Elem e = 0; e < prod.order(); ++e) {
            out.insert(prod.add(fx, e));
        }
    }
    return out;
}

ElementSet p_a(const MatrixSemiring& t, Elem a, std::size_t budget) {
    const auto& s = t.base();
    const std::size_t n = t.dim();
    std::size_t vectors = 1;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        if (vectors > budget / s.order()) {
            throw BoundExceeded("P_a needs " + std::to_string(s.order()) + "^" +
                                std::to_string(2 * n) + " vector pairs, over the budget of " +
                                std::to_string(budget));
        }
        vectors *= s.order();
    }
    std::vector<Elem> all(s.order());
    for (Elem x = 0; x < s.order(); ++x) {
        all[x] = x;
    }
    const QuasiOrder q(s);
    const auto forms = rank_one_forms(s, all, n, a);
    ElementSet out(t.order());
    for (Elem m = 0; m < t.order(); ++m) {
        for (const auto& f : forms) {
            bool dominated = true;
            for (std::size_t p = 0; p < n * n && dominated; ++p) {
                dominated = q.leq(f[p], t.entry(m, p / n, p % n));
            }
            if (dominated) {
                out.insert(m);
                break;
            }
        }
    }
    return out;
}

ElementSet r_a(const MatrixSemiring& t, Elem a) {
    return bi_ideal_generated(t.product(), ElementSet::of(t.order(), {t.bar(a)}));
}

bool matrix_bi_ideal_condition_iv(const MatrixSemiring& t, std::size_t budget) {
    for (Elem a = 0; a < t.base().order(); ++a) {
        if (!p_a(t, a, budget).is_all()) {
            return false;
        }
    }
    return true;
}

}  // namespace semiring_lab
