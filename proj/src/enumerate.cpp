#include "semiring_lab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/isomorphism.hpp"
#include "semiring_lab/matrix.hpp"

namespace semiring_lab {

namespace {

constexpr int kUnset = -1;

struct Relabeling {
    std::vector<int> perm;
    std::vector<int> inverse;
};

std::vector<Relabeling> all_relabelings(std::size_t n) {
    std::vector<Relabeling> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Relabeling r{perm, std::vector<int>(n)};
        for (std::size_t x = 0; x < n; ++x) {
            r.inverse[perm[x]] = static_cast<int>(x);
        }
        out.push_back(std::move(r));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Orderly generation of Cayley tables: cells are filled in row-major order
/// with ascending values, and a partial table is abandoned as soon as some
/// relabeling is provably lexicographically smaller.
class SemiringSearch {
  public:
    SemiringSearch(std::size_t n, const std::function<void(const FiniteSemiring&)>& sink)
        : n_(n), sink_(sink), relabelings_(all_relabelings(n)),
          add_(n * n, kUnset), mul_(n * n, kUnset) {}

    void run() { fill_add(0); }

  private:
    int& add_at(std::size_t a, std::size_t b) { return add_[a * n_ + b]; }
    int& mul_at(std::size_t a, std::size_t b) { return mul_[a * n_ + b]; }

    /// False if some known instance of associativity fails.
    bool add_consistent() const {
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                const int ab = add_[a * n_ + b];
                if (ab == kUnset) {
                    continue;
                }
                for (std::size_t c = 0; c < n_; ++c) {
                    const int bc = add_[b * n_ + c];
                    if (bc == kUnset) {
                        continue;
                    }
                    const int left = add_[ab * n_ + c];
                    const int right = add_[a * n_ + bc];
                    if (left != kUnset && right != kUnset && left != right) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool mul_consistent() const {
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                const int ab = mul_[a * n_ + b];
                for (std::size_t c = 0; c < n_; ++c) {
                    const int bc = mul_[b * n_ + c];
                    if (ab != kUnset && bc != kUnset) {
                        const int left = mul_[ab * n_ + c];
                        const int right = mul_[a * n_ + bc];
                        if (left != kUnset && right != kUnset && left != right) {
                            return false;
                        }
                    }
                    // a(b + c) = ab + ac
                    const int ac = mul_[a * n_ + c];
                    const int sum_bc = add_[b * n_ + c];
                    const int lhs = mul_[a * n_ + sum_bc];
                    if (ab != kUnset && ac != kUnset && lhs != kUnset &&
                        lhs != add_[ab * n_ + ac]) {
                        return false;
                    }
                    // (a + b)c = ac + bc
                    const int bc_r = mul_[b * n_ + c];
                    const int sum_ab = add_[a * n_ + b];
                    const int lhs_r = mul_[sum_ab * n_ + c];
                    if (ac != kUnset && bc_r != kUnset && lhs_r != kUnset &&
                        lhs_r != add_[ac * n_ + bc_r]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    /// -1: relabeled table is smaller; 1: larger; 0: equal or undecided.
    int compare_relabeled(const std::vector<int>& table, const Relabeling& r) const {
        for (std::size_t p = 0; p < n_ * n_; ++p) {
            const std::size_t x = p / n_, y = p % n_;
            const int src = table[r.inverse[x] * n_ + r.inverse[y]];
            const int cur = table[p];
            if (src == kUnset || cur == kUnset) {
                return 0;
            }
            const int val = r.perm[src];
            if (val != cur) {
                return val < cur ? -1 : 1;
            }
        }
        return 0;
    }

    bool add_minimal() const {
        return std::none_of(relabelings_.begin(), relabelings_.end(),
                            [&](const Relabeling& r) { return compare_relabeled(add_, r) < 0; });
    }

    bool mul_minimal() const {
        return std::none_of(stabilizer_.begin(), stabilizer_.end(),
                            [&](const Relabeling& r) { return compare_relabeled(mul_, r) < 0; });
    }

    void fill_add(std::size_t cell) {
        while (cell < n_ * n_ && cell % n_ < cell / n_) {
            ++cell;  // below the diagonal: fixed by commutativity
        }
        if (cell == n_ * n_) {
            stabilizer_.clear();
            for (const auto& r : relabelings_) {
                bool fixes = true;
                for (std::size_t p = 0; p < n_ * n_ && fixes; ++p) {
                    fixes = r.perm[add_[r.inverse[p / n_] * n_ + r.inverse[p % n_]]] == add_[p];
                }
                if (fixes) {
                    stabilizer_.push_back(r);
                }
            }
            fill_mul(0);
            return;
        }
        const std::size_t a = cell / n_, b = cell % n_;
        for (int v = 0; v < static_cast<int>(n_); ++v) {
            add_at(a, b) = v;
            add_at(b, a) = v;
            if (add_consistent() && add_minimal()) {
                fill_add(cell + 1);
            }
        }
        add_at(a, b) = kUnset;
        add_at(b, a) = kUnset;
    }

    void fill_mul(std::size_t cell) {
        if (cell == n_ * n_) {
            emit();
            return;
        }
        for (int v = 0; v < static_cast<int>(n_); ++v) {
            mul_[cell] = v;
            if (mul_consistent() && mul_minimal()) {
                fill_mul(cell + 1);
            }
        }
        mul_[cell] = kUnset;
    }

    void emit() {
        std::vector<Elem> add(add_.begin(), add_.end()), mul(mul_.begin(), mul_.end());
        auto s = validate(n_, add, mul,
                          "S" + std::to_string(n_) + "." + std::to_string(++emitted_));
        sink_(s);
    }

    std::size_t n_;
    const std::function<void(const FiniteSemiring&)>& sink_;
    std::vector<Relabeling> relabelings_;
    std::vector<Relabeling> stabilizer_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::size_t emitted_ = 0;
};

}  // namespace

void for_each_semiring(std::size_t order, const std::function<void(const FiniteSemiring&)>& sink,
                       EnumerationOptions options) {
    if (order == 0) {
        throw InvalidArgument("semiring order must be at least 1");
    }
    const std::size_t limit = options.allow_order_five ? 5 : 4;
    if (order > limit) {
        throw BoundExceeded("enumeration of order " + std::to_string(order) +
                            " is not supported (limit " + std::to_string(limit) +
                            (options.allow_order_five ? ")" : "; order 5 needs an explicit flag)"));
    }
    SemiringSearch(order, sink).run();
}

std::vector<FiniteSemiring> enumerate_semirings(std::size_t order, EnumerationOptions options) {
    std::vector<FiniteSemiring> out;
    for_each_semiring(order, [&](const FiniteSemiring& s) { out.push_back(s); }, options);
    return out;
}

CancellativeClassification classify_finite_cancellative(const FiniteSemiring& s,
                                                        std::size_t bound) {
    CancellativeClassification out;
    out.name = s.name();
    out.order = s.order();
    out.cancellative = is_add_cancellative(s);
    if (!out.cancellative) {
        return out;
    }
    if (matrix_order(s.order(), 2, bound)) {
        out.matrix_simple = is_congruence_simple(materialize(s, 2, bound).product());
    }
    // Candidates M_k(F_q) with q^(k*k) = |S|.
    for (std::size_t k = 1; k * k <= 64 && !out.matrix_ring; ++k) {
        for (std::size_t q = 2; q <= s.order() && !out.matrix_ring; ++q) {
            std::size_t p = 0, e = 0;
            if (!catalog::prime_power(q, p, e) || matrix_order(q, k, s.order()) != s.order()) {
                continue;
            }
            if (find_isomorphism(s, catalog::matrix_ring(k, q))) {
                out.matrix_ring = std::pair{k, q};
            }
        }
    }
    if (out.matrix_simple) {
        out.equivalence_holds = *out.matrix_simple == out.matrix_ring.has_value();
    }
    return out;
}

std::vector<CancellativeClassification> classify_finite_cancellative(
    const std::vector<FiniteSemiring>& corpus, std::size_t bound) {
    std::vector<CancellativeClassification> out;
    for (const auto& s : corpus) {
        out.push_back(classify_finite_cancellative(s, bound));
    }
    return out;
}

}  // namespace semiring_lab
