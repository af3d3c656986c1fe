#include "semiring_lab/matrix.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "semiring_lab/ideal.hpp"

namespace semiring_lab {

std::optional<std::size_t> matrix_order(std::size_t base_order, std::size_t n, std::size_t limit) {
    std::size_t order = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
        if (order > limit / base_order) {
            return std::nullopt;
        }
        order *= base_order;
    }
    return order;
}

MatrixSemiring::MatrixSemiring(FiniteSemiring base, std::size_t n, FiniteSemiring product,
                               std::vector<std::uint16_t> entries, std::optional<Elem> base_zero)
    : base_(std::move(base)),
      n_(n),
      product_(std::move(product)),
      entries_(std::move(entries)),
      base_zero_(base_zero) {}

Elem MatrixSemiring::encode(std::span<const Elem> entries) const {
    if (entries.size() != n_ * n_) {
        throw InvalidArgument("matrix must have " + std::to_string(n_ * n_) + " entries");
    }
    const std::size_t q = base_.order();
    std::size_t x = 0;
    for (std::size_t p = entries.size(); p-- > 0;) {
        if (entries[p] >= q) {
            throw InvalidArgument("matrix entry " + std::to_string(entries[p]) +
                                  " is not a base element");
        }
        x = x * q + entries[p];
    }
    return static_cast<Elem>(x);
}

std::vector<Elem> MatrixSemiring::decode(Elem x) const {
    if (x >= order()) {
        throw InvalidArgument("element " + std::to_string(x) + " is not in the matrix semiring");
    }
    std::vector<Elem> out(n_ * n_);
    for (std::size_t p = 0; p < out.size(); ++p) {
        out[p] = entries_[x * n_ * n_ + p];
    }
    return out;
}

Elem MatrixSemiring::bar(Elem a) const {
    return encode(std::vector<Elem>(n_ * n_, a));
}

Elem MatrixSemiring::e_matrix(std::size_t i, std::size_t j, Elem a) const {
    if (!base_zero_) {
        throw NoZero("E-matrices need a zero element in the base semiring");
    }
    if (i >= n_ || j >= n_) {
        throw InvalidArgument("matrix position out of range");
    }
    std::vector<Elem> e(n_ * n_, *base_zero_);
    e[i * n_ + j] = a;
    return encode(e);
}

std::optional<AxiomFailure> sample_axiom_failure(const FiniteSemiring& s, std::size_t samples,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(s.order() - 1));
    for (std::size_t k = 0; k < samples; ++k) {
        const Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (s.add(a, b) != s.add(b, a)) {
            return AxiomFailure{Axiom::add_commutative, {a, b}};
        }
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) {
            return AxiomFailure{Axiom::add_associative, {a, b, c}};
        }
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
            return AxiomFailure{Axiom::mul_associative, {a, b, c}};
        }
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) {
            return AxiomFailure{Axiom::left_distributive, {a, b, c}};
        }
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c))) {
            return AxiomFailure{Axiom::right_distributive, {a, b, c}};
        }
    }
    return std::nullopt;
}

MatrixSemiring materialize(const FiniteSemiring& s, std::size_t n, std::size_t bound) {
    if (n == 0) {
        throw InvalidArgument("matrix dimension must be at least 1");
    }
    const auto order = matrix_order(s.order(), n, std::min(bound, kMaxOrder));
    if (!order) {
        throw BoundExceeded("M_" + std::to_string(n) + " over an order-" +
                            std::to_string(s.order()) + " semiring exceeds the bound of " +
                            std::to_string(std::min(bound, kMaxOrder)) + " elements");
    }
    const std::size_t big = *order;
    const std::size_t q = s.order();
    const std::size_t cells = n * n;

    std::vector<std::uint16_t> entries(big * cells);
    for (std::size_t x = 0; x < big; ++x) {
        std::size_t rest = x;
        for (std::size_t p = 0; p < cells; ++p) {
            entries[x * cells + p] = static_cast<std::uint16_t>(rest % q);
            rest /= q;
        }
    }
    std::vector<std::size_t> weight(cells);
    for (std::size_t p = 0, w = 1; p < cells; ++p, w *= q) {
        weight[p] = w;
    }

    std::vector<std::uint16_t> add(big * big), mul(big * big);
    for (std::size_t x = 0; x < big; ++x) {
        const std::uint16_t* ex = &entries[x * cells];
        for (std::size_t y = 0; y < big; ++y) {
            const std::uint16_t* ey = &entries[y * cells];
            std::size_t sum_code = 0, prod_code = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const std::size_t p = i * n + j;
                    sum_code += s.add(ex[p], ey[p]) * weight[p];
                    Elem acc = s.mul(ex[i * n], ey[j]);
                    for (std::size_t k = 1; k < n; ++k) {
                        acc = s.add(acc, s.mul(ex[i * n + k], ey[k * n + j]));
                    }
                    prod_code += acc * weight[p];
                }
            }
            add[x * big + y] = static_cast<std::uint16_t>(sum_code);
            mul[x * big + y] = static_cast<std::uint16_t>(prod_code);
        }
    }

    std::string name = s.name().empty() ? std::string() : "M_" + std::to_string(n) + "(" + s.name() + ")";
    auto product = FiniteSemiring::trusted(big, std::move(add), std::move(mul), std::move(name));
    auto failure = big <= 256 ? find_axiom_failure(big, product.add_data(), product.mul_data())
                              : sample_axiom_failure(product, 10'000, 0xC0FFEE);
    if (failure) {
        throw InternalError("materialized matrix semiring violates " +
                            std::string(axiom_name(failure->axiom)));
    }
    return MatrixSemiring(s, n, std::move(product), std::move(entries),
                          special_elements(s).zero);
}

std::optional<Elem> absorbing_within(const FiniteSemiring& s, std::span<const Elem> subset) {
    for (Elem w : subset) {
        bool absorbing = true;
        for (Elem x : subset) {
            if (s.mul(w, x) != w || s.mul(x, w) != w) {
                absorbing = false;
                break;
            }
        }
        if (absorbing) {
            return w;
        }
    }
    return std::nullopt;
}

LiftReport lift_checks(const MatrixSemiring& t) {
    const FiniteSemiring& s = t.base();
    const std::size_t n = t.dim();
    LiftReport report{special_elements(s), special_elements(t.product()), {}, std::nullopt};
    report.n_fold_sums = n_fold_sum_set(s, n).members();
    report.n_fold_absorbing = absorbing_within(s, report.n_fold_sums);

    const auto& b = report.base;
    const auto& p = report.product;
    auto fail = [](const std::string& what) { throw LiftingViolation(what); };

    if (p.zero.has_value() != b.zero.has_value()) {
        fail("zero: M_n(S) has a zero iff S has a zero");
    }
    if (b.zero && *p.zero != t.bar(*b.zero)) {
        fail("zero: the zero of M_n(S) is the constant matrix of the base zero");
    }
    if (p.bi_absorbing.has_value() != b.bi_absorbing.has_value()) {
        fail("bi-absorbing: M_n(S) has a bi-absorbing element iff S has one");
    }
    if (b.bi_absorbing && *p.bi_absorbing != t.bar(*b.bi_absorbing)) {
        fail("bi-absorbing: o_T is the constant matrix of o_S");
    }
    if (n >= 2) {
        const bool expected = b.zero.has_value() && b.unity.has_value();
        if (p.unity.has_value() != expected) {
            fail("unity: M_n(S) has a unity iff S has a zero and a unity");
        }
        if (p.unity && !p.zero) {
            fail("unity: a unity of M_n(S) forces a zero of M_n(S)");
        }
        if (p.unity) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const Elem want = i == j ? *b.unity : *b.zero;
                    if (t.entry(*p.unity, i, j) != want) {
                        fail("unity: the unity of M_n(S) has 1_S on the diagonal and 0_S elsewhere");
                    }
                }
            }
        }
    } else if (p.unity.has_value() != b.unity.has_value()) {
        fail("unity: M_1(S) has a unity iff S has one");
    }
    if (p.mul_absorbing.has_value() != report.n_fold_absorbing.has_value()) {
        fail("absorbing: M_n(S) has a multiplicatively absorbing element iff S_n has one");
    }
    if (report.n_fold_absorbing && *p.mul_absorbing != t.bar(*report.n_fold_absorbing)) {
        fail("absorbing: the absorbing element of M_n(S) is the constant matrix of that of S_n");
    }
    return report;
}

AbsorbingCaseVerdict absorbing_case_check(const FiniteSemiring& s, std::size_t bound,
                                          std::size_t congruence_dim, std::size_t bi_ideal_dim) {
    if (congruence_dim < 2 || bi_ideal_dim < 2) {
        throw InvalidArgument("matrix dimensions for the characterization must be at least 2");
    }
    AbsorbingCaseVerdict v;
    v.congruence_dim = congruence_dim;
    v.bi_ideal_dim = bi_ideal_dim;
    for (std::size_t k = 1; k <= s.order() && v.absorbing_k == 0; ++k) {
        auto sums = n_fold_sum_set(s, k).members();
        if (absorbing_within(s, sums)) {
            v.absorbing_k = k;
        }
    }
    if (v.absorbing_k == 0) {
        throw PreconditionUnmet(
            "no matrix semiring over this base has a multiplicatively absorbing element");
    }
    const auto special = special_elements(s);
    v.base_simple = is_congruence_simple(s);
    v.has_bi_absorbing = special.bi_absorbing.has_value();
    v.product_set_size = product_set(s).size();
    v.condition_iii = v.base_simple && !v.has_bi_absorbing && v.product_set_size >= 2;

    if (matrix_order(s.order(), congruence_dim, bound)) {
        const auto t = materialize(s, congruence_dim, bound);
        auto simplicity = congruence_simplicity(t.product());
        v.matrix_simple = simplicity.simple;
        v.witness_pair = simplicity.witness;
        v.witness_congruence = simplicity.congruence;
        if (*v.matrix_simple != v.condition_iii) {
            v.equivalence_holds = false;
        }
    }
    if (matrix_order(s.order(), bi_ideal_dim, bound)) {
        const auto t = materialize(s, bi_ideal_dim, bound);
        v.matrix_bi_ideal_simple = is_bi_ideal_simple(t.product());
        if (v.condition_iii && !*v.matrix_bi_ideal_simple) {
            v.equivalence_holds = false;
        }
    }
    if (v.condition_iii) {
        v.coda_holds = special.zero.has_value() && (is_ring(s) || is_add_idempotent(s));
    }
    return v;
}

}  // namespace semiring_lab
