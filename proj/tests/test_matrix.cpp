#include <doctest.h>

#include "oracles.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/ideal.hpp"
#include "semiring_lab/matrix.hpp"
#include "support.hpp"

using namespace semiring_lab;
namespace cat = semiring_lab::catalog;

namespace {

oracle::Matrix entries(const MatrixSemiring& t, Elem x) {
    const auto d = t.decode(x);
    return {d.begin(), d.end()};
}

Elem encode(const MatrixSemiring& t, const oracle::Matrix& m) {
    const std::vector<Elem> e(m.begin(), m.end());
    return t.encode(e);
}

}  // namespace

TEST_CASE("materialize sizes and bounds") {
    CHECK(materialize(cat::boolean(), 2).order() == 16);
    CHECK(materialize(cat::integers_mod(2), 2).order() == 16);
    CHECK(materialize(cat::max_chain(3), 2).order() == 81);
    CHECK(materialize(cat::boolean(), 3).order() == 512);
    CHECK(materialize(cat::boolean(), 1).product() == cat::boolean());
    CHECK_THROWS_AS((void)materialize(cat::max_chain(3), 3), BoundExceeded);
    CHECK(matrix_order(3, 3, 6561) == std::nullopt);
    CHECK(matrix_order(2, 3, 6561) == std::size_t{512});
}

TEST_CASE("encoding is row-major little-endian") {
    const auto t = materialize(cat::max_chain(3), 2);
    const std::vector<Elem> m{1, 2, 0, 1};
    const Elem x = t.encode(m);
    CHECK(x == 1 + 2 * 3 + 0 * 9 + 1 * 27);
    CHECK(t.decode(x) == m);
    CHECK(t.entry(x, 0, 1) == 2);
    CHECK(t.entry(x, 1, 1) == 1);
}

TEST_CASE("M_2(Z2) agrees with ordinary matrix arithmetic mod 2") {
    const auto t = materialize(cat::integers_mod(2), 2);
    for (Elem x = 0; x < t.order(); ++x) {
        for (Elem y = 0; y < t.order(); ++y) {
            const auto a = entries(t, x), b = entries(t, y);
            oracle::Matrix sum(4), prod(4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    sum[i * 2 + j] = (a[i * 2 + j] + b[i * 2 + j]) % 2;
                    prod[i * 2 + j] = (a[i * 2] * b[j] + a[i * 2 + 1] * b[2 + j]) % 2;
                }
            CHECK(entries(t, t.product().add(x, y)) == sum);
            CHECK(entries(t, t.product().mul(x, y)) == prod);
        }
    }
}

TEST_CASE("property: materialized tables match the entrywise oracle") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto tab = oracle::tables_of(s);
        for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
            if (!matrix_order(s.order(), n, 6561)) continue;
            const auto t = materialize(s, n);
            auto& rng = test_support::rng();
            std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(t.order() - 1));
            for (int trial = 0; trial < 200; ++trial) {
                const Elem x = pick(rng), y = pick(rng);
                CHECK(entries(t, t.product().add(x, y)) == oracle::mat_add(tab, n, entries(t, x), entries(t, y)));
                CHECK(entries(t, t.product().mul(x, y)) == oracle::mat_mul(tab, n, entries(t, x), entries(t, y)));
            }
        }
    }
}

TEST_CASE("property: constant matrices add and multiply as stated") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
            if (!matrix_order(s.order(), n, 6561)) continue;
            const auto t = materialize(s, n);
            for (Elem a = 0; a < s.order(); ++a)
                for (Elem b = 0; b < s.order(); ++b) {
                    CHECK(t.product().add(t.bar(a), t.bar(b)) == t.bar(s.add(a, b)));
                    CHECK(t.product().mul(t.bar(a), t.bar(b)) == t.bar(s.multiple(n, s.mul(a, b))));
                }
        }
    }
    const auto mb = materialize(cat::boolean(), 2);
    CHECK(mb.product().mul(mb.bar(1), mb.bar(1)) == mb.bar(1));
}

TEST_CASE("E-matrix calculus") {
    CHECK_THROWS_AS((void)materialize(cat::constant_sum(), 2).e_matrix(0, 0, 1), NoZero);
    for (const auto& s : test_support::corpus_up_to(3)) {
        if (!special_elements(s).zero) continue;
        const auto t = materialize(s, 2);
        const auto& p = t.product();
        for (Elem c = 0; c < s.order(); ++c)
            for (Elem d = 0; d < s.order(); ++d)
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) {
                        CHECK(p.add(t.e_matrix(i, j, c), t.e_matrix(i, j, d)) == t.e_matrix(i, j, s.add(c, d)));
                        CHECK(p.mul(t.e_matrix(i, i, c), t.e_matrix(i, j, d)) == t.e_matrix(i, j, s.mul(c, d)));
                        for (Elem a = 0; a < t.order(); a += 7) {
                            for (std::size_t k = 0; k < 2; ++k)
                                for (std::size_t l = 0; l < 2; ++l) {
                                    const Elem lhs = p.mul(p.mul(t.e_matrix(i, k, c), a), t.e_matrix(l, j, d));
                                    CHECK(lhs == t.e_matrix(i, j, s.mul(s.mul(c, t.entry(a, k, l)), d)));
                                }
                        }
                    }
    }
}

TEST_CASE("property: C bar(a) D has entries c_i a d_j for every C, D when |T| <= 256") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto t = materialize(s, 2);
        const auto& p = t.product();
        for (Elem a = 0; a < s.order(); ++a)
            for (Elem c = 0; c < t.order(); ++c)
                for (Elem d = 0; d < t.order(); ++d) {
                    const Elem x = p.mul(p.mul(c, t.bar(a)), d);
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j) {
                            const Elem ci = s.add(t.entry(c, i, 0), t.entry(c, i, 1));
                            const Elem dj = s.add(t.entry(d, 0, j), t.entry(d, 1, j));
                            REQUIRE(t.entry(x, i, j) == s.mul(s.mul(ci, a), dj));
                        }
                }
    }
}

TEST_CASE("lifting examples") {
    const auto mb = lift_checks(materialize(cat::boolean(), 2));
    CHECK(mb.product.zero);
    CHECK(mb.product.unity);
    CHECK_FALSE(mb.product.bi_absorbing);
    const auto mz = lift_checks(materialize(cat::integers_mod(2), 2));
    CHECK(mz.product.zero);
    CHECK(mz.product.unity);
    CHECK(is_ring(materialize(cat::integers_mod(2), 2).product()));
    const auto m0 = lift_checks(materialize(cat::zero_product_ring(2), 2));
    CHECK_FALSE(m0.product.unity);
    CHECK(m0.product.zero);
}

TEST_CASE("property: lifting statements hold across the small corpus") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
            if (!matrix_order(s.order(), n, 6561)) continue;
            const auto t = materialize(s, n);
            const auto r = lift_checks(t);
            const auto& e = r.base;
            CHECK(r.product.zero.has_value() == e.zero.has_value());
            if (e.zero) CHECK(*r.product.zero == t.bar(*e.zero));
            CHECK(r.product.bi_absorbing.has_value() == e.bi_absorbing.has_value());
            if (e.bi_absorbing) CHECK(*r.product.bi_absorbing == t.bar(*e.bi_absorbing));
            CHECK(r.product.unity.has_value() == (e.zero && e.unity));
            CHECK(r.product.mul_absorbing.has_value() == r.n_fold_absorbing.has_value());
            if (r.n_fold_absorbing) CHECK(*r.product.mul_absorbing == t.bar(*r.n_fold_absorbing));
            const auto sums = n_fold_sum_set(s, n).members();
            CHECK(std::vector<Elem>(r.n_fold_sums) == sums);
        }
    }
}

TEST_CASE("absorbing case verdict examples") {
    const auto b = absorbing_case_check(cat::boolean());
    CHECK(b.condition_iii);
    CHECK(b.matrix_simple == true);
    CHECK(b.coda_holds == true);
    CHECK(b.equivalence_holds);

    const auto z2 = absorbing_case_check(cat::integers_mod(2));
    CHECK(z2.condition_iii);
    CHECK(z2.matrix_simple == true);

    const auto zp = absorbing_case_check(cat::zero_product_ring(2));
    CHECK(zp.product_set_size == 1);
    CHECK_FALSE(zp.condition_iii);
    CHECK(zp.matrix_simple == false);
    CHECK(zp.equivalence_holds);
    REQUIRE(zp.witness_congruence);
    const auto t = materialize(cat::zero_product_ring(2), 2);
    const auto& w = *zp.witness_congruence;
    CHECK(is_congruence(t.product(), w));
    CHECK_FALSE(w.is_identity());
    CHECK_FALSE(w.is_full());
    CHECK(w.related(zp.witness_pair->first, zp.witness_pair->second));
    CHECK(principal_congruence(t.product(), zp.witness_pair->first, zp.witness_pair->second) == w);

    // Left projection with max addition: no S_k has a multiplicatively absorbing element.
    const auto left = validate(Table{{0, 1}, {1, 1}}, Table{{0, 0}, {1, 1}}, "L2");
    CHECK_THROWS_AS((void)absorbing_case_check(left), PreconditionUnmet);
}

TEST_CASE("sampled axiom check finds a corrupted table and passes a valid one") {
    CHECK_FALSE(sample_axiom_failure(materialize(cat::boolean(), 3).product(), 10000, 0xC0FFEE));
    const std::vector<std::uint16_t> add{0, 1, 2, 1, 1, 2, 2, 2, 2};
    std::size_t corrupted = 0;
    for (std::size_t cell = 0; cell < 9; ++cell) {
        for (std::uint16_t v = 0; v < 3; ++v) {
            auto mul = add;
            if (mul[cell] == v) continue;
            mul[cell] = v;
            const oracle::Tables tab{3, {add.begin(), add.end()}, {mul.begin(), mul.end()}};
            if (oracle::axioms_hold(tab)) continue;
            ++corrupted;
            const auto bad = FiniteSemiring::trusted(3, add, mul, "corrupted");
            CHECK(sample_axiom_failure(bad, 10000, 0xC0FFEE));
        }
    }
    CHECK(corrupted > 0);
}

TEST_CASE("property: archimedean and conical transfer at n = 2") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto t = materialize(s, 2);
        CHECK(is_add_archimedean(t.product()) == is_add_archimedean(s));
        if (is_add_cancellative(s)) {
            CHECK(is_conical(t.product()) == (is_conical(s) && product_set(s).size() >= 2));
        }
    }
}
