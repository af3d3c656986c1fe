#include <doctest.h>

#include "oracles.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/ideal.hpp"
#include "semiring_lab/matrix.hpp"
#include "support.hpp"

using namespace semiring_lab;
namespace cat = semiring_lab::catalog;

namespace {

std::vector<bool> as_bits(const ElementSet& s) {
    std::vector<bool> out(s.universe());
    for (Elem x : s.members()) out[x] = true;
    return out;
}

ElementSet from_matrices(const MatrixSemiring& t, const std::set<oracle::Matrix>& ms) {
    ElementSet out(t.order());
    for (const auto& m : ms) {
        const std::vector<Elem> entries(m.begin(), m.end());
        out.insert(t.encode(entries));
    }
    return out;
}

}  // namespace

TEST_CASE("is_bi_ideal examples") {
    const auto b = cat::boolean();
    CHECK(is_bi_ideal(b, ElementSet::all(2)));
    CHECK_FALSE(is_bi_ideal(b, ElementSet::of(2, {1})));
    CHECK_THROWS_AS((void)is_bi_ideal(b, ElementSet(2)), EmptySet);
}

TEST_CASE("bi_ideal_generated examples") {
    CHECK(bi_ideal_generated(cat::boolean(), ElementSet::all(2)).is_all());
    CHECK(bi_ideal_generated(cat::integers_mod(2), ElementSet::of(2, {1})).is_all());
    CHECK(bi_ideal_generated(cat::boolean(), ElementSet::of(2, {0})).is_all());
    CHECK_THROWS_AS((void)bi_ideal_generated(cat::boolean(), ElementSet(2)), EmptySet);
}

TEST_CASE("bi-ideal simplicity and freeness examples") {
    CHECK(is_bi_ideal_simple(cat::boolean()));
    CHECK(is_bi_ideal_free(cat::boolean()));
    CHECK(is_bi_ideal_simple(cat::integers_mod(2)));
    CHECK(is_bi_ideal_free(cat::integers_mod(2)));
    const auto one = bi_ideal_simplicity(cat::trivial());
    CHECK_FALSE(one.holds);
    CHECK(std::string(reason_name(one.reason)) == "order < 2");
    CHECK_FALSE(bi_ideal_freeness(cat::trivial()).holds);
    const auto k2 = bi_ideal_freeness(cat::constant_sum());
    CHECK_FALSE(k2.holds);
    CHECK(std::string(reason_name(k2.reason)) == "proper bi-ideal");
    REQUIRE(k2.generator);
    CHECK(k2.closure_size == 1);
}

TEST_CASE("n-fold sum set examples") {
    CHECK(n_fold_sum_set(cat::boolean(), 2).is_all());
    CHECK(n_fold_sum_set(cat::integers_mod(2), 2).is_all());
    const auto k2 = n_fold_sum_set(cat::constant_sum(), 2);
    CHECK(k2.members() == std::vector<Elem>{0});
    CHECK(is_bi_ideal(cat::constant_sum(), k2));
}

TEST_CASE("Q_a examples") {
    const auto mb = materialize(cat::boolean(), 2);
    CHECK(q_a(mb, 1).is_all());
    const auto mz = materialize(cat::integers_mod(2), 2);
    CHECK(q_a(mz, 1).is_all());
    const auto mk = materialize(cat::constant_sum(), 2);
    for (Elem a = 0; a < 2; ++a) {
        const auto q = q_a(mk, a);
        CHECK(q.members() == std::vector<Elem>{mk.bar(0)});
    }
}

TEST_CASE("P_a and R_a examples") {
    const auto mb = materialize(cat::boolean(), 2);
    CHECK(p_a(mb, 0) == q_a(mb, 0));
    const auto mz = materialize(cat::integers_mod(2), 2);
    CHECK(r_a(mz, 1).is_all());
    CHECK_THROWS_AS((void)p_a(mb, 0, 8), BoundExceeded);
}

TEST_CASE("condition (iv) examples") {
    CHECK(matrix_bi_ideal_condition_iv(materialize(cat::boolean(), 2)));
    CHECK(matrix_bi_ideal_condition_iv(materialize(cat::integers_mod(2), 2)));
    CHECK_FALSE(matrix_bi_ideal_condition_iv(materialize(cat::constant_sum(), 2)));
}

TEST_CASE("property: bi-ideal closures match the fixpoint oracle") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto t = oracle::tables_of(s);
        for (Elem x = 0; x < s.order(); ++x) {
            std::vector<bool> seed(s.order());
            seed[x] = true;
            const auto got = bi_ideal_generated(s, ElementSet::of(s.order(), {x}));
            CHECK(as_bits(got) == oracle::bi_ideal_closure(t, seed));
            CHECK(is_bi_ideal(s, got));
        }
    }
}

TEST_CASE("property: Q_a equals the full triple scan on order-2 bases") {
    for (const auto& s : test_support::corpus(2)) {
        const auto t = materialize(s, 2);
        const auto tab = oracle::tables_of(s);
        for (Elem a = 0; a < 2; ++a) {
            CHECK(q_a(t, a) == from_matrices(t, oracle::q_a(tab, 2, static_cast<int>(a))));
        }
    }
}

TEST_CASE("property: P_a and R_a match the oracles on order <= 3 bases") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        if (s.order() < 2) continue;
        const auto t = materialize(s, 2);
        const auto tab = oracle::tables_of(s);
        for (Elem a = 0; a < s.order(); ++a) {
            CHECK(p_a(t, a) == from_matrices(t, oracle::p_a(tab, 2, static_cast<int>(a))));
            std::vector<bool> seed(t.order());
            seed[t.bar(a)] = true;
            CHECK(as_bits(r_a(t, a)) == oracle::bi_ideal_closure(oracle::tables_of(t.product()), seed));
        }
    }
}

TEST_CASE("property: Q_a inclusions and the singleton criterion at n = 2") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto t = materialize(s, 2);
        const auto e = special_elements(s);
        const bool s_plus_s = sum_set(s).size() == s.order();
        for (Elem a = 0; a < s.order(); ++a) {
            const auto q = q_a(t, a);
            const auto p = p_a(t, a);
            CHECK(q.subset_of(p));
            CHECK(q.subset_of(r_a(t, a)));
            CHECK(is_bi_ideal(t.product(), q));
            CHECK(is_bi_ideal(t.product(), p));
            if (s_plus_s) CHECK(q == p);
            const auto sandwich = sandwich_set(s, 2, a);
            const bool criterion = e.bi_absorbing && sandwich.size() == 1 && sandwich.contains(*e.bi_absorbing);
            CHECK((q.size() == 1) == criterion);
        }
    }
}

TEST_CASE("property: the four matrix bi-ideal conditions agree at n = 2") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        if (s.order() < 2) continue;
        const auto t = materialize(s, 2);
        const bool simple = is_bi_ideal_simple(t.product());
        const bool free = is_bi_ideal_free(t.product());
        bool all_q = true;
        for (Elem a = 0; a < s.order(); ++a) all_q = all_q && q_a(t, a).is_all();
        CHECK(simple == free);
        CHECK(free == all_q);
        CHECK(all_q == matrix_bi_ideal_condition_iv(t));
        if (simple) CHECK(is_bi_ideal_free(s));
    }
}
