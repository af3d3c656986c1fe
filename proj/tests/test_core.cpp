#include <doctest.h>

#include "oracles.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/matrix.hpp"
#include "support.hpp"

using namespace semiring_lab;
namespace cat = semiring_lab::catalog;

TEST_CASE("validate accepts the boolean semiring and Z2") {
    const auto b = validate(Table{{0, 1}, {1, 1}}, Table{{0, 0}, {0, 1}}, "B");
    CHECK(b.order() == 2);
    CHECK(b == cat::boolean());
    const auto z2 = validate(Table{{0, 1}, {1, 0}}, Table{{0, 0}, {0, 1}});
    CHECK(z2 == cat::integers_mod(2));
}

TEST_CASE("validate rejects malformed tables") {
    CHECK_THROWS_AS((void)validate(Table{{0, 1}}, Table{{0, 0}, {0, 1}}), TableShapeError);
    CHECK_THROWS_AS((void)validate(Table{{0, 2}, {2, 0}}, Table{{0, 0}, {0, 1}}), TableShapeError);
    CHECK_THROWS_AS((void)validate(Table{}, Table{}), TableShapeError);
}

TEST_CASE("corrupted multiplication on a 3-chain is reported with a distributivity witness") {
    // First single-cell corruption of (max, max) that keeps mul associative
    // and breaks distributivity, found by the oracle.
    const Table add{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    bool found = false;
    for (Elem x = 0; x < 3 && !found; ++x) {
        for (Elem y = 0; y < 3 && !found; ++y) {
            for (Elem v = 0; v < 3 && !found; ++v) {
                Table mul{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
                if (mul[x][y] == v) continue;
                mul[x][y] = v;
                oracle::Tables t{3, {}, {}};
                for (auto& r : add) for (Elem e : r) t.add.push_back(static_cast<int>(e));
                for (auto& r : mul) for (Elem e : r) t.mul.push_back(static_cast<int>(e));
                bool assoc = true;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        for (int c = 0; c < 3; ++c) assoc = assoc && t.m(t.m(a, b), c) == t.m(a, t.m(b, c));
                if (!assoc || oracle::axioms_hold(t)) continue;
                found = true;
                try {
                    (void)validate(add, mul);
                    FAIL("expected an axiom violation");
                } catch (const AxiomViolation& e) {
                    const auto& f = e.failure();
                    CHECK((f.axiom == Axiom::left_distributive || f.axiom == Axiom::right_distributive));
                    REQUIRE(f.witness.size() == 3);
                    const int a = static_cast<int>(f.witness[0]);
                    const int b = static_cast<int>(f.witness[1]);
                    const int c = static_cast<int>(f.witness[2]);
                    if (f.axiom == Axiom::left_distributive) {
                        CHECK(t.m(a, t.a(b, c)) != t.a(t.m(a, b), t.m(a, c)));
                    } else {
                        CHECK(t.m(t.a(b, c), a) != t.a(t.m(b, a), t.m(c, a)));
                    }
                }
            }
        }
    }
    CHECK(found);
}

TEST_CASE("axiom failures are reported with the failing identity") {
    CHECK_THROWS_AS((void)validate(Table{{0, 1}, {0, 1}}, Table{{0, 0}, {0, 0}}), AxiomViolation);
    try {
        (void)validate(Table{{0, 1}, {0, 1}}, Table{{0, 0}, {0, 0}});
    } catch (const AxiomViolation& e) {
        CHECK(e.failure().axiom == Axiom::add_commutative);
        CHECK(e.failure().witness == std::vector<Elem>{0, 1});
    }
}

TEST_CASE("standard quasiorder examples") {
    const auto b = standard_quasiorder(cat::boolean());
    CHECK(b.pairs() == std::vector<std::pair<Elem, Elem>>{{0, 0}, {0, 1}, {1, 1}});
    const auto z2 = standard_quasiorder(cat::integers_mod(2));
    CHECK(z2.pairs().size() == 4);
    const auto chain = standard_quasiorder(cat::max_chain(3));
    for (Elem a = 0; a < 3; ++a)
        for (Elem c = 0; c < 3; ++c) CHECK(chain.leq(a, c) == (a <= c));
}

TEST_CASE("special elements examples") {
    const auto b = special_elements(cat::boolean());
    CHECK(b.zero == Elem{0});
    CHECK(b.unity == Elem{1});
    CHECK(b.add_absorbing == Elem{1});
    CHECK_FALSE(b.bi_absorbing);
    const auto z2 = special_elements(cat::integers_mod(2));
    CHECK(z2.zero == Elem{0});
    CHECK(z2.unity == Elem{1});
    CHECK_FALSE(z2.bi_absorbing);
    const auto one = special_elements(cat::trivial());
    for (const auto& f : {one.zero, one.unity, one.add_neutral, one.add_absorbing, one.mul_absorbing, one.bi_absorbing}) {
        CHECK(f == Elem{0});
    }
}

TEST_CASE("basic predicates") {
    const auto b = cat::boolean();
    const auto z2 = cat::integers_mod(2);
    CHECK(is_commutative(b));
    CHECK(is_add_idempotent(b));
    CHECK_FALSE(is_add_cancellative(b));
    CHECK(is_commutative(z2));
    CHECK_FALSE(is_add_idempotent(z2));
    CHECK(is_add_cancellative(z2));
    CHECK_FALSE(is_commutative(materialize(b, 2).product()));
}

TEST_CASE("archimedean examples") {
    CHECK(is_add_archimedean(cat::integers_mod(2)));
    CHECK_FALSE(is_add_archimedean(cat::boolean()));
    CHECK(is_add_archimedean(cat::integers_mod(4)));
}

TEST_CASE("divisibility examples") {
    const auto z2 = cat::integers_mod(2);
    CHECK(is_m_divisible(z2, 3));
    CHECK(is_uniquely_m_divisible(z2, 3));
    CHECK_FALSE(is_m_divisible(z2, 2));
    CHECK_FALSE(is_uniquely_m_divisible(z2, 2));
    CHECK(is_m_divisible(cat::boolean(), 2));
    CHECK(is_uniquely_m_divisible(cat::boolean(), 2));
}

TEST_CASE("downward directedness examples") {
    CHECK(is_downwards_directed(cat::boolean()));
    CHECK(is_downwards_directed(cat::integers_mod(2)));
    // Order 2 against a direct scan of the definition.
    for (const auto& s : test_support::corpus(2)) {
        const auto t = oracle::tables_of(s);
        bool directed = true;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                bool some = false;
                for (int c = 0; c < 2; ++c) some = some || (oracle::leq(t, c, a) && oracle::leq(t, c, b));
                directed = directed && some;
            }
        CHECK(is_downwards_directed(s) == directed);
    }
}

TEST_CASE("quasiorder kernel and k-multiple congruences") {
    CHECK(quasiorder_kernel(cat::boolean()).is_identity());
    CHECK(quasiorder_kernel(cat::integers_mod(2)).is_full());
    CHECK(k_multiple_congruence(cat::integers_mod(2), 2).is_full());
    CHECK(k_multiple_congruence(cat::boolean(), 2).is_identity());
    CHECK(k_multiple_congruence(cat::integers_mod(4), 2).blocks() ==
          std::vector<std::vector<Elem>>{{0, 2}, {1, 3}});
    CHECK_THROWS_AS((void)k_multiple_congruence(cat::boolean(), 1), InvalidArgument);
}

TEST_CASE("difference ring examples") {
    for (std::size_t n : {2, 4}) {
        const auto s = cat::integers_mod(n);
        const auto d = difference_ring(s);
        CHECK(d.ring.order() == n);
        CHECK(is_ring(d.ring));
        std::vector<Elem> sorted = d.embed;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    CHECK_THROWS_AS((void)difference_ring(cat::boolean()), NotCancellative);
}

TEST_CASE("conical examples") {
    CHECK(is_conical(cat::integers_mod(2)));
    CHECK_FALSE(is_conical(cat::integers_mod(4)));
    CHECK(is_conical(materialize(cat::integers_mod(2), 2).product()));
    CHECK_THROWS_AS((void)is_conical(cat::boolean()), NotCancellative);
}

TEST_CASE("difference order examples") {
    const auto z2 = difference_ring(cat::integers_mod(2));
    CHECK(difference_order_leq(z2, z2.embed[1], z2.embed[1]));
    CHECK(difference_order_leq(z2, z2.embed[0], z2.embed[1]));
    const auto z4 = difference_ring(cat::integers_mod(4));
    CHECK(difference_order_leq(z4, z4.embed[1], z4.embed[0]));
}

TEST_CASE("property: quasiorder is reflexive, transitive and stable") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto q = standard_quasiorder(s);
        const auto t = oracle::tables_of(s);
        const Elem n = static_cast<Elem>(s.order());
        for (Elem a = 0; a < n; ++a) {
            CHECK(q.leq(a, a));
            for (Elem b = 0; b < n; ++b) {
                REQUIRE(q.leq(a, b) == oracle::leq(t, static_cast<int>(a), static_cast<int>(b)));
                if (!q.leq(a, b)) continue;
                for (Elem c = 0; c < n; ++c) {
                    if (q.leq(b, c)) CHECK(q.leq(a, c));
                    CHECK(q.leq(s.add(a, c), s.add(b, c)));
                    CHECK(q.leq(s.mul(a, c), s.mul(b, c)));
                    CHECK(q.leq(s.mul(c, a), s.mul(c, b)));
                }
            }
        }
    }
}

TEST_CASE("property: special elements match their definitions and are unique") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto e = special_elements(s);
        const Elem n = static_cast<Elem>(s.order());
        auto holds_for = [&](auto pred) {
            std::vector<Elem> out;
            for (Elem w = 0; w < n; ++w) {
                bool all = true;
                for (Elem x = 0; x < n; ++x) all = all && pred(w, x);
                if (all) out.push_back(w);
            }
            return out.empty() ? std::optional<Elem>{} : std::optional<Elem>{out.front()};
        };
        CHECK(e.add_neutral == holds_for([&](Elem w, Elem x) { return s.add(w, x) == x; }));
        CHECK(e.add_absorbing == holds_for([&](Elem w, Elem x) { return s.add(w, x) == w; }));
        CHECK(e.mul_absorbing == holds_for([&](Elem w, Elem x) { return s.mul(w, x) == w && s.mul(x, w) == w; }));
        CHECK(e.unity == holds_for([&](Elem w, Elem x) { return s.mul(w, x) == x && s.mul(x, w) == x; }));
        CHECK(e.zero.has_value() == (e.add_neutral && e.add_neutral == e.mul_absorbing));
        CHECK(e.bi_absorbing.has_value() == (e.add_absorbing && e.add_absorbing == e.mul_absorbing));
    }
}

TEST_CASE("property: archimedean agrees with the naive bound 2n^2 up to order 4") {
    for (const auto& s : test_support::corpus_up_to(4)) {
        REQUIRE(is_add_archimedean(s) == oracle::archimedean(oracle::tables_of(s)));
    }
}

TEST_CASE("property: kernel and k-multiple relations are congruences") {
    for (const auto& s : test_support::corpus_up_to(3)) {
        const auto t = oracle::tables_of(s);
        auto labels = [](const Partition& p) {
            return std::vector<int>(p.labels().begin(), p.labels().end());
        };
        CHECK(oracle::is_congruence(t, labels(quasiorder_kernel(s))));
        for (std::size_t k : {2, 3, 4}) {
            const auto rho = k_multiple_congruence(s, k);
            CHECK(oracle::is_congruence(t, labels(rho)));
            for (Elem x = 0; x < s.order(); ++x)
                for (Elem y = 0; y < s.order(); ++y)
                    CHECK(rho.related(x, y) == (oracle::multiple(t, k, static_cast<int>(x)) ==
                                                oracle::multiple(t, k, static_cast<int>(y))));
        }
    }
}

TEST_CASE("property: difference ring embedding is a homomorphism with inverses") {
    std::vector<FiniteSemiring> cancellative;
    for (const auto& s : test_support::corpus_up_to(4)) {
        if (is_add_cancellative(s)) cancellative.push_back(s);
    }
    cancellative.push_back(cat::integers_mod(6));
    cancellative.push_back(materialize(cat::integers_mod(2), 2).product());
    REQUIRE(cancellative.size() > 4);
    for (const auto& s : cancellative) {
        const auto d = difference_ring(s);
        CHECK(d.ring.order() == s.order());
        for (Elem r = 0; r < d.ring.order(); ++r) CHECK(d.ring.add(r, d.neg[r]) == d.zero);
        for (Elem a = 0; a < s.order(); ++a)
            for (Elem b = 0; b < s.order(); ++b) {
                CHECK(d.embed[s.add(a, b)] == d.ring.add(d.embed[a], d.embed[b]));
                CHECK(d.embed[s.mul(a, b)] == d.ring.mul(d.embed[a], d.embed[b]));
            }
    }
}
