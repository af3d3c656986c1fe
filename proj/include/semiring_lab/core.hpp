#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semiring_lab/partition.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// The standard quasiordering: a <= b iff a == b or a + c == b for some c.
class QuasiOrder {
  public:
    explicit QuasiOrder(const FiniteSemiring& s);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool leq(Elem a, Elem b) const noexcept { return leq_[a * n_ + b] != 0; }

    /// Pairs (a, b) with a <= b, lexicographic.
    [[nodiscard]] std::vector<std::pair<Elem, Elem>> pairs() const;

  private:
    std::size_t n_;
    std::vector<unsigned char> leq_;
};

[[nodiscard]] QuasiOrder standard_quasiorder(const FiniteSemiring& s);

/// Distinguished elements found by exhaustive scan; each is unique when present.
struct SpecialElements {
    std::optional<Elem> zero;           // multiplicatively absorbing and additively neutral
    std::optional<Elem> unity;
    std::optional<Elem> add_neutral;
    std::optional<Elem> add_absorbing;
    std::optional<Elem> mul_absorbing;
    std::optional<Elem> bi_absorbing;   // multiplicatively and additively absorbing

    friend bool operator==(const SpecialElements&, const SpecialElements&) = default;
};

[[nodiscard]] SpecialElements special_elements(const FiniteSemiring& s);

[[nodiscard]] bool is_commutative(const FiniteSemiring& s);
[[nodiscard]] bool is_add_idempotent(const FiniteSemiring& s);
[[nodiscard]] bool is_mul_idempotent(const FiniteSemiring& s);
[[nodiscard]] bool is_add_cancellative(const FiniteSemiring& s);

/// Has an additively neutral element and every element has an additive inverse.
[[nodiscard]] bool is_ring(const FiniteSemiring& s);

/// For all a, b some m in 1..2n has a <= m·b.
[[nodiscard]] bool is_add_archimedean(const FiniteSemiring& s);

[[nodiscard]] bool is_m_divisible(const FiniteSemiring& s, std::size_t m);
[[nodiscard]] bool is_uniquely_m_divisible(const FiniteSemiring& s, std::size_t m);

[[nodiscard]] bool is_downwards_directed(const FiniteSemiring& s);

/// Elements c with c <= a and c <= b, the first one if several.
[[nodiscard]] std::optional<Elem> common_lower_bound(const FiniteSemiring& s, const QuasiOrder& q,
                                                     Elem a, Elem b);

/// a ~ b iff a <= b and b <= a.
[[nodiscard]] Partition quasiorder_kernel(const FiniteSemiring& s);

/// x ~ y iff k·x == k·y. Requires k >= 2.
[[nodiscard]] Partition k_multiple_congruence(const FiniteSemiring& s, std::size_t k);

/// The set SS of all products, as a sorted list.
[[nodiscard]] std::vector<Elem> product_set(const FiniteSemiring& s);
/// The set S+S of all sums, as a sorted list.
[[nodiscard]] std::vector<Elem> sum_set(const FiniteSemiring& s);

/// Ring of differences of an additively cancellative semiring, built from
/// pair classes (a, b) ~ (c, d) iff a + d == b + c.
struct DifferenceRing {
    FiniteSemiring ring;
    /// embed[a] is the ring element corresponding to a.
    std::vector<Elem> embed;
    Elem zero;
    /// neg[r] is the additive inverse of r.
    std::vector<Elem> neg;
};

/// Throws NotCancellative.
[[nodiscard]] DifferenceRing difference_ring(const FiniteSemiring& s);

/// The difference ring is congruence-simple. Throws NotCancellative.
[[nodiscard]] bool is_conical(const FiniteSemiring& s);

/// r <= s iff r == s or s - r lies in the image of the embedding.
[[nodiscard]] bool difference_order_leq(const DifferenceRing& d, Elem r, Elem s);

}  // namespace semiring_lab
