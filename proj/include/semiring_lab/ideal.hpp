#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semiring_lab/element_set.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

class MatrixSemiring;

/// Nonempty and closed under a + s, as, sa. Throws EmptySet.
[[nodiscard]] bool is_bi_ideal(const FiniteSemiring& s, const ElementSet& set);

/// Least bi-ideal containing the generators. Throws EmptySet.
[[nodiscard]] ElementSet bi_ideal_generated(const FiniteSemiring& s, const ElementSet& generators);

/// Bi-ideal generated by every single element, indexed by generator.
[[nodiscard]] std::vector<ElementSet> principal_bi_ideals(const FiniteSemiring& s);

/// Intersection of all bi-ideals (itself a bi-ideal, since I ∩ J contains IJ).
[[nodiscard]] ElementSet least_bi_ideal(const FiniteSemiring& s);

enum class BiIdealReason {
    holds,
    order_below_two,
    /// A generator whose bi-ideal is neither S nor (for simplicity) a singleton.
    proper_bi_ideal,
};

[[nodiscard]] const char* reason_name(BiIdealReason reason) noexcept;

struct BiIdealVerdict {
    bool holds = false;
    BiIdealReason reason = BiIdealReason::holds;
    std::optional<Elem> generator;
    std::size_t closure_size = 0;
};

/// |S| >= 2 and every bi-ideal is a singleton or S.
[[nodiscard]] BiIdealVerdict bi_ideal_simplicity(const FiniteSemiring& s);
/// |S| >= 2 and the only bi-ideal is S.
[[nodiscard]] BiIdealVerdict bi_ideal_freeness(const FiniteSemiring& s);

[[nodiscard]] bool is_bi_ideal_simple(const FiniteSemiring& s);
[[nodiscard]] bool is_bi_ideal_free(const FiniteSemiring& s);

/// S_k = S + ... + S (k times), k >= 1.
[[nodiscard]] ElementSet n_fold_sum_set(const FiniteSemiring& s, std::size_t k);

/// S_k a S_k + S, the set of entries of matrices in T·bar(a)·T + T.
[[nodiscard]] ElementSet sandwich_set(const FiniteSemiring& s, std::size_t k, Elem a);

inline constexpr std::size_t kDefaultVectorBudget = std::size_t{1} << 20;

/// Q_a = T·bar(a)·T + T. Products C·bar(a)·D are the matrices (c_i a d_j)
/// with c, d ranging over vectors of n-fold sums (row sums of C, column sums
/// of D), so the scan is over |S_n|^(2n) vector pairs instead of |T|^2.
[[nodiscard]] ElementSet q_a(const MatrixSemiring& t, Elem a);

/// Matrices (a_ij) with c_i a d_j <=_S a_ij for some c, d in S^n. Exhaustive
/// over all |S|^(2n) vector pairs; throws BoundExceeded above budget.
[[nodiscard]] ElementSet p_a(const MatrixSemiring& t, Elem a,
                             std::size_t budget = kDefaultVectorBudget);

/// Bi-ideal of T generated by bar(a).
[[nodiscard]] ElementSet r_a(const MatrixSemiring& t, Elem a);

/// P_a = T for every base element a, with d_j as the right-hand vector.
[[nodiscard]] bool matrix_bi_ideal_condition_iv(const MatrixSemiring& t,
                                                std::size_t budget = kDefaultVectorBudget);

}  // namespace semiring_lab
