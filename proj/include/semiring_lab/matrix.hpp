#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// The full matrix semiring M_n(S), materialized as a FiniteSemiring.
///
/// A matrix (a_ij) is the product element sum a_ij * |S|^(i*n + j), i.e.
/// row-major entry positions as little-endian base-|S| digits.
class MatrixSemiring {
  public:
    [[nodiscard]] const FiniteSemiring& base() const noexcept { return base_; }
    [[nodiscard]] const FiniteSemiring& product() const noexcept { return product_; }
    [[nodiscard]] std::size_t dim() const noexcept { return n_; }
    [[nodiscard]] std::size_t order() const noexcept { return product_.order(); }

    /// Row-major n*n base entries to a product element.
    [[nodiscard]] Elem encode(std::span<const Elem> entries) const;
    [[nodiscard]] std::vector<Elem> decode(Elem x) const;
    [[nodiscard]] Elem entry(Elem x, std::size_t i, std::size_t j) const noexcept {
        return entries_[(x * n_ + i) * n_ + j];
    }

    /// Constant matrix with every entry a.
    [[nodiscard]] Elem bar(Elem a) const;

    /// Matrix with a at (i, j) and the base zero elsewhere. Throws NoZero.
    [[nodiscard]] Elem e_matrix(std::size_t i, std::size_t j, Elem a) const;

    friend MatrixSemiring materialize(const FiniteSemiring& s, std::size_t n, std::size_t bound);

  private:
    MatrixSemiring(FiniteSemiring base, std::size_t n, FiniteSemiring product,
                   std::vector<std::uint16_t> entries, std::optional<Elem> base_zero);

    FiniteSemiring base_;
    std::size_t n_;
    FiniteSemiring product_;
    std::vector<std::uint16_t> entries_;
    std::optional<Elem> base_zero_;
};

/// |S|^(n*n), or nullopt if it exceeds limit.
[[nodiscard]] std::optional<std::size_t> matrix_order(std::size_t base_order, std::size_t n,
                                                      std::size_t limit);

/// Builds M_n(S) and re-checks its axioms: exhaustively when the product has
/// at most 256 elements, otherwise on 10^4 sampled triples per identity.
/// Throws BoundExceeded if |S|^(n*n) > bound.
[[nodiscard]] MatrixSemiring materialize(const FiniteSemiring& s, std::size_t n,
                                         std::size_t bound = kDefaultMaterializeBound);

/// Sampled axiom check used above materialization's exhaustive limit.
[[nodiscard]] std::optional<AxiomFailure> sample_axiom_failure(const FiniteSemiring& s,
                                                               std::size_t samples,
                                                               std::uint64_t seed);

/// Outcome of comparing the special elements of M_n(S) against those of S.
struct LiftReport {
    SpecialElements base;
    SpecialElements product;
    /// S_n = S + ... + S (n times) and its multiplicatively absorbing element.
    std::vector<Elem> n_fold_sums;
    std::optional<Elem> n_fold_absorbing;
};

/// Checks, for T = M_n(S): T has a zero iff S does (then 0_T = bar(0_S));
/// T has a bi-absorbing element iff S does (then o_T = bar(o_S)); for n >= 2,
/// T has a unity iff S has a zero and a unity, with the unity of T carrying
/// 1_S on the diagonal and 0_S elsewhere; T has a multiplicatively absorbing
/// element iff S_n has one, w, and then it is bar(w). Throws LiftingViolation
/// naming the first statement that fails.
LiftReport lift_checks(const MatrixSemiring& t);

/// Verdict for the characterization of congruence-simple matrix semirings
/// over a base whose matrix semirings have a multiplicatively absorbing element.
struct AbsorbingCaseVerdict {
    /// Least k for which S_k (equivalently M_k(S)) has a multiplicatively absorbing element.
    std::size_t absorbing_k = 0;
    bool base_simple = false;
    bool has_bi_absorbing = false;
    std::size_t product_set_size = 0;
    /// S simple, no bi-absorbing element, |SS| >= 2.
    bool condition_iii = false;
    std::size_t congruence_dim = 2;
    std::size_t bi_ideal_dim = 3;
    /// M_n(S) congruence-simple at n = congruence_dim; nullopt when too large.
    std::optional<bool> matrix_simple;
    /// M_n(S) bi-ideal-simple at n = bi_ideal_dim, a consequence of
    /// simplicity; nullopt when too large.
    std::optional<bool> matrix_bi_ideal_simple;
    /// (ii) <=> (iii) at congruence_dim, and (iii) => bi-ideal-simple at bi_ideal_dim.
    bool equivalence_holds = true;
    /// When (iii) holds: S has a zero and is a ring or additively idempotent.
    std::optional<bool> coda_holds;
    /// A proper nontrivial congruence of M_n(S) when it is not simple.
    std::optional<ElemPair> witness_pair;
    std::optional<Partition> witness_congruence;
};

/// Throws PreconditionUnmet if no S_k, 1 <= k <= |S|, has a multiplicatively
/// absorbing element.
[[nodiscard]] AbsorbingCaseVerdict absorbing_case_check(
    const FiniteSemiring& s, std::size_t bound = kDefaultMaterializeBound,
    std::size_t congruence_dim = 2, std::size_t bi_ideal_dim = 3);

/// Multiplicatively absorbing element of the subsemigroup `subset`, if any.
[[nodiscard]] std::optional<Elem> absorbing_within(const FiniteSemiring& s,
                                                   std::span<const Elem> subset);

}  // namespace semiring_lab
