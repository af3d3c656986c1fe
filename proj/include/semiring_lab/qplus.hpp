#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "semiring_lab/errors.hpp"

namespace semiring_lab::qplus {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or an integer; the result is canonicalized.
[[nodiscard]] Rational parse_rational(const std::string& text);
[[nodiscard]] std::string to_string(const Rational& x);

[[nodiscard]] bool is_prime(const Integer& p);

/// Exponent of p in x; negative for denominator factors.
[[nodiscard]] long vp(const Integer& p, const Rational& x);

/// a^k for any integer k.
[[nodiscard]] Rational power(const Rational& a, long k);

/// The semiring {x in Q+ : a^{v_p(x)} < x} for rational 0 < a < 1 and prime p.
class QPlusSemiring {
  public:
    QPlusSemiring(Rational a, Integer p);

    [[nodiscard]] const Rational& a() const noexcept { return a_; }
    [[nodiscard]] const Integer& p() const noexcept { return p_; }

    [[nodiscard]] bool member(const Rational& x) const;
    /// z <=_S x: z = x or x - z lies in S. Both arguments must be members.
    [[nodiscard]] bool leq(const Rational& z, const Rational& x) const;

  private:
    Rational a_;
    Integer p_;
};

/// A rational p^k * m/n in (lo, hi) with p dividing neither m nor n.
[[nodiscard]] Rational rational_in_interval_with_valuation(const Integer& p, const Rational& lo,
                                                           const Rational& hi, long k);

/// A common lower bound z of x and y, built as a^k < z < eps with v_p(z) = k.
[[nodiscard]] Rational lower_bound_witness(const QPlusSemiring& q, const Rational& x,
                                           const Rational& y);

/// A member x with x/m outside S.
[[nodiscard]] Rational non_divisibility_witness(const QPlusSemiring& q, long m, long k = 0);

inline constexpr std::uint64_t kDefaultSampleSeed = 42;
inline constexpr long kSampleRange = 1'000'000;

/// Uniform numerator and denominator in [1, 10^6] filtered to members.
[[nodiscard]] std::vector<Rational> sample_members(const QPlusSemiring& q, std::size_t count,
                                                   std::uint64_t seed = kDefaultSampleSeed);

struct ClosureFailure {
    Rational x, y;
    bool sum_member;
    bool product_member;
};

struct ClosureReport {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<ClosureFailure> failures;
};

[[nodiscard]] ClosureReport closure_sample(const QPlusSemiring& q, std::size_t trials,
                                           std::uint64_t seed = kDefaultSampleSeed);

struct QPlusSpecialElements {
    bool one_is_member = false;
    bool has_zero = false;
    bool has_unity = false;
};

/// Zero would need an additive neutral in Q+, which does not exist; the only
/// candidate unity is 1.
[[nodiscard]] QPlusSpecialElements special_elements(const QPlusSemiring& q);

}  // namespace semiring_lab::qplus
