#include "semiring_lab/qplus.hpp"

#include <random>

namespace semiring_lab::qplus {

Rational parse_rational(const std::string& text) {
    Rational x;
    const bool ok = !text.empty() && x.set_str(text, 10) == 0;
    if (!ok || (text.find('/') != std::string::npos && x.get_den() == 0)) {
        throw InvalidArgument("not a rational: '" + text + "'");
    }
    x.canonicalize();
    return x;
}

std::string to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_prime(const Integer& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 50) > 0;
}

namespace {

long valuation(const Integer& p, Integer v) {
    long count = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0) {
        v /= p;
        ++count;
    }
    return count;
}

void require_positive(const Rational& x) {
    if (sgn(x) <= 0) {
        throw NonPositive("expected a positive rational, got " + to_string(x));
    }
}

}  // namespace

long vp(const Integer& p, const Rational& x) {
    require_positive(x);
    return valuation(p, x.get_num()) - valuation(p, x.get_den());
}

Rational power(const Rational& a, long k) {
    Integer num, den;
    const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
    Rational r = k < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

QPlusSemiring::QPlusSemiring(Rational a, Integer p) : a_(std::move(a)), p_(std::move(p)) {
    a_.canonicalize();
    if (sgn(a_) <= 0 || a_ >= 1) {
        throw InvalidArgument("a must satisfy 0 < a < 1, got " + to_string(a_));
    }
    if (!is_prime(p_)) {
        throw InvalidArgument("p must be prime, got " + p_.get_str());
    }
}

bool QPlusSemiring::member(const Rational& x) const {
    return power(a_, vp(p_, x)) < x;
}

bool QPlusSemiring::leq(const Rational& z, const Rational& x) const {
    for (const Rational* v : {&z, &x}) {
        if (!member(*v)) {
            throw NotMember(to_string(*v) + " is not in S");
        }
    }
    if (z == x) {
        return true;
    }
    const Rational diff = x - z;
    return sgn(diff) > 0 && member(diff);
}

Rational rational_in_interval_with_valuation(const Integer& p, const Rational& lo,
                                             const Rational& hi, long k) {
    if (sgn(lo) <= 0 || lo >= hi) {
        throw InvalidArgument("expected 0 < lo < hi");
    }
    const Integer r = p == 2 ? Integer(3) : Integer(2);
    const Rational pk = power(Rational(p), k);
    const Rational scaled_lo = lo / pk;
    const Rational scaled_hi = hi / pk;
    for (Integer n = r;; n *= r) {
        // Least integer m > scaled_lo * n, then step past multiples of p.
        const Rational bottom = scaled_lo * n;
        Integer m = bottom.get_num() / bottom.get_den() + 1;
        const Rational top = scaled_hi * n;
        while (m < top) {
            if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) == 0) {
                Rational q = pk * Rational(m, n);
                q.canonicalize();
                return q;
            }
            ++m;
        }
    }
}

Rational lower_bound_witness(const QPlusSemiring& q, const Rational& x, const Rational& y) {
    for (const Rational* v : {&x, &y}) {
        if (!q.member(*v)) {
            throw NotMember(to_string(*v) + " is not in S");
        }
    }
    const long vx = vp(q.p(), x);
    const long vy = vp(q.p(), y);
    const Rational slack_x = x - power(q.a(), vx);
    const Rational slack_y = y - power(q.a(), vy);
    const Rational eps = (slack_x < slack_y ? slack_x : slack_y) / 2;
    long k = std::max(vx, vy) + 1;
    while (power(q.a(), k) >= eps) {
        ++k;
    }
    const Rational z = rational_in_interval_with_valuation(q.p(), power(q.a(), k), eps, k);
    if (!q.member(z) || !q.leq(z, x) || !q.leq(z, y)) {
        throw InternalError("lower bound witness failed its postcondition");
    }
    return z;
}

Rational non_divisibility_witness(const QPlusSemiring& q, long m, long k) {
    if (m < 2) {
        throw InvalidArgument("m must be at least 2");
    }
    const Rational mm(m);
    const Rational lo = power(q.a(), k);
    const Rational hi = mm * power(q.a(), k - vp(q.p(), mm));
    const Rational x = rational_in_interval_with_valuation(q.p(), lo, hi, k);
    if (!q.member(x) || q.member(x / mm)) {
        throw InternalError("non-divisibility witness failed its postcondition");
    }
    return x;
}

std::vector<Rational> sample_members(const QPlusSemiring& q, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, kSampleRange);
    std::vector<Rational> out;
    out.reserve(count);
    while (out.size() < count) {
        Rational x(dist(rng), dist(rng));
        x.canonicalize();
        if (q.member(x)) {
            out.push_back(std::move(x));
        }
    }
    return out;
}

ClosureReport closure_sample(const QPlusSemiring& q, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw InvalidArgument("trials must be at least 1");
    }
    const auto members = sample_members(q, 2 * trials, seed);
    ClosureReport report;
    report.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        const Rational& x = members[2 * i];
        const Rational& y = members[2 * i + 1];
        const bool sum = q.member(x + y);
        const bool product = q.member(x * y);
        if (sum && product) {
            ++report.passed;
        } else {
            report.failures.push_back({x, y, sum, product});
        }
    }
    return report;
}

QPlusSpecialElements special_elements(const QPlusSemiring& q) {
    QPlusSpecialElements out;
    out.one_is_member = q.member(Rational(1));
    out.has_zero = false;
    out.has_unity = out.one_is_member;
    return out;
}

}  // namespace semiring_lab::qplus
