#include "semiring_lab/catalog.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "semiring_lab/matrix.hpp"

namespace semiring_lab::catalog {

namespace {

template <typename Add, typename Mul>
FiniteSemiring from_ops(std::size_t n, Add add, Mul mul, std::string name) {
    std::vector<Elem> a(n * n), m(n * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            a[x * n + y] = add(x, y);
            m[x * n + y] = mul(x, y);
        }
    }
    return validate(n, a, m, std::move(name));
}

}  // namespace

FiniteSemiring boolean() {
    return from_ops(
        2, [](Elem x, Elem y) { return std::max(x, y); },
        [](Elem x, Elem y) { return std::min(x, y); }, "B");
}

FiniteSemiring integers_mod(std::size_t n) {
    return from_ops(
        n, [n](Elem x, Elem y) { return static_cast<Elem>((x + y) % n); },
        [n](Elem x, Elem y) { return static_cast<Elem>((x * y) % n); }, "Z" + std::to_string(n));
}

FiniteSemiring zero_product_ring(std::size_t n) {
    return from_ops(
        n, [n](Elem x, Elem y) { return static_cast<Elem>((x + y) % n); },
        [](Elem, Elem) { return Elem{0}; }, "Z" + std::to_string(n) + "^0");
}

FiniteSemiring max_chain(std::size_t n) {
    return from_ops(
        n, [](Elem x, Elem y) { return std::max(x, y); },
        [](Elem x, Elem y) { return std::max(x, y); }, "C" + std::to_string(n));
}

FiniteSemiring constant_sum() {
    return from_ops(
        2, [](Elem, Elem) { return Elem{0}; }, [](Elem x, Elem y) { return std::min(x, y); },
        "K2");
}

FiniteSemiring trivial() {
    return from_ops(
        1, [](Elem, Elem) { return Elem{0}; }, [](Elem, Elem) { return Elem{0}; }, "T1");
}

bool prime_power(std::size_t q, std::size_t& p, std::size_t& e) {
    if (q < 2) {
        return false;
    }
    p = q;
    for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    return q == 1;
}

namespace {

using Poly = std::vector<std::size_t>;  // coefficients, lowest degree first

Poly poly_mod(Poly a, const Poly& m, std::size_t p) {
    const std::size_t dm = m.size() - 1;  // m is monic
    while (a.size() > dm) {
        const std::size_t lead = a.back() % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p * p - lead * m[i] % p) % p;
        }
        a.pop_back();
    }
    return a;
}

bool is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::size_t c) { return c == 0; });
}

Poly from_index(std::size_t x, std::size_t p, std::size_t len) {
    Poly out(len);
    for (auto& c : out) {
        c = x % p;
        x /= p;
    }
    return out;
}

/// First monic irreducible of degree e in index order.
Poly irreducible(std::size_t p, std::size_t e) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < e; ++i) {
        count *= p;
    }
    for (std::size_t low = 0; low < count; ++low) {
        Poly m = from_index(low, p, e);
        m.push_back(1);
        bool reducible = false;
        for (std::size_t d = 1; d <= e / 2 && !reducible; ++d) {
            std::size_t dcount = 1;
            for (std::size_t i = 0; i < d; ++i) {
                dcount *= p;
            }
            for (std::size_t dl = 0; dl < dcount && !reducible; ++dl) {
                Poly f = from_index(dl, p, d);
                f.push_back(1);
                reducible = is_zero(poly_mod(m, f, p));
            }
        }
        if (!reducible) {
            return m;
        }
    }
    throw InternalError("no irreducible polynomial found");
}

}  // namespace

FiniteSemiring finite_field(std::size_t q) {
    std::size_t p = 0, e = 0;
    if (!prime_power(q, p, e)) {
        throw InvalidArgument("finite field order " + std::to_string(q) + " is not a prime power");
    }
    const Poly modulus = irreducible(p, e);
    auto to_index = [p](const Poly& a) {
        std::size_t x = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            x = x * p + a[i] % p;
        }
        return static_cast<Elem>(x);
    };
    auto add = [&](Elem x, Elem y) {
        Poly a = from_index(x, p, e), b = from_index(y, p, e);
        for (std::size_t i = 0; i < e; ++i) {
            a[i] = (a[i] + b[i]) % p;
        }
        return to_index(a);
    };
    auto mul = [&](Elem x, Elem y) {
        Poly a = from_index(x, p, e), b = from_index(y, p, e);
        Poly c(2 * e - 1, 0);
        for (std::size_t i = 0; i < e; ++i) {
            for (std::size_t j = 0; j < e; ++j) {
                c[i + j] = (c[i + j] + a[i] * b[j]) % p;
            }
        }
        Poly r = poly_mod(c, modulus, p);
        r.resize(e, 0);
        return to_index(r);
    };
    return from_ops(q, add, mul, "F" + std::to_string(q));
}

FiniteSemiring matrix_ring(std::size_t k, std::size_t q) {
    auto field = finite_field(q);
    if (k == 1) {
        return field;
    }
    return materialize(field, k).product();
}

}  // namespace semiring_lab::catalog
