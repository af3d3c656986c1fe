#include "semiring_lab/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace semiring_lab {

namespace {

std::vector<std::uint16_t> serialize_relabeled(const FiniteSemiring& s,
                                               const std::vector<Elem>& perm,
                                               const std::vector<Elem>& inverse) {
    const std::size_t n = s.order();
    std::vector<std::uint16_t> out(2 * n * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            out[x * n + y] = static_cast<std::uint16_t>(perm[s.add(inverse[x], inverse[y])]);
            out[n * n + x * n + y] = static_cast<std::uint16_t>(perm[s.mul(inverse[x], inverse[y])]);
        }
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    if (n > kCanonicalFormMaxOrder) {
        throw BoundExceeded("canonical form is limited to order " +
                            std::to_string(kCanonicalFormMaxOrder));
    }
    std::vector<Elem> perm(n), inverse(n);
    std::iota(perm.begin(), perm.end(), Elem{0});
    CanonicalForm best{n, {}};
    do {
        for (Elem x = 0; x < n; ++x) {
            inverse[perm[x]] = x;
        }
        auto candidate = serialize_relabeled(s, perm, inverse);
        if (best.bytes.empty() || candidate < best.bytes) {
            best.bytes = std::move(candidate);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

FiniteSemiring canonical_representative(const FiniteSemiring& s) {
    auto form = canonical_form(s);
    const std::size_t n = form.order;
    std::vector<std::uint16_t> add(form.bytes.begin(), form.bytes.begin() + n * n);
    std::vector<std::uint16_t> mul(form.bytes.begin() + n * n, form.bytes.end());
    return FiniteSemiring::trusted(n, std::move(add), std::move(mul), s.name());
}

FiniteSemiring relabel(const FiniteSemiring& s, const std::vector<Elem>& perm) {
    const std::size_t n = s.order();
    if (perm.size() != n) {
        throw InvalidArgument("relabeling must have one image per element");
    }
    std::vector<Elem> inverse(n, static_cast<Elem>(n));
    for (Elem x = 0; x < n; ++x) {
        if (perm[x] >= n || inverse[perm[x]] != n) {
            throw InvalidArgument("relabeling is not a permutation");
        }
        inverse[perm[x]] = x;
    }
    auto flat = serialize_relabeled(s, perm, inverse);
    std::vector<std::uint16_t> add(flat.begin(), flat.begin() + n * n);
    std::vector<std::uint16_t> mul(flat.begin() + n * n, flat.end());
    return FiniteSemiring::trusted(n, std::move(add), std::move(mul), s.name());
}

bool is_isomorphism(const FiniteSemiring& s, const FiniteSemiring& t, const std::vector<Elem>& f) {
    const std::size_t n = s.order();
    if (t.order() != n || f.size() != n) {
        return false;
    }
    std::vector<unsigned char> used(n, 0);
    for (Elem x : f) {
        if (x >= n || used[x]) {
            return false;
        }
        used[x] = 1;
    }
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (f[s.add(x, y)] != t.add(f[x], f[y]) || f[s.mul(x, y)] != t.mul(f[x], f[y])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

using Signature = std::array<std::size_t, 8>;

std::vector<Signature> signatures(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    std::vector<Signature> out(n);
    for (Elem a = 0; a < n; ++a) {
        Signature sig{};
        sig[0] = s.add(a, a) == a;
        sig[1] = s.mul(a, a) == a;
        for (Elem x = 0; x < n; ++x) {
            sig[2] += s.add(a, x) == a;
            sig[3] += s.add(a, x) == x;
            sig[4] += s.mul(a, x) == a;
            sig[5] += s.mul(x, a) == a;
            sig[6] += s.mul(a, x) == x;
        }
        // Length of the orbit a, 2a, 3a, ... before it repeats.
        std::vector<unsigned char> seen(n, 0);
        Elem m = a;
        while (!seen[m]) {
            seen[m] = 1;
            ++sig[7];
            m = s.add(m, a);
        }
        out[a] = sig;
    }
    return out;
}

class IsoSearch {
  public:
    IsoSearch(const FiniteSemiring& s, const FiniteSemiring& t)
        : s_(s), t_(t), n_(s.order()), sig_s_(signatures(s)), sig_t_(signatures(t)) {}

    std::optional<std::vector<Elem>> run() {
        std::vector<Signature> a = sig_s_, b = sig_t_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            return std::nullopt;
        }
        std::vector<Elem> f(n_, kNone), used(n_, kNone);
        if (search(f, used)) {
            return f;
        }
        return std::nullopt;
    }

  private:
    static constexpr Elem kNone = static_cast<Elem>(-1);

    bool search(std::vector<Elem>& f, std::vector<Elem>& used) {
        Elem next = kNone;
        for (Elem x = 0; x < n_; ++x) {
            if (f[x] == kNone) {
                next = x;
                break;
            }
        }
        if (next == kNone) {
            return true;
        }
        for (Elem y = 0; y < n_; ++y) {
            if (used[y] != kNone || sig_s_[next] != sig_t_[y]) {
                continue;
            }
            auto f2 = f;
            auto used2 = used;
            if (assign(f2, used2, next, y) && search(f2, used2)) {
                f = std::move(f2);
                return true;
            }
        }
        return false;
    }

    /// Maps x to y and propagates all forced images; false on contradiction.
    bool assign(std::vector<Elem>& f, std::vector<Elem>& used, Elem x, Elem y) {
        std::vector<std::pair<Elem, Elem>> work{{x, y}};
        std::vector<Elem> mapped;
        for (Elem z = 0; z < n_; ++z) {
            if (f[z] != kNone) {
                mapped.push_back(z);
            }
        }
        while (!work.empty()) {
            auto [u, v] = work.back();
            work.pop_back();
            if (f[u] != kNone) {
                if (f[u] != v) {
                    return false;
                }
                continue;
            }
            if (used[v] != kNone || sig_s_[u] != sig_t_[v]) {
                return false;
            }
            f[u] = v;
            used[v] = u;
            mapped.push_back(u);
            for (Elem w : mapped) {
                const Elem fw = f[w];
                work.emplace_back(s_.add(u, w), t_.add(v, fw));
                work.emplace_back(s_.mul(u, w), t_.mul(v, fw));
                work.emplace_back(s_.mul(w, u), t_.mul(fw, v));
            }
        }
        return true;
    }

    const FiniteSemiring& s_;
    const FiniteSemiring& t_;
    std::size_t n_;
    std::vector<Signature> sig_s_, sig_t_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemiring& s, const FiniteSemiring& t) {
    if (s.order() != t.order()) {
        return std::nullopt;
    }
    auto f = IsoSearch(s, t).run();
    if (f && !is_isomorphism(s, t, *f)) {
        throw InternalError("isomorphism search returned a non-isomorphism");
    }
    return f;
}

}  // namespace semiring_lab
