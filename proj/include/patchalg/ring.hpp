#pragma once

// Finite commutative unital rings, table-driven. A ring is an immutable
// shared blob of addition/multiplication tables plus element labels; handles
// are cheap values. Axioms are verified on construction: exhaustively up to
// the verification threshold, by seeded sampling above it.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "util.hpp"

namespace patchalg {

constexpr std::size_t kAxiomExhaustiveThreshold = 256;

class FiniteRing {
public:
    struct Data {
        std::size_t n = 0;
        std::vector<elem_t> add, mul; // n*n, row-major
        std::vector<elem_t> neg;      // additive inverses
        elem_t zero = 0, one = 0;
        std::vector<std::string> labels;
        std::string name;
        ElemSet units; // elements with a multiplicative inverse
        std::size_t characteristic = 0;
    };

    FiniteRing() = default;

    std::size_t n() const { return d_->n; }
    elem_t zero() const { return d_->zero; }
    elem_t one() const { return d_->one; }
    elem_t add(elem_t a, elem_t b) const { return d_->add[a * d_->n + b]; }
    elem_t mul(elem_t a, elem_t b) const { return d_->mul[a * d_->n + b]; }
    elem_t neg(elem_t a) const { return d_->neg[a]; }
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
    bool is_unit(elem_t a) const { return d_->units.test(a); }
    std::size_t characteristic() const { return d_->characteristic; }
    const std::string& label(elem_t a) const { return d_->labels[a]; }
    const std::string& name() const { return d_->name; }

    /// Handle identity; subrings and ideals are tied to one ambient ring.
    bool same_ring(const FiniteRing& o) const { return d_ == o.d_; }
    bool valid() const { return d_ != nullptr; }

    static FiniteRing from_data(Data data) {
        verify_axioms(data);
        finish(data);
        return FiniteRing(std::make_shared<const Data>(std::move(data)));
    }

private:
    explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    static void verify_axioms(const Data& d) {
        std::size_t n = d.n;
        require(n >= 2, ErrorKind::admissibility, "the zero ring (1 = 0) is rejected");
        require(n <= 65535, ErrorKind::cap_exceeded, "ring too large for 16-bit element indices");
        require(d.add.size() == n * n && d.mul.size() == n * n, ErrorKind::admissibility,
                "tables must be n x n");
        for (elem_t x : d.add)
            require(x < n, ErrorKind::admissibility, "addition table entry out of range");
        for (elem_t x : d.mul)
            require(x < n, ErrorKind::admissibility, "multiplication table entry out of range");
        require(d.zero < n && d.one < n, ErrorKind::admissibility, "0/1 indices out of range");
        require(d.zero != d.one, ErrorKind::admissibility, "the zero ring (1 = 0) is rejected");

        auto A = [&](std::size_t a, std::size_t b) { return d.add[a * n + b]; };
        auto M = [&](std::size_t a, std::size_t b) { return d.mul[a * n + b]; };

        for (std::size_t a = 0; a < n; ++a) {
            require(A(a, d.zero) == a, ErrorKind::admissibility, "additive identity fails");
            require(M(a, d.one) == a, ErrorKind::admissibility, "multiplicative identity fails");
            require(M(a, d.zero) == d.zero, ErrorKind::admissibility, "zero absorption fails");
            bool has_neg = false;
            for (std::size_t b = 0; b < n; ++b)
                if (A(a, b) == d.zero) has_neg = true;
            require(has_neg, ErrorKind::admissibility, "additive inverse missing");
            for (std::size_t b = 0; b < n; ++b) {
                require(A(a, b) == A(b, a), ErrorKind::admissibility, "addition not commutative");
                require(M(a, b) == M(b, a), ErrorKind::admissibility,
                        "multiplication not commutative");
            }
        }

        auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
            require(A(A(a, b), c) == A(a, A(b, c)), ErrorKind::admissibility,
                    "addition not associative");
            require(M(M(a, b), c) == M(a, M(b, c)), ErrorKind::admissibility,
                    "multiplication not associative");
            require(M(a, A(b, c)) == A(M(a, b), M(a, c)), ErrorKind::admissibility,
                    "distributivity fails");
        };

        if (n <= kAxiomExhaustiveThreshold) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
        } else {
            Rng rng(0x5eedu ^ (n * 2654435761u));
            for (int i = 0; i < 50000; ++i)
                check_triple(rng.below(n), rng.below(n), rng.below(n));
        }
    }

    static void finish(Data& d) {
        std::size_t n = d.n;
        d.neg.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (d.add[a * n + b] == d.zero) d.neg[a] = static_cast<elem_t>(b);
        d.units = ElemSet(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (d.mul[a * n + b] == d.one) {
                    d.units.set(a);
                    break;
                }
        d.characteristic = 1;
        for (elem_t x = d.one; x != d.zero; x = d.add[x * n + d.one]) ++d.characteristic;
        if (d.labels.empty()) {
            d.labels.resize(n);
            for (std::size_t a = 0; a < n; ++a) d.labels[a] = std::to_string(a);
        }
        require(d.labels.size() == n, ErrorKind::admissibility, "label count mismatch");
    }

    std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Constructors

inline FiniteRing ring_from_tables(std::vector<elem_t> add, std::vector<elem_t> mul, elem_t zero,
                                   elem_t one, std::vector<std::string> labels = {},
                                   std::string name = "tables") {
    FiniteRing::Data d;
    std::size_t nn = add.size();
    std::size_t n = 0;
    while (n * n < nn) ++n;
    require(n * n == nn, ErrorKind::admissibility, "table size is not a perfect square");
    d.n = n;
    d.add = std::move(add);
    d.mul = std::move(mul);
    d.zero = zero;
    d.one = one;
    d.labels = std::move(labels);
    d.name = std::move(name);
    return FiniteRing::from_data(std::move(d));
}

inline FiniteRing ring_zmod(std::size_t n) {
    require(n >= 2, ErrorKind::admissibility,
            "zmod " + std::to_string(n) + ": the zero ring (1 = 0) is rejected");
    FiniteRing::Data d;
    d.n = n;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            d.add[a * n + b] = static_cast<elem_t>((a + b) % n);
            d.mul[a * n + b] = static_cast<elem_t>((a * b) % n);
        }
    d.zero = 0;
    d.one = 1;
    d.name = "Z/" + std::to_string(n);
    return FiniteRing::from_data(std::move(d));
}

namespace detail {

inline bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over Z/p as coefficient vectors, low degree first, trimmed.
inline std::vector<int> poly_trim(std::vector<int> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline std::vector<int> poly_mul(const std::vector<int>& f, const std::vector<int>& g, int p) {
    if (f.empty() || g.empty()) return {};
    std::vector<int> h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    return poly_trim(std::move(h));
}

inline std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& m, int p) {
    // m monic
    while (f.size() >= m.size() && !f.empty()) {
        int lead = f.back();
        std::size_t shift = f.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            f[shift + i] = ((f[shift + i] - lead * m[i]) % p + p) % p;
        }
        f = poly_trim(std::move(f));
    }
    return f;
}

inline bool poly_is_irreducible(const std::vector<int>& m, int p) {
    // trial division by all monic polynomials of degree 1 .. deg(m)/2
    int deg = static_cast<int>(m.size()) - 1;
    if (deg <= 0) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::size_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<int> g(d + 1, 0);
            std::size_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::string poly_label(const std::vector<int>& f) {
    if (f.empty()) return "0";
    std::string s;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(f[i]);
        } else {
            if (f[i] != 1) s += std::to_string(f[i]);
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace detail

/// Z/p[x] modulo a monic polynomial of degree k (not necessarily
/// irreducible). Coefficients low-degree-first; element index is the base-p
/// value of the coefficient vector, so 0 and 1 land at indices 0 and 1 and
/// labels read 0, 1, ..., x, x+1, ...
inline FiniteRing ring_polyquot(int p, std::vector<int> poly, std::string name = "") {
    require(detail::is_prime(static_cast<std::size_t>(p)), ErrorKind::admissibility,
            "polynomial quotient: p = " + std::to_string(p) + " is not prime");
    int k = static_cast<int>(poly.size()) - 1;
    require(k >= 1 && poly[k] == 1, ErrorKind::admissibility,
            "polynomial quotient: modulus must be monic of degree >= 1");
    for (int& c : poly) {
        require(c >= 0, ErrorKind::admissibility, "polynomial quotient: negative coefficient");
        c %= p;
    }
    std::size_t n = 1;
    for (int i = 0; i < k; ++i) {
        n *= static_cast<std::size_t>(p);
        require(n <= 65535, ErrorKind::cap_exceeded, "polynomial quotient: ring too large");
    }

    auto decode = [&](std::size_t idx) {
        std::vector<int> f;
        while (idx) {
            f.push_back(static_cast<int>(idx % p));
            idx /= static_cast<std::size_t>(p);
        }
        return f;
    };
    auto encode = [&](const std::vector<int>& f) {
        std::size_t idx = 0, mult = 1;
        for (int c : f) {
            idx += static_cast<std::size_t>(c) * mult;
            mult *= static_cast<std::size_t>(p);
        }
        return idx;
    };

    FiniteRing::Data d;
    d.n = n;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    d.labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        auto fa = decode(a);
        d.labels[a] = detail::poly_label(fa);
        for (std::size_t b = 0; b < n; ++b) {
            auto fb = decode(b);
            std::vector<int> sum(std::max(fa.size(), fb.size()), 0);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                int x = (i < fa.size() ? fa[i] : 0) + (i < fb.size() ? fb[i] : 0);
                sum[i] = x % p;
            }
            d.add[a * n + b] = static_cast<elem_t>(encode(detail::poly_trim(std::move(sum))));
            d.mul[a * n + b] = static_cast<elem_t>(
                encode(detail::poly_mod(detail::poly_mul(fa, fb, p), poly, p)));
        }
    }
    d.zero = 0;
    d.one = 1;
    d.name = name.empty() ? "Z/" + std::to_string(p) + "[x] mod " + detail::poly_label(poly)
                          : std::move(name);
    return FiniteRing::from_data(std::move(d));
}

/// GF(p^k): the polynomial quotient by an irreducible monic polynomial of
/// degree k. If none is supplied the lexicographically smallest irreducible
/// one is used; a supplied polynomial is verified.
inline FiniteRing ring_gf(int p, int k, std::vector<int> poly = {}) {
    require(detail::is_prime(static_cast<std::size_t>(p)), ErrorKind::admissibility,
            "gf: p = " + std::to_string(p) + " is not prime");
    require(k >= 1, ErrorKind::admissibility, "gf: k must be >= 1");
    std::size_t n = 1;
    for (int i = 0; i < k; ++i) {
        n *= static_cast<std::size_t>(p);
        require(n <= 65535, ErrorKind::cap_exceeded, "gf: field too large");
    }
    if (poly.empty()) {
        if (k == 1) {
            poly = {0, 1};
        } else {
            std::size_t count = 1;
            for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(p);
            for (std::size_t code = 0; code < count && poly.empty(); ++code) {
                std::vector<int> m(k + 1, 0);
                std::size_t c = code;
                for (int i = 0; i < k; ++i) {
                    m[i] = static_cast<int>(c % p);
                    c /= p;
                }
                m[k] = 1;
                if (detail::poly_is_irreducible(m, p)) poly = m;
            }
            require(!poly.empty(), ErrorKind::internal, "no irreducible polynomial found");
        }
    } else {
        require(static_cast<int>(poly.size()) == k + 1, ErrorKind::admissibility,
                "gf: modulus must have degree k");
        for (int& c : poly) {
            require(c >= 0, ErrorKind::admissibility, "gf: negative coefficient");
            c %= p;
        }
        require(poly[k] == 1, ErrorKind::admissibility, "gf: modulus must be monic");
        require(k == 1 || detail::poly_is_irreducible(poly, p), ErrorKind::admissibility,
                "gf: supplied polynomial is reducible");
    }
    return ring_polyquot(p, std::move(poly), "GF(" + std::to_string(n) + ")");
}

inline FiniteRing ring_product(const FiniteRing& r1, const FiniteRing& r2) {
    std::size_t n1 = r1.n(), n2 = r2.n(), n = n1 * n2;
    require(n <= 65535, ErrorKind::cap_exceeded, "product ring too large");
    FiniteRing::Data d;
    d.n = n;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    d.labels.resize(n);
    auto idx = [&](std::size_t a1, std::size_t a2) { return a1 * n2 + a2; };
    for (std::size_t a1 = 0; a1 < n1; ++a1)
        for (std::size_t a2 = 0; a2 < n2; ++a2) {
            std::size_t a = idx(a1, a2);
            d.labels[a] = "(" + r1.label(static_cast<elem_t>(a1)) + "," +
                          r2.label(static_cast<elem_t>(a2)) + ")";
            for (std::size_t b1 = 0; b1 < n1; ++b1)
                for (std::size_t b2 = 0; b2 < n2; ++b2) {
                    std::size_t b = idx(b1, b2);
                    d.add[a * n + b] = static_cast<elem_t>(
                        idx(r1.add(static_cast<elem_t>(a1), static_cast<elem_t>(b1)),
                            r2.add(static_cast<elem_t>(a2), static_cast<elem_t>(b2))));
                    d.mul[a * n + b] = static_cast<elem_t>(
                        idx(r1.mul(static_cast<elem_t>(a1), static_cast<elem_t>(b1)),
                            r2.mul(static_cast<elem_t>(a2), static_cast<elem_t>(b2))));
                }
        }
    d.zero = static_cast<elem_t>(idx(r1.zero(), r2.zero()));
    d.one = static_cast<elem_t>(idx(r1.one(), r2.one()));
    d.name = r1.name() + " x " + r2.name();
    return FiniteRing::from_data(std::move(d));
}

inline FiniteRing ring_product(const std::vector<FiniteRing>& factors) {
    require(!factors.empty(), ErrorKind::admissibility, "empty product");
    FiniteRing r = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r = ring_product(r, factors[i]);
    return r;
}

} // namespace patchalg
