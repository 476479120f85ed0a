#pragma once

// Shared plumbing: error taxonomy, element sets, deterministic RNG.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchalg {

/// Element index within a finite ring's tables.
using elem_t = std::uint16_t;

/// Error categories; the CLI maps these onto its exit codes.
enum class ErrorKind {
    schema,       ///< malformed input document
    admissibility, ///< well-formed input with inadmissible parameters
    cap_exceeded, ///< instance too large for an exhaustive operation
    structural,   ///< mixed handles (wrong algebra/ring) or broken preconditions
    internal      ///< a certified identity failed; indicates a bug, not bad input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

// Literal-message overload: hot verification loops go through here so that no
// std::string is materialized unless the check actually fails.
inline void require(bool cond, ErrorKind kind, const char* msg) {
    if (!cond) fail(kind, std::string(msg));
}

/// Fixed-universe bitset over ring elements. Universe size set at construction.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    bool subset_of(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    ElemSet& operator&=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    std::vector<elem_t> elements() const {
        std::vector<elem_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(static_cast<elem_t>(i));
        return out;
    }

    static ElemSet of(std::size_t universe, const std::vector<elem_t>& elems) {
        ElemSet s(universe);
        for (auto e : elems) s.set(e);
        return s;
    }

    /// Stable key for dedup maps.
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Deterministic RNG. mt19937_64 output is pinned by the standard, so seeded
/// runs reproduce bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw from [0, bound).
    std::size_t below(std::size_t bound) {
        // bound is tiny everywhere we use this; modulo bias is irrelevant but
        // rejection keeps draws honest.
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t x;
        do { x = gen_(); } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 gen_;
};

} // namespace patchalg
