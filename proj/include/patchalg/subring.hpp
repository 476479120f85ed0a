#pragma once

// Subrings, ideals and homomorphisms of finite rings, plus the derived ring
// constructions (quotients, subrings as standalone rings, idempotent
// factors).

#include <algorithm>
#include <string>
#include <vector>

#include "ring.hpp"
#include "util.hpp"

namespace patchalg {

/// Unital subring: contains 0 and 1, closed under +, -, *. Elements stored
/// sorted; membership also kept as a bitset.
class Subring {
public:
    Subring(FiniteRing ring, std::vector<elem_t> elems)
        : ring_(std::move(ring)), elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        members_ = ElemSet::of(ring_.n(), elems_);
        verify();
    }

    const FiniteRing& ring() const { return ring_; }
    const std::vector<elem_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(elem_t a) const { return members_.test(a); }
    const ElemSet& members() const { return members_; }
    bool is_full() const { return elems_.size() == ring_.n(); }

    bool operator==(const Subring& o) const {
        return ring_.same_ring(o.ring_) && elems_ == o.elems_;
    }
    bool operator!=(const Subring& o) const { return !(*this == o); }
    /// Canonical order: by element list. Only meaningful within one ambient ring.
    bool operator<(const Subring& o) const { return elems_ < o.elems_; }

    bool subset_of(const Subring& o) const {
        require(ring_.same_ring(o.ring_), ErrorKind::structural,
                "subrings of different ambient rings");
        return members_.subset_of(o.members_);
    }

    std::string describe() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) s += ",";
            s += ring_.label(elems_[i]);
        }
        return s + "}";
    }

private:
    void verify() const {
        require(contains(ring_.zero()) && contains(ring_.one()), ErrorKind::structural,
                "subring must contain 0 and 1");
        for (elem_t a : elems_) {
            require(contains(ring_.neg(a)), ErrorKind::structural,
                    "subring not closed under negation");
            for (elem_t b : elems_) {
                require(contains(ring_.add(a, b)), ErrorKind::structural,
                        "subring not closed under addition");
                require(contains(ring_.mul(a, b)), ErrorKind::structural,
                        "subring not closed under multiplication");
            }
        }
    }

    FiniteRing ring_;
    std::vector<elem_t> elems_;
    ElemSet members_;
};

/// Closure of a seed set (plus 0, 1) under the ring operations. Since the
/// ring is finite, additive closure already yields negatives.
inline Subring subring_closure(const FiniteRing& R, const std::vector<elem_t>& seed) {
    ElemSet in(R.n());
    std::vector<elem_t> work;
    auto push = [&](elem_t x) {
        if (!in.test(x)) {
            in.set(x);
            work.push_back(x);
        }
    };
    push(R.zero());
    push(R.one());
    for (elem_t s : seed) push(s);
    for (std::size_t i = 0; i < work.size(); ++i) {
        elem_t x = work[i];
        for (std::size_t j = 0; j <= i; ++j) {
            push(R.add(x, work[j]));
            push(R.mul(x, work[j]));
        }
    }
    return Subring(R, in.elements());
}

inline Subring full_subring(const FiniteRing& R) {
    std::vector<elem_t> all(R.n());
    for (std::size_t i = 0; i < R.n(); ++i) all[i] = static_cast<elem_t>(i);
    return Subring(R, std::move(all));
}

inline Subring intersect(const Subring& a, const Subring& b) {
    require(a.ring().same_ring(b.ring()), ErrorKind::structural,
            "intersecting subrings of different rings");
    std::vector<elem_t> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(out));
    return Subring(a.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// Ideals

/// Additive subgroup absorbing multiplication by the whole ring.
class RingIdeal {
public:
    RingIdeal(FiniteRing ring, std::vector<elem_t> elems)
        : ring_(std::move(ring)), elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        members_ = ElemSet::of(ring_.n(), elems_);
        verify();
    }

    const FiniteRing& ring() const { return ring_; }
    const std::vector<elem_t>& elements() const { return elems_; }
    const ElemSet& members() const { return members_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(elem_t a) const { return members_.test(a); }
    bool is_proper() const { return !contains(ring_.one()); }

    bool operator==(const RingIdeal& o) const {
        return ring_.same_ring(o.ring_) && elems_ == o.elems_;
    }
    bool operator<(const RingIdeal& o) const { return elems_ < o.elems_; }

private:
    void verify() const {
        require(contains(ring_.zero()), ErrorKind::structural, "ideal must contain 0");
        for (elem_t a : elems_)
            for (elem_t b : elems_)
                require(contains(ring_.add(a, b)), ErrorKind::structural,
                        "ideal not an additive subgroup");
        for (std::size_t r = 0; r < ring_.n(); ++r)
            for (elem_t a : elems_)
                require(contains(ring_.mul(static_cast<elem_t>(r), a)), ErrorKind::structural,
                        "ideal does not absorb multiplication");
    }

    FiniteRing ring_;
    std::vector<elem_t> elems_;
    ElemSet members_;
};

/// Principal ideal aR as a plain element set.
inline ElemSet principal_ideal_set(const FiniteRing& R, elem_t a) {
    ElemSet s(R.n());
    for (std::size_t r = 0; r < R.n(); ++r) s.set(R.mul(static_cast<elem_t>(r), a));
    return s;
}

/// Ideal generated by a set: close {0} + generators under addition and
/// multiplication by arbitrary ring elements.
inline RingIdeal ideal_generated_ring(const FiniteRing& R, const std::vector<elem_t>& gens) {
    ElemSet in(R.n());
    std::vector<elem_t> work;
    auto push = [&](elem_t x) {
        if (!in.test(x)) {
            in.set(x);
            work.push_back(x);
        }
    };
    push(R.zero());
    for (elem_t g : gens) push(g);
    for (std::size_t i = 0; i < work.size(); ++i) {
        elem_t x = work[i];
        for (std::size_t r = 0; r < R.n(); ++r) push(R.mul(static_cast<elem_t>(r), x));
        for (std::size_t j = 0; j <= i; ++j) push(R.add(x, work[j]));
    }
    return RingIdeal(R, in.elements());
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// Unital ring homomorphism given by its full element map; preservation is
/// checked exhaustively on construction.
class RingHom {
public:
    RingHom(FiniteRing dom, FiniteRing cod, std::vector<elem_t> map)
        : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
        require(map_.size() == dom_.n(), ErrorKind::structural, "hom map size mismatch");
        for (elem_t v : map_)
            require(v < cod_.n(), ErrorKind::structural, "hom image out of range");
        require(map_[dom_.one()] == cod_.one(), ErrorKind::structural, "hom must send 1 to 1");
        for (std::size_t a = 0; a < dom_.n(); ++a)
            for (std::size_t b = 0; b < dom_.n(); ++b) {
                require(map_[dom_.add(static_cast<elem_t>(a), static_cast<elem_t>(b))] ==
                            cod_.add(map_[a], map_[b]),
                        ErrorKind::structural, "hom does not preserve addition");
                require(map_[dom_.mul(static_cast<elem_t>(a), static_cast<elem_t>(b))] ==
                            cod_.mul(map_[a], map_[b]),
                        ErrorKind::structural, "hom does not preserve multiplication");
            }
    }

    const FiniteRing& domain() const { return dom_; }
    const FiniteRing& codomain() const { return cod_; }
    elem_t apply(elem_t a) const { return map_[a]; }
    const std::vector<elem_t>& map() const { return map_; }

    bool is_injective() const {
        ElemSet seen(cod_.n());
        for (elem_t v : map_) {
            if (seen.test(v)) return false;
            seen.set(v);
        }
        return true;
    }
    bool is_surjective() const {
        ElemSet seen(cod_.n());
        for (elem_t v : map_) seen.set(v);
        return seen.count() == cod_.n();
    }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    std::vector<elem_t> kernel() const {
        std::vector<elem_t> k;
        for (std::size_t a = 0; a < dom_.n(); ++a)
            if (map_[a] == cod_.zero()) k.push_back(static_cast<elem_t>(a));
        return k;
    }

private:
    FiniteRing dom_, cod_;
    std::vector<elem_t> map_;
};

// ---------------------------------------------------------------------------
// Derived rings

/// A multiplicatively closed subset with its own identity element, packaged
/// as a standalone ring with induced tables. Covers both unital subrings
/// (one = ambient 1) and idempotent factors eR (one = e).
struct SubsetRing {
    FiniteRing ring;              ///< the new ring
    std::vector<elem_t> elems;    ///< ambient element per new index
    std::vector<elem_t> index_of; ///< ambient -> new index, n() entries, or sentinel
    static constexpr elem_t npos = 0xffff;
};

inline SubsetRing ring_from_subset(const FiniteRing& R, const std::vector<elem_t>& subset,
                                   elem_t one_elem, const std::string& name) {
    std::vector<elem_t> elems = subset;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<elem_t> index_of(R.n(), SubsetRing::npos);
    for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<elem_t>(i);
    require(index_of[R.zero()] != SubsetRing::npos && index_of[one_elem] != SubsetRing::npos,
            ErrorKind::structural, "subset ring must contain 0 and its identity");
    std::size_t n = elems.size();
    FiniteRing::Data d;
    d.n = n;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    d.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.labels[i] = R.label(elems[i]);
        for (std::size_t j = 0; j < n; ++j) {
            elem_t s = R.add(elems[i], elems[j]);
            elem_t p = R.mul(elems[i], elems[j]);
            require(index_of[s] != SubsetRing::npos && index_of[p] != SubsetRing::npos,
                    ErrorKind::structural, "subset not closed under ring operations");
            d.add[i * n + j] = index_of[s];
            d.mul[i * n + j] = index_of[p];
        }
    }
    d.zero = index_of[R.zero()];
    d.one = index_of[one_elem];
    d.name = name;
    return SubsetRing{FiniteRing::from_data(std::move(d)), std::move(elems), std::move(index_of)};
}

inline SubsetRing subring_as_ring(const Subring& S) {
    return ring_from_subset(S.ring(), S.elements(), S.ring().one(),
                            S.ring().name() + " sub" + std::to_string(S.size()));
}

/// Quotient ring R/I with cosets named by their least representative.
struct QuotientRing {
    FiniteRing ring;
    std::vector<elem_t> coset_of; ///< ambient element -> quotient index
    std::vector<elem_t> rep_of;   ///< quotient index -> least representative
};

inline QuotientRing ring_quotient(const FiniteRing& R, const RingIdeal& I) {
    require(R.same_ring(I.ring()), ErrorKind::structural, "ideal of a different ring");
    require(I.is_proper(), ErrorKind::admissibility,
            "quotient by the improper ideal is the zero ring, which is rejected");
    std::size_t n = R.n();
    std::vector<elem_t> coset_of(n, SubsetRing::npos);
    std::vector<elem_t> rep_of;
    for (std::size_t a = 0; a < n; ++a) {
        if (coset_of[a] != SubsetRing::npos) continue;
        elem_t idx = static_cast<elem_t>(rep_of.size());
        rep_of.push_back(static_cast<elem_t>(a));
        for (elem_t x : I.elements()) coset_of[R.add(static_cast<elem_t>(a), x)] = idx;
        require(coset_of[a] == idx, ErrorKind::internal, "coset enumeration broke");
    }
    std::size_t m = rep_of.size();
    FiniteRing::Data d;
    d.n = m;
    d.add.resize(m * m);
    d.mul.resize(m * m);
    d.labels.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        d.labels[i] = "[" + R.label(rep_of[i]) + "]";
        for (std::size_t j = 0; j < m; ++j) {
            d.add[i * m + j] = coset_of[R.add(rep_of[i], rep_of[j])];
            d.mul[i * m + j] = coset_of[R.mul(rep_of[i], rep_of[j])];
        }
    }
    d.zero = coset_of[R.zero()];
    d.one = coset_of[R.one()];
    d.name = R.name() + "/I" + std::to_string(I.size());
    return QuotientRing{FiniteRing::from_data(std::move(d)), std::move(coset_of),
                        std::move(rep_of)};
}

} // namespace patchalg
