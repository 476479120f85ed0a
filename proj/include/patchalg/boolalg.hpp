#pragma once

// Finite Boolean algebras in atom form. An algebra with k atoms has the 2^k
// subsets of its atom set as elements, encoded as bitmasks, with union as
// join, intersection as meet and set complement as complement. Every finite
// Boolean algebra is of this shape, so any algebra arriving from elsewhere
// (idempotents of a ring, clopens of a finite space) is converted to atom
// form on construction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "util.hpp"

namespace patchalg {

using bmask_t = std::uint32_t;

class BoolAlg {
public:
    /// Algebra with k >= 1 atoms.
    explicit BoolAlg(int atom_count) : k_(atom_count) {
        require(atom_count >= 1 && atom_count <= 20, ErrorKind::admissibility,
                "Boolean algebra atom count must be in [1, 20], got " + std::to_string(atom_count));
    }

    /// The one-element algebra (0 = 1). It indexes the empty space: it has no
    /// atoms and no maximal ideals.
    static BoolAlg degenerate() { return BoolAlg(degenerate_tag{}); }

    int atoms() const { return k_; }
    bool is_degenerate() const { return k_ == 0; }
    std::size_t size() const { return std::size_t(1) << k_; }
    bmask_t bottom() const { return 0; }
    bmask_t top() const { return static_cast<bmask_t>(size() - 1); }
    bool contains(bmask_t e) const { return e <= top(); }

    bmask_t atom(int i) const { return bmask_t(1) << i; }

    bool operator==(const BoolAlg& o) const { return k_ == o.k_; }
    bool operator!=(const BoolAlg& o) const { return k_ != o.k_; }

private:
    struct degenerate_tag {};
    explicit BoolAlg(degenerate_tag) : k_(0) {}
    int k_;
};

struct BoolElem {
    BoolAlg alg;
    bmask_t mask;

    BoolElem(BoolAlg a, bmask_t m) : alg(a), mask(m) {
        require(a.contains(m), ErrorKind::structural, "element mask outside algebra range");
    }

    bool operator==(const BoolElem& o) const { return alg == o.alg && mask == o.mask; }
};

inline void require_same_algebra(const BoolElem& x, const BoolElem& y) {
    require(x.alg == y.alg, ErrorKind::structural, "elements belong to different Boolean algebras");
}

inline BoolElem bool_join(const BoolElem& x, const BoolElem& y) {
    require_same_algebra(x, y);
    return {x.alg, x.mask | y.mask};
}

inline BoolElem bool_meet(const BoolElem& x, const BoolElem& y) {
    require_same_algebra(x, y);
    return {x.alg, x.mask & y.mask};
}

inline BoolElem bool_complement(const BoolElem& x) { return {x.alg, x.mask ^ x.alg.top()}; }

inline bool bool_leq(const BoolElem& x, const BoolElem& y) {
    require_same_algebra(x, y);
    return (x.mask & ~y.mask) == 0;
}

// ---------------------------------------------------------------------------
// Ideals

/// Downward- and join-closed subset containing bottom. Stored as the sorted
/// list of member masks.
class BoolIdeal {
public:
    BoolIdeal(BoolAlg alg, std::vector<bmask_t> elems) : alg_(alg), elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        verify();
    }

    const BoolAlg& algebra() const { return alg_; }
    const std::vector<bmask_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    bool contains(bmask_t e) const {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }

    bool is_proper() const { return !contains(alg_.top()); }

    bool operator==(const BoolIdeal& o) const { return alg_ == o.alg_ && elems_ == o.elems_; }
    bool operator<(const BoolIdeal& o) const { return elems_ < o.elems_; }

private:
    void verify() const {
        require(contains(0), ErrorKind::structural, "ideal must contain bottom");
        for (bmask_t x : elems_) {
            require(alg_.contains(x), ErrorKind::structural, "ideal element outside algebra");
            for (bmask_t y : elems_)
                require(contains(x | y), ErrorKind::structural, "ideal not closed under join");
            // downward closure: all submasks of x
            for (bmask_t s = x;; s = (s - 1) & x) {
                require(contains(s), ErrorKind::structural, "ideal not downward closed");
                if (s == 0) break;
            }
        }
    }

    BoolAlg alg_;
    std::vector<bmask_t> elems_;
};

/// Principal ideal eB = { x : x <= e }.
inline BoolIdeal principal_ideal(const BoolAlg& alg, bmask_t e) {
    std::vector<bmask_t> elems;
    for (bmask_t s = e;; s = (s - 1) & e) {
        elems.push_back(s);
        if (s == 0) break;
    }
    return BoolIdeal(alg, std::move(elems));
}

/// Smallest ideal containing the generators, by closure fixpoint: close the
/// set under pairwise joins and under taking submasks until stable.
inline BoolIdeal ideal_generated(const BoolAlg& alg, const std::vector<bmask_t>& gens) {
    std::vector<bool> in(alg.size(), false);
    in[0] = true;
    std::vector<bmask_t> work{0};
    auto add = [&](bmask_t e) {
        if (!in[e]) {
            in[e] = true;
            work.push_back(e);
        }
    };
    for (bmask_t g : gens) {
        require(alg.contains(g), ErrorKind::structural, "generator outside algebra");
        add(g);
    }
    for (std::size_t i = 0; i < work.size(); ++i) {
        bmask_t x = work[i];
        for (bmask_t s = x;; s = (s - 1) & x) { // downward closure
            add(s);
            if (s == 0) break;
        }
        for (std::size_t j = 0; j <= i; ++j) add(x | work[j]); // join closure
    }
    std::vector<bmask_t> elems;
    for (bmask_t e = 0; e < alg.size(); ++e)
        if (in[e]) elems.push_back(e);
    return BoolIdeal(alg, std::move(elems));
}

/// Membership in the ideal generated by E, decided by the join-cover
/// criterion: e lies in the generated ideal iff some finite subset F of E has
/// e <= join of F. Independent of the closure fixpoint above; the two are
/// cross-checked in the test suites.
inline bool ideal_member_join_cover(const BoolAlg& alg, const std::vector<bmask_t>& gens,
                                    bmask_t e) {
    require(alg.contains(e), ErrorKind::structural, "element outside algebra");
    if (e == 0) return true;
    // Search subsets F of E in increasing size; |E| stays small in practice.
    std::size_t m = gens.size();
    require(m <= 20, ErrorKind::cap_exceeded, "join-cover search needs |E| <= 20");
    for (std::uint32_t f = 0; f < (std::uint32_t(1) << m); ++f) {
        bmask_t join = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (f & (1u << i)) join |= gens[i];
        if ((e & ~join) == 0) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Maximal ideals

enum class Maximality { maximal, not_maximal, improper };

/// Maximality via the complement criterion: a proper ideal is maximal iff for
/// every e it contains e or its complement.
inline Maximality maximality_by_complement(const BoolIdeal& I) {
    if (!I.is_proper()) return Maximality::improper;
    const BoolAlg& B = I.algebra();
    for (bmask_t e = 0; e < B.size(); ++e)
        if (!I.contains(e) && !I.contains(e ^ B.top())) return Maximality::not_maximal;
    return Maximality::maximal;
}

/// Maximality via primality: a proper ideal is maximal iff meets landing in
/// it always have a factor in it.
inline Maximality maximality_by_primality(const BoolIdeal& I) {
    if (!I.is_proper()) return Maximality::improper;
    const BoolAlg& B = I.algebra();
    for (bmask_t e = 0; e < B.size(); ++e)
        for (bmask_t f = 0; f < B.size(); ++f)
            if (I.contains(e & f) && !I.contains(e) && !I.contains(f))
                return Maximality::not_maximal;
    return Maximality::maximal;
}

/// Maximality via non-extendability: adjoining any outside element must
/// generate the improper ideal.
inline Maximality maximality_by_extension(const BoolIdeal& I) {
    if (!I.is_proper()) return Maximality::improper;
    const BoolAlg& B = I.algebra();
    for (bmask_t x = 0; x < B.size(); ++x) {
        if (I.contains(x)) continue;
        std::vector<bmask_t> gens = I.elements();
        gens.push_back(x);
        if (ideal_generated(B, gens).is_proper()) return Maximality::not_maximal;
    }
    return Maximality::maximal;
}

/// All three criteria, required to agree.
inline Maximality classify_maximality(const BoolIdeal& I) {
    Maximality a = maximality_by_complement(I);
    Maximality b = maximality_by_primality(I);
    Maximality c = maximality_by_extension(I);
    require(a == b && b == c, ErrorKind::internal, "maximality criteria disagree");
    return a;
}

inline bool is_maximal(const BoolIdeal& I) { return classify_maximality(I) == Maximality::maximal; }

/// The maximal ideals are exactly m_a = { e : a not in e }, one per atom,
/// listed in atom order. Each is re-verified through the three criteria.
inline std::vector<BoolIdeal> maximal_ideals(const BoolAlg& B) {
    std::vector<BoolIdeal> out;
    for (int a = 0; a < B.atoms(); ++a) {
        std::vector<bmask_t> elems;
        for (bmask_t e = 0; e < B.size(); ++e)
            if (!(e & B.atom(a))) elems.push_back(e);
        BoolIdeal m(B, std::move(elems));
        require(is_maximal(m), ErrorKind::internal, "atom ideal failed maximality check");
        out.push_back(std::move(m));
    }
    return out;
}

/// Index of the unique atom outside a maximal ideal.
inline int surviving_atom(const BoolIdeal& m) {
    const BoolAlg& B = m.algebra();
    require(is_maximal(m), ErrorKind::structural, "ideal is not maximal");
    int found = -1;
    for (int a = 0; a < B.atoms(); ++a) {
        if (!m.contains(B.atom(a))) {
            require(found < 0, ErrorKind::internal, "two atoms outside a maximal ideal");
            found = a;
        }
    }
    require(found >= 0, ErrorKind::internal, "no atom outside a maximal ideal");
    return found;
}

/// Every ideal of the algebra, by filtering all subsets. Exponential in 2^k;
/// capped at 4 atoms. Larger algebras use sample_ideals.
inline std::vector<BoolIdeal> all_ideals(const BoolAlg& B) {
    require(B.atoms() <= 4, ErrorKind::cap_exceeded,
            "exhaustive ideal enumeration capped at 4 atoms");
    std::size_t n = B.size();
    std::vector<BoolIdeal> out;
    for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << n); ++sub) {
        if (!(sub & 1)) continue; // must contain bottom
        auto in = [&](bmask_t e) { return (sub >> e) & 1u; };
        bool ok = true;
        for (bmask_t x = 0; x < n && ok; ++x) {
            if (!in(x)) continue;
            for (bmask_t y = x; y < n && ok; ++y)
                if (in(y) && !in(x | y)) ok = false;
            for (bmask_t a = 0; a < n && ok; ++a)
                if (!in(a & x)) ok = false;
        }
        if (!ok) continue;
        std::vector<bmask_t> elems;
        for (bmask_t e = 0; e < n; ++e)
            if (in(e)) elems.push_back(e);
        out.emplace_back(B, std::move(elems));
    }
    return out;
}

/// Seeded random ideals for algebras past the exhaustive cap: principal
/// ideals of random elements, plus a few random joins.
inline std::vector<BoolIdeal> sample_ideals(const BoolAlg& B, Rng& rng, std::size_t count) {
    std::vector<BoolIdeal> out;
    for (std::size_t i = 0; i < count; ++i) {
        bmask_t e = static_cast<bmask_t>(rng.below(B.size()));
        bmask_t f = static_cast<bmask_t>(rng.below(B.size()));
        out.push_back(ideal_generated(B, {e, f}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and Stone duality

/// Homomorphism h : B2 -> B1 between finite algebras, stored through the atom
/// map it is dual to: phi : atoms(B1) -> atoms(B2), with
/// h(e) = { a in atoms(B1) : phi(a) in e }. Every homomorphism of finite
/// Boolean algebras has this form; preservation of the operations is checked
/// exhaustively on construction all the same.
class BoolHom {
public:
    BoolHom(BoolAlg domain, BoolAlg codomain, std::vector<int> atom_map)
        : dom_(domain), cod_(codomain), phi_(std::move(atom_map)) {
        require(static_cast<int>(phi_.size()) == cod_.atoms(), ErrorKind::structural,
                "atom map must assign one domain atom per codomain atom");
        for (int a : phi_)
            require(a >= 0 && a < dom_.atoms(), ErrorKind::structural, "atom map value out of range");
        verify();
    }

    const BoolAlg& domain() const { return dom_; }
    const BoolAlg& codomain() const { return cod_; }
    const std::vector<int>& atom_map() const { return phi_; }

    bmask_t apply(bmask_t e) const {
        require(dom_.contains(e), ErrorKind::structural, "element outside hom domain");
        bmask_t out = 0;
        for (int a = 0; a < cod_.atoms(); ++a)
            if (e & dom_.atom(phi_[a])) out |= cod_.atom(a);
        return out;
    }

    static BoolHom identity(const BoolAlg& B) {
        std::vector<int> phi(B.atoms());
        for (int i = 0; i < B.atoms(); ++i) phi[i] = i;
        return BoolHom(B, B, std::move(phi));
    }

    bool operator==(const BoolHom& o) const {
        return dom_ == o.dom_ && cod_ == o.cod_ && phi_ == o.phi_;
    }

private:
    void verify() const {
        require(dom_.atoms() <= 12 && cod_.atoms() <= 12, ErrorKind::cap_exceeded,
                "exhaustive hom verification capped at 12 atoms");
        require(apply(0) == 0 && apply(dom_.top()) == cod_.top(), ErrorKind::structural,
                "hom does not preserve bounds");
        for (bmask_t e = 0; e < dom_.size(); ++e) {
            require(apply(e ^ dom_.top()) == (apply(e) ^ cod_.top()), ErrorKind::structural,
                    "hom does not preserve complement");
            for (bmask_t f = e; f < dom_.size(); ++f) {
                require(apply(e | f) == (apply(e) | apply(f)), ErrorKind::structural,
                        "hom does not preserve join");
                require(apply(e & f) == (apply(e) & apply(f)), ErrorKind::structural,
                        "hom does not preserve meet");
            }
        }
    }

    BoolAlg dom_, cod_;
    std::vector<int> phi_;
};

/// Composition: first apply g, then h.
inline BoolHom compose(const BoolHom& h, const BoolHom& g) {
    require(g.codomain() == h.domain(), ErrorKind::structural, "homs not composable");
    // atoms(h.cod) -> atoms(h.dom) = atoms(g.cod) -> atoms(g.dom)
    std::vector<int> phi(h.codomain().atoms());
    for (int a = 0; a < h.codomain().atoms(); ++a) phi[a] = g.atom_map()[h.atom_map()[a]];
    return BoolHom(g.domain(), h.codomain(), std::move(phi));
}

/// Dual map h* : Max(B1) -> Max(B2); sends m to its preimage under h. The
/// preimage is computed directly and certified to be the maximal ideal of the
/// atom the stored atom map names.
inline std::vector<int> dual_map(const BoolHom& h) {
    const BoolAlg& B1 = h.codomain();
    const BoolAlg& B2 = h.domain();
    auto max2 = maximal_ideals(B2);
    std::vector<int> out(B1.atoms());
    for (int a = 0; a < B1.atoms(); ++a) {
        std::vector<bmask_t> pre;
        for (bmask_t e = 0; e < B2.size(); ++e)
            if (!(h.apply(e) & B1.atom(a))) pre.push_back(e);
        BoolIdeal preimage(B2, std::move(pre));
        require(is_maximal(preimage), ErrorKind::internal, "hom preimage of maximal not maximal");
        int b = h.atom_map()[a];
        require(preimage == max2[b], ErrorKind::internal, "dual map disagrees with atom map");
        out[a] = b;
    }
    return out;
}

/// Stone isomorphism data for a finite algebra: Max(B) listed in atom order,
/// the clopen algebra of that (discrete) space in atom form with atom i
/// standing for the i-th maximal ideal, and the map e |-> { m : e not in m }.
/// Under this labeling the map is the identity on masks; that it is a Boolean
/// isomorphism is verified, not assumed.
struct StoneIso {
    BoolAlg source;
    std::vector<BoolIdeal> max_ideals;
    BoolAlg clopen_algebra;
    std::vector<bmask_t> map; // indexed by source mask
};

inline StoneIso stone_iso(const BoolAlg& B) {
    require(!B.is_degenerate(), ErrorKind::structural,
            "degenerate algebra has an empty Stone space; no isomorphism data");
    StoneIso iso{B, maximal_ideals(B), BoolAlg(B.atoms()), {}};
    iso.map.resize(B.size());
    for (bmask_t e = 0; e < B.size(); ++e) {
        bmask_t clop = 0;
        for (std::size_t i = 0; i < iso.max_ideals.size(); ++i)
            if (!iso.max_ideals[i].contains(e)) clop |= bmask_t(1) << i;
        iso.map[e] = clop;
    }
    // verified isomorphism: bijective and operation-preserving
    std::vector<bool> seen(B.size(), false);
    for (bmask_t e = 0; e < B.size(); ++e) {
        require(!seen[iso.map[e]], ErrorKind::internal, "Stone map not injective");
        seen[iso.map[e]] = true;
        require(iso.map[e ^ B.top()] == (iso.map[e] ^ iso.clopen_algebra.top()),
                ErrorKind::internal, "Stone map breaks complement");
        for (bmask_t f = 0; f < B.size(); ++f) {
            require(iso.map[e | f] == (iso.map[e] | iso.map[f]), ErrorKind::internal,
                    "Stone map breaks join");
            require(iso.map[e & f] == (iso.map[e] & iso.map[f]), ErrorKind::internal,
                    "Stone map breaks meet");
        }
    }
    return iso;
}

/// Stone homeomorphism for a finite discrete space with n points:
/// x |-> { U in Clop(X) : x not in U }, certified to be a bijection onto
/// Max(Clop(X)). Returns, per point, the index of its maximal ideal in atom
/// order (the identity under canonical labeling).
struct StoneHomeo {
    BoolAlg clopen_algebra;
    std::vector<BoolIdeal> max_ideals;
    std::vector<int> point_to_ideal;
};

inline StoneHomeo stone_homeo(int points) {
    require(points >= 1, ErrorKind::structural, "empty space has no Stone homeomorphism data");
    BoolAlg clop(points);
    StoneHomeo h{clop, maximal_ideals(clop), {}};
    h.point_to_ideal.resize(points);
    std::vector<bool> hit(points, false);
    for (int x = 0; x < points; ++x) {
        std::vector<bmask_t> elems;
        for (bmask_t u = 0; u < clop.size(); ++u)
            if (!(u & clop.atom(x))) elems.push_back(u);
        BoolIdeal m(clop, std::move(elems));
        int idx = -1;
        for (std::size_t i = 0; i < h.max_ideals.size(); ++i)
            if (h.max_ideals[i] == m) idx = static_cast<int>(i);
        require(idx >= 0, ErrorKind::internal, "point ideal not found among maximal ideals");
        require(!hit[idx], ErrorKind::internal, "Stone homeomorphism not injective");
        hit[idx] = true;
        h.point_to_ideal[x] = idx;
    }
    return h;
}

} // namespace patchalg
