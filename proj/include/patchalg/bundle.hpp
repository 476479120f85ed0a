#pragma once

// Patch bundles (maps from a finite Stone space into the subring space) and
// the two functors connecting them with patch presheaves. Finite Stone
// spaces are discrete, so a bundle is a plain list of fibers; continuity of
// the map into the Zariski topology is a checkable triviality rather than an
// assumption.

#include <string>
#include <vector>

#include "boolalg.hpp"
#include "presheaf.hpp"
#include "ring.hpp"
#include "subring.hpp"
#include "topo.hpp"
#include "util.hpp"

namespace patchalg {

class PatchBundle {
public:
    PatchBundle(FiniteRing ring, std::vector<Subring> fibers)
        : ring_(std::move(ring)), fibers_(std::move(fibers)) {
        for (const Subring& s : fibers_)
            require(s.ring().same_ring(ring_), ErrorKind::structural,
                    "fiber in a different ambient ring");
        require(fibers_.size() <= 20, ErrorKind::cap_exceeded, "bundle domain capped at 20 points");
    }

    const FiniteRing& ring() const { return ring_; }
    std::size_t points() const { return fibers_.size(); }
    const Subring& fiber(std::size_t y) const { return fibers_[y]; }
    const std::vector<Subring>& fibers() const { return fibers_; }

    /// Image of the bundle as a space (duplicate fibers collapse).
    SubringSpace image() const { return SubringSpace(ring_, fibers_); }

    /// Preimages of the basic Zariski opens are subsets of a discrete space,
    /// hence open; materialized here so continuity is checked, not assumed.
    bool continuity_check() const {
        for (std::size_t r = 0; r < ring_.n(); ++r) {
            std::vector<std::size_t> preimage;
            for (std::size_t y = 0; y < points(); ++y)
                if (fibers_[y].contains(static_cast<elem_t>(r))) preimage.push_back(y);
            // any subset of a finite discrete space is open
        }
        return true;
    }

    bool operator==(const PatchBundle& o) const {
        return ring_.same_ring(o.ring_) && fibers_ == o.fibers_;
    }

private:
    FiniteRing ring_;
    std::vector<Subring> fibers_;
};

/// The identity bundle of a space: each member is its own fiber.
inline PatchBundle identity_bundle(const SubringSpace& X) {
    return PatchBundle(X.ring(), X.members());
}

/// Morphism of bundles: a map of the Stone spaces under which the target
/// fiber lands inside the source fiber, pointwise.
class BundleMorphism {
public:
    BundleMorphism(PatchBundle source, PatchBundle target, std::vector<std::size_t> point_map)
        : src_(std::move(source)), dst_(std::move(target)), g_(std::move(point_map)) {
        require(g_.size() == src_.points(), ErrorKind::structural,
                "point map must cover the source space");
        require(src_.ring().same_ring(dst_.ring()), ErrorKind::structural,
                "bundles over different rings");
        for (std::size_t y = 0; y < g_.size(); ++y) {
            require(g_[y] < dst_.points(), ErrorKind::structural, "point map out of range");
            require(dst_.fiber(g_[y]).subset_of(src_.fiber(y)), ErrorKind::admissibility,
                    "bundle morphism containment fails at point " + std::to_string(y));
        }
    }

    const PatchBundle& source() const { return src_; }
    const PatchBundle& target() const { return dst_; }
    const std::vector<std::size_t>& point_map() const { return g_; }

    static BundleMorphism identity(const PatchBundle& f) {
        std::vector<std::size_t> id(f.points());
        for (std::size_t y = 0; y < f.points(); ++y) id[y] = y;
        return BundleMorphism(f, f, std::move(id));
    }

    bool operator==(const BundleMorphism& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && g_ == o.g_;
    }

private:
    PatchBundle src_, dst_;
    std::vector<std::size_t> g_;
};

inline BundleMorphism compose(const BundleMorphism& later, const BundleMorphism& first) {
    require(first.target() == later.source(), ErrorKind::structural,
            "bundle morphisms not composable");
    std::vector<std::size_t> g(first.source().points());
    for (std::size_t y = 0; y < g.size(); ++y) g[y] = later.point_map()[first.point_map()[y]];
    return BundleMorphism(first.source(), later.target(), std::move(g));
}

// ---------------------------------------------------------------------------
// The functor from bundles to presheaves

/// Presheaf of a bundle: indices are the clopens of the domain (its powerset,
/// atom i = point i); the section over a clopen is the intersection of its
/// fibers, with the empty clopen assigned the whole ring.
inline PatchPresheaf functor_R(const PatchBundle& f) {
    if (f.points() == 0) return degenerate_presheaf(f.ring());
    return presheaf_from_atoms(f.ring(), f.fibers());
}

/// Action on morphisms: a bundle morphism g maps to the presheaf morphism
/// whose Boolean hom is V |-> g^{-1}(V); its atom map is g itself. The
/// section containments are re-verified by the morphism constructor.
inline PresheafMorphism functor_R_mor(const BundleMorphism& m) {
    PatchPresheaf src = functor_R(m.source());
    PatchPresheaf dst = functor_R(m.target());
    if (m.source().points() == 0 && m.target().points() == 0)
        return PresheafMorphism(src, dst, BoolHom(BoolAlg::degenerate(), BoolAlg::degenerate(), {}));
    std::vector<int> phi;
    for (std::size_t y = 0; y < m.source().points(); ++y)
        phi.push_back(static_cast<int>(m.point_map()[y]));
    BoolHom h(dst.algebra(), src.algebra(), std::move(phi));
    return PresheafMorphism(std::move(src), std::move(dst), std::move(h));
}

// ---------------------------------------------------------------------------
// The functor from presheaves to bundles

/// Bundle of a presheaf: points are the maximal ideals of the index algebra
/// (in atom order), each mapped to its stalk. Surjectivity onto the stalk
/// space holds by construction and is asserted.
inline PatchBundle functor_B(const PatchPresheaf& P) {
    require_valid(P);
    std::vector<Subring> fibers;
    if (!P.algebra().is_degenerate())
        for (const BoolIdeal& m : maximal_ideals(P.algebra())) fibers.push_back(stalk(P, m));
    PatchBundle f(P.ring(), std::move(fibers));
    require(f.image() == all_stalks(P), ErrorKind::internal,
            "bundle of a presheaf does not cover the stalk space");
    return f;
}

/// Action on morphisms: the dual map of the Boolean hom, which on atoms is
/// just the stored atom map; the fiber containment is re-verified by the
/// bundle morphism constructor.
inline BundleMorphism functor_B_mor(const PresheafMorphism& m) {
    PatchBundle src = functor_B(m.source());
    PatchBundle dst = functor_B(m.target());
    if (m.source().algebra().is_degenerate())
        return BundleMorphism(src, dst, {});
    std::vector<int> dual = dual_map(m.hom());
    std::vector<std::size_t> g(dual.begin(), dual.end());
    return BundleMorphism(std::move(src), std::move(dst), std::move(g));
}

// ---------------------------------------------------------------------------
// Equivalence and correspondence checks

struct CheckReport {
    bool pass = true;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    void note(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

/// Round trip on one bundle: composing the two functors must give back the
/// bundle along the Stone homeomorphism of its domain (identity on point
/// indices under canonical labeling).
inline bool bundle_roundtrip_exact(const PatchBundle& f) {
    PatchBundle back = functor_B(functor_R(f));
    if (back.points() != f.points()) return false;
    if (f.points() == 0) return true;
    StoneHomeo eta = stone_homeo(static_cast<int>(f.points()));
    for (std::size_t y = 0; y < f.points(); ++y)
        if (!(back.fiber(eta.point_to_ideal[y]) == f.fiber(y))) return false;
    return true;
}

/// Round trip on one presheaf: the sections of the double image, reindexed
/// along the canonical Stone isomorphism of the algebra, must equal the
/// original sections.
inline bool presheaf_roundtrip_exact(const PatchPresheaf& P) {
    PatchPresheaf back = functor_R(functor_B(P));
    if (P.algebra().is_degenerate()) return back == P;
    if (!(back.algebra() == P.algebra())) return false;
    StoneIso iso = stone_iso(P.algebra());
    for (bmask_t e = 0; e < P.algebra().size(); ++e)
        if (!(back.section(iso.map[e]) == P.section(e))) return false;
    return true;
}

/// Functoriality data for one composable pair of bundle morphisms.
inline bool functor_R_preserves_composition(const BundleMorphism& g2, const BundleMorphism& g1) {
    return functor_R_mor(compose(g2, g1)) == compose(functor_R_mor(g2), functor_R_mor(g1));
}

inline bool functor_B_preserves_composition(const PresheafMorphism& h2,
                                            const PresheafMorphism& h1) {
    return functor_B_mor(compose(h2, h1)) == compose(functor_B_mor(h2), functor_B_mor(h1));
}

/// Equivalence check over explicit corpora.
inline CheckReport equivalence_check(const std::vector<PatchBundle>& bundles,
                                     const std::vector<PatchPresheaf>& presheaves,
                                     const std::vector<std::pair<BundleMorphism, BundleMorphism>>&
                                         bundle_pairs,
                                     const std::vector<std::pair<PresheafMorphism,
                                                                 PresheafMorphism>>& presheaf_pairs) {
    CheckReport rep;
    for (std::size_t i = 0; i < bundles.size(); ++i)
        rep.note(bundle_roundtrip_exact(bundles[i]), "bundle round trip #" + std::to_string(i));
    for (std::size_t i = 0; i < presheaves.size(); ++i)
        rep.note(presheaf_roundtrip_exact(presheaves[i]),
                 "presheaf round trip #" + std::to_string(i));
    for (std::size_t i = 0; i < bundles.size(); ++i)
        rep.note(functor_R_mor(BundleMorphism::identity(bundles[i])) ==
                     PresheafMorphism::identity(functor_R(bundles[i])),
                 "identity preservation (bundle #" + std::to_string(i) + ")");
    for (std::size_t i = 0; i < presheaves.size(); ++i)
        rep.note(functor_B_mor(PresheafMorphism::identity(presheaves[i])) ==
                     BundleMorphism::identity(functor_B(presheaves[i])),
                 "identity preservation (presheaf #" + std::to_string(i) + ")");
    for (std::size_t i = 0; i < bundle_pairs.size(); ++i) {
        rep.note(functor_R_preserves_composition(bundle_pairs[i].second, bundle_pairs[i].first),
                 "composition preservation (bundle pair #" + std::to_string(i) + ")");
        // naturality: the double image of a morphism is the morphism itself
        // on point indices
        BundleMorphism round =
            functor_B_mor(functor_R_mor(compose(bundle_pairs[i].second, bundle_pairs[i].first)));
        rep.note(round.point_map() ==
                     compose(bundle_pairs[i].second, bundle_pairs[i].first).point_map(),
                 "morphism round trip (bundle pair #" + std::to_string(i) + ")");
    }
    for (std::size_t i = 0; i < presheaf_pairs.size(); ++i)
        rep.note(
            functor_B_preserves_composition(presheaf_pairs[i].second, presheaf_pairs[i].first),
            "composition preservation (presheaf pair #" + std::to_string(i) + ")");
    return rep;
}

/// Correspondence between subsets of a space universe and distinguished
/// presheaves: every subset round-trips exactly through its presheaf, the
/// presheaf of a space is always distinguished, and every distinguished
/// presheaf round-trips up to the canonical Boolean isomorphism.
inline CheckReport correspondence_check(const SubringSpace& universe,
                                        const std::vector<PatchPresheaf>& distinguished_corpus) {
    CheckReport rep;
    require(universe.size() <= 20, ErrorKind::cap_exceeded,
            "correspondence check enumerates all subsets; universe capped at 20");
    for (xmask_t Y = 0; Y <= universe.all_mask(); ++Y) {
        SubringSpace X = subspace(universe, Y);
        PatchPresheaf P = presheaf_of_space(X);
        rep.note(validate(P).ok, "space presheaf is valid (subset " + std::to_string(Y) + ")");
        rep.note(distinguished(P).ok,
                 "space presheaf is distinguished (subset " + std::to_string(Y) + ")");
        rep.note(all_stalks(P) == X, "stalks recover the space (subset " + std::to_string(Y) + ")");
        if (X.size() > 0) {
            PatchPresheaf via_bundle = functor_R(identity_bundle(X));
            rep.note(via_bundle == P,
                     "identity bundle induces the space presheaf (subset " + std::to_string(Y) +
                         ")");
        }
        if (Y == universe.all_mask()) break; // avoid wrap on full-width masks
    }
    for (std::size_t i = 0; i < distinguished_corpus.size(); ++i) {
        const PatchPresheaf& P = distinguished_corpus[i];
        DistinguishedResult dr = distinguished(P);
        rep.note(dr.ok, "corpus presheaf #" + std::to_string(i) + " is distinguished");
        if (!dr.ok) continue;
        SubringSpace X = all_stalks(P);
        PatchPresheaf Q = presheaf_of_space(X);
        if (P.algebra().is_degenerate()) {
            rep.note(Q == P, "degenerate presheaf round trip");
            continue;
        }
        // canonical relabeling: atom i of P's algebra lands on the stalk at
        // its maximal ideal; for a distinguished presheaf this is injective
        auto maxi = maximal_ideals(P.algebra());
        std::vector<int> atom_to_member(maxi.size());
        bool injective = true;
        std::vector<bool> hit(X.size(), false);
        for (std::size_t a = 0; a < maxi.size(); ++a) {
            int idx = X.index_of(stalk(P, maxi[a]));
            require(idx >= 0, ErrorKind::internal, "stalk missing from stalk space");
            if (hit[idx]) injective = false;
            hit[idx] = true;
            atom_to_member[a] = idx;
        }
        rep.note(injective,
                 "stalk map is injective for distinguished presheaf #" + std::to_string(i));
        if (!injective) continue;
        bool sections_match = true;
        for (bmask_t e = 0; e < P.algebra().size(); ++e) {
            xmask_t U = 0;
            for (std::size_t a = 0; a < maxi.size(); ++a)
                if (e & P.algebra().atom(static_cast<int>(a)))
                    U |= xmask_t(1) << atom_to_member[a];
            bmask_t qe = static_cast<bmask_t>(U);
            if (!(Q.section(qe) == P.section(e))) sections_match = false;
        }
        rep.note(sections_match,
                 "presheaf recovered from its stalk space (corpus #" + std::to_string(i) + ")");
    }
    return rep;
}

} // namespace patchalg
